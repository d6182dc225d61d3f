import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_force_lip, closed_trail_edge_sets
from supergeodesic.errors import Infeasible, OutOfRange
from supergeodesic.lip import (
    STANDARD_S12_ROWS,
    ArcDecomposition,
    DualEdge,
    LipInstance,
    enumerate_circuits,
    lip_from_decomposition,
    load_decomposition,
    prune_dominated,
    scaling_factor,
    solve_lip,
    standard_decomposition,
    standard_s12,
    verify_igi_base,
)


def feasible(inst, w):
    if any(sum(w[i] for i in row) < inst.rhs for row in inst.rows):
        return False
    if inst.balanced:
        return sum(c * x for c, x in zip(inst.balance_coefficients(), w)) == 0
    return True


@st.composite
def instances(draw, max_m=6, max_rhs=3):
    m = draw(st.integers(1, max_m))
    rows = draw(st.lists(
        st.frozensets(st.integers(0, m - 1), min_size=1), min_size=1, max_size=6))
    rhs = draw(st.integers(1, max_rhs))
    return LipInstance(m, tuple(rows), rhs)


class TestStandard:
    def test_rows_read_one_based(self):
        one_based = [sorted(i + 1 for i in row) for row in standard_s12().rows]
        assert one_based == [[1, 4, 5, 6], [2, 4, 5, 6], [3, 5], [1, 2], [1, 3, 4, 6], [2, 3, 4, 6]]
        assert frozenset({2, 4}) in standard_s12().rows

    def test_rhs_override(self):
        inst = standard_s12(rhs=1)
        assert inst.rows == STANDARD_S12_ROWS and inst.rhs == 1

    def test_optimum_is_eight(self):
        sol = solve_lip(standard_s12())
        assert sol.objective == 8
        assert feasible(standard_s12(), sol.weights)
        assert sol.weights == (2, 2, 2, 0, 2, 0)
        assert brute_force_lip(6, STANDARD_S12_ROWS, 4) == 8

    def test_unit_rhs_integer_optimum(self):
        # The integer optimum at rhs 1 is 3: {2,4} and {0,1} are disjoint, and
        # each of the four ways to hit both with two arcs misses another row.
        sol = solve_lip(standard_s12(rhs=1))
        assert sol.objective == 3 == brute_force_lip(6, STANDARD_S12_ROWS, 1)
        assert feasible(standard_s12(rhs=1), sol.weights)

    def test_balanced_keeps_eight(self):
        inst = standard_s12(balanced=True)
        sol = solve_lip(inst)
        assert sol.objective == 8
        assert feasible(inst, sol.weights)
        assert brute_force_lip(6, inst.rows, 4, inst.balance_coefficients(), bound=8) == 8


class TestSolve:
    def test_single_row(self):
        sol = solve_lip(LipInstance(1, (frozenset({0}),), 4))
        assert sol.objective == 4 and sol.weights == (4,)

    def test_validation(self):
        with pytest.raises(ValueError):
            LipInstance(2, (frozenset({2}),), 1)
        with pytest.raises(ValueError):
            LipInstance(2, (frozenset(),), 1)
        with pytest.raises(ValueError):
            LipInstance(2, (), 1)
        with pytest.raises(ValueError):
            LipInstance(2, (frozenset({0}),), 0)
        with pytest.raises(ValueError):
            LipInstance(2, (frozenset({0}),), 1, balanced=True)

    def test_balanced_infeasible(self):
        inst = LipInstance(2, (frozenset({0}),), 1, True, (("red", "red"), ("red", "blue")))
        with pytest.raises(Infeasible):
            solve_lip(inst)

    @settings(max_examples=150, deadline=None)
    @given(instances())
    def test_matches_brute_force(self, inst):
        sol = solve_lip(inst)
        assert sol.objective == brute_force_lip(inst.m, inst.rows, inst.rhs)
        assert feasible(inst, sol.weights)
        assert sum(sol.weights) == sol.objective

    @settings(max_examples=60, deadline=None)
    @given(instances(max_m=3, max_rhs=2),
           st.lists(st.sampled_from([("a", "a"), ("a", "b"), ("b", "b")]), min_size=3, max_size=3))
    def test_balanced_matches_brute_force(self, inst, labels):
        labels = tuple(labels[: inst.m])
        inst = LipInstance(inst.m, inst.rows, inst.rhs, True, labels)
        coeffs = inst.balance_coefficients()
        # every balanced optimum has weights below 2 m rhs (repair argument)
        want = brute_force_lip(inst.m, inst.rows, inst.rhs, coeffs, bound=2 * inst.m * inst.rhs)
        if want is None:
            with pytest.raises(Infeasible):
                solve_lip(inst)
        else:
            sol = solve_lip(inst)
            assert sol.objective == want
            assert feasible(inst, sol.weights)

    @given(instances(), st.data())
    def test_capping_preserves_feasibility(self, inst, data):
        w = data.draw(st.lists(st.integers(0, 3 * inst.rhs), min_size=inst.m, max_size=inst.m))
        if feasible(inst, w):
            assert feasible(inst, [min(x, inst.rhs) for x in w])

    @settings(max_examples=60, deadline=None)
    @given(instances(max_m=5, max_rhs=1))
    def test_monotone_in_rhs(self, inst):
        objs = [solve_lip(inst.with_rhs(r)).objective for r in (1, 2, 3)]
        assert objs == sorted(objs)
        for r, obj in zip((1, 2, 3), objs):
            assert obj <= r * objs[0]

    def test_prune_dominated(self):
        rows = [frozenset({0, 1}), frozenset({0}), frozenset({0}), frozenset({1, 2})]
        assert prune_dominated(rows) == (frozenset({0}), frozenset({1, 2}))


class TestScaling:
    def test_standard_factor(self):
        sf = scaling_factor(standard_s12())
        assert sf.factor == 2
        assert sf.unit_objective == 3

    def test_single_row(self):
        assert scaling_factor(LipInstance(1, (frozenset({0}),), 1)).factor == 1

    def test_disjoint_rows(self):
        sf = scaling_factor(LipInstance(2, (frozenset({0}), frozenset({1})), 1))
        assert sf.factor == 2 and sf.unit_objective == 2


class TestCircuits:
    def test_standard_round_trip(self):
        d = standard_decomposition()
        assert d.arc_count == 6 and len(d.faces) == 4
        inst = lip_from_decomposition(d, 4)
        assert set(inst.rows) == set(STANDARD_S12_ROWS)
        assert solve_lip(inst).objective == 8

    def test_two_cycle(self):
        d = ArcDecomposition((1, 2), (("a", "b"),) * 2,
                             (DualEdge(("P", "Q"), 1), DualEdge(("P", "Q"), 2)))
        circuits = enumerate_circuits(d)
        assert [c.crossing_set for c in circuits] == [frozenset({1, 2})]

    def test_empty(self):
        assert enumerate_circuits(ArcDecomposition((), (), ())) == []

    def test_max_len(self):
        d = standard_decomposition()
        assert all(len(c.edge_path) <= 2 for c in enumerate_circuits(d, 2))
        assert {c.crossing_set for c in enumerate_circuits(d, 2)} == {frozenset({1, 2}), frozenset({3, 5})}

    def test_paths_are_closed(self):
        for c in enumerate_circuits(standard_decomposition()):
            faces = [e.faces for e in c.edge_path]
            start = faces[0][0]
            at = faces[0][1]
            for f1, f2 in faces[1:]:
                assert at in (f1, f2)
                at = f2 if at == f1 else f1
            assert at == start
            assert len({e.arc for e in c.edge_path}) == len(c.edge_path)

    @settings(max_examples=80, deadline=None)
    @given(st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3)), max_size=7))
    def test_matches_euler_oracle(self, pairs):
        d = ArcDecomposition(tuple(range(len(pairs))), (("a", "b"),) * len(pairs),
                             tuple(DualEdge(p, i) for i, p in enumerate(pairs)))
        got = {c.crossing_set for c in enumerate_circuits(d)}
        assert got == closed_trail_edge_sets(pairs)

    def test_json_round_trip(self, tmp_path):
        d = standard_decomposition()
        path = tmp_path / "d.json"
        path.write_text(json.dumps(d.to_json()))
        assert load_decomposition(path) == d
        inst = standard_s12(balanced=True)
        assert LipInstance.from_json(json.loads(json.dumps(inst.to_json()))) == inst


class TestIgiBase:
    @pytest.mark.parametrize("g, base", [(2, 12), (3, 5), (5, 9)])
    def test_values(self, g, base):
        assert verify_igi_base(g) == base

    def test_genus_one(self):
        with pytest.raises(OutOfRange):
            verify_igi_base(1)

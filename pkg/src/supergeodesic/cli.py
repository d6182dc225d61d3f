"""Command-line front end.

Every subcommand prints one JSON object on stdout, ``{"status": "ok",
"payload": ...}`` or ``{"status": "error", "error_kind": ..., "message":
...}``, with keys sorted.  Exit status is 0 on success, 1 when the library
rejects the input and 2 for usage errors.  Integers too large for a double
are written as decimal strings.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Optional

from . import __version__, bounds, dotgraph, lip, rainbow, seqcore
from .dotgraph import PolygonKind
from .errors import PolygonMismatch, SupergeodesicError

_KINDS = {
    "box": (PolygonKind.BOX,),
    "hex1": (PolygonKind.HEXAGON1,),
    "hex2": (PolygonKind.HEXAGON2,),
    "any": tuple(PolygonKind),
}


class UsageError(Exception):
    pass


@dataclass
class CommandResult:
    status: str
    payload: Optional[dict] = None
    error_kind: Optional[str] = None
    message: Optional[str] = None
    usage: str = field(default="", repr=False)

    @property
    def exit_code(self) -> int:
        if self.status == "ok":
            return 0
        return 2 if self.error_kind == "UsageError" else 1

    def to_json(self) -> dict:
        if self.status == "ok":
            return {"status": "ok", "payload": self.payload}
        return {"status": "error", "error_kind": self.error_kind, "message": self.message}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _csv(text: str) -> tuple[int, ...]:
    try:
        return seqcore.parse_sequence(text)
    except (ValueError, json.JSONDecodeError) as exc:
        raise argparse.ArgumentTypeError(f"bad integer list {text!r}: {exc}")


def _naturals(text: str) -> tuple[int, ...]:
    try:
        text = text.strip()
        if text.startswith("["):
            values = tuple(int(v) for v in json.loads(text))
        else:
            values = tuple(int(v) for v in text.split(",")) if text else ()
    except (ValueError, TypeError, json.JSONDecodeError) as exc:
        raise argparse.ArgumentTypeError(f"bad integer list {text!r}: {exc}")
    return values


def _big(n: int):
    return n if abs(n) < 2**53 else str(n)


# --- handlers ---------------------------------------------------------------


def _sawtooth(args):
    if args.action == "check":
        return {"sawtooth": seqcore.is_sawtooth(args.sequence)}
    w = seqcore.normalize_sawtooth(args.sequence)
    return {"sequence": list(w.sequence)}


def _detect(args):
    g = dotgraph.graph_of(args.sequence)
    found = dotgraph.find_polygons(g, _KINDS[args.kind])
    return {"count": len(found), "polygons": [p.to_json() for p in found]}


def _surgery(args):
    w = seqcore.witness(args.sequence)
    boxes = dotgraph.find_boxes(dotgraph.build_dot_graph(w))
    if not boxes:
        raise PolygonMismatch("the dot graph has no box")
    if not 0 <= args.index < len(boxes):
        raise PolygonMismatch(f"box index {args.index} out of range 0..{len(boxes) - 1}")
    box = boxes[args.index]
    result = dotgraph.box_surgery(w, box)
    return {"box": box.to_json(), "sequence": list(result.sequence), "origin": list(result.origin)}


def _load_json(path):
    with open(path) as fh:
        return json.load(fh)


def _instance(args) -> lip.LipInstance:
    if args.file is None:
        inst = lip.standard_s12()
    else:
        data = _load_json(args.file)
        if "dual_edges" in data:
            d = lip.ArcDecomposition.from_json(data)
            inst = lip.lip_from_decomposition(d, args.rhs or 1)
        else:
            inst = lip.LipInstance.from_json(data)
    if args.rhs is not None:
        inst = inst.with_rhs(args.rhs)
    if args.balanced:
        inst = inst.with_balanced(True)
    return inst


def _lip_solve(args):
    inst = _instance(args)
    out = lip.solve_lip(inst).to_json()
    out.update(m=inst.m, rhs=inst.rhs, balanced=inst.balanced)
    return out


def _lip_scale(args):
    return lip.scaling_factor(_instance(args)).to_json()


def _lip_circuits(args):
    d = lip.standard_decomposition() if args.file is None else lip.load_decomposition(args.file)
    circuits = lip.enumerate_circuits(d, args.max_len)
    return {
        "count": len(circuits),
        "circuits": [
            {
                "crossing_set": sorted(c.crossing_set, key=d.arc_index),
                "edge_path": [{"faces": list(e.faces), "arc": e.arc} for e in c.edge_path],
            }
            for c in circuits
        ],
    }


def _bounds(args):
    if args.action == "crossover":
        return {"genus": args.genus, "crossover": bounds.crossover_intersection(args.genus)}
    if args.intersections is None:
        raise UsageError("bounds: --intersections is required")
    return bounds.compare_bounds(args.genus, args.intersections).to_json()


def _thresholds(args):
    return rainbow.threshold_report(args.genus).to_json()


def _candidates(args):
    n = rainbow.candidate_bound(args.genus)
    return {
        "genus": args.genus,
        "super_bound": rainbow.super_bound(args.genus),
        "candidate_bound": str(n),
        "digits": len(str(n)),
    }


def _webb(args):
    n = rainbow.webb_bound(args.genus, args.distance)
    return {"genus": args.genus, "distance": args.distance, "value": str(n), "digits": len(str(n))}


def _chain(args):
    chain = rainbow.CoordinateChain(args.genus, args.distance, args.values)
    return {"feasible": rainbow.feasible_chain(chain, args.genus)}


def _complexity(args):
    c = seqcore.path_complexity(args.v0, args.vd)
    return {"kappa": _big(c.kappa), "terms": list(c.terms)}


# --- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="supergeodesic", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("sawtooth", help="check or normalize sawtooth form")
    s.add_argument("action", choices=["check", "normalize"])
    s.add_argument("sequence", type=_csv)
    s.set_defaults(handler=_sawtooth)

    s = sub.add_parser("dotgraph", help="find sigma-polygons in a dot graph")
    s.add_argument("action", choices=["detect"])
    s.add_argument("sequence", type=_csv)
    s.add_argument("--kind", choices=sorted(_KINDS), default="any")
    s.set_defaults(handler=_detect)

    s = sub.add_parser("surgery", help="remove a box from a sawtooth sequence")
    s.add_argument("action", choices=["box"])
    s.add_argument("sequence", type=_csv)
    s.add_argument("--index", type=int, default=0, help="which box, in detection order")
    s.set_defaults(handler=_surgery)

    s = sub.add_parser("lip", help="covering programs")
    lsub = s.add_subparsers(dest="action", required=True, parser_class=_Parser)
    for name, handler, help_text in (
        ("solve", _lip_solve, "exact minimum of the covering program"),
        ("scale", _lip_scale, "scaling factor of the covering program"),
    ):
        t = lsub.add_parser(name, help=help_text)
        src = t.add_mutually_exclusive_group()
        src.add_argument("--standard", action="store_true", help="the built-in six-arc program (default)")
        src.add_argument("--file", help="LIP or decomposition JSON")
        t.add_argument("--rhs", type=int)
        t.add_argument("--balanced", action="store_true")
        t.set_defaults(handler=handler)
    t = lsub.add_parser("circuits", help="circuits of a decomposition's dual graph")
    t.add_argument("--file", help="decomposition JSON (default: the built-in one)")
    t.add_argument("--max-len", type=int)
    t.set_defaults(handler=_lip_circuits)

    s = sub.add_parser("bounds", help="compare distance bounds")
    s.add_argument("action", nargs="?", choices=["crossover"])
    s.add_argument("--genus", type=int, required=True)
    s.add_argument("--intersections", type=int)
    s.set_defaults(handler=_bounds)

    s = sub.add_parser("thresholds", help="stacking thresholds and B(g)")
    s.add_argument("--genus", type=int, required=True)
    s.set_defaults(handler=_thresholds)

    s = sub.add_parser("candidates", help="size of the candidate coordinate box")
    s.add_argument("--genus", type=int, required=True)
    s.set_defaults(handler=_candidates)

    s = sub.add_parser("webb", help="Webb's candidate bound")
    s.add_argument("--genus", type=int, required=True)
    s.add_argument("--distance", type=int, required=True)
    s.set_defaults(handler=_webb)

    s = sub.add_parser("chain", help="coordinate-chain feasibility")
    s.add_argument("action", choices=["check"])
    s.add_argument("--genus", type=int, required=True)
    s.add_argument("--distance", type=int, required=True)
    s.add_argument("--values", type=_naturals, required=True)
    s.set_defaults(handler=_chain)

    s = sub.add_parser("complexity", help="path complexity from two rows")
    s.add_argument("--v0", type=_naturals, required=True)
    s.add_argument("--vd", type=_naturals, required=True)
    s.set_defaults(handler=_complexity)

    return p


def run(argv=None) -> CommandResult:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return CommandResult("ok", args.handler(args))
    except UsageError as exc:
        return CommandResult("error", error_kind="UsageError", message=str(exc),
                             usage=parser.format_usage())
    except SupergeodesicError as exc:
        return CommandResult("error", error_kind=type(exc).__name__, message=str(exc))
    except (ValueError, KeyError, TypeError, OSError) as exc:
        return CommandResult("error", error_kind=type(exc).__name__, message=str(exc))


def main(argv=None) -> int:
    result = run(argv)
    if result.status != "ok":
        print(result.message, file=sys.stderr)
        if result.usage:
            print(result.usage, file=sys.stderr, end="")
    print(result.dumps())
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())

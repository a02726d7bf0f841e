"""Command line interface and the JSONL sweep store.

Exit codes: 0 success, 1 mathematical inconsistency or counterexample
witness, 2 usage error, 3 budget exceeded.  All errors are also emitted as
one JSON object on standard error.  The environment variable
HALLWALK_BUDGET overrides the default work budget.
"""

import argparse
import json
import os
import random
import sys
from datetime import datetime, timezone
from itertools import product
from pathlib import Path

from . import __version__
from .classify import classify
from .delta import delta_vector
from .ehrhart import DEFAULT_BUDGET, ehrhart_data
from .errors import (
    BudgetExceededError,
    HallwalkError,
    InconsistentCountsError,
    MathematicalInconsistencyError,
    UsageError,
)
from .freesum import gorenstein_compose, idp_compose
from .idp import decompose, is_idp
from .polytope import parse_s
from .triangulate import chimney_triangulation, verify_triangulation

EXIT_OK = 0
EXIT_INCONSISTENT = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _budget() -> int:
    return int(os.environ.get("HALLWALK_BUDGET", DEFAULT_BUDGET))


def _emit(payload: dict) -> None:
    print(json.dumps(payload, sort_keys=True))


def _emit_error(kind: str, message: str) -> None:
    print(json.dumps({"error": kind, "message": message}, sort_keys=True), file=sys.stderr)


def _cmd_delta(args) -> int:
    s = parse_s(args.s)
    _emit({"s": list(s), "delta": list(delta_vector(s))})
    return EXIT_OK


def _cmd_ehrhart(args) -> int:
    s = parse_s(args.s)
    data = ehrhart_data(s, tmax=args.tmax, budget=_budget())
    _emit(data.to_json())
    return EXIT_OK


def _cmd_classify(args) -> int:
    s = parse_s(args.s)
    _emit(classify(s, budget=_budget()).to_json())
    return EXIT_OK


def _cmd_idp(args) -> int:
    s = parse_s(args.s)
    result = is_idp(s, k_max=args.idp_max_k, budget=_budget())
    _emit({"s": list(s), **result.to_json()})
    return EXIT_OK if result.ok else EXIT_INCONSISTENT


def _cmd_decompose(args) -> int:
    s = parse_s(args.s)
    point = tuple(int(v) for v in args.x.split(","))
    result = decompose(s, args.k, point)
    _emit(
        {
            "s": list(s),
            "k": args.k,
            "target": list(result.target),
            "parts": [list(p) for p in result.parts],
        }
    )
    return EXIT_OK


def _cmd_triangulate(args) -> int:
    s = parse_s(args.s)
    cells = 1
    for v in s:
        cells *= v
    if cells > _budget():
        raise BudgetExceededError(f"triangulation of {s} has {cells} cells")
    tri = chimney_triangulation(s)
    report = verify_triangulation(s, tri, samples=args.verify_samples, seed=args.seed)
    _emit({**tri.to_json(), "verification": report.to_json()})
    return EXIT_OK if report.ok else EXIT_INCONSISTENT


def _cmd_compose(args) -> int:
    left = parse_s(args.left)
    right = parse_s(args.right)
    if args.mode == "gorenstein":
        result = gorenstein_compose(left, right, budget=_budget())
    else:
        result = idp_compose(left, right, budget=_budget())
    _emit({"left": list(left), "right": list(right), "mode": args.mode, **result.to_json()})
    return EXIT_OK if result.ok else EXIT_INCONSISTENT


def search_record(s, budget=None, k_max=None) -> dict:
    """One sweep record: delta, classification, IDP verdict, witnesses."""
    record: dict = {"s": list(s), "version": __version__}
    try:
        record["delta"] = list(delta_vector(s))
        record["classification"] = classify(s, budget=budget).to_json()
        idp_result = is_idp(s, k_max=k_max, budget=budget)
        record["idp_verdict"] = idp_result.ok
        record["k_checked"] = idp_result.k_checked
        if not idp_result.ok:
            record["witness"] = {
                "kind": "idp-failure",
                "k": idp_result.k_checked,
                "point": list(idp_result.witness),
            }
    except MathematicalInconsistencyError as exc:
        record["witness"] = {"kind": "theorem-oracle-disagreement", "detail": str(exc)}
    except BudgetExceededError as exc:
        record["error"] = "budget-exceeded"
        record["detail"] = str(exc)
    record["timestamp"] = datetime.now(timezone.utc).isoformat()
    return record


def _sweep_sequences(dmax: int, smax: int, count: int | None, seed: int | None):
    if dmax < 1 or smax < 1:
        raise UsageError("--dmax and --smax must be >= 1")
    if count is None:
        for d in range(1, dmax + 1):
            yield from product(range(1, smax + 1), repeat=d)
        return
    if count > smax**dmax:
        raise UsageError(
            f"--random {count} asks for more distinct sequences than the {smax}^{dmax} available"
        )
    rng = random.Random(seed)
    seen = set()
    while len(seen) < count:
        s = tuple(rng.randint(1, smax) for _ in range(dmax))
        if s not in seen:
            seen.add(s)
            yield s


def _cmd_search(args) -> int:
    out = Path(args.out)
    existing: dict[tuple, str] = {}
    if args.resume and out.exists():
        for line in out.read_text().splitlines():
            if line.strip():
                existing[tuple(json.loads(line)["s"])] = line
    budget = _budget()
    lines: dict[tuple, str] = dict(existing)
    witnesses = 0
    new = 0
    with out.open("a") as sink:
        for s in _sweep_sequences(args.dmax, args.smax, args.random, args.seed):
            if s in existing:
                continue
            record = search_record(s, budget=budget, k_max=args.idp_max_k)
            line = json.dumps(record, sort_keys=True)
            sink.write(line + "\n")
            sink.flush()
            lines[s] = line
            new += 1
    witnesses = sum(1 for line in lines.values() if "witness" in json.loads(line))
    ordered = sorted(lines, key=lambda s: (len(s), s))
    out.write_text("".join(lines[s] + "\n" for s in ordered))
    _emit(
        {
            "out": str(out),
            "records": len(lines),
            "new_records": new,
            "witnesses": witnesses,
        }
    )
    return EXIT_INCONSISTENT if witnesses else EXIT_OK


def _build_parser() -> _Parser:
    parser = _Parser(prog="hallwalk", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("delta", help="delta-vector via ascent enumeration")
    p.add_argument("s")
    p.set_defaults(func=_cmd_delta)

    p = sub.add_parser("ehrhart", help="dilate counts, polynomial, delta (oracle route)")
    p.add_argument("s")
    p.add_argument("--tmax", type=int, default=None)
    p.set_defaults(func=_cmd_ehrhart)

    p = sub.add_parser("classify", help="Fano/reflexive/Gorenstein classification")
    p.add_argument("s")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("idp", help="integer decomposition property check")
    p.add_argument("s")
    p.add_argument("--idp-max-k", type=int, default=None)
    p.set_defaults(func=_cmd_idp)

    p = sub.add_parser("decompose", help="greedy decomposition of a point of k*P")
    p.add_argument("s")
    p.add_argument("k", type=int)
    p.add_argument("x")
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("triangulate", help="unimodular chimney triangulation")
    p.add_argument("s")
    p.add_argument("--verify-samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_triangulate)

    p = sub.add_parser("compose", help="free-sum composition of two sequences")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p.add_argument("--mode", choices=("gorenstein", "idp"), required=True)
    p.set_defaults(func=_cmd_compose)

    p = sub.add_parser("search", help="sweep sequences into a JSONL evidence store")
    p.add_argument("--dmax", type=int, required=True)
    p.add_argument("--smax", type=int, required=True)
    p.add_argument("--random", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--out", required=True)
    p.add_argument("--resume", action="store_true")
    p.add_argument("--idp-max-k", type=int, default=None)
    p.set_defaults(func=_cmd_search)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        _emit_error("usage", str(exc))
        return EXIT_USAGE
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        _emit_error("budget-exceeded", str(exc))
        return EXIT_BUDGET
    except (MathematicalInconsistencyError, InconsistentCountsError) as exc:
        _emit_error("mathematical-inconsistency", str(exc))
        return EXIT_INCONSISTENT
    except (HallwalkError, ValueError) as exc:
        _emit_error("usage", str(exc))
        return EXIT_USAGE
    except OSError as exc:
        _emit_error("io", str(exc))
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

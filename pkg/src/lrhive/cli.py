"""Command-line interface.

Exit status: 0 on success, 1 when a verification verdict FAILs (or a
piecewise verify scan finds a mismatch), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import TABLES_REVISION, __version__
from .coefficients import METHODS, lr_coefficient
from .horn import facet_system, hilbert_generators
from .partitions import Partition
from .piecewise import (
    eval_sample_piece,
    family_function,
    gl4nr_sample_pieces,
    multiplicity_multiset,
    piecewise_to_json,
    point_of,
    verify_family,
)
from .verify import (
    FAIL,
    SweepConfig,
    check_conjecture1,
    check_conjecture2,
    cz_sum_check,
    reproduce_gl5_counterexample,
    stability_check,
    sweep,
)

FAMILIES = ("gl3", "gl4nr2", "gl4nr-samples")


def _partition(args, name: str) -> Partition:
    return Partition.parse(getattr(args, name), args.n)


def _add_triple(sub, nu_required=True):
    sub.add_argument("--lambda", dest="lam", required=True, metavar="PARTS")
    sub.add_argument("--mu", required=True, metavar="PARTS")
    if nu_required:
        sub.add_argument("--nu", required=True, metavar="PARTS")
    sub.add_argument("--n", type=int, required=True, help="rank (pads omitted zeros)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lrhive",
        description="Exact Littlewood-Richardson coefficients, counting functions, and conjecture sweeps.",
    )
    parser.add_argument(
        "--version",
        action="version",
        version=f"lrhive {__version__} (tables revision {TABLES_REVISION})",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lr", help="one coefficient c_{lambda,mu}^nu")
    _add_triple(p)
    p.add_argument("--method", choices=METHODS, default="auto")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("multiset", help="histogram of positive coefficients over nu")
    _add_triple(p, nu_required=False)
    p.add_argument("--json", action="store_true")

    for name in ("conj1", "conj2", "czsum"):
        p = sub.add_parser(name, help=f"run the {name} comparison on one (lambda, mu)")
        _add_triple(p, nu_required=False)
        p.add_argument("--json", action="store_true")

    p = sub.add_parser("stability", help="rank independence for near-rectangular factors")
    p.add_argument("--lam1", type=int, required=True)
    p.add_argument("--lam2", type=int, required=True)
    p.add_argument("--mu1", type=int, required=True)
    p.add_argument("--mu2", type=int, required=True)
    p.add_argument("--nu", required=True, metavar="N1,N2,N3,N4", help="the four free parts of nu")
    p.add_argument("--ranks", default="4,5,6", metavar="N,N,...")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("horn", help="facet-system membership at rank 4")
    _add_triple(p)
    p.add_argument("--family", choices=("nr", "nr2"), required=True)
    p.add_argument("--generators", action="store_true", help="list the Hilbert generators instead")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("piecewise", help="evaluate or verify a counting-function table")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--point", metavar="X,X,...", help="integer point, 5 coordinates")
    p.add_argument("--verify-range", type=int, metavar="B",
                   help="scan all points with coordinates in [0, B] against enumeration")
    p.add_argument("--dump", action="store_true", help="print the table as JSON")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("sweep", help="batch conjecture checks over a (lambda, mu) grid")
    p.add_argument("--config", metavar="FILE.json")
    p.add_argument("--n", type=int)
    p.add_argument("--max-nr", type=int, help="bound on max(lambda1-lambda2, lambda2)")
    p.add_argument("--max-mu", type=int, help="bound on |mu|")
    p.add_argument("--check", choices=("conj1", "conj2", "cz_sum"))
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--output", metavar="FILE")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("repro-gl5", help="reproduce the rank-5 component-count counterexample")
    p.add_argument("--json", action="store_true")

    return parser


def _emit_verdict(v, as_json: bool) -> int:
    if as_json:
        print(json.dumps(v.as_json(), sort_keys=True))
    else:
        line = f"{v.status} {v.check} lambda={v.lam} mu={v.mu}"
        if v.witness:
            line += f" ({v.witness})"
        print(line)
    return 1 if v.status == FAIL else 0


def _cmd_lr(args) -> int:
    lam, mu, nu = (_partition(args, k) for k in ("lam", "mu", "nu"))
    value = lr_coefficient(lam, mu, nu, args.method)
    if args.json:
        print(json.dumps({"lambda": list(lam), "mu": list(mu), "nu": list(nu),
                          "method": args.method, "coefficient": value}, sort_keys=True))
    else:
        print(value)
    return 0


def _cmd_multiset(args) -> int:
    lam, mu = _partition(args, "lam"), _partition(args, "mu")
    ms = multiplicity_multiset(lam, mu)
    if args.json:
        print(json.dumps({"lambda": list(lam), "mu": list(mu),
                          "multiset": {str(v): k for v, k in ms.counts},
                          "components": ms.components, "mult_sum": ms.mult_sum},
                         sort_keys=True))
    else:
        print(" ".join(f"{v}:{k}" for v, k in ms.counts))
    return 0


def _cmd_compare(args) -> int:
    lam, mu = _partition(args, "lam"), _partition(args, "mu")
    check = {"conj1": check_conjecture1, "conj2": check_conjecture2, "czsum": cz_sum_check}
    return _emit_verdict(check[args.command](lam, mu), args.json)


def _cmd_stability(args) -> int:
    nu4 = tuple(int(t) for t in args.nu.split(","))
    if len(nu4) != 4:
        raise SystemExit("--nu needs exactly four parts")
    ranks = tuple(int(t) for t in args.ranks.split(","))
    v = stability_check(args.lam1, args.lam2, args.mu1, args.mu2, nu4, ranks)
    return _emit_verdict(v, args.json)


def _cmd_horn(args) -> int:
    if args.generators:
        gens = hilbert_generators(args.family)
        for g in gens:
            print(f"{g.lam} | {g.mu} | {g.nu}  {g.description}")
        return 0
    lam, mu, nu = (_partition(args, k) for k in ("lam", "mu", "nu"))
    system = facet_system(args.family)
    bad = system.violated(lam, mu, nu)
    if args.json:
        print(json.dumps({"family": args.family, "member": not bad, "violated": bad},
                         sort_keys=True))
    else:
        print("member" if not bad else f"non-member, violated facet indices {bad}")
    return 0


def _cmd_piecewise(args) -> int:
    if args.dump:
        if args.family == "gl4nr-samples":
            raise SystemExit("--dump supports the full tables only (gl3, gl4nr2)")
        print(json.dumps(piecewise_to_json(family_function(args.family)), sort_keys=True))
        return 0
    if args.verify_range is not None:
        mismatch = verify_family(args.family, args.verify_range)
        if mismatch is None:
            print(f"OK: {args.family} agrees with enumeration up to {args.verify_range}")
            return 0
        point, table_value, true_value = mismatch
        print(f"MISMATCH at {point}: table {table_value}, enumeration {true_value}")
        return 1
    if args.point is None:
        raise SystemExit("piecewise needs one of --point, --verify-range, --dump")
    coords = tuple(int(t) for t in args.point.split(","))
    if args.family == "gl4nr-samples":
        pieces = gl4nr_sample_pieces()
        point = point_of(("k1", "k2", "m1", "m2", "m3"), coords)
        hits = [(i, eval_sample_piece(p, point)) for i, p in enumerate(pieces)
                if p[0].contains(point)]
        if args.json:
            print(json.dumps({"point": list(coords),
                              "pieces": [{"index": i, "value": v} for i, v in hits]},
                             sort_keys=True))
        elif hits:
            for i, v in hits:
                print(f"{v} (piece {i})")
        else:
            print("no sample piece contains the point")
        return 0
    f = family_function(args.family)
    point = point_of(f.variables, coords)
    value, index = f.evaluate(point)
    if args.json:
        print(json.dumps({"point": list(coords), "value": value, "piece": index},
                         sort_keys=True))
    else:
        print(f"{value} (piece {index})" if index is not None else f"{value} (outside support)")
    return 0


def _cmd_sweep(args) -> int:
    if args.config:
        with open(args.config) as fh:
            config = SweepConfig.from_json(json.load(fh))
        if args.jobs != 1:
            raise SystemExit("use either --config or inline flags, not both")
    else:
        missing = [f for f in ("n", "max_nr", "max_mu", "check") if getattr(args, f) is None]
        if missing:
            raise SystemExit(f"sweep needs --config or all of --n --max-nr --max-mu --check")
        config = SweepConfig(n=args.n, max_nr=args.max_nr, max_mu_size=args.max_mu,
                             check=args.check, jobs=args.jobs,
                             output_path=args.output, output_format=args.format)
    report = sweep(config, version=f"{__version__}+t{TABLES_REVISION}")
    if args.json:
        print(report.to_json_text(), end="")
    else:
        print(f"{len(report.verdicts)} cases: {report.passes} PASS, {report.fails} FAIL")
        for v in report.verdicts:
            if v.status == FAIL:
                print(f"  FAIL lambda={v.lam} mu={v.mu}: {v.witness}")
    return 0 if report.unexpected_fails == 0 else 1


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handlers = {
        "lr": _cmd_lr,
        "multiset": _cmd_multiset,
        "conj1": _cmd_compare,
        "conj2": _cmd_compare,
        "czsum": _cmd_compare,
        "stability": _cmd_stability,
        "horn": _cmd_horn,
        "piecewise": _cmd_piecewise,
        "sweep": _cmd_sweep,
        "repro-gl5": lambda a: _emit_verdict(reproduce_gl5_counterexample(), a.json),
    }
    try:
        return handlers[args.command](args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

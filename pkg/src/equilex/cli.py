"""Command-line frontend.

Subcommands: construct {simplex|prop2|theorem2|theorem3}, verify, certify,
bounds, search.  Exit codes: 0 success or pass, 1 verification failure,
2 usage or input-file error, 3 domain/range error.  EQUILEX_THREADS caps
worker parallelism for the search.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys

from . import bounds as bounds_mod
from . import construct, document, hadamard, search
from .certify import certify_rank
from .errors import EquilexError, ValidationError
from .lp_core import LpSpace, PointSet, scale_set
from .verify import check_equilateral

__all__ = ["main"]

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="equilex",
        description="Construct, verify, certify and bound equilateral sets in l_p spaces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("construct", help="build an equilateral point set")
    csub = pc.add_subparsers(dest="construction", required=True)

    def add_output_flags(sp):
        sp.add_argument("--normalize", action="store_true", help="rescale to common distance 1")
        sp.add_argument("--out", metavar="FILE", help="write the JSON document here")
        sp.add_argument("--csv", metavar="FILE", help="also write a headerless CSV")

    sp = csub.add_parser("simplex", help="d+1 points at distance 2^(1/p)")
    sp.add_argument("--p", type=float, required=True)
    sp.add_argument("--d", type=int, required=True)
    add_output_flags(sp)

    sp = csub.add_parser("prop2", help="2k unit vectors in dimension 2k-1 from a Hadamard matrix")
    sp.add_argument("--p", type=float, required=True)
    sp.add_argument("--hadamard-order", type=int, help="Sylvester order (a power of 2)")
    sp.add_argument("--hadamard-file", metavar="FILE", help="plain text Hadamard matrix to use")
    add_output_flags(sp)

    sp = csub.add_parser("theorem2", help="block construction for 1 < p < 2")
    sp.add_argument("--p", type=float, required=True)
    sp.add_argument("--d", type=int, required=True)
    add_output_flags(sp)

    sp = csub.add_parser("theorem3", help="6 points in dimension 4 for small p")
    sp.add_argument("--p", type=float, required=True)
    add_output_flags(sp)

    pv = sub.add_parser("verify", help="check a point-set document")
    pv.add_argument("file")
    pv.add_argument("--p", type=float, required=True)
    pv.add_argument("--tol", type=float, default=1e-9)
    pv.add_argument("--sphere", action="store_true", help="also require unit norms")

    py = sub.add_parser("certify", help="rank certificate for an even integer exponent")
    py.add_argument("file")
    py.add_argument("--p", type=float, required=True)
    py.add_argument("--svd-tol", type=float, default=1e-8)

    pb = sub.add_parser("bounds", help="report all known bounds on e(l_p^d)")
    pb.add_argument("--p", type=float, required=True)
    pb.add_argument("--d", type=int, required=True)
    pb.add_argument("--table", action="store_true", help="text table instead of JSON")

    ps = sub.add_parser("search", help="random-restart gradient descent search")
    ps.add_argument("--p", type=float, required=True)
    ps.add_argument("--d", type=int, required=True)
    ps.add_argument("--n", type=int, required=True)
    ps.add_argument("--restarts", type=int, required=True)
    ps.add_argument("--seed", type=int, default=0)
    ps.add_argument("--max-iters", type=int, default=2000)
    ps.add_argument("--threshold", type=float, default=1e-13)
    ps.add_argument("--out", metavar="FILE")
    ps.add_argument("--csv", metavar="FILE")
    return parser


def _load_hadamard(args) -> hadamard.HadamardMatrix:
    if (args.hadamard_order is None) == (args.hadamard_file is None):
        raise ValidationError("give exactly one of --hadamard-order or --hadamard-file")
    if args.hadamard_file is not None:
        return hadamard.read_text_file(args.hadamard_file)
    k = args.hadamard_order
    n = k.bit_length() - 1
    if k < 1 or 2**n != k:
        raise ValidationError(
            f"--hadamard-order {k} is not a power of 2; supply such a matrix via --hadamard-file"
        )
    return hadamard.sylvester(n)


def _emit_pointset(S: PointSet, provenance: dict, args) -> None:
    if args.normalize and S.claimed_scale is not None:
        S = scale_set(S, 1.0 / S.claimed_scale)
        provenance = dict(provenance, normalized=True)
    if args.out:
        document.save(S, args.out, provenance)
    else:
        print(document.dumps(S, provenance))
    if args.csv:
        document.save_csv(S, args.csv)


def _cmd_construct(args) -> int:
    name = args.construction
    if name == "simplex":
        S = construct.standard_simplex(args.p, args.d)
        prov = {"construction": "simplex", "p": args.p, "d": args.d}
    elif name == "prop2":
        H = _load_hadamard(args)
        S = construct.prop2_lift(args.p, H)
        prov = {"construction": "prop2", "p": args.p, "hadamard_order": H.order}
    elif name == "theorem2":
        S = construct.theorem2(args.p, args.d)
        prov = {
            "construction": "theorem2",
            "p": args.p,
            "d": args.d,
            "k": bounds_mod.k_of_p(args.p),
        }
    else:
        S = construct.theorem3(args.p)
        prov = {"construction": "theorem3", "p": args.p}
    _emit_pointset(S, prov, args)
    return EXIT_OK


def _cmd_verify(args) -> int:
    S, _ = document.load(args.file)
    if S.space.p != args.p:
        print(
            f"warning: file records p={S.space.p!r}, verifying under --p {args.p!r}",
            file=sys.stderr,
        )
        S = PointSet(LpSpace(args.p, S.space.dim), S.points, S.claimed_scale)
    report = check_equilateral(S, tol=args.tol, check_sphere=args.sphere)
    print(report.to_json())
    return EXIT_OK if report.passed else EXIT_FAIL


def _cmd_certify(args) -> int:
    S, _ = document.load(args.file)
    if S.space.p != args.p:
        print(
            f"warning: file records p={S.space.p!r}, certifying under --p {args.p!r}",
            file=sys.stderr,
        )
    cert = certify_rank(PointSet(LpSpace(args.p, S.space.dim), S.points), args.p, tol=args.svd_tol)
    print(cert.to_json())
    return EXIT_OK if cert.certified else EXIT_FAIL


def _format_table(rep) -> str:
    lines = [f"e(l_p^d) bounds for p={rep.p!r}, d={rep.d}", ""]
    lines.append(f"{'kind':<6} {'value':>8}  source")
    for b in rep.lower_bounds:
        lines.append(f"{'lower':<6} {b.value:>8}  {b.source}")
    for b in rep.upper_bounds:
        lines.append(f"{'upper':<6} {b.value:>8}  {b.source}")
    lines.append("")
    if rep.exact:
        lines.append(f"exact value: {rep.best_lower}")
    else:
        lines.append(f"best known: {rep.best_lower} <= e <= {rep.best_upper}")
    for note in rep.notes:
        lines.append(f"note: {note}")
    return "\n".join(lines)


def _cmd_bounds(args) -> int:
    rep = bounds_mod.report(args.p, args.d)
    print(_format_table(rep) if args.table else rep.to_json())
    return EXIT_OK


def _threads_from_env() -> int:
    raw = os.environ.get("EQUILEX_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _cmd_search(args) -> int:
    cfg = search.SearchConfig(
        space=LpSpace(args.p, args.d),
        n=args.n,
        restarts=args.restarts,
        seed=args.seed,
        max_iters=args.max_iters,
        threshold=args.threshold,
    )
    result = search.run_search(cfg, threads=_threads_from_env())
    prov = {
        "construction": "search",
        "p": args.p,
        "d": args.d,
        "n": args.n,
        "restarts": args.restarts,
        "seed": args.seed,
        "best_energy": result.best_energy,
        "restart_index": result.restart_index,
        "iterations_used": result.iterations_used,
        "discovery": result.discovery,
    }
    print(
        f"best energy {result.best_energy:.6e} at restart {result.restart_index} "
        f"(discovery: {result.discovery})",
        file=sys.stderr,
    )
    if args.out:
        document.save(result.best_points, args.out, prov)
    else:
        print(document.dumps(result.best_points, prov))
    if args.csv:
        document.save_csv(result.best_points, args.csv)
    return EXIT_OK


def main(argv=None) -> int:
    logging.basicConfig(stream=sys.stderr, level=logging.INFO, format="%(message)s")
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK

    handlers = {
        "construct": _cmd_construct,
        "verify": _cmd_verify,
        "certify": _cmd_certify,
        "bounds": _cmd_bounds,
        "search": _cmd_search,
    }
    try:
        return handlers[args.command](args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except EquilexError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())

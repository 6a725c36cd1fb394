"""Command-line front end.

Exit codes: 0 success, 2 invalid input, 3 size guard refused, 4 a constructed
code failed verification.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from . import curve, onepoint, picard, prospector, report, weight, zeta
from .errors import HermcodeError, LemmaVerificationError, RangeError, SizeGuard
from .field import factor_prime_power

EXIT_OK, EXIT_INVALID, EXIT_GUARD, EXIT_VERIFY = 0, 2, 3, 4


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--q", type=int, required=True, help="prime power; the curve lives over F_{q^2}")
    p.add_argument("--t", type=int, help="degree of t*P_inf for the one-point code")
    p.add_argument("--kmax", type=int, default=10, help="largest divisor degree in the zeta table")
    p.add_argument("--l", type=int, help="largest number of evaluation places searched (default n)")
    p.add_argument("--t-max", type=int, help="largest free degree t searched (default 2g)")
    p.add_argument("--criterion", choices=prospector.CRITERIA, default="exact")
    p.add_argument("--k-min", type=int, default=1)
    p.add_argument("--eval", type=int, default=4, help="evaluation set size for verify-lemma")
    p.add_argument("--s", type=int, help="divisor degree for verify-lemma")
    p.add_argument("--m", type=int, help="number of evaluation points in the hit sums")
    p.add_argument("--seed", type=int, help="sample the verify-lemma evaluation set with this seed")
    p.add_argument("--ratio", type=int, default=2, help="n * alpha for the asymptotic profile")
    p.add_argument("--slack", type=float, default=1e-6, help="theta = theta* - slack")
    p.add_argument("--exact-distance", action="store_true", help="brute-force the minimum distance")
    p.add_argument("--matrix", action="store_true", help="include the generator matrix in json/text output")
    p.add_argument("--workers", type=int, default=1, help="threads for the distance search")
    p.add_argument("--format", choices=report.FORMATS, default="json")
    p.add_argument("--out", type=Path, help="write here instead of stdout")
    p.add_argument("--force-size", action="store_true", help="disable size guards")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hermcode", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    common = _common()
    sub.add_parser("zeta", parents=[common], help="L-polynomial, class number and A_k table")
    sub.add_parser("code", parents=[common], help="one-point code C_L(t P_inf, D)")
    sub.add_parser("prospect", parents=[common], help="search (l, t) meeting an existence criterion")
    sub.add_parser("verify-lemma", parents=[common], help="constructive check at q = 2")
    sub.add_parser("asymptotic", parents=[common], help="large-q parameter profile")
    return parser


def _need(args: argparse.Namespace, *names: str) -> None:
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise RangeError("missing required flag(s): " + ", ".join("--" + n.replace("_", "-") for n in missing))


def cmd_zeta(args: argparse.Namespace) -> str:
    if args.kmax < 0:
        raise RangeError(f"--kmax must be nonnegative, got {args.kmax}")
    prof = zeta.zeta_profile(args.q, args.kmax)
    if args.format == "csv":
        return report.zeta_csv(prof)
    if args.format == "text":
        return report.zeta_text(prof)
    return report.dump_json(report.zeta_payload(prof))


def cmd_code(args: argparse.Namespace) -> str:
    _need(args, "t")
    guard = None if args.force_size else curve.DEFAULT_FIELD_GUARD
    q, t = args.q, args.t
    factor_prime_power(q)
    code = onepoint.generator_matrix(q, t, guard=guard)
    g = curve.genus(q)
    band = onepoint.yang_kumar_band(q, t) if 2 * g - 1 < t < q**3 else None
    dist = None
    if args.exact_distance:
        dist = weight.min_distance_exact(
            code, guard=None if args.force_size else weight.DEFAULT_ENUM_GUARD, workers=args.workers
        )
    if args.format == "csv":
        return report.code_csv(code, onepoint.monomial_basis(q, t))
    payload = report.code_payload(code, genus=g, band=band, distance=dist, include_matrix=args.matrix)
    if args.format == "text":
        return report.code_text(payload)
    return report.dump_json(payload)


def cmd_prospect(args: argparse.Namespace) -> str:
    res = prospector.search(
        args.q,
        args.criterion,
        k_min=args.k_min,
        t_max=args.t_max,
        l_max=args.l,
        guard=None if args.force_size else prospector.DEFAULT_SEARCH_GUARD,
    )
    if args.format == "csv":
        return report.prospect_csv(res)
    if args.format == "text":
        return report.prospect_text(res)
    return report.dump_json(report.prospect_payload(res))


def cmd_verify_lemma(args: argparse.Namespace) -> str:
    if args.q != picard.Q:
        raise RangeError(f"verify-lemma supports only q = {picard.Q} (the genus-1 curve), got q={args.q}")
    _need(args, "s", "m")
    pts = picard.default_eval_set(args.eval, args.seed)
    res = picard.build_and_verify(
        pts,
        args.s,
        args.m,
        guard=None if args.force_size else weight.DEFAULT_ENUM_GUARD,
        workers=args.workers,
    )
    if args.format == "csv":
        return report.lemma_csv(res)
    if args.format == "text":
        return report.lemma_text(res)
    return report.dump_json(report.lemma_payload(res))


def cmd_asymptotic(args: argparse.Namespace) -> str:
    prof = prospector.theorem_profile(args.q, ratio=args.ratio, slack=args.slack)
    if args.format == "csv":
        return report.asymptotic_csv(prof)
    if args.format == "text":
        return report.asymptotic_text(prof)
    return report.dump_json(report.asymptotic_payload(prof))


COMMANDS = {
    "zeta": cmd_zeta,
    "code": cmd_code,
    "prospect": cmd_prospect,
    "verify-lemma": cmd_verify_lemma,
    "asymptotic": cmd_asymptotic,
}


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.workers < 1:
            raise RangeError(f"--workers must be at least 1, got {args.workers}")
        text = COMMANDS[args.command](args)
    except SizeGuard as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except LemmaVerificationError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except (HermcodeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    if args.out is not None:
        args.out.write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

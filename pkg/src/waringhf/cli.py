"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .apolarity import common_apolar_forms
from .certify import InfeasibleProfileError, rank_certificate
from .groebner import BudgetExceeded, Ideal, default_budget, set_default_budget
from .hilbert import HilbertProfile, ProfileRuleError, hilbert_function, profile_of
from .ideals import dim_degree
from .io import IdealFileError, dumps_ideal, read_ideal
from .liaison import LinkageError, NonGenericSampleError, RandomConfig, link, verify_link
from .pipelines import StageFailure, run_example1, run_example2
from .polyring import MonomialOrder, format_poly
from .scalars import field_from_spec

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3
DEFAULT_FIELD = "fp:32003"


class UsageError(Exception):
    pass


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    g = p.add_argument_group("global options")
    g.add_argument("--field", default=None, help=f"qq or fp:<p> (default {DEFAULT_FIELD})")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--coord-bound", type=int, default=100)
    g.add_argument("--max-retries", type=int, default=20)
    fmt = g.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="fmt", action="store_const", const="json")
    fmt.add_argument("--text", dest="fmt", action="store_const", const="text")
    g.add_argument("--budget", type=int, default=None, help="S-pair reductions allowed per Groebner basis")
    p.set_defaults(fmt="text")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="waringhf", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("example1", parents=[common], help="degree-10 pair of apolar 22-point sets")
    sub.add_parser("example2", parents=[common], help="degree-13 pair of apolar 30-point sets")
    p = sub.add_parser("hf", parents=[common], help="Hilbert function of an ideal file")
    p.add_argument("ideal")
    p.add_argument("--max-degree", type=int, default=None)
    p = sub.add_parser("link", parents=[common], help="residue ci : I")
    p.add_argument("ci")
    p.add_argument("ideal")
    p = sub.add_parser("apolar-common", parents=[common], help="forms apolar to two ideals")
    p.add_argument("ideal1")
    p.add_argument("ideal2")
    p.add_argument("--degree", type=int, required=True)
    p = sub.add_parser("certify", parents=[common], help="rank lower bound from a first-difference profile")
    p.add_argument("--dh", required=True, help="comma-separated profile, e.g. 1,2,3,3,3")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--pointwise-tail", action="store_true",
                   help="also require DhU(d+1-i) >= DhU(i)")
    p = sub.add_parser("gb", parents=[common], help="reduced Groebner basis of an ideal file")
    p.add_argument("ideal")
    p.add_argument("--order", default="degrevlex", help="degrevlex, lex or elim(k)")
    return parser


def _emit(args, payload: dict, text: str) -> None:
    if args.fmt == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def _config(args) -> RandomConfig:
    try:
        return RandomConfig(args.seed, args.coord_bound, args.max_retries)
    except ValueError as e:
        raise UsageError(str(e)) from None


def _field(args):
    try:
        return field_from_spec(args.field or DEFAULT_FIELD)
    except ValueError as e:
        raise UsageError(str(e)) from None


def _load(args, path: str) -> Ideal:
    I = read_ideal(path)
    if args.field is not None and field_from_spec(args.field) != I.ring.field:
        raise UsageError(f"{path}: file is over {I.ring.field}, but --field {args.field} was given")
    return I


def _field_of(ring) -> str:
    return "qq" if ring.field.char == 0 else f"fp:{ring.field.char}"


def cmd_example(args) -> int:
    field = _field(args)
    cfg = _config(args)
    run = run_example1 if args.command == "example1" else run_example2
    rep = run(cfg, field)
    if args.fmt == "json":
        print(rep.to_json())
    else:
        print(rep.to_text())
    if not rep.ok:
        print(f"verification failed: {', '.join(rep.failed_flags())}", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def cmd_hf(args) -> int:
    I = _load(args, args.ideal)
    dim, deg = dim_degree(I)
    profile = None
    if args.max_degree is None and dim == 1:
        try:
            profile = profile_of(I)
        except ValueError:
            pass
    top = args.max_degree if args.max_degree is not None else (
        profile.regularity + 1 if profile is not None else 10)
    h = hilbert_function(I, top)
    payload = {"dim": dim, "degree": deg, "hilbert": h}
    if profile is not None:
        payload["first_difference"] = list(profile.dh)
        payload["regularity"] = profile.regularity
    _emit(args, payload, f"dim {dim}, degree {deg}\nh = {' '.join(map(str, h))}")
    return EXIT_OK


def cmd_link(args) -> int:
    ci = _load(args, args.ci)
    IA = _load(args, args.ideal)
    if ci.ring != IA.ring:
        raise UsageError("the two files use different rings")
    if len(ci.gens) != 2:
        raise UsageError("the complete intersection file must list exactly two forms")
    res = link(ci, IA)
    chk = verify_link(ci, IA, res)
    dump = dumps_ideal(res, res.groebner())
    payload = {"residue": dump, "degree": chk.residue_degree, "expected_degree": chk.expected_degree,
               "disjoint": chk.disjoint, "reduced": chk.reduced, "ok": chk.ok}
    text = dump.rstrip("\n") + f"\n# degree {chk.residue_degree} (expected {chk.expected_degree}), " \
                               f"disjoint {chk.disjoint}, reduced {chk.reduced}"
    _emit(args, payload, text)
    return EXIT_OK if chk.ok else EXIT_VERIFY


def cmd_apolar(args) -> int:
    I1 = _load(args, args.ideal1)
    I2 = _load(args, args.ideal2)
    if I1.ring != I2.ring:
        raise UsageError("the two files use different rings")
    forms = common_apolar_forms(I1, I2, args.degree)
    texts = [format_poly(f) for f in forms]
    payload = {"degree": args.degree, "dimension": len(forms), "forms": texts}
    if len(forms) == 1:
        text = texts[0]
    else:
        text = f"# {len(forms)} independent forms\n" + "\n".join(texts)
    _emit(args, payload, text)
    return EXIT_OK if len(forms) == 1 else EXIT_VERIFY


def cmd_certify(args) -> int:
    try:
        dh = HilbertProfile.parse(args.dh)
    except (ValueError, ProfileRuleError) as e:
        raise UsageError(f"--dh: {e}") from None
    try:
        cert = rank_certificate(dh, args.degree, pointwise_tail=args.pointwise_tail)
    except InfeasibleProfileError as e:
        print(f"infeasible: {e}", file=sys.stderr)
        return EXIT_VERIFY
    _emit(args, cert.to_dict(), str(cert.bound))
    return EXIT_OK


def cmd_gb(args) -> int:
    I = _load(args, args.ideal)
    try:
        order = MonomialOrder.parse(args.order)
    except ValueError as e:
        raise UsageError(str(e)) from None
    ring = I.ring.with_order(order)
    J = I.in_ring(ring)
    gb = J.groebner()
    dump = dumps_ideal(J, gb)
    _emit(args, {"order": str(order), "field": _field_of(ring), "basis": [format_poly(g) for g in gb],
                 "file": dump}, dump.rstrip("\n"))
    return EXIT_OK


COMMANDS = {"example1": cmd_example, "example2": cmd_example, "hf": cmd_hf, "link": cmd_link,
            "apolar-common": cmd_apolar, "certify": cmd_certify, "gb": cmd_gb}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE
    previous = default_budget()
    try:
        if args.budget is not None:
            set_default_budget(args.budget)
        return COMMANDS[args.command](args)
    except (IdealFileError, UsageError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except (StageFailure, NonGenericSampleError, LinkageError) as e:
        print(f"verification failed: {e}", file=sys.stderr)
        return EXIT_VERIFY
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        set_default_budget(previous)


if __name__ == "__main__":
    sys.exit(main())

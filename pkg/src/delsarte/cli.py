"""Command-line front end.

Commands operate on the built-in family registry ("family1".."family10")
or on user-supplied JSON files of the form
{"matrix": [[int, ...], ...], "deformation": [int, ...]}.  All output is
tab-separated, deterministic, and byte-identical across runs; the exit
code is 0 iff no check failed.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import deformation, monomials, pointcount, symbolic, zetafermat
from .deformation import DeformationData, DeformationError
from .exactalg import IntMatrix

USAGE_ERROR = 2


class CliError(Exception):
    pass


def resolve_family(ref: str, lam: int | None = None) -> DeformationData:
    """Registry key or JSON path -> deformation data, with diagnostics."""
    if ref in deformation.FAMILIES:
        return deformation.family(ref, lam)
    if os.path.exists(ref):
        try:
            with open(ref, "r", encoding="utf-8") as handle:
                obj = json.load(handle)
        except (OSError, json.JSONDecodeError) as exc:
            raise CliError(f"cannot read family file {ref}: {exc}") from exc
        try:
            return deformation.data_from_json(obj, lam)
        except (DeformationError, ValueError) as exc:
            raise CliError(f"invalid family data in {ref}: {exc}") from exc
    raise CliError(f"unknown family {ref!r}: not a registry key and not a file")


def parse_prime_power(q: int) -> tuple[int, int]:
    if q < 2:
        raise CliError(f"{q} is not a prime power")
    p = 2
    while p * p <= q:
        if q % p == 0:
            k = 0
            m = q
            while m % p == 0:
                m //= p
                k += 1
            if m != 1:
                raise CliError(f"{q} is not a prime power")
            return p, k
        p += 1
    return q, 1


def format_vector(v) -> str:
    return "(" + ",".join(str(x) for x in v) + ")"


def _analyze_row(ref: str, data: DeformationData) -> str:
    pf, dim_w, c = monomials.dimension_triple(data)
    return "\t".join(
        [ref, str(data.degree), format_vector(data.cover_exponents), str(pf), str(dim_w), str(c)]
    )


ANALYZE_HEADER = "family\td\tb\tPF\tdimW\tc"
TABLE10_HEADER = "family\tF0\td\tb\tPF\tdimW\tc"


def cmd_analyze(args, out) -> int:
    data = resolve_family(args.family)
    print(ANALYZE_HEADER, file=out)
    print(_analyze_row(args.family, data), file=out)
    return 0


def cmd_table10(args, out) -> int:
    print(TABLE10_HEADER, file=out)
    status = 0
    keys = deformation.family_keys()
    if args.only:
        wanted = args.only.split(",")
        keys = [k for k in keys if any(w and w in k for w in wanted)]
    for key in keys:
        try:
            data = deformation.family(key)
            pf, dim_w, c = monomials.dimension_triple(data)
            f0 = deformation.equation_string(data).split("+lam*")[0]
            row = [
                key,
                f0,
                str(data.degree),
                format_vector(data.cover_exponents),
                str(pf),
                str(dim_w),
                str(c),
            ]
        except Exception as exc:  # diagnostic row, keep emitting the rest
            row = [key, f"ERROR: {exc}", "-", "-", "-", "-", "-"]
            status = 1
        print("\t".join(row), file=out)
    return status


def cmd_invariants(args, out) -> int:
    data = resolve_family(args.family)
    gmax = set(monomials.gmax_invariant_types(data))
    if args.group == "Gmax":
        types = sorted(gmax)
    else:
        types = monomials.g_invariant_types(data)
    for k in types:
        mark = "\tPF" if k in gmax else ""
        print(monomials.format_type(k) + mark, file=out)
    return 0


def cmd_classes(args, out) -> int:
    data = resolve_family(args.family)
    types = monomials.g_invariant_types(data)
    split = monomials.strong_classes if args.kind == "strong" else monomials.weak_classes
    blocks = split(types, data.cover_exponents, data.degree)
    for block in blocks:
        print(f"{len(block)}\t" + " ".join(monomials.format_type(k) for k in block), file=out)
    return 0


def cmd_common_factor(args, out) -> int:
    data_list = [resolve_family(ref) for ref in args.families]
    p, k = parse_prime_power(args.q)
    field = pointcount.FiniteField(p, k)
    try:
        report = zetafermat.verify_common_factor(data_list, field)
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    print(f"joint_degree\t{report.joint_degree}", file=out)
    print(f"common_degree\t{report.common_degree}", file=out)
    print(f"common_poly\t{report.common_poly}", file=out)
    status = 0
    for ref, poly, ok in zip(args.families, report.family_polys, report.divides):
        print(f"family\t{ref}\tdegree\t{poly.degree}\tdivides\t{str(ok).lower()}", file=out)
        if not ok:
            status = 1
    if status:
        print("FAIL\tcommon-factor-divisibility", file=out)
    return status


def cmd_count(args, out) -> int:
    p, k = parse_prime_power(args.q)
    if args.ext != 1:
        k *= args.ext
    field = pointcount.FiniteField(p, k)
    data = resolve_family(args.family)
    if args.scan:
        for lam in range(field.p):
            cover = pointcount.fermat_hypersurface(
                data.degree, data.n, lam=lam, b=data.cover_exponents
            )
            ok = pointcount.is_general_position(cover, field, max_ext=args.scan_ext)
            print(f"lambda\t{lam}\tgeneral_position\t{str(ok).lower()}", file=out)
        return 0
    spec = pointcount.family_hypersurface(data, args.lam)
    print(pointcount.count_points(spec, field), file=out)
    return 0


def cmd_verify_appendix(args, out) -> int:
    only = args.only.split(",") if args.only else None
    status = 0
    for name, ok in symbolic.appendix_checks(seed=args.seed, only=only):
        print(("PASS\t" if ok else "FAIL\t") + name, file=out)
        if not ok:
            status = 1
    return status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="delsarte",
        description="Exact analysis of monomial deformations of Delsarte quartic hypersurfaces",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_analyze = sub.add_parser("analyze", help="d, b, PF, dimW, c for one family")
    p_analyze.add_argument("family")
    p_analyze.set_defaults(func=cmd_analyze)

    p_table = sub.add_parser("table10", help="summary table of the ten built-in families")
    p_table.add_argument("--only", default="", help="comma-separated key substrings to include")
    p_table.set_defaults(func=cmd_table10)

    p_inv = sub.add_parser("invariants", help="invariant monomial types of a family")
    p_inv.add_argument("family")
    p_inv.add_argument("--group", choices=["G", "Gmax"], default="G")
    p_inv.set_defaults(func=cmd_invariants)

    p_cls = sub.add_parser("classes", help="equivalence classes of invariant types")
    p_cls.add_argument("family")
    p_cls.add_argument("--kind", choices=["strong", "weak"], default="strong")
    p_cls.set_defaults(func=cmd_classes)

    p_cf = sub.add_parser("common-factor", help="common characteristic-polynomial factor at lambda = 0")
    p_cf.add_argument("families", nargs="+")
    p_cf.add_argument("--q", type=int, required=True, help="prime power with joint degree | q - 1")
    p_cf.set_defaults(func=cmd_common_factor)

    p_count = sub.add_parser("count", help="point count of a family member")
    p_count.add_argument("family")
    p_count.add_argument("--q", type=int, required=True)
    p_count.add_argument("--lambda", dest="lam", type=int, default=0)
    p_count.add_argument("--ext", type=int, default=1, help="count over F_{q^ext}")
    p_count.add_argument("--scan", action="store_true", help="per-lambda general-position scan of the cover")
    p_count.add_argument("--scan-ext", type=int, default=1, help="extension bound for --scan")
    p_count.set_defaults(func=cmd_count)

    p_va = sub.add_parser("verify-appendix", help="run all symbolic golden verifications")
    p_va.add_argument("--only", default="", help="comma-separated name substrings to run")
    p_va.add_argument("--seed", type=int, default=0, help="seed for the randomized spot checks")
    p_va.set_defaults(func=cmd_verify_appendix)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, sys.stdout)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())

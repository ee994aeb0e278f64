"""Command-line interface.

Subcommands: count, coeff, table, verify, transform, convert.  All counts are
printed as decimal strings and never as JSON numbers; output is byte-identical
across runs for identical arguments.  Exit status: 0 success / all checks
pass, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from . import closed_forms, coefficients, enumeration, objects
from .enumeration import EXHAUSTIVE_FAMILY_CAP, SINGLE_COUNT_CAP, BottomRowSpec

USAGE_ERROR = 2
VERIFY_FAILURE = 1


class UsageError(Exception):
    pass


def _int_list(text: str) -> tuple[int, ...]:
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}")


def _warn(args, message: str) -> None:
    if not args.quiet:
        print(f"warning: {message}", file=sys.stderr)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_count(args) -> int:
    if args.family == "triangles":
        bottom = _int_list(args.bottom)
        if len(bottom) > SINGLE_COUNT_CAP:
            _warn(args, f"bottom row longer than {SINGLE_COUNT_CAP}; this may take a while")
        try:
            spec = BottomRowSpec(bottom, weak_bottom=args.weak)
        except ValueError as exc:
            raise UsageError(str(exc))
        print(enumeration.count_triangles(spec))
    else:
        if args.n is None:
            raise UsageError("count trapezoids requires --n")
        s = _int_list(args.removed)
        i = _int_list(args.top)
        try:
            print(enumeration.count_trapezoids(args.n, s, i))
        except ValueError as exc:
            raise UsageError(str(exc))
    return 0


def cmd_coeff(args) -> int:
    n = args.n
    s = _int_list(args.s)
    i = _int_list(args.i)
    try:
        pair = coefficients.IndexTuplePair(n, s, i)
    except ValueError as exc:
        raise UsageError(str(exc))
    if args.method in ("extract", "both"):
        extracted = coefficients.extract_coefficient(pair)
    if args.method in ("brute", "both"):
        try:
            brute = enumeration.count_trapezoids(n, s, i)
        except ValueError as exc:
            raise UsageError(f"brute-force counting needs strictly increasing tuples: {exc}")
    if args.method == "extract":
        print(extracted)
    elif args.method == "brute":
        print(brute)
    else:
        match = "match" if extracted == brute else "MISMATCH"
        print(f"extract={extracted} brute={brute} {match}")
        if extracted != brute:
            return VERIFY_FAILURE
    return 0


def _grid_rows(which, n, jobs):
    """CSV rows (lists of strings) for one table kind."""
    if which == "asm_total":
        return [[str(m), str(closed_forms.asm_total(m))] for m in range(1, n + 1)]
    if which == "a_nk":
        return [[str(k), str(closed_forms.a_nk(n, k))] for k in range(1, n + 1)]
    fn = closed_forms.stroganov_b if which == "b_nij" else closed_forms.a_nij
    cells = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    if jobs > 1:
        ns = [n] * len(cells)
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            values = list(pool.map(fn, ns, [i for i, _ in cells], [j for _, j in cells]))
    else:
        values = [fn(n, i, j) for i, j in cells]
    return [[str(i), str(j), str(v)] for (i, j), v in zip(cells, values)]


def cmd_table(args) -> int:
    if args.n < 1:
        raise UsageError("--n must be positive")
    rows = _grid_rows(args.which, args.n, args.jobs)
    if args.format == "csv":
        for row in rows:
            print(",".join(row))
    else:
        print(json.dumps(rows))
    return 0


def _verify_cases(suite: str, n_max: int):
    """Ordered (label, thunk) pairs; each thunk returns a VerificationReport."""
    cases = []
    if suite in ("theorem7", "all"):
        for n in range(1, n_max + 1):
            for c in range(0, n + 1):
                for d in range(0, n - c + 1):
                    cases.append(
                        (
                            f"theorem7 n={n} c={c} d={d}",
                            lambda n=n, c=c, d=d: coefficients.verify_theorem7(n, c, d),
                        )
                    )
    if suite in ("identities", "all"):
        for n in range(1, n_max + 1):
            cases.append((f"cyclic n={n}", lambda n=n: coefficients.check_cyclic(n)))
            for z in (-3, 1, 5):
                cases.append(
                    (
                        f"reflection/translation n={n} z={z}",
                        lambda n=n, z=z: coefficients.check_reflection_translation(n, z),
                    )
                )
            for c in range(0, n + 1):
                for d in range(0, n + 1 - c):
                    if 1 <= c + d <= 3:
                        for t in range(0, c + 1):
                            cases.append(
                                (
                                    f"circuit n={n} c={c} d={d} t={t}",
                                    lambda n=n, c=c, d=d, t=t: coefficients.check_circuit(n, c, d, t),
                                )
                            )
            for d in (1, 2):
                if d <= n:
                    cases.append((f"system n={n} d={d}", lambda n=n, d=d: coefficients.check_system(n, d)))
            for c in range(0, n + 1):
                for d in range(0, n + 1 - c):
                    cases.append(
                        (
                            f"symmetry n={n} c={c} d={d}",
                            lambda n=n, c=c, d=d: coefficients.check_remark_symmetry(n, c, d),
                        )
                    )
            if n >= 2:
                cases.append((f"relation n={n}", lambda n=n: closed_forms.check_relation(n)))
            if n >= 3:
                cases.append((f"near-symmetry n={n}", lambda n=n: closed_forms.check_near_symmetry(n)))
    return cases


def cmd_verify(args) -> int:
    failures = []
    for label, thunk in _verify_cases(args.suite, args.n_max):
        report = thunk()
        line = f"{label}: {report.status}"
        print(line)
        if not report.passed():
            failures.append(report)
    if failures:
        for report in failures:
            print(report.to_json())
        return VERIFY_FAILURE
    return 0


def _load_object(path: str):
    try:
        with open(path) as handle:
            return objects.from_json_obj(json.load(handle))
    except (OSError, ValueError, KeyError) as exc:
        raise UsageError(f"cannot read object from {path}: {exc}")


def cmd_transform(args) -> int:
    obj = _load_object(args.infile)
    if not isinstance(obj, objects.MonotoneTriangle):
        raise UsageError("transform expects a monotone_triangle object")
    ops = {
        "ad": objects.reflect_antidiagonal,
        "rot90": objects.rotate_90,
        "hrefl": objects.reflect_horizontal,
    }
    try:
        result = ops[args.op](obj)
    except ValueError as exc:
        raise UsageError(str(exc))
    print(objects.dumps(result))
    return 0


def cmd_convert(args) -> int:
    obj = _load_object(args.infile)
    try:
        if args.to == "asm":
            result = objects.triangle_to_asm(obj)
        elif args.to == "triangle":
            result = objects.asm_to_triangle(obj)
        elif args.to == "partial_asm":
            if obj.ambient_n is None and args.n is None:
                raise UsageError("converting a trapezoid requires --n (ambient width)")
            result = objects.trapezoid_to_partial_asm(obj, args.n or obj.ambient_n)
        else:  # trapezoid
            bottom = _int_list(args.bottom or "")
            if not bottom:
                raise UsageError("converting a partial ASM requires --bottom")
            result = objects.partial_asm_to_trapezoid(obj, bottom)
    except (ValueError, AttributeError, TypeError) as exc:
        raise UsageError(str(exc))
    print(objects.dumps(result))
    return 0


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="asmlab",
        description="Exact enumeration and verification of refined alternating-sign-matrix counts.",
    )
    parser.add_argument("--quiet", action="store_true", help="suppress progress/warnings on stderr")
    parser.add_argument("--jobs", type=int, default=1, help="parallel workers for table cells")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="count triangles or trapezoids")
    p.add_argument("family", choices=["triangles", "trapezoids"])
    p.add_argument("--bottom", default="", help="comma-separated bottom row (triangles)")
    p.add_argument("--weak", action="store_true", help="allow weakly increasing bottom row")
    p.add_argument("--n", type=int, help="ambient size (trapezoids)")
    p.add_argument("--removed", default="", help="columns removed from the bottom row")
    p.add_argument("--top", default="", help="prescribed top row")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("coeff", help="one expansion coefficient")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", default="")
    p.add_argument("--i", default="")
    p.add_argument("--method", choices=["extract", "brute", "both"], default="extract")
    p.set_defaults(func=cmd_coeff)

    p = sub.add_parser("table", help="closed-form tables")
    p.add_argument("--which", choices=["a_nk", "b_nij", "a_nij", "asm_total"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="run the verification harness")
    p.add_argument("--suite", choices=["theorem7", "identities", "all"], default="all")
    p.add_argument("--n-max", type=int, default=4)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("transform", help="apply a symmetry map to a triangle")
    p.add_argument("--op", choices=["ad", "rot90", "hrefl"], required=True)
    p.add_argument("--in", dest="infile", required=True)
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("convert", help="convert between object representations")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--to", choices=["asm", "triangle", "partial_asm", "trapezoid"], required=True)
    p.add_argument("--n", type=int, help="ambient width for trapezoid conversion")
    p.add_argument("--bottom", help="bottom row for partial-ASM reconstruction")
    p.set_defaults(func=cmd_convert)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify" and args.n_max > EXHAUSTIVE_FAMILY_CAP and not args.quiet:
        print(
            f"warning: exhaustive verification beyond n={EXHAUSTIVE_FAMILY_CAP} may be very slow",
            file=sys.stderr,
        )
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())

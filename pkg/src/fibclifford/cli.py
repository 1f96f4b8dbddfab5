"""Command-line front end: classification, thresholds, sequences, quaternion
arithmetic, Clifford tables, and an embedded self-verification suite.

All numeric input is exact: rationals are written ``n`` or ``n/d`` with an
optional leading minus (no decimals).  Exit codes: 0 success, 1 usage error,
2 domain error (in particular a vanishing discriminant).  JSON output is
byte-stable for a fixed command line.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from .clifford import (
    ClassificationReport,
    DiagonalForm,
    blade_name,
    blade_product,
    classify,
    dimension,
)
from .errors import AlgebraError, IndeterminateError
from .exactnum import QSqrt5, format_rat, parse_rat
from .fib import HoradamParams, binet, fib, horadam
from .fibquat import (
    FibSpaceVector,
    bilinear_form,
    horadam_invertibility_threshold,
    invertibility_threshold,
    quadratic_form,
)
from .quat import AlgebraParams, Quaternion

_VALUE_FLAGS = {"--beta1", "--beta2", "--p", "--q", "--n", "--x", "--y", "--squares"}


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # noqa: A002 - argparse API
        raise _UsageError(message)


def _normalize_argv(argv: list[str]) -> list[str]:
    """Join value flags with their argument so '-1/2' is not read as a flag."""
    out: list[str] = []
    i = 0
    while i < len(argv):
        token = argv[i]
        if token in _VALUE_FLAGS and i + 1 < len(argv):
            out.append(f"{token}={argv[i + 1]}")
            i += 2
        else:
            out.append(token)
            i += 1
    return out


def _rat_arg(text: str) -> Fraction:
    try:
        return parse_rat(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _coeffs_arg(text: str) -> tuple[Fraction, ...]:
    parts = text.split(",")
    if len(parts) != 4:
        raise argparse.ArgumentTypeError(
            f"expected 4 comma-separated rationals, got {len(parts)}"
        )
    return tuple(_rat_arg(p) for p in parts)


def _squares_arg(text: str) -> tuple[Fraction, ...]:
    parts = [p for p in text.split(",") if p != ""]
    if not parts:
        raise argparse.ArgumentTypeError("expected at least one rational")
    return tuple(_rat_arg(p) for p in parts)


def _nonneg_int_arg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"index must be nonnegative, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fibclifford", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def algebra_flags(p: argparse.ArgumentParser, seeds: bool = False) -> None:
        p.add_argument("--beta1", type=_rat_arg, required=True)
        p.add_argument("--beta2", type=_rat_arg, required=True)
        if seeds:
            p.add_argument("--p", type=int, default=None)
            p.add_argument("--q", type=int, default=None)

    p = sub.add_parser("classify", help="classify the Clifford algebra of the Fibonacci space")
    algebra_flags(p, seeds=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("nprime", help="certify the minimal invertibility threshold")
    algebra_flags(p, seeds=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_nprime)

    p = sub.add_parser("fib", help="n-th Fibonacci number")
    p.add_argument("--n", type=_nonneg_int_arg, required=True)
    p.set_defaults(func=_cmd_fib)

    p = sub.add_parser("quat-mul", help="multiply two quaternions")
    algebra_flags(p)
    p.add_argument("--x", type=_coeffs_arg, required=True)
    p.add_argument("--y", type=_coeffs_arg, required=True)
    p.set_defaults(func=_cmd_quat_mul)

    p = sub.add_parser("quat-norm", help="quaternion norm")
    algebra_flags(p)
    p.add_argument("--x", type=_coeffs_arg, required=True)
    p.set_defaults(func=_cmd_quat_norm)

    p = sub.add_parser("clifford-table", help="basis product table of a Clifford algebra")
    p.add_argument("--squares", type=_squares_arg, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_clifford_table)

    p = sub.add_parser("selftest", help="run the embedded identity suite")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_selftest)

    return parser


def _check_seeds(ns: argparse.Namespace) -> None:
    if (ns.p is None) != (ns.q is None):
        raise _UsageError("--p and --q must be given together")


def _render_report(report: ClassificationReport) -> str:
    cert = report.certificate
    lines = [
        f"algebra: {report.params.label()}",
        f"discriminant: {report.discriminant}  [sign {report.discriminant_sign:+d}]",
        f"division algebra over R: {'yes' if report.input_is_division else 'no'}",
        f"certified threshold n' = {cert.n_prime} "
        f"(horizon {cert.horizon}, stable norm sign {cert.limit_sign:+d})",
        f"quadratic form at n={report.basepoint}: "
        f"diag({format_rat(report.form[0])}, {format_rat(report.form[1])})",
        f"clifford class: {report.clifford_class.value}",
        f"canonical model: {report.canonical}",
        "scaling witness: "
        f"({format_rat(report.scaling_witness[0])}, {format_rat(report.scaling_witness[1])})",
    ]
    if report.seeds is not None:
        seeded = report.seeded_certificate
        lines.append(f"seeds (p, q): ({report.seeds[0]}, {report.seeds[1]})")
        lines.append(f"seeded discriminant: {report.seeded_discriminant}")
        lines.append(f"seeded threshold n' = {seeded.n_prime}")
    return "\n".join(lines)


def _cmd_classify(ns: argparse.Namespace) -> int:
    _check_seeds(ns)
    report = classify(AlgebraParams(ns.beta1, ns.beta2), ns.p, ns.q)
    if ns.json:
        print(json.dumps(report.to_json()))
    else:
        print(_render_report(report))
    return 0


def _cmd_nprime(ns: argparse.Namespace) -> int:
    _check_seeds(ns)
    params = AlgebraParams(ns.beta1, ns.beta2)
    if ns.p is not None:
        cert = horadam_invertibility_threshold(params, ns.p, ns.q)
    else:
        cert = invertibility_threshold(params)
    if ns.json:
        print(json.dumps(cert.to_json()))
    else:
        print(
            f"n' = {cert.n_prime} (horizon {cert.horizon}, "
            f"limit sign {cert.limit_sign:+d})"
        )
    return 0


def _cmd_fib(ns: argparse.Namespace) -> int:
    print(fib(ns.n))
    return 0


def _cmd_quat_mul(ns: argparse.Namespace) -> int:
    params = AlgebraParams(ns.beta1, ns.beta2)
    product = Quaternion.from_coeffs(params, ns.x) * Quaternion.from_coeffs(params, ns.y)
    print(",".join(format_rat(c) for c in product.coeffs))
    return 0


def _cmd_quat_norm(ns: argparse.Namespace) -> int:
    params = AlgebraParams(ns.beta1, ns.beta2)
    print(format_rat(Quaternion.from_coeffs(params, ns.x).norm()))
    return 0


def _term(coeff: Fraction, mask: int) -> str:
    name = blade_name(mask)
    if mask == 0:
        return format_rat(coeff)
    if coeff == 1:
        return name
    if coeff == -1:
        return f"-{name}"
    return f"{format_rat(coeff)}*{name}"


def _cmd_clifford_table(ns: argparse.Namespace) -> int:
    if len(ns.squares) > 8:
        raise _UsageError("clifford-table supports at most 8 generators")
    form = DiagonalForm(ns.squares)
    names = [blade_name(m) for m in range(form.dim)]
    table = [
        [_term(*blade_product(i, j, form)) for j in range(form.dim)]
        for i in range(form.dim)
    ]
    if ns.json:
        print(
            json.dumps(
                {
                    "squares": [format_rat(s) for s in form.squares],
                    "blades": names,
                    "table": table,
                }
            )
        )
        return 0
    width = max(len(s) for row in [names] + table for s in row) + 2
    print("".join(s.ljust(width) for s in ["*"] + names).rstrip())
    for name, row in zip(names, table):
        print("".join(s.ljust(width) for s in [name] + row).rstrip())
    return 0


# -- embedded self-verification ------------------------------------------------


def _selftest_table(corrupt: bool) -> tuple[bool, str]:
    checked = 0
    for params in (AlgebraParams(1, 1), AlgebraParams(2, -3)):
        b1, b2 = params.beta1, params.beta2
        z = Fraction(0)
        expected = {
            (1, 1): (-b1, z, z, z),
            (1, 2): (z, z, z, Fraction(1)),
            (1, 3): (z, z, -b1, z),
            (2, 1): (z, z, z, Fraction(-1)),
            (2, 2): (-b2, z, z, z),
            (2, 3): (z, b2, z, z),
            (3, 1): (z, z, b1, z),
            (3, 2): (z, -b2, z, z),
            (3, 3): (-b1 * b2, z, z, z),
        }
        basis = Quaternion.basis(params)
        for i in range(4):
            for j in range(4):
                product = basis[i] * basis[j]
                if corrupt and (i, j) == (1, 2):
                    product = -product
                if i == 0:
                    want = basis[j].coeffs
                elif j == 0:
                    want = basis[i].coeffs
                else:
                    want = expected[(i, j)]
                if product.coeffs != want:
                    return False, f"basis product e{i + 1}*e{j + 1} wrong in {params.label()}"
                checked += 1
    return True, f"{checked} basis products match the defining table"


def _selftest_norm_multiplicativity(corrupt: bool) -> tuple[bool, str]:
    rng = random.Random(7)
    algebras = [
        AlgebraParams(1, 1),
        AlgebraParams(1, -1),
        AlgebraParams(-2, -3),
        AlgebraParams(Fraction(-1, 2), Fraction(-1, 2)),
    ]
    checked = 0
    for params in algebras:
        for _ in range(50):
            x = Quaternion.from_coeffs(
                params, [Fraction(rng.randint(-50, 50), rng.randint(1, 9)) for _ in range(4)]
            )
            y = Quaternion.from_coeffs(
                params, [Fraction(rng.randint(-50, 50), rng.randint(1, 9)) for _ in range(4)]
            )
            if (x * y).norm() != x.norm() * y.norm():
                return False, f"norm not multiplicative in {params.label()}"
            checked += 1
    return True, f"{checked} random products have multiplicative norm"


def _selftest_binet(corrupt: bool) -> tuple[bool, str]:
    for n in range(121):
        if binet(n) != QSqrt5(Fraction(fib(n)), Fraction(0)):
            return False, f"closed form disagrees with fib({n})"
    return True, "closed form matches fib(n) for n <= 120"


def _selftest_horadam(corrupt: bool) -> tuple[bool, str]:
    for p, q in ((2, 3), (1, 0), (0, 1), (-4, 7)):
        seeds = HoradamParams(p, q)
        h0, h1 = p, q
        f0, f1 = 0, 1
        for n in range(120):
            if h1 != p * f0 + q * f1:
                return False, f"linearity fails at n={n} for seeds ({p}, {q})"
            if horadam(n, seeds) != h0:
                return False, f"horadam({n}) disagrees with the recurrence"
            h0, h1 = h1, h0 + h1
            f0, f1 = f1, f0 + f1
    return True, "seeded terms are the Fibonacci combination for n <= 120"


def _selftest_polarization(corrupt: bool) -> tuple[bool, str]:
    rng = random.Random(11)
    checked = 0
    for params in (AlgebraParams(1, -1), AlgebraParams(-2, -3)):
        for n in (0, 3):
            for _ in range(25):
                x = FibSpaceVector(
                    n, Fraction(rng.randint(-9, 9)), Fraction(rng.randint(-9, 9))
                )
                y = FibSpaceVector(
                    n, Fraction(rng.randint(-9, 9)), Fraction(rng.randint(-9, 9))
                )
                two_route = (
                    quadratic_form(x + y, params)
                    - quadratic_form(x, params)
                    - quadratic_form(y, params)
                ) / 2
                if two_route != bilinear_form(x, y, params):
                    return False, f"polarization fails in {params.label()} at n={n}"
                checked += 1
    return True, f"{checked} random vector pairs polarize consistently"


def _selftest_dimension(corrupt: bool) -> tuple[bool, str]:
    for rank in range(7):
        form = DiagonalForm(tuple(Fraction(-1) for _ in range(rank)))
        if dimension(form) != 1 << rank:
            return False, f"dimension wrong at rank {rank}"
        for mask in range(form.dim):
            _, result = blade_product(mask, form.dim - 1, form)
            if not 0 <= result < form.dim:
                return False, f"blade product left the basis at rank {rank}"
    return True, "blade bases have dimension 2^n and close under products"


def _selftest_fixtures(corrupt: bool) -> tuple[bool, str]:
    expected = {
        (Fraction(1), Fraction(-1)): ("Division", "H(1,1)", 0, -1),
        (Fraction(-2), Fraction(-3)): ("Split", "H(-1,-1)", 0, 1),
        (Fraction(2), Fraction(-3)): ("Division", "H(1,1)", 0, -1),
        (Fraction(-1, 2), Fraction(-1, 2)): ("Split", "H(-1,-1)", 1, 1),
    }
    for (b1, b2), want in expected.items():
        report = classify(AlgebraParams(b1, b2))
        got = (
            report.clifford_class.value,
            report.canonical,
            report.certificate.n_prime,
            report.discriminant_sign,
        )
        if got != want:
            return False, f"H({b1}, {b2}) classified as {got}, expected {want}"
    return True, "all four recorded parameter fixtures classify as expected"


_SELFTEST_GROUPS = (
    ("multiplication-table", _selftest_table),
    ("norm-multiplicativity", _selftest_norm_multiplicativity),
    ("binet-closed-form", _selftest_binet),
    ("horadam-linearity", _selftest_horadam),
    ("polarization", _selftest_polarization),
    ("clifford-dimension", _selftest_dimension),
    ("classification-fixtures", _selftest_fixtures),
)


def run_selftest(corrupt_group: str | None = None) -> list[tuple[str, bool, str]]:
    """Run every identity group; ``corrupt_group`` is a fault-injection hook
    used by the test harness to confirm that failures are detected."""
    results = []
    for name, func in _SELFTEST_GROUPS:
        ok, detail = func(corrupt=(corrupt_group == name))
        results.append((name, ok, detail))
    return results


def _cmd_selftest(ns: argparse.Namespace) -> int:
    results = run_selftest()
    for name, ok, detail in results:
        status = "PASS" if ok else "FAIL"
        if ns.json:
            print(json.dumps({"group": name, "status": status}))
        else:
            print(f"{name}: {status} ({detail})")
    if not ns.json:
        passed = sum(1 for _, ok, _ in results if ok)
        print(f"selftest: {passed}/{len(results)} groups passed")
    return 0 if all(ok for _, ok, _ in results) else 1


def run(argv: list[str]) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(_normalize_argv(list(argv)))
    except _UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"fibclifford: error: {exc}", file=sys.stderr)
        return 1
    except SystemExit as exc:  # --help
        return 0 if exc.code in (0, None) else int(exc.code)
    try:
        return ns.func(ns)
    except _UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"fibclifford: error: {exc}", file=sys.stderr)
        return 1
    except IndeterminateError as exc:
        print(f"IndeterminateError: {exc}", file=sys.stderr)
        return 2
    except AlgebraError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"fibclifford: error: {exc}", file=sys.stderr)
        return 1


def main(argv: list[str] | None = None) -> int:
    return run(sys.argv[1:] if argv is None else argv)

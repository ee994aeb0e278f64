"""Expansion coefficients of the specialized triangle-counting polynomial.

The coefficients A(n; s_1..s_c; i_1..i_d) are extracted from alpha_n by
finite differences at the anchored evaluation point, tabulated, checked
against the brute-force trapezoid counts, and run through the polynomial
identities relating them (cyclic rotation, reflection/translation, the
circuit relation, the linear system, and the s/i symmetry).
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, product
from typing import Sequence

from .enumeration import GammaSpec, count_trapezoids, gamma_count
from .polynomials import MultiPoly, alpha_via_recursion, binomial_in_var
from .reports import VerificationReport


@dataclass(frozen=True)
class IndexTuplePair:
    """Index tuples (s_1..s_c; i_1..i_d) of one expansion coefficient."""

    n: int
    s: tuple[int, ...]
    i: tuple[int, ...]

    def __init__(self, n: int, s: Sequence[int] = (), i: Sequence[int] = ()):
        s = tuple(int(x) for x in s)
        i = tuple(int(x) for x in i)
        if len(s) + len(i) > n:
            raise ValueError("need c + d <= n")
        for name, tup in (("s", s), ("i", i)):
            if any(not 1 <= x <= n for x in tup):
                raise ValueError(f"{name} entries must lie in [1, {n}]")
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "i", i)


@dataclass
class CoefficientTable:
    """Dense table of A(n; s; i) over all tuples in [1,n]^c x [1,n]^d."""

    n: int
    c: int
    d: int
    values: dict = field(default_factory=dict)  # (s, i) -> int

    def __getitem__(self, key) -> int:
        s, i = key
        return self.values[(tuple(s), tuple(i))]

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf)
        header = [f"s_{l}" for l in range(1, self.c + 1)] + [
            f"i_{l}" for l in range(1, self.d + 1)
        ] + ["value"]
        writer.writerow(header)
        for (s, i) in sorted(self.values):
            writer.writerow(list(s) + list(i) + [str(self.values[(s, i)])])
        return buf.getvalue()


@lru_cache(maxsize=None)
def _specialized_alpha(n: int, c: int, d: int) -> MultiPoly:
    """alpha_n with the middle variables pinned to (c+1, ..., n-d)."""
    poly = alpha_via_recursion(n)
    for var in range(c + 1, n - d + 1):
        poly = poly.substitute_value(var, var)
    return poly


def _anchor_point(n: int, c: int, d: int) -> list[int]:
    point = list(range(1, n + 1))  # middle slots are dead after specialization
    for var in range(1, c + 1):
        point[var - 1] = c + 1
    for var in range(n - d + 1, n + 1):
        point[var - 1] = n - d
    return point


@lru_cache(maxsize=None)
def _extract(n: int, s: tuple[int, ...], i: tuple[int, ...]) -> int:
    c, d = len(s), len(i)
    poly = _specialized_alpha(n, c, d)
    for var in range(1, c + 1):  # Delta^{s_{c+1-var}-1} on k_var
        for _ in range(s[c - var] - 1):
            poly = poly.forward_difference(var)
    for l in range(1, d + 1):  # delta^{i_l-1} on k_{n-d+l}
        for _ in range(i[l - 1] - 1):
            poly = poly.backward_difference(n - d + l)
    sign = -1 if (sum(s) - c) % 2 else 1
    return sign * poly.evaluate_int(_anchor_point(n, c, d))


def extract_coefficient(pair: IndexTuplePair, alpha: MultiPoly | None = None) -> int:
    """A(n; s; i) by symbolic finite differences at the anchored point.

    `alpha` may supply a replacement polynomial for alpha_n; it must have
    arity n.
    """
    if alpha is not None:
        if alpha.arity != pair.n:
            raise ValueError("polynomial arity does not match n")
        if alpha != alpha_via_recursion(pair.n):
            raise ValueError("supplied polynomial is not alpha_n")
    return _extract(pair.n, pair.s, pair.i)


def coefficient_table(n: int, c: int, d: int) -> CoefficientTable:
    """All A(n; s; i) for (s, i) in [1,n]^c x [1,n]^d.

    Fills the dense grid by peeling difference powers one variable at a
    time, so each table cell costs one evaluation rather than a full
    difference cascade.
    """
    if c + d > n:
        raise ValueError("need c + d <= n")
    point = _anchor_point(n, c, d)
    table = CoefficientTable(n, c, d)
    vars_ = list(range(1, c + 1)) + list(range(n - d + 1, n + 1))

    def fill(poly: MultiPoly, depth: int, powers: tuple[int, ...]) -> None:
        if depth == len(vars_):
            s = tuple(powers[c - j] + 1 for j in range(1, c + 1))  # s_j from var c+1-j
            i = tuple(powers[c + l - 1] + 1 for l in range(1, d + 1))
            sign = -1 if (sum(s) - c) % 2 else 1
            table.values[(s, i)] = sign * poly.evaluate_int(point)
            return
        var = vars_[depth]
        current = poly
        for power in range(n):
            fill(current, depth + 1, powers + (power,))
            if power < n - 1:
                current = (
                    current.forward_difference(var)
                    if depth < c
                    else current.backward_difference(var)
                )

    fill(_specialized_alpha(n, c, d), 0, ())
    return table


def reconstruct_expansion(table: CoefficientTable) -> VerificationReport:
    """Reassemble the binomial-basis expansion from the table and compare it
    term-for-term with the specialized alpha_n."""
    n, c, d = table.n, table.c, table.d
    report = VerificationReport(
        "expansion-reconstruction", f"n={n}, c={c}, d={d}"
    )
    total = MultiPoly.zero(n)
    for (s, i), value in table.values.items():
        if value == 0:
            continue
        sign = -1 if (sum(s) + c) % 2 else 1
        term = MultiPoly.constant(n, sign * value)
        for l in range(1, c + 1):  # C(k_l - c - 1, s_{c+1-l} - 1)
            term = term * binomial_in_var(n, l, -c - 1, s[c - l] - 1)
        for l in range(1, d + 1):  # C(k_{n-d+l} - n + d - 2 + i_l, i_l - 1)
            term = term * binomial_in_var(n, n - d + l, -n + d - 2 + i[l - 1], i[l - 1] - 1)
        total = total + term
    target = _specialized_alpha(n, c, d)
    if total != target:
        diff = total - target
        exps = sorted(diff.terms)[0]
        report.counterexamples.append(
            (f"term {exps}", str(target.terms.get(exps, 0)), str(total.terms.get(exps, 0)))
        )
    return report


def verify_theorem7(n: int, c: int, d: int) -> VerificationReport:
    """Coefficient extraction against brute-force trapezoid counts, over all
    strictly increasing index tuples."""
    if d > n - c:
        raise ValueError("need d <= n - c")
    report = VerificationReport("coefficient-equals-trapezoid-count", f"n={n}, c={c}, d={d}")
    for s in combinations(range(1, n + 1), c):
        for i in combinations(range(1, n + 1), d):
            expected = count_trapezoids(n, s, i)
            actual = extract_coefficient(IndexTuplePair(n, s, i))
            report.record({"s": s, "i": i}, expected, actual)
    return report


def check_cyclic(n: int) -> VerificationReport:
    """alpha(n; k_1..k_n) = (-1)^{n-1} alpha(n; k_2..k_n, k_1 - n) as a
    term-level identity."""
    report = VerificationReport("cyclic-rotation", f"n={n}")
    alpha = alpha_via_recursion(n)
    # argument j of alpha becomes k_{j+1}, the last argument becomes k_1 - n
    rotated = alpha.permute_positions(list(range(2, n + 1)) + [1]).shift(1, -n)
    rhs = rotated.scale((-1) ** (n - 1))
    if alpha != rhs:
        report.counterexamples.append(("polynomial identity", "equal", "different"))
    return report


def check_reflection_translation(n: int, z: int) -> VerificationReport:
    """alpha is invariant under reversal-negation of its arguments and under
    translation by z."""
    report = VerificationReport("reflection-and-translation", f"n={n}, z={z}")
    alpha = alpha_via_recursion(n)
    reflected = alpha.permute_positions(list(range(n, 0, -1))).negate_variables()
    if alpha != reflected:
        report.counterexamples.append(("reversal-negation", "equal", "different"))
    translated = alpha
    for var in range(1, n + 1):
        translated = translated.shift(var, z)
    if alpha != translated:
        report.counterexamples.append((f"translation z={z}", "equal", "different"))
    return report


def check_circuit(n: int, c: int, d: int, t: int) -> VerificationReport:
    """The relation trading the t largest s-indices for extra i-indices."""
    if not 0 <= t <= c:
        raise ValueError("need 0 <= t <= c")
    from math import comb

    report = VerificationReport("circuit-relation", f"n={n}, c={c}, d={d}, t={t}")
    for s in combinations(range(1, n + 1), c):
        for i in combinations(range(1, n + 1), d):
            lhs = extract_coefficient(IndexTuplePair(n, s, i))
            rhs = 0
            ranges = [range(s[c - 1 - l], n + 1) for l in range(t)]
            for extra in product(*ranges):
                coeff = extract_coefficient(IndexTuplePair(n, s[: c - t], i + extra))
                if coeff == 0:
                    continue
                sign = -1 if (sum(extra) + t * n) % 2 else 1
                weight = 1
                for l in range(1, t + 1):
                    base = s[c - l]  # s_{c+1-l}
                    weight *= comb(2 * n - c - d - base, extra[l - 1] - base)
                rhs += sign * coeff * weight
            report.record({"s": s, "i": i}, lhs, rhs)
    return report


def check_system(n: int, d: int) -> VerificationReport:
    """The n^d linear equations satisfied by the c=0 coefficients."""
    if d < 1:
        raise ValueError("need d >= 1")
    from math import comb

    report = VerificationReport("linear-system", f"n={n}, d={d}")
    table = coefficient_table(n, 0, d)
    for i in product(range(1, n + 1), repeat=d):
        lhs = table[((), i)]
        rhs = 0
        for j in product(*[range(i[l], n + 1) for l in range(d)]):
            sign = -1 if (d * n + sum(j)) % 2 else 1
            weight = 1
            for l in range(d):
                weight *= comb(2 * n - i[l] - d, j[l] - i[l])
            rhs += sign * table[((), tuple(reversed(j)))] * weight
        report.record({"i": i}, lhs, rhs)
    return report


def check_remark_symmetry(n: int, c: int, d: int) -> VerificationReport:
    """A(n; s; i) = A(n; i; s) for strictly increasing tuples, via two
    independent extractions."""
    report = VerificationReport("s-i-symmetry", f"n={n}, c={c}, d={d}")
    for s in combinations(range(1, n + 1), c):
        for i in combinations(range(1, n + 1), d):
            left = extract_coefficient(IndexTuplePair(n, s, i))
            right = extract_coefficient(IndexTuplePair(n, i, s))
            report.record({"s": s, "i": i}, left, right)
    return report


def gamma_formula_value(spec: GammaSpec) -> int:
    """The finite-difference side of the anchored-count identity, evaluated
    at spec.k."""
    n, k, s, i = spec.n, spec.k, spec.s, spec.i
    c, d = len(s), len(i)
    poly = alpha_via_recursion(n)
    for var in range(1, c + 1):
        for _ in range(s[c - var] - 1):
            poly = poly.forward_difference(var)
    for l in range(1, d + 1):
        for _ in range(i[l - 1] - 1):
            poly = poly.backward_difference(n - d + l)
    sign = -1 if (sum(s) - c) % 2 else 1
    return sign * poly.evaluate_int(k)


def check_gamma_formula(spec: GammaSpec) -> VerificationReport:
    """Brute-force anchored partial-triangle count against the
    finite-difference formula."""
    report = VerificationReport(
        "gamma-finite-difference",
        f"n={spec.n}, k={spec.k}, s={spec.s}, i={spec.i}",
    )
    report.record(
        {"k": spec.k, "s": spec.s, "i": spec.i},
        gamma_count(spec),
        gamma_formula_value(spec),
    )
    return report

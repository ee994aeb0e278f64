"""Sparse multivariate polynomials over exact rationals.

Provides the shift / finite-difference / summation calculus on polynomials in
variables k_1, ..., k_n, and builds the triangle-counting polynomial
alpha_n(k_1, ..., k_n) two independent ways: by the summation-operator
recursion (authoritative) and by applying a product of shift-operator factors
to a normalized Vandermonde product (cross-check).

Variables are 1-based throughout (k_1 is variable 1).  Coefficients are
`fractions.Fraction`; no zero coefficient is ever stored.
"""

from __future__ import annotations

import os
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, Mapping, Sequence

DEFAULT_TERM_CAP = 2_000_000
TERM_CAP_ENV = "ASMLAB_TERM_CAP"

#: shift-operator product variants for `alpha_via_operator`; the factor applied
#: over all pairs p < q is, respectively,
#:   printed       : id + E_p E_q - E_q
#:   pair_minus_Ep : id + E_p E_q - E_p
#:   inverse_form  : id + E_q E_p^{-1} - E_p^{-1}
ALPHA_VARIANTS = ("printed", "pair_minus_Ep", "inverse_form")

#: variant pinned for production use, selected by term-identity with the
#: summation-operator recursion for all n <= 5 (see select_operator_variants).
PRODUCTION_ALPHA_VARIANT = "pair_minus_Ep"


class TermCapExceeded(RuntimeError):
    """Raised when a polynomial would exceed the configured term cap."""


def term_cap() -> int:
    """Maximum number of stored terms, overridable via ASMLAB_TERM_CAP."""
    raw = os.environ.get(TERM_CAP_ENV)
    return int(raw) if raw else DEFAULT_TERM_CAP


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected exact rational, got {type(value).__name__}")


class MultiPoly:
    """Polynomial in k_1..k_arity stored as {exponent tuple: Fraction}."""

    __slots__ = ("arity", "terms")

    def __init__(self, arity: int, terms: Mapping[tuple[int, ...], Fraction] | None = None):
        if arity < 0:
            raise ValueError("arity must be nonnegative")
        clean: dict[tuple[int, ...], Fraction] = {}
        for exps, coef in (terms or {}).items():
            coef = _as_fraction(coef)
            if coef == 0:
                continue
            if len(exps) != arity:
                raise ValueError(f"exponent vector {exps} does not match arity {arity}")
            clean[tuple(exps)] = coef
        if len(clean) > term_cap():
            raise TermCapExceeded(f"{len(clean)} terms exceeds cap {term_cap()}")
        self.arity = arity
        self.terms = clean

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, arity: int) -> "MultiPoly":
        return cls(arity)

    @classmethod
    def constant(cls, arity: int, value) -> "MultiPoly":
        return cls(arity, {(0,) * arity: _as_fraction(value)})

    @classmethod
    def variable(cls, arity: int, var: int) -> "MultiPoly":
        exps = [0] * arity
        exps[_index(var, arity)] = 1
        return cls(arity, {tuple(exps): Fraction(1)})

    # -- ring operations ----------------------------------------------------

    def __add__(self, other) -> "MultiPoly":
        other = self._coerce(other)
        if other.arity != self.arity:
            raise ValueError("arity mismatch")
        terms = dict(self.terms)
        for exps, coef in other.terms.items():
            terms[exps] = terms.get(exps, Fraction(0)) + coef
        return MultiPoly(self.arity, terms)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.arity, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "MultiPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "MultiPoly":
        return (-self) + other

    def __mul__(self, other) -> "MultiPoly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if other.arity != self.arity:
            raise ValueError("arity mismatch")
        terms: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                terms[key] = terms.get(key, Fraction(0)) + c1 * c2
        return MultiPoly(self.arity, terms)

    __rmul__ = __mul__

    def scale(self, factor) -> "MultiPoly":
        factor = _as_fraction(factor)
        return MultiPoly(self.arity, {e: c * factor for e, c in self.terms.items()})

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            return other
        return MultiPoly.constant(self.arity, other)

    # -- structure ----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(self.arity, other)
        return isinstance(other, MultiPoly) and self.arity == other.arity and self.terms == other.terms

    def __hash__(self):
        return hash((self.arity, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def degree_in(self, var: int) -> int:
        """Degree in k_var; -1 for the zero polynomial."""
        idx = _index(var, self.arity)
        return max((e[idx] for e in self.terms), default=-1)

    def max_degrees(self) -> tuple[int, ...]:
        """Per-variable degrees (0 for absent variables of a nonzero poly)."""
        degs = [0] * self.arity
        for exps in self.terms:
            for i, e in enumerate(exps):
                if e > degs[i]:
                    degs[i] = e
        return tuple(degs)

    def __repr__(self):
        return f"MultiPoly(arity={self.arity}, nterms={len(self.terms)})"

    # -- substitution and evaluation ----------------------------------------

    def substitute_affine(self, var: int, target: int | None, offset) -> "MultiPoly":
        """Substitute k_var -> k_target + offset (or the constant offset if
        target is None)."""
        idx = _index(var, self.arity)
        tidx = None if target is None else _index(target, self.arity)
        offset = _as_fraction(offset)
        terms: dict[tuple[int, ...], Fraction] = {}
        for exps, coef in self.terms.items():
            e = exps[idx]
            if e == 0:
                terms[exps] = terms.get(exps, Fraction(0)) + coef
                continue
            base = list(exps)
            base[idx] = 0
            if tidx is None:
                key = tuple(base)
                terms[key] = terms.get(key, Fraction(0)) + coef * offset**e
                continue
            # (k_target + offset)^e by the binomial theorem
            for m in range(e + 1):
                part = coef * comb(e, m) * offset ** (e - m)
                if part == 0:
                    continue
                key = list(base)
                key[tidx] += m
                key = tuple(key)
                terms[key] = terms.get(key, Fraction(0)) + part
        return MultiPoly(self.arity, terms)

    def shift(self, var: int, h: int) -> "MultiPoly":
        """Shift operator E_var^h: substitutes k_var -> k_var + h."""
        if h == 0:
            return self
        return self.substitute_affine(var, var, h)

    def substitute_value(self, var: int, value) -> "MultiPoly":
        return self.substitute_affine(var, None, value)

    def specialize(self, assignment: Mapping[int, int]) -> "MultiPoly":
        """Substitute the given variables by values, keeping the arity."""
        poly = self
        for var, value in assignment.items():
            poly = poly.substitute_value(var, value)
        return poly

    def evaluate(self, values: Sequence) -> Fraction:
        """Exact evaluation at a full assignment (values[i] is k_{i+1})."""
        if len(values) != self.arity:
            raise ValueError("assignment length does not match arity")
        vals = [_as_fraction(v) for v in values]
        total = Fraction(0)
        for exps, coef in self.terms.items():
            prod = coef
            for v, e in zip(vals, exps):
                if e:
                    prod *= v**e
            total += prod
        return total

    def evaluate_int(self, values: Sequence[int]) -> int:
        """Evaluate and assert the result is an exact integer."""
        value = self.evaluate(values)
        if value.denominator != 1:
            raise ArithmeticError(f"expected integer value, got {value}")
        return value.numerator

    def permute_positions(self, new_position: Sequence[int]) -> "MultiPoly":
        """Move the exponent of variable v to variable new_position[v-1]."""
        if sorted(new_position) != list(range(1, self.arity + 1)):
            raise ValueError("not a permutation of 1..arity")
        terms = {}
        for exps, coef in self.terms.items():
            key = [0] * self.arity
            for i, e in enumerate(exps):
                key[new_position[i] - 1] = e
            terms[tuple(key)] = coef
        return MultiPoly(self.arity, terms)

    def negate_variables(self) -> "MultiPoly":
        """Substitute k_v -> -k_v for every variable."""
        return MultiPoly(
            self.arity, {e: c * (-1) ** (sum(e) % 2) for e, c in self.terms.items()}
        )

    def extend_arity(self, arity: int) -> "MultiPoly":
        """Reinterpret in a larger ring; new trailing variables are unused."""
        if arity < self.arity:
            raise ValueError("cannot shrink arity")
        pad = (0,) * (arity - self.arity)
        return MultiPoly(arity, {e + pad: c for e, c in self.terms.items()})

    def insert_variable(self, position: int) -> "MultiPoly":
        """Insert an unused variable at 1-based `position`, raising the arity."""
        if not 1 <= position <= self.arity + 1:
            raise ValueError("position out of range")
        cut = position - 1
        return MultiPoly(
            self.arity + 1,
            {e[:cut] + (0,) + e[cut:]: c for e, c in self.terms.items()},
        )

    # -- finite-difference calculus -----------------------------------------

    def forward_difference(self, var: int) -> "MultiPoly":
        """Delta_var = E_var - id."""
        return self.shift(var, 1) - self

    def backward_difference(self, var: int) -> "MultiPoly":
        """delta_var = id - E_var^{-1}."""
        return self - self.shift(var, -1)

    def antidifference(self, var: int) -> "MultiPoly":
        """The polynomial F with Delta_var F = self and F free of constant
        term in k_var, computed through the binomial basis."""
        idx = _index(var, self.arity)
        terms: dict[tuple[int, ...], Fraction] = {}
        for exps, coef in self.terms.items():
            base = list(exps)
            base[idx] = 0
            for new_e, factor in _monomial_antidifference(exps[idx]).items():
                key = list(base)
                key[idx] = new_e
                key = tuple(key)
                terms[key] = terms.get(key, Fraction(0)) + coef * factor
        return MultiPoly(self.arity, terms)

    # -- serialization ------------------------------------------------------

    def to_json_obj(self) -> list[dict]:
        """Canonical JSON form: lex-ordered exponent vectors, fraction strings."""
        return [
            {"exps": list(exps), "coef": str(self.terms[exps])}
            for exps in sorted(self.terms)
        ]

    @classmethod
    def from_json_obj(cls, arity: int, data: Iterable[dict]) -> "MultiPoly":
        return cls(arity, {tuple(item["exps"]): Fraction(item["coef"]) for item in data})


def _index(var: int, arity: int) -> int:
    if not 1 <= var <= arity:
        raise ValueError(f"variable {var} out of range 1..{arity}")
    return var - 1


@lru_cache(maxsize=None)
def _stirling2_row(e: int) -> tuple[int, ...]:
    """Stirling numbers of the second kind S(e, 0..e)."""
    if e == 0:
        return (1,)
    prev = _stirling2_row(e - 1)
    row = [0] * (e + 1)
    for j in range(1, e + 1):
        row[j] = (prev[j - 1] if j - 1 <= e - 1 else 0) + j * (prev[j] if j <= e - 1 else 0)
    return tuple(row)


@lru_cache(maxsize=None)
def _falling_factorial_coeffs(j: int) -> tuple[int, ...]:
    """Coefficients of x(x-1)...(x-j+1) in the power basis, low to high."""
    coeffs = [1]
    for t in range(j):
        shifted = [0] + coeffs
        coeffs = [s - t * c for s, c in zip(shifted, coeffs + [0])]
    return tuple(coeffs)


@lru_cache(maxsize=None)
def _monomial_antidifference(e: int) -> dict[int, Fraction]:
    """Power-basis expansion of the discrete antiderivative of x^e.

    Uses x^e = sum_j S(e,j) x(x-1)..(x-j+1) together with the fact that the
    forward difference lowers a binomial-coefficient basis element by one.
    """
    stirling = _stirling2_row(e)
    result: dict[int, Fraction] = {}
    for j in range(e + 1):
        if stirling[j] == 0:
            continue
        factor = Fraction(stirling[j], j + 1)
        for power, c in enumerate(_falling_factorial_coeffs(j + 1)):
            if c:
                result[power] = result.get(power, Fraction(0)) + factor * c
    return {p: c for p, c in result.items() if c != 0}


def vandermonde(n: int) -> MultiPoly:
    """The normalized Vandermonde product over (k_j - k_i) / (j - i)."""
    if n < 1:
        raise ValueError("n must be positive")
    poly = MultiPoly.constant(n, 1)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            diff = MultiPoly.variable(n, j) - MultiPoly.variable(n, i)
            poly = poly * diff.scale(Fraction(1, j - i))
    return poly


def binomial_in_var(arity: int, var: int, offset: int, m: int) -> MultiPoly:
    """C(k_var + offset, m) expanded as a polynomial."""
    if m < 0:
        return MultiPoly.zero(arity)
    poly = MultiPoly.constant(arity, 1)
    x = MultiPoly.variable(arity, var)
    for t in range(m):
        poly = poly * (x + (offset - t))
    denom = 1
    for t in range(1, m + 1):
        denom *= t
    return poly.scale(Fraction(1, denom))


def apply_sigma(poly: MultiPoly, lo: int, hi: int) -> MultiPoly:
    """Recursive summation operator over variable slots lo..hi.

    The operand uses slots lo..hi-1 as the summed variables; the result uses
    slots lo..hi as the new bound variables.  Inner sums are realized through
    discrete antiderivatives, which is the unique polynomial extension, and
    each recursion step subtracts the doubled-argument correction term.
    """
    if hi < lo:
        return MultiPoly.zero(poly.arity)
    if hi == lo:
        return poly
    # inner sum over the slot hi-1 variable, from k_{hi-1} to k_hi
    anti = poly.antidifference(hi - 1)
    upper = anti.shift(hi - 1, 1).substitute_affine(hi - 1, hi, 0)
    lower = anti
    main = apply_sigma(upper - lower, lo, hi - 1)
    if hi - 2 < lo:
        return main
    # doubled-argument correction: both trailing summed slots pinned to k_{hi-1}
    corr = poly.substitute_affine(hi - 2, hi - 1, 0)
    return main - apply_sigma(corr, lo, hi - 2)


def summation_operator(poly: MultiPoly) -> MultiPoly:
    """Lift an (n-1)-variable polynomial to n variables by the summation
    operator; applied to alpha_{n-1} this yields alpha_n."""
    n = poly.arity + 1
    if n < 2:
        raise ValueError("operand must have at least one variable slot")
    return apply_sigma(poly.extend_arity(n), 1, n)


@lru_cache(maxsize=None)
def alpha_via_recursion(n: int) -> MultiPoly:
    """The monotone-triangle counting polynomial alpha_n, built recursively."""
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return MultiPoly.constant(1, 1)
    return summation_operator(alpha_via_recursion(n - 1))


def alpha_via_operator(n: int, variant: str = PRODUCTION_ALPHA_VARIANT) -> MultiPoly:
    """alpha_n from the shift-operator product applied to vandermonde(n).

    The factors commute, so the application order over pairs is irrelevant.
    """
    if variant not in ALPHA_VARIANTS:
        raise ValueError(f"unknown variant {variant!r}; expected one of {ALPHA_VARIANTS}")
    poly = vandermonde(n)
    for p in range(1, n + 1):
        for q in range(p + 1, n + 1):
            if variant == "printed":
                poly = poly + poly.shift(p, 1).shift(q, 1) - poly.shift(q, 1)
            elif variant == "pair_minus_Ep":
                poly = poly + poly.shift(p, 1).shift(q, 1) - poly.shift(p, 1)
            else:  # inverse_form
                poly = poly + poly.shift(q, 1).shift(p, -1) - poly.shift(p, -1)
    return poly


def select_operator_variants(n_max: int = 5) -> list[str]:
    """Variants that match the recursion term-identically for all n <= n_max."""
    survivors = []
    for variant in ALPHA_VARIANTS:
        if all(alpha_via_operator(n, variant) == alpha_via_recursion(n) for n in range(1, n_max + 1)):
            survivors.append(variant)
    return survivors

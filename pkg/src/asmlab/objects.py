"""Monotone triangles, trapezoids, (partial) alternating sign matrices.

Rows of triangles and trapezoids are stored bottom-up: rows[0] is the bottom
(longest) row.  Matrices are stored top-down as usual.  All objects are
immutable after construction; `validate` returns a verdict instead of raising
so that enumerators can use it as a filter.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Sequence


@dataclass(frozen=True)
class Verdict:
    """Validation result; `reason` names the first violated invariant."""

    ok: bool
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def _freeze_rows(rows) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(int(x) for x in row) for row in rows)


@dataclass(frozen=True)
class MonotoneTriangle:
    """Triangular integer array, rows bottom-up with lengths n, n-1, ..., 1."""

    rows: tuple[tuple[int, ...], ...]

    def __init__(self, rows: Sequence[Sequence[int]]):
        object.__setattr__(self, "rows", _freeze_rows(rows))

    @property
    def n(self) -> int:
        return len(self.rows)

    def entry(self, r: int, j: int) -> int:
        """a_{r,j} with r the 1-based row from the bottom and j in r..n."""
        return self.rows[r - 1][j - r]

    def is_complete(self) -> bool:
        return self.rows and self.rows[0] == tuple(range(1, self.n + 1))

    def se_diagonal(self, l: int) -> tuple[int, ...]:
        """The l-th SE-diagonal (a_{l,l}, a_{l-1,l}, ..., a_{1,l})."""
        return tuple(self.entry(r, l) for r in range(l, 0, -1))

    def ne_diagonal(self, l: int) -> tuple[int, ...]:
        """The l-th NE-diagonal (a_{1,l}, a_{2,l+1}, ..., a_{n-l+1,n})."""
        return tuple(self.entry(r, l + r - 1) for r in range(1, self.n - l + 2))

    def to_json_obj(self) -> dict:
        return {
            "kind": "monotone_triangle",
            "n": self.n,
            "rows_bottom_up": [list(row) for row in self.rows],
        }


@dataclass(frozen=True)
class MonotoneTrapezoid:
    """Bottom-up rows of lengths m, m-1, ..., d; a (1,m)-trapezoid is a triangle."""

    d: int
    m: int
    rows: tuple[tuple[int, ...], ...]
    ambient_n: int | None = field(default=None, compare=False)

    def __init__(self, d, m, rows, ambient_n=None):
        object.__setattr__(self, "d", int(d))
        object.__setattr__(self, "m", int(m))
        object.__setattr__(self, "rows", _freeze_rows(rows))
        object.__setattr__(self, "ambient_n", ambient_n)

    def to_json_obj(self) -> dict:
        obj = {
            "kind": "monotone_trapezoid",
            "d": self.d,
            "m": self.m,
            "rows_bottom_up": [list(row) for row in self.rows],
        }
        if self.ambient_n is not None:
            obj["ambient_n"] = self.ambient_n
        return obj


@dataclass(frozen=True)
class Asm:
    """Square matrix over {-1, 0, 1} with alternating nonzero entries."""

    entries: tuple[tuple[int, ...], ...]

    def __init__(self, entries: Sequence[Sequence[int]]):
        object.__setattr__(self, "entries", _freeze_rows(entries))

    @property
    def n(self) -> int:
        return len(self.entries)

    def to_json_obj(self) -> dict:
        return {"kind": "asm", "n": self.n, "rows": [list(r) for r in self.entries]}


@dataclass(frozen=True)
class PartialAsm:
    """t x n matrix with ASM row constraints; column sums unconstrained."""

    n: int
    entries: tuple[tuple[int, ...], ...]

    def __init__(self, n: int, entries: Sequence[Sequence[int]]):
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "entries", _freeze_rows(entries))

    @property
    def t(self) -> int:
        return len(self.entries)

    def to_json_obj(self) -> dict:
        return {
            "kind": "partial_asm",
            "t": self.t,
            "n": self.n,
            "rows": [list(r) for r in self.entries],
        }


@dataclass(frozen=True)
class DiagonalProfile:
    """A single SE- or NE-diagonal of a triangle."""

    index: int
    values: tuple[int, ...]


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------


def _validate_interlacing_rows(rows) -> Verdict:
    for r, row in enumerate(rows, start=1):
        for t in range(len(row) - 1):
            if not row[t] < row[t + 1]:
                return Verdict(False, f"row {r} not strictly increasing at position {t + 1}")
    for r in range(len(rows) - 1):
        low, high = rows[r], rows[r + 1]
        if len(high) != len(low) - 1:
            return Verdict(False, f"row {r + 2} has length {len(high)}, expected {len(low) - 1}")
        for t in range(len(high)):
            if not low[t] <= high[t]:
                return Verdict(False, f"interlacing violated between rows {r + 1},{r + 2} at position {t + 1} (lower bound)")
            if not high[t] <= low[t + 1]:
                return Verdict(False, f"interlacing violated between rows {r + 1},{r + 2} at position {t + 1} (upper bound)")
    return Verdict(True)


def _validate_asm_row(row, require_colsum=False) -> str | None:
    prefix = 0
    for x in row:
        if x not in (-1, 0, 1):
            return f"entry {x} not in {{-1,0,1}}"
        prefix += x
        if prefix not in (0, 1):
            return f"prefix sum {prefix} outside {{0,1}}"
    if prefix != 1:
        return f"row sum {prefix} != 1"
    return None


def validate(obj) -> Verdict:
    """Check all type invariants; names the first violation on rejection."""
    if isinstance(obj, MonotoneTriangle):
        n = obj.n
        if n == 0:
            return Verdict(False, "triangle has no rows")
        for r, row in enumerate(obj.rows, start=1):
            if len(row) != n - r + 1:
                return Verdict(False, f"row {r} has length {len(row)}, expected {n - r + 1}")
        return _validate_interlacing_rows(obj.rows)
    if isinstance(obj, MonotoneTrapezoid):
        if not 1 <= obj.d <= obj.m:
            return Verdict(False, f"need 1 <= d <= m, got d={obj.d}, m={obj.m}")
        expected = obj.m - obj.d + 1
        if len(obj.rows) != expected:
            return Verdict(False, f"expected {expected} rows, got {len(obj.rows)}")
        for r, row in enumerate(obj.rows, start=1):
            if len(row) != obj.m - r + 1:
                return Verdict(False, f"row {r} has length {len(row)}, expected {obj.m - r + 1}")
        return _validate_interlacing_rows(obj.rows)
    if isinstance(obj, Asm):
        n = obj.n
        if n == 0:
            return Verdict(False, "matrix is empty")
        for i, row in enumerate(obj.entries, start=1):
            if len(row) != n:
                return Verdict(False, f"row {i} has length {len(row)}, expected {n}")
            problem = _validate_asm_row(row)
            if problem:
                return Verdict(False, f"row {i}: {problem}")
        for j in range(n):
            col = [obj.entries[i][j] for i in range(n)]
            problem = _validate_asm_row(col)
            if problem:
                return Verdict(False, f"column {j + 1}: {problem}")
        return Verdict(True)
    if isinstance(obj, PartialAsm):
        for i, row in enumerate(obj.entries, start=1):
            if len(row) != obj.n:
                return Verdict(False, f"row {i} has length {len(row)}, expected {obj.n}")
            problem = _validate_asm_row(row)
            if problem:
                return Verdict(False, f"row {i}: {problem}")
        for j in range(obj.n):
            signs = [obj.entries[i][j] for i in range(obj.t) if obj.entries[i][j] != 0]
            for a, b in zip(signs, signs[1:]):
                if a == b:
                    return Verdict(False, f"column {j + 1}: nonzero entries do not alternate")
            if signs and signs[0] == -1 and sum(signs) not in (-1, 0):
                return Verdict(False, f"column {j + 1}: inconsistent alternation")
        return Verdict(True)
    raise TypeError(f"cannot validate {type(obj).__name__}")


# ---------------------------------------------------------------------------
# bijections
# ---------------------------------------------------------------------------


def _indicator(row: Sequence[int], n: int) -> list[int]:
    vec = [0] * n
    for x in row:
        if not 1 <= x <= n:
            raise ValueError(f"entry {x} outside [1, {n}]")
        vec[x - 1] += 1
    return vec


def triangle_to_asm(triangle: MonotoneTriangle) -> Asm:
    """Row i of the matrix is the indicator difference of the triangle rows
    with n+1-i and n+2-i entries (counted from the bottom)."""
    verdict = validate(triangle)
    if not verdict:
        raise ValueError(f"invalid triangle: {verdict.reason}")
    if not triangle.is_complete():
        raise ValueError("triangle is not complete")
    n = triangle.n
    rows = []
    prev = [0] * n
    for r in range(n, 0, -1):
        ind = _indicator(triangle.rows[r - 1], n)
        rows.append([a - b for a, b in zip(ind, prev)])
        prev = ind
    return Asm(rows)


def asm_to_triangle(matrix: Asm) -> MonotoneTriangle:
    """Triangle row r is the support of the column partial sums of the first
    n+1-r matrix rows."""
    verdict = validate(matrix)
    if not verdict:
        raise ValueError(f"invalid alternating sign matrix: {verdict.reason}")
    n = matrix.n
    sums = [0] * n
    partial = []
    for row in matrix.entries:
        sums = [a + b for a, b in zip(sums, row)]
        partial.append(tuple(j + 1 for j, v in enumerate(sums) if v))
    rows = [partial[n - r] for r in range(1, n + 1)]
    return MonotoneTriangle(rows)


def trapezoid_to_partial_asm(trapezoid: MonotoneTrapezoid, n: int) -> PartialAsm:
    """Indicator differences of consecutive rows, top-down; yields the
    (m-d, n)-partial alternating sign matrix of the trapezoid."""
    verdict = validate(trapezoid)
    if not verdict:
        raise ValueError(f"invalid trapezoid: {verdict.reason}")
    top_down = list(reversed(trapezoid.rows))
    rows = []
    for u in range(len(top_down) - 1):
        upper = _indicator(top_down[u], n)
        lower = _indicator(top_down[u + 1], n)
        rows.append([a - b for a, b in zip(lower, upper)])
    return PartialAsm(n, rows)


def partial_asm_to_trapezoid(matrix: PartialAsm, bottom: Sequence[int]) -> MonotoneTrapezoid:
    """Inverse of trapezoid_to_partial_asm for the given bottom row."""
    verdict = validate(matrix)
    if not verdict:
        raise ValueError(f"invalid partial alternating sign matrix: {verdict.reason}")
    bottom = tuple(int(x) for x in bottom)
    if any(b >= a for a, b in zip(bottom[1:], bottom)):
        raise ValueError("bottom row must be strictly increasing")
    n = matrix.n
    ind = _indicator(bottom, n)
    rows_bottom_up = [bottom]
    for row in reversed(matrix.entries):
        ind = [a - b for a, b in zip(ind, row)]
        if any(v not in (0, 1) for v in ind):
            raise ValueError("reconstruction produced a non-0/1 indicator")
        rows_bottom_up.append(tuple(j + 1 for j, v in enumerate(ind) if v))
    m = len(bottom)
    d = len(rows_bottom_up[-1])
    return MonotoneTrapezoid(d, m, rows_bottom_up, ambient_n=n)


# ---------------------------------------------------------------------------
# symmetry maps on complete triangles
# ---------------------------------------------------------------------------


def _require_complete(triangle: MonotoneTriangle) -> int:
    verdict = validate(triangle)
    if not verdict:
        raise ValueError(f"invalid triangle: {verdict.reason}")
    if not triangle.is_complete():
        raise ValueError("map is defined on complete triangles only")
    return triangle.n


def reflect_antidiagonal(triangle: MonotoneTriangle) -> MonotoneTriangle:
    """AD: b_{i,j} = #{x in the j-th SE-diagonal with x >= i}; corresponds to
    reflecting the matrix along the antidiagonal."""
    n = _require_complete(triangle)
    rows = []
    for i in range(1, n + 1):
        rows.append(
            [sum(1 for x in triangle.se_diagonal(j) if x >= i) for j in range(i, n + 1)]
        )
    return MonotoneTriangle(rows)


def rotate_90(triangle: MonotoneTriangle) -> MonotoneTriangle:
    """R: c_{i,j} = #{x in the (n+1-j)-th NE-diagonal with x <= n+1-i};
    corresponds to rotating the matrix clockwise by 90 degrees."""
    n = _require_complete(triangle)
    rows = []
    for i in range(1, n + 1):
        rows.append(
            [
                sum(1 for x in triangle.ne_diagonal(n + 1 - j) if x <= n + 1 - i)
                for j in range(i, n + 1)
            ]
        )
    return MonotoneTriangle(rows)


def reflect_horizontal(triangle: MonotoneTriangle) -> MonotoneTriangle:
    """H: row r of the image (r >= 2) is the complement in {1..n} of row
    n+2-r of the input; corresponds to reflecting the matrix along the
    horizontal symmetry axis."""
    n = _require_complete(triangle)
    universe = set(range(1, n + 1))
    rows = [tuple(range(1, n + 1))]
    for r in range(2, n + 1):
        rows.append(tuple(sorted(universe - set(triangle.rows[n + 1 - r]))))
    return MonotoneTriangle(rows)


# matrix-level counterparts, used to check that the triangle maps conjugate
# correctly through the standard bijection


def asm_reflect_antidiagonal(matrix: Asm) -> Asm:
    n = matrix.n
    return Asm([[matrix.entries[n - 1 - j][n - 1 - i] for j in range(n)] for i in range(n)])


def asm_rotate_90(matrix: Asm) -> Asm:
    n = matrix.n
    return Asm([[matrix.entries[n - 1 - j][i] for j in range(n)] for i in range(n)])


def asm_reflect_horizontal(matrix: Asm) -> Asm:
    n = matrix.n
    return Asm([matrix.entries[n - 1 - i] for i in range(n)])


# ---------------------------------------------------------------------------
# JSON I/O
# ---------------------------------------------------------------------------

_KINDS = {
    "monotone_triangle": lambda obj: MonotoneTriangle(obj["rows_bottom_up"]),
    "monotone_trapezoid": lambda obj: MonotoneTrapezoid(
        obj["d"], obj["m"], obj["rows_bottom_up"], obj.get("ambient_n")
    ),
    "asm": lambda obj: Asm(obj["rows"]),
    "partial_asm": lambda obj: PartialAsm(obj["n"], obj["rows"]),
}


def from_json_obj(obj: dict):
    kind = obj.get("kind")
    if kind not in _KINDS:
        raise ValueError(f"unknown object kind {kind!r}")
    return _KINDS[kind](obj)


def loads(text: str):
    return from_json_obj(json.loads(text))


def dumps(obj) -> str:
    return json.dumps(obj.to_json_obj())

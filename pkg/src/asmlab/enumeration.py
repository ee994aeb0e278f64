"""Brute-force and memoized exact counting of triangle families.

Everything here is a ground-truth oracle: counts are obtained by dynamic
programming over interlacing rows or by outright enumeration, never from a
formula.  All results are exact Python integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .objects import MonotoneTriangle, triangle_to_asm

#: soft practical bounds; the CLI warns (but does not refuse) beyond these
EXHAUSTIVE_FAMILY_CAP = 7
SINGLE_COUNT_CAP = 8


@dataclass(frozen=True)
class BottomRowSpec:
    """Bottom row for triangle counting; weak_bottom allows equal adjacent
    entries in the bottom row only (the extended-triangle variant)."""

    entries: tuple[int, ...]
    weak_bottom: bool = False

    def __init__(self, entries: Sequence[int], weak_bottom: bool = False):
        entries = tuple(int(x) for x in entries)
        if not entries:
            raise ValueError("bottom row must be nonempty")
        for a, b in zip(entries, entries[1:]):
            if weak_bottom and a > b:
                raise ValueError("bottom row must be weakly increasing")
            if not weak_bottom and a >= b:
                raise ValueError("bottom row must be strictly increasing")
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "weak_bottom", weak_bottom)


@dataclass(frozen=True)
class GammaSpec:
    """Arguments of the anchored partial-triangle count: bottom values k,
    truncation depths s (left/NE side) and i (right/SE side)."""

    n: int
    k: tuple[int, ...]
    s: tuple[int, ...]
    i: tuple[int, ...]

    def __init__(self, n: int, k: Sequence[int], s: Sequence[int] = (), i: Sequence[int] = ()):
        k = tuple(int(x) for x in k)
        s = tuple(int(x) for x in s)
        i = tuple(int(x) for x in i)
        if len(k) != n:
            raise ValueError(f"k must have length n={n}")
        if len(s) + len(i) > n:
            raise ValueError("need c + d <= n")
        for name, tup in (("s", s), ("i", i)):
            if any(not 1 <= x <= n for x in tup):
                raise ValueError(f"{name} entries must lie in [1, {n}]")
            if any(a > b for a, b in zip(tup, tup[1:])):
                raise ValueError(f"{name} must be weakly increasing")
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "i", i)


def _coerce_spec(spec) -> BottomRowSpec:
    if isinstance(spec, BottomRowSpec):
        return spec
    return BottomRowSpec(spec)


def _successor_rows(row: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """Strictly increasing rows l with row[j] <= l[j] <= row[j+1], in
    lexicographic order."""

    def rec(j: int, prefix: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if j == len(row) - 1:
            yield prefix
            return
        lo = max(row[j], prefix[-1] + 1) if prefix else row[j]
        for v in range(lo, row[j + 1] + 1):
            yield from rec(j + 1, prefix + (v,))

    yield from rec(0, ())


@lru_cache(maxsize=None)
def _count_over_row(row: tuple[int, ...]) -> int:
    if len(row) == 1:
        return 1
    return sum(_count_over_row(nxt) for nxt in _successor_rows(row))


def count_triangles(spec) -> int:
    """Exact number of (extended, if weak_bottom) monotone triangles with the
    given bottom row."""
    spec = _coerce_spec(spec)
    return _count_over_row(spec.entries)


def enumerate_triangles(spec) -> Iterator[MonotoneTriangle]:
    """All triangles over the bottom row, in lexicographic order of the
    concatenated bottom-up rows.  Independent of count_triangles' DP."""
    spec = _coerce_spec(spec)

    def build(rows: list[tuple[int, ...]]) -> Iterator[MonotoneTriangle]:
        if len(rows[-1]) == 1:
            yield MonotoneTriangle(rows)
            return
        for nxt in _successor_rows(rows[-1]):
            yield from build(rows + [nxt])

    yield from build([spec.entries])


def _complement(n: int, removed: Sequence[int]) -> tuple[int, ...]:
    removed_set = set(removed)
    return tuple(x for x in range(1, n + 1) if x not in removed_set)


@lru_cache(maxsize=None)
def _count_to_top(row: tuple[int, ...], top: tuple[int, ...]) -> int:
    if len(row) == len(top):
        return 1 if row == top else 0
    return sum(_count_to_top(nxt, top) for nxt in _successor_rows(row))


def count_trapezoids(n: int, s: Sequence[int], i: Sequence[int]) -> int:
    """Number of monotone (d, n-c)-trapezoids with top row i and bottom row
    the increasing arrangement of {1..n} minus {s}."""
    s = tuple(int(x) for x in s)
    i = tuple(int(x) for x in i)
    for name, tup in (("s", s), ("i", i)):
        if any(not 1 <= x <= n for x in tup):
            raise ValueError(f"{name} entries must lie in [1, {n}]")
        if any(a >= b for a, b in zip(tup, tup[1:])):
            raise ValueError(f"{name} must be strictly increasing")
    c, d = len(s), len(i)
    if d > n - c:
        raise ValueError("need d <= n - c")
    bottom = _complement(n, s)
    if d == 0:
        # c = n removes the whole bottom row; the empty trapezoid counts once
        return count_triangles(bottom) if bottom else 1
    return _count_to_top(bottom, i)


@dataclass(frozen=True)
class RefinedCounts:
    """Exhaustive refined ASM counts for one order n."""

    n: int
    total: int
    top: tuple[int, ...]  # top[j-1]: matrices with the top-row 1 in column j
    top_bottom: dict  # (i, j) -> matrices with bottom-row 1 in column i, top-row 1 in column j


def refined_counts(n: int) -> RefinedCounts:
    """Classify every complete triangle of order n by the positions of the 1
    in the top and bottom rows of its alternating sign matrix."""
    top = [0] * n
    top_bottom: dict[tuple[int, int], int] = {}
    total = 0
    for triangle in enumerate_triangles(tuple(range(1, n + 1))):
        total += 1
        j = triangle.rows[-1][0]
        if n == 1:
            i = 1
        else:
            i = _complement(n, triangle.rows[1])[0]
        top[j - 1] += 1
        top_bottom[(i, j)] = top_bottom.get((i, j), 0) + 1
    return RefinedCounts(n, total, tuple(top), top_bottom)


# ---------------------------------------------------------------------------
# anchored partial monotone triangles (gamma)
# ---------------------------------------------------------------------------

_ABSENT = "absent"
_FREE = "free"


class _Cell:
    __slots__ = ("status", "value", "ne_anchor", "se_anchor")

    def __init__(self, status, value=None, ne_anchor=False, se_anchor=False):
        self.status = status
        self.value = value
        self.ne_anchor = ne_anchor
        self.se_anchor = se_anchor


def _cell_table(spec: GammaSpec) -> dict[tuple[int, int], _Cell]:
    """Status of every position (r, j), r-th row from the bottom, column j.

    A cell removed by either truncated diagonal is absent; an anchor position
    that falls on a removed cell of the other family is treated as absent as
    well (its value constraint has no cell to live on).  A cell claimed as
    anchor by both families admits no realization, so the count is zero.
    """
    n, k, s, it = spec.n, spec.k, spec.s, spec.i
    c, d = len(s), len(it)
    cells: dict[tuple[int, int], _Cell] = {}
    for r in range(1, n + 1):
        for j in range(r, n + 1):
            ne_l = j - r + 1
            ne_removed = ne_anchor = se_removed = se_anchor = False
            ne_value = se_value = None
            if ne_l <= c:
                depth = s[c - ne_l]  # s_{c+1-l}
                if r < depth:
                    ne_removed = True
                elif r == depth:
                    ne_anchor, ne_value = True, k[ne_l - 1]
            if j > n - d:
                depth = it[j - (n - d) - 1]  # i_{j-n+d}
                if r < depth:
                    se_removed = True
                elif r == depth:
                    se_anchor, se_value = True, k[j - 1]
            if ne_removed or se_removed:
                cells[(r, j)] = _Cell(_ABSENT)
                continue
            if ne_anchor and se_anchor:
                # both truncated diagonals claim this cell as their anchor;
                # no partial triangle realizes that, the count is zero
                cells[(r, j)] = _Cell("conflict")
                continue
            if ne_anchor or se_anchor:
                cells[(r, j)] = _Cell(
                    "fixed",
                    ne_value if ne_anchor else se_value,
                    ne_anchor=ne_anchor,
                    se_anchor=se_anchor,
                )
            elif r == 1:
                cells[(r, j)] = _Cell("fixed", k[j - 1])
            else:
                cells[(r, j)] = _Cell(_FREE)
    return cells


def gamma_count(spec: GammaSpec) -> int:
    """Number of anchored partial monotone triangles for the given arguments.

    Row by row from the bottom: NE/SE (weak) and row (strict) constraints are
    enforced between present cells, except that an NE anchor drops its
    right-neighbour and below-cell constraints, an SE anchor drops its
    left-neighbour and below-left constraints, and the bottom row carries no
    internal row constraints at all.
    """
    n = spec.n
    cells = _cell_table(spec)
    if any(cell.status == "conflict" for cell in cells.values()):
        return 0

    def row_columns(r: int) -> list[int]:
        return [j for j in range(r, n + 1) if cells[(r, j)].status != _ABSENT]

    def assignments(r: int, below: dict[int, int]) -> Iterator[dict[int, int]]:
        """All consistent value maps {column: value} for row r, given the
        values of the present cells of row r-1."""
        cols = row_columns(r)

        def rec(idx: int, chosen: dict[int, int]) -> Iterator[dict[int, int]]:
            if idx == len(cols):
                yield dict(chosen)
                return
            j = cols[idx]
            cell = cells[(r, j)]
            lo, hi = None, None
            if not cell.se_anchor and (j - 1) in below:
                lo = below[j - 1]
            if r > 1 and (j - 1) in chosen:
                left = cells[(r, j - 1)]
                if not left.ne_anchor and not cell.se_anchor:
                    lo = max(lo, chosen[j - 1] + 1) if lo is not None else chosen[j - 1] + 1
            if not cell.ne_anchor and j in below:
                hi = below[j]
            if cell.status == "fixed":
                v = cell.value
                if (lo is None or v >= lo) and (hi is None or v <= hi):
                    chosen[j] = v
                    yield from rec(idx + 1, chosen)
                    del chosen[j]
                return
            if lo is None or hi is None:
                raise ValueError("free cell without finite bounds; inconsistent truncation")
            for v in range(lo, hi + 1):
                chosen[j] = v
                yield from rec(idx + 1, chosen)
                del chosen[j]

        yield from rec(0, {})

    states: dict[tuple[tuple[int, int], ...], int] = {}
    for state in assignments(1, {}):
        key = tuple(sorted(state.items()))
        states[key] = states.get(key, 0) + 1
    for r in range(2, n + 1):
        nxt: dict[tuple[tuple[int, int], ...], int] = {}
        for key, ways in states.items():
            below = dict(key)
            for state in assignments(r, below):
                new_key = tuple(sorted(state.items()))
                nxt[new_key] = nxt.get(new_key, 0) + ways
        states = nxt
        if not states:
            return 0
    return sum(states.values())


def special_point(n: int, c: int, d: int) -> tuple[int, ...]:
    """The evaluation point ((c+1)^c, c+1, ..., n-d, (n-d)^d)."""
    return (c + 1,) * c + tuple(range(c + 1, n - d + 1)) + (n - d,) * d

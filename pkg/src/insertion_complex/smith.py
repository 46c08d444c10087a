"""Exact integer linear algebra for boundary matrices.

Matrices are given as lists of sparse columns, each a ``{row: value}`` dict.
"""
from __future__ import annotations

from math import gcd
from typing import Iterable, Mapping

SparseColumn = Mapping[int, int]


def invariant_factors(columns: Iterable[SparseColumn]) -> list[int]:
    """Nonzero diagonal of the Smith normal form, as positive ints ``d1 | d2 | ...``.

    Unit pivots are eliminated sparsely first (each removes one row and one
    column and contributes a 1); the remainder is diagonalised densely with
    smallest-absolute-value pivots.
    """
    cols: dict[int, dict[int, int]] = {}
    rows: dict[int, dict[int, int]] = {}
    for j, col in enumerate(columns):
        entries = {i: v for i, v in col.items() if v}
        if entries:
            cols[j] = entries
            for i, v in entries.items():
                rows.setdefault(i, {})[j] = v
    units = _eliminate_units(rows, cols)
    rest = _dense_diagonal(rows, cols)
    return [1] * units + _normalize(rest)


def rank(columns: Iterable[SparseColumn]) -> int:
    return len(invariant_factors(columns))


def _eliminate_units(rows: dict[int, dict[int, int]], cols: dict[int, dict[int, int]]) -> int:
    count = 0
    progress = True
    while progress:
        progress = False
        for c in sorted(cols):
            col = cols.get(c)
            if not col:
                continue
            best = None
            for r, v in col.items():
                if v in (1, -1) and (best is None or len(rows[r]) < len(rows[best])):
                    best = r
            if best is None:
                continue
            _pivot_unit(rows, cols, best, c)
            count += 1
            progress = True
    return count


def _pivot_unit(rows, cols, r: int, c: int) -> None:
    u = cols[c][r]
    pivot_col = cols[c]
    for c2, v in list(rows[r].items()):
        if c2 == c:
            continue
        f = v * u  # u is its own inverse
        target = cols[c2]
        for r2, w in pivot_col.items():
            nv = target.get(r2, 0) - f * w
            if nv:
                target[r2] = nv
                rows[r2][c2] = nv
            else:
                target.pop(r2, None)
                rows[r2].pop(c2, None)
        if not target:
            del cols[c2]
    # row r now only meets column c; row operations clear the rest of column c
    for r2 in pivot_col:
        rows[r2].pop(c, None)
        if not rows[r2]:
            del rows[r2]
    del cols[c]


def _dense_diagonal(rows: dict[int, dict[int, int]], cols: dict[int, dict[int, int]]) -> list[int]:
    if not cols:
        return []
    ri = {r: k for k, r in enumerate(sorted(rows))}
    ci = {c: k for k, c in enumerate(sorted(cols))}
    A = [[0] * len(ci) for _ in ri]
    for c, col in cols.items():
        for r, v in col.items():
            A[ri[r]][ci[c]] = v
    return _diagonalize(A)


def smith_diagonal(A: list[list[int]]) -> list[int]:
    """Nonzero Smith invariants of the dense matrix ``A`` (not modified)."""
    return _normalize(_diagonalize([list(row) for row in A]))


def _diagonalize(A: list[list[int]]) -> list[int]:
    """Absolute values of some diagonalisation of ``A``, modified in place."""
    diag = []
    live_rows = set(range(len(A)))
    live_cols = set(range(len(A[0]) if A else 0))
    while True:
        pivot = None
        for i in live_rows:
            row = A[i]
            for j in live_cols:
                v = row[j]
                if v and (pivot is None or abs(v) < abs(A[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            return diag
        p, c = pivot
        while True:
            pv = A[p][c]
            done = True
            for i in live_rows:
                if i != p and A[i][c]:
                    q = A[i][c] // pv
                    if q:
                        Ai, Ap = A[i], A[p]
                        for j in live_cols:
                            if Ap[j]:
                                Ai[j] -= q * Ap[j]
                    if A[i][c]:
                        done = False
            for j in live_cols:
                if j != c and A[p][j]:
                    q = A[p][j] // pv
                    if q:
                        for i in live_rows:
                            if A[i][c]:
                                A[i][j] -= q * A[i][c]
                    if A[p][j]:
                        done = False
            if done:
                break
            # a nonzero remainder is smaller than the pivot; move the pivot there
            best = None
            for i in live_rows:
                if i != p and A[i][c] and (best is None or abs(A[i][c]) < abs(A[best[0]][best[1]])):
                    best = (i, c)
            for j in live_cols:
                if j != c and A[p][j] and (best is None or abs(A[p][j]) < abs(A[best[0]][best[1]])):
                    best = (p, j)
            p, c = best
        diag.append(abs(A[p][c]))
        live_rows.discard(p)
        live_cols.discard(c)


def _normalize(diag: list[int]) -> list[int]:
    d = sorted(diag)
    n = len(d)
    for i in range(n):
        for j in range(i + 1, n):
            g = gcd(d[i], d[j])
            if g != d[i]:
                d[i], d[j] = g, d[i] * d[j] // g
    return sorted(d)


def rank_mod2(columns: Iterable[SparseColumn]) -> int:
    """Rank over the two-element field, with columns packed into int bitsets."""
    pivots: dict[int, int] = {}
    r = 0
    for col in columns:
        bits = 0
        for i, v in col.items():
            if v & 1:
                bits ^= 1 << i
        while bits:
            top = bits.bit_length() - 1
            if top in pivots:
                bits ^= pivots[top]
            else:
                pivots[top] = bits
                r += 1
                break
    return r


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


class Lattice:
    """Integer span of sparse vectors, kept in echelon form for membership tests."""

    def __init__(self, vectors: Iterable[SparseColumn] = ()) -> None:
        self.basis: dict[int, dict[int, int]] = {}
        for v in vectors:
            self.add(v)

    def add(self, vector: SparseColumn) -> None:
        v = {i: x for i, x in vector.items() if x}
        while v:
            p = min(v)
            b = self.basis.get(p)
            if b is None:
                if v[p] < 0:
                    v = {i: -x for i, x in v.items()}
                self.basis[p] = v
                return
            g, s, t = _xgcd(b[p], v[p])
            bp, vp = b[p] // g, v[p] // g
            # unimodular: [s t; -vp bp] has determinant s*bp + t*vp = 1
            new_b = _combine(s, b, t, v)
            rest = _combine(-vp, b, bp, v)
            if new_b[p] < 0:
                new_b = {i: -x for i, x in new_b.items()}
            self.basis[p] = new_b
            v = rest

    def __contains__(self, vector: SparseColumn) -> bool:
        v = {i: x for i, x in vector.items() if x}
        while v:
            p = min(v)
            b = self.basis.get(p)
            if b is None or v[p] % b[p]:
                return False
            v = _combine(1, v, -(v[p] // b[p]), b)
        return True


def _combine(s: int, u: Mapping[int, int], t: int, v: Mapping[int, int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for i, x in u.items():
        out[i] = s * x
    for i, x in v.items():
        out[i] = out.get(i, 0) + t * x
    return {i: x for i, x in out.items() if x}

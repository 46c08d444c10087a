"""Boundary matrices and exact homology over Z and Z2."""
from __future__ import annotations

from dataclasses import dataclass

from .blocks import Block, format_block
from .chains import Chain, boundary_terms
from .complex import InsertionComplex
from .smith import Lattice, invariant_factors, rank_mod2


@dataclass(frozen=True)
class BoundaryMatrix:
    """Column ``j`` is the boundary of ``cols[j]`` over the basis ``rows``."""

    rows: tuple[Block, ...]
    cols: tuple[Block, ...]
    columns: tuple[dict[int, int], ...]

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.cols)

    def dense(self) -> list[list[int]]:
        out = [[0] * len(self.cols) for _ in self.rows]
        for j, col in enumerate(self.columns):
            for i, v in col.items():
                out[i][j] = v
        return out


def boundary_matrix(K: InsertionComplex, k: int) -> BoundaryMatrix:
    if not 1 <= k <= max(K.dim, 1):
        raise IndexError(f"boundary index {k} out of range 1..{K.dim}")
    rows = K.k_blocks(k - 1)
    cols = K.k_blocks(k)
    index = K.index(k - 1)
    columns = []
    for sigma in cols:
        col: dict[int, int] = {}
        for tau, s in boundary_terms(sigma):
            i = index[tau]
            col[i] = col.get(i, 0) + s
        columns.append({i: v for i, v in col.items() if v})
    return BoundaryMatrix(rows, cols, tuple(columns))


@dataclass(frozen=True)
class HomologyResult:
    betti: tuple[int, ...]
    torsion: tuple[tuple[int, ...], ...]
    counts: tuple[int, ...]

    @property
    def euler(self) -> int:
        return sum((-1) ** k * n for k, n in enumerate(self.counts))

    def trimmed(self) -> tuple[tuple[int, tuple[int, ...]], ...]:
        """``(betti_k, torsion_k)`` pairs with trailing zero groups removed."""
        pairs = list(zip(self.betti, self.torsion))
        while pairs and pairs[-1] == (0, ()):
            pairs.pop()
        return tuple(pairs)

    def is_trivial(self) -> bool:
        return self.trimmed() == ((1, ()),)

    def to_dict(self) -> dict:
        return {
            "dims": [{"k": k, "betti": b, "torsion": list(t)} for k, (b, t) in enumerate(zip(self.betti, self.torsion))],
            "euler": self.euler,
        }

    def __str__(self) -> str:
        parts = []
        for b, t in self.trimmed():
            terms = (["Z" if b == 1 else f"Z^{b}"] if b else []) + [f"Z/{d}" for d in t]
            parts.append(" + ".join(terms) or "0")
        return "(" + ", ".join(parts) + ")"


def _matrices(K: InsertionComplex) -> list[BoundaryMatrix]:
    return [boundary_matrix(K, k) for k in range(1, K.dim + 1)]


def homology_Z(K: InsertionComplex) -> HomologyResult:
    return homology_from_boundaries(K.counts(), [m.columns for m in _matrices(K)])


def homology_from_boundaries(counts: list[int], boundaries: list) -> HomologyResult:
    """``boundaries[k-1]`` holds the sparse columns of the ``k``-th boundary map."""
    factors = [invariant_factors(cols) for cols in boundaries]
    ranks = [0] + [len(f) for f in factors] + [0]
    betti = tuple(n - ranks[k] - ranks[k + 1] for k, n in enumerate(counts))
    torsion = tuple(
        tuple(d for d in (factors[k] if k < len(factors) else ()) if d > 1) for k in range(len(counts))
    )
    return HomologyResult(betti, torsion, tuple(counts))


def homology_Z2(K: InsertionComplex) -> tuple[int, ...]:
    return betti_mod2(K.counts(), [m.columns for m in _matrices(K)])


def betti_mod2(counts: list[int], boundaries: list) -> tuple[int, ...]:
    ranks = [0] + [rank_mod2(cols) for cols in boundaries] + [0]
    return tuple(n - ranks[k] - ranks[k + 1] for k, n in enumerate(counts))


def _check_support(K: InsertionComplex, c: Chain) -> None:
    for b in c.terms:
        if b not in K.index(b.dim):
            raise ValueError(f"chain term {format_block(b)} is not a block of the complex")


def is_boundary(K: InsertionComplex, c: Chain) -> bool:
    """True iff ``c = ∂x`` for an integer chain ``x`` of the complex."""
    _check_support(K, c)
    if not c:
        return True
    k = c.dim
    if k + 1 > K.dim:
        return False
    index = K.index(k)
    target = {index[b]: v for b, v in c.terms.items()}
    return target in Lattice(boundary_matrix(K, k + 1).columns)

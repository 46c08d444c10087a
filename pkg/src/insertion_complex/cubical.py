"""Cubical complexes and their translation into word sets.

An elementary cube is a tuple of intervals; each interval is ``(k,)`` for the
degenerate ``{k}`` or ``(k, k + 1)`` for ``[k, k+1]``.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass
from itertools import product
from typing import Iterable

from .blocks import Block, canonicalize
from .homology import HomologyResult, homology_from_boundaries
from .words import WordSyntaxError

Interval = tuple[int, ...]
Cube = tuple[Interval, ...]


def cube_dim(Q: Cube) -> int:
    return sum(len(iv) == 2 for iv in Q)


def cube_faces(Q: Cube) -> set[Cube]:
    """All faces of ``Q``, including ``Q`` itself."""
    options = [[iv] if len(iv) == 1 else [iv, (iv[0],), (iv[1],)] for iv in Q]
    return set(product(*options))


def cube_vertices(Q: Cube) -> list[tuple[int, ...]]:
    return [tuple(p) for p in product(*(iv if len(iv) == 1 else (iv[0], iv[1]) for iv in Q))]


def cube_boundary(Q: Cube) -> dict[Cube, int]:
    """``∂(I × P) = ∂I × P + (-1)^dim(I) I × ∂P``."""
    if cube_dim(Q) == 0:
        raise ValueError("the boundary of a 0-dimensional cube is not defined here")
    return _boundary(Q)


def _boundary(Q: Cube) -> dict[Cube, int]:
    if not Q:
        return {}
    first, rest = Q[0], Q[1:]
    out: dict[Cube, int] = {}
    if len(first) == 2:
        for end, s in (((first[1],), 1), ((first[0],), -1)):
            out[(end,) + rest] = out.get((end,) + rest, 0) + s
    sign = -1 if len(first) == 2 else 1
    for P, c in _boundary(rest).items():
        key = (first,) + P
        out[key] = out.get(key, 0) + sign * c
    return {k: v for k, v in out.items() if v}


@dataclass(frozen=True)
class CubicalComplex:
    ambient: int
    cubes: frozenset[Cube]

    @classmethod
    def closure(cls, ambient: int, cubes: Iterable[Cube]) -> "CubicalComplex":
        out: set[Cube] = set()
        for Q in cubes:
            Q = tuple(tuple(iv) for iv in Q)
            if len(Q) != ambient or any(len(iv) not in (1, 2) or (len(iv) == 2 and iv[1] != iv[0] + 1) for iv in Q):
                raise ValueError(f"not an elementary cube in dimension {ambient}: {Q}")
            out |= cube_faces(Q)
        return cls(ambient, frozenset(out))

    @property
    def dim(self) -> int:
        return max((cube_dim(Q) for Q in self.cubes), default=-1)

    def graded(self) -> list[list[Cube]]:
        levels: list[list[Cube]] = [[] for _ in range(self.dim + 1)]
        for Q in self.cubes:
            levels[cube_dim(Q)].append(Q)
        return [sorted(level) for level in levels]

    def vertices(self) -> list[tuple[int, ...]]:
        return sorted(tuple(iv[0] for iv in Q) for Q in self.cubes if cube_dim(Q) == 0)

    def to_dict(self) -> dict:
        return {"ambient": self.ambient, "cubes": [[list(iv) for iv in Q] for Q in sorted(self.cubes)]}


def unit_cube(d: int) -> CubicalComplex:
    return CubicalComplex.closure(d, [tuple((0, 1) for _ in range(d))])


def cube_boundary_complex(d: int) -> CubicalComplex:
    """Proper faces of the unit ``d``-cube."""
    full = tuple((0, 1) for _ in range(d))
    return CubicalComplex(d, frozenset(cube_faces(full) - {full}))


def cubical_homology(K: CubicalComplex) -> HomologyResult:
    levels = K.graded()
    index = [{Q: i for i, Q in enumerate(level)} for level in levels]
    boundaries = []
    for k in range(1, len(levels)):
        boundaries.append([{index[k - 1][P]: c for P, c in _boundary(Q).items()} for Q in levels[k]])
    return homology_from_boundaries([len(level) for level in levels], boundaries)


def subdivide_2sd(K: CubicalComplex) -> CubicalComplex:
    """Cubical barycentric subdivision, scaled by 2.

    The cube ``C`` becomes the vertex with coordinate ``2m`` for ``{m}`` and
    ``2m + 1`` for ``[m, m+1]``; each pair ``F ⊆ G`` of cubes of ``K`` gives
    the cube spanned by the two corresponding vertices.
    """
    out: set[Cube] = set()
    for G in K.cubes:
        vg = _doubled_barycenter(G)
        for F in cube_faces(G):
            vf = _doubled_barycenter(F)
            out.add(tuple((a,) if a == b else (min(a, b), max(a, b)) for a, b in zip(vf, vg)))
    return CubicalComplex(K.ambient, frozenset(out))


def _doubled_barycenter(C: Cube) -> tuple[int, ...]:
    return tuple(2 * iv[0] if len(iv) == 1 else 2 * iv[0] + 1 for iv in C)


def psi_vertex(m: Iterable[int]) -> str:
    """``(m1, ..., md) -> a b^m1 a b^m2 ... a b^md``."""
    m = tuple(m)
    if any(x < 0 for x in m):
        raise ValueError(f"negative coordinate in {m}")
    return "".join("a" + "b" * x for x in m)


def psi_cube(C: Cube) -> Block:
    """``a ξ1 ... a ξd`` with ``ξ = b^m`` for ``{m}`` and ``b^m (1,b)`` for ``[m, m+1]``."""
    if any(iv[0] < 0 for iv in C):
        raise ValueError(f"negative coordinate in {C}")
    segs = [""]
    syms = []
    for iv in C:
        segs[-1] += "a" + "b" * iv[0]
        if len(iv) == 2:
            syms.append("b")
            segs.append("")
    return canonicalize(Block(tuple(segs), "".join(syms)))


def shift_nonnegative(K: CubicalComplex) -> CubicalComplex:
    lows = [min((Q[i][0] for Q in K.cubes), default=0) for i in range(K.ambient)]
    shift = [min(0, x) for x in lows]
    return CubicalComplex(
        K.ambient,
        frozenset(tuple(tuple(x - s for x in iv) for iv, s in zip(Q, shift)) for Q in K.cubes),
    )


def cubical_to_words(K: CubicalComplex) -> frozenset[str]:
    sub = shift_nonnegative(subdivide_2sd(K))
    return frozenset(psi_vertex(v) for v in sub.vertices())


def sphere_words(k: int) -> frozenset[str]:
    """Word set whose complex has the homology of the ``k``-sphere."""
    if k < 0:
        raise ValueError("k must be >= 0")
    return cubical_to_words(cube_boundary_complex(k + 1))


def random_cubical_complex(rng: random.Random, ambient: int, max_cubes: int = 40, extent: int = 3) -> CubicalComplex:
    """Face closure of random elementary cubes in ``[0, extent]^ambient``, at most ``max_cubes`` cubes.

    Edges are drawn more often than higher cubes so that loops and cavities
    survive instead of being filled in.
    """
    weights = [1] + [4] + [2] * max(0, ambient - 1)
    cubes: set[Cube] = set()
    for _ in range(4 * max_cubes):
        dim = rng.choices(range(ambient + 1), weights=weights[: ambient + 1])[0]
        free = set(rng.sample(range(ambient), dim))
        Q = []
        for i in range(ambient):
            if i in free:
                k = rng.randrange(extent)
                Q.append((k, k + 1))
            else:
                Q.append((rng.randrange(extent + 1),))
        trial = cubes | cube_faces(tuple(Q))
        if len(trial) <= max_cubes:
            cubes = trial
    return CubicalComplex(ambient, frozenset(cubes))


def parse_cubical_document(text: str) -> CubicalComplex:
    try:
        doc = json.loads(text)
        d = int(doc["ambient"])
        cubes = [tuple(tuple(int(x) for x in iv) for iv in Q) for Q in doc["cubes"]]
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise WordSyntaxError(f"malformed cubical complex document: {exc}") from None
    try:
        return CubicalComplex.closure(d, cubes)
    except ValueError as exc:
        raise WordSyntaxError(str(exc)) from None

"""Search for small word sets whose complex could carry a 2-dimensional hole.

Vertices are abstract and graded by length.  A square occupies three
consecutive levels as ``(v0, {v1, v2}, v3)``.  A word set with ``H2 != 0``
over Z2 contains a nonzero Z2 2-cycle of squares, and every such cycle sits on
consecutive levels once split into connected pieces, so it is enough to
enumerate the cycle space of all candidate squares on each level profile.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from itertools import combinations, permutations, product
from typing import Iterable

from ..classification import all_words
from ..complex import build_complex
from ..homology import homology_Z
from ..words import GuardExceeded, format_word
from .squares import forbidden_patterns

Vertex = tuple[int, int]  # (level, index within level)
DEFAULT_MAX_SEARCH_N = 7
DEFAULT_MAX_KERNEL_DIM = 22


def max_search_n() -> int:
    return int(os.environ.get("INSCOMPLEX_MAX_SEARCH_N", DEFAULT_MAX_SEARCH_N))


@dataclass(frozen=True)
class SkeletonPattern:
    levels: tuple[int, ...]
    squares: tuple[tuple[Vertex, tuple[Vertex, Vertex], Vertex], ...]

    @property
    def n(self) -> int:
        return sum(self.levels)

    def edges(self) -> set[tuple[Vertex, Vertex]]:
        out = set()
        for v0, (v1, v2), v3 in self.squares:
            out |= {(v0, v1), (v0, v2), (v1, v3), (v2, v3)}
        return out

    def to_dict(self) -> dict:
        name = lambda v: f"L{v[0]}.{v[1]}"  # noqa: E731
        return {
            "levels": list(self.levels),
            "squares": [[name(a), [name(b), name(c)], name(d)] for a, (b, c), d in self.squares],
        }


def compositions(n: int, min_parts: int = 3) -> Iterable[tuple[int, ...]]:
    if n == 0:
        return
    for k in range(min_parts, n + 1):
        for cuts in combinations(range(1, n), k - 1):
            bounds = (0,) + cuts + (n,)
            yield tuple(bounds[i + 1] - bounds[i] for i in range(k))


def candidate_squares(levels: tuple[int, ...]):
    out = []
    for i in range(len(levels) - 2):
        for b in range(levels[i]):
            for p, q in combinations(range(levels[i + 1]), 2):
                for t in range(levels[i + 2]):
                    out.append(((i, b), ((i + 1, p), (i + 1, q)), (i + 2, t)))
    return out


def _square_edges(sq) -> list[tuple[Vertex, Vertex]]:
    v0, (v1, v2), v3 = sq
    return [(v0, v1), (v0, v2), (v1, v3), (v2, v3)]


def z2_cycle_basis(squares: list, max_dim: int = DEFAULT_MAX_KERNEL_DIM) -> list[int]:
    """Basis of the Z2 kernel of the boundary map, each as a bitmask over ``squares``."""
    edge_ids: dict = {}
    rows = []
    for j, sq in enumerate(squares):
        bits = 0
        for e in _square_edges(sq):
            bits ^= 1 << edge_ids.setdefault(e, len(edge_ids))
        rows.append((bits, 1 << j))
    pivots: dict[int, tuple[int, int]] = {}
    kernel = []
    for bits, combo in rows:
        while bits:
            top = bits.bit_length() - 1
            if top not in pivots:
                pivots[top] = (bits, combo)
                break
            pb, pc = pivots[top]
            bits ^= pb
            combo ^= pc
        if not bits:
            kernel.append(combo)
    if len(kernel) > max_dim:
        raise GuardExceeded(f"cycle space of dimension {len(kernel)} exceeds the guard {max_dim}")
    return kernel


def symbol_classes(squares: Iterable) -> int:
    """Number of edge classes forced to carry the same inserted symbol.

    In a square the two edges ``v0 -> v1`` and ``v2 -> v3`` insert the same
    symbol, as do ``v0 -> v2`` and ``v1 -> v3``.
    """
    parent: dict = {}

    def find(e):
        parent.setdefault(e, e)
        while parent[e] != e:
            parent[e] = parent[parent[e]]
            e = parent[e]
        return e

    def union(e, f):
        parent[find(e)] = find(f)

    for v0, (v1, v2), v3 in squares:
        union((v0, v1), (v2, v3))
        union((v0, v2), (v1, v3))
    return len({find(e) for e in list(parent)})


def _canonical(levels: tuple[int, ...], squares) -> tuple:
    best = None
    for perms in product(*(permutations(range(s)) for s in levels)):
        def m(v):
            return (v[0], perms[v[0]][v[1]])

        image = tuple(
            sorted((m(a), tuple(sorted((m(b), m(c)))), m(d)) for a, (b, c), d in squares)
        )
        if best is None or image < best:
            best = image
    return best


@dataclass
class SphereSearchReport:
    n: int
    profiles: int = 0
    cycles: int = 0
    pruned_forbidden: int = 0
    pruned_single_symbol: int = 0
    survivors: list[SkeletonPattern] = field(default_factory=list)
    realizations: list[dict] = field(default_factory=list)
    realization_max_length: int = 0

    @property
    def realizable(self) -> bool:
        return bool(self.realizations)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "level_profiles": self.profiles,
            "cycles": self.cycles,
            "pruned_forbidden": self.pruned_forbidden,
            "pruned_single_symbol": self.pruned_single_symbol,
            "survivors": [p.to_dict() for p in self.survivors],
            "realization_max_length": self.realization_max_length,
            "realizations": self.realizations,
        }


def search_patterns(n: int, limit: int | None = None) -> SphereSearchReport:
    """Abstract 2-cycles using exactly ``n`` vertices, after pruning."""
    limit = max_search_n() if limit is None else limit
    if n > limit:
        raise GuardExceeded(f"n = {n} exceeds the search guard {limit}")
    report = SphereSearchReport(n)
    seen = set()
    for levels in compositions(n):
        report.profiles += 1
        cands = candidate_squares(levels)
        basis = z2_cycle_basis(cands)
        everyone = {(i, j) for i, s in enumerate(levels) for j in range(s)}
        for mask in range(1, 1 << len(basis)):
            combo = 0
            for k, b in enumerate(basis):
                if mask >> k & 1:
                    combo ^= b
            squares = [cands[j] for j in range(len(cands)) if combo >> j & 1]
            used = {v for sq in squares for v in (sq[0], *sq[1], sq[2])}
            if used != everyone:
                continue
            key = _canonical(levels, squares)
            if key in seen:
                continue
            seen.add(key)
            report.cycles += 1
            abstract = [(v0, frozenset(mid), v3) for v0, mid, v3 in squares]
            if forbidden_patterns(abstract):
                report.pruned_forbidden += 1
                continue
            if symbol_classes(squares) <= 1:
                report.pruned_single_symbol += 1
                continue
            report.survivors.append(SkeletonPattern(levels, key))
    return report


def _insertions(w: str, symbols: str) -> set[str]:
    return {w[:i] + a + w[i:] for i in range(len(w) + 1) for a in symbols}


def _deletions(w: str) -> set[str]:
    return {w[:i] + w[i + 1:] for i in range(len(w))}


def _square_present(v0: str, v1: str, v2: str, v3: str) -> bool:
    K = build_complex((v0, v1, v2, v3), max_dim=2)
    return any(True for _ in K.k_blocks(2))


def realize(pattern: SkeletonPattern, symbols: str = "ab", max_length: int = 5, limit: int = 1) -> list[list[str]]:
    """Words for the pattern's vertices such that every square is a 2-block.

    Bounded backtracking: the first vertex ranges over all words short enough
    for the pattern's height, later vertices over insertions or deletions of
    an already placed neighbour.
    """
    edges = pattern.edges()
    adj: dict = {}
    for u, v in edges:
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    start = min(adj)
    order = [start]
    for v in order:
        for w in sorted(adj[v]):
            if w not in order:
                order.append(w)
    squares_at: dict = {v: [] for v in order}
    for sq in pattern.squares:
        last = max((sq[0], *sq[1], sq[2]), key=order.index)
        squares_at[last].append(sq)
    height = len(pattern.levels) - 1
    found: list[list[str]] = []
    assign: dict = {}

    def extend(k: int) -> bool:
        if k == len(order):
            found.append([assign[v] for v in sorted(assign)])
            return len(found) >= limit
        v = order[k]
        placed = [u for u in adj[v] if u in assign]
        if placed:
            u = placed[0]
            cands = _insertions(assign[u], symbols) if u[0] < v[0] else _deletions(assign[u])
        else:
            cands = set(all_words(symbols, max_length - height))
        taken = {w for u, w in assign.items() if u[0] == v[0]}
        for w in sorted(cands):
            if w in taken or len(w) > max_length:
                continue
            ok = True
            for u in placed[1:]:
                a, b = (assign[u], w) if u[0] < v[0] else (w, assign[u])
                if b not in _insertions(a, symbols):
                    ok = False
                    break
            if not ok:
                continue
            assign[v] = w
            if all(_square_present(assign[s[0]], assign[s[1][0]], assign[s[1][1]], assign[s[2]]) for s in squares_at[v]):
                if extend(k + 1):
                    return True
            del assign[v]
        return False

    extend(0)
    return found


def search_min_sphere(n: int, max_length: int = 5, symbols: str = "ab", limit: int | None = None) -> list[SphereSearchReport]:
    """Run the pattern search for every vertex count from 4 to ``n``.

    Survivors of the pruning are handed to :func:`realize`; each realization
    is reported with the homology of the realized word set.
    """
    limit = max_search_n() if limit is None else limit
    if n > limit:
        raise GuardExceeded(f"n = {n} exceeds the search guard {limit}")
    reports = []
    for k in range(4, n + 1):
        rep = search_patterns(k, limit)
        rep.realization_max_length = max_length
        for pat in rep.survivors:
            for words in realize(pat, symbols, max_length):
                H = homology_Z(build_complex(words))
                rep.realizations.append({"words": sorted(format_word(w) for w in words), "homology": str(H)})
        reports.append(rep)
    return reports


def pattern_of_words(words: Iterable[str]) -> SkeletonPattern:
    """The abstract pattern of all squares in the complex of ``words``."""
    K = build_complex(words, max_dim=2)
    squares = K.k_blocks(2)
    used = sorted({w for s in squares for w in (s.min_word, s.max_word, *_middles(s))}, key=lambda w: (len(w), w))
    base = min((len(w) for w in used), default=0)
    by_level: dict[int, list[str]] = {}
    for w in used:
        by_level.setdefault(len(w) - base, []).append(w)
    height = max(by_level, default=-1) + 1
    levels = tuple(len(by_level.get(i, ())) for i in range(height))
    label = {w: (len(w) - base, by_level[len(w) - base].index(w)) for w in used}
    sqs = []
    for s in squares:
        v1, v2 = sorted(label[w] for w in _middles(s))
        sqs.append((label[s.min_word], (v1, v2), label[s.max_word]))
    return SkeletonPattern(levels, tuple(sorted(sqs)))


def _middles(sigma) -> tuple[str, str]:
    from ..blocks import vertex_table

    v = vertex_table(sigma)
    return v[1], v[2]

"""Pairs of squares that share edges, and configurations of squares no word set has.

A square is written abstractly as ``(v0, {v1, v2}, v3)``: bottom vertex, the
two middle vertices and the top vertex.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Hashable, Iterable

from ..blocks import Block, canonicalize, faces, format_block, require_valid, vertex_table
from ..complex import InsertionComplex

Square = tuple[Hashable, frozenset, Hashable]


@dataclass(frozen=True)
class SharedSquares:
    """``form`` 1: ``x(1,a)(1,b)y`` and ``x(1,b)(1,a)y``; form 2: ``x(1,a)(1,b)ay`` and ``xa(1,b)(1,a)y``."""

    form: int
    first: Block
    second: Block
    prefix: str
    suffix: str
    a: str
    b: str

    def to_dict(self) -> dict:
        return {
            "form": self.form,
            "first": format_block(self.first),
            "second": format_block(self.second),
            "x": self.prefix,
            "y": self.suffix,
            "a": self.a,
            "b": self.b,
        }


class LemmaViolation(AssertionError):
    pass


def _edges(sigma: Block) -> frozenset[Block]:
    return frozenset(f for f in faces(sigma) if f.dim == 1)


def _adjacent_form(sigma: Block) -> tuple[str, str, str, str] | None:
    """Write ``sigma`` as ``x(1,a)(1,b)y`` if possible, returning ``(x, a, b, y)``.

    In canonical form the middle segment starts with no ``a``; it can only be
    emptied by pushing a run of ``b`` through the second edge.
    """
    x, mid, y = sigma.segments
    a, b = sigma.symbols
    if mid.strip(b):
        return None
    return x, a, b, mid + y


def squares_sharing_edges(s1: Block, s2: Block) -> SharedSquares | None:
    s1, s2 = require_valid(s1), require_valid(s2)
    if s1.dim != 2 or s2.dim != 2:
        raise ValueError("both blocks must be 2-dimensional")
    if s1 == s2 or len(_edges(s1) & _edges(s2)) != 2:
        return None
    for first, second in ((s1, s2), (s2, s1)):
        adj = _adjacent_form(first)
        if adj is None:
            continue
        x, a, b, y = adj
        if canonicalize(Block((x, "", y), b + a)) == second:
            return SharedSquares(1, first, second, x, y, a, b)
        if y.startswith(a) and canonicalize(Block((x + a, "", y[1:]), b + a)) == second:
            return SharedSquares(2, first, second, x, y[1:], a, b)
    raise LemmaViolation(f"{format_block(s1)} and {format_block(s2)} share two edges in neither known form")


def square_of(sigma: Block) -> Square:
    v = vertex_table(sigma)
    return v[0], frozenset((v[1], v[2])), v[3]


def _has_cycle_through(pairs: set[frozenset], length: int) -> list[tuple[frozenset, ...]]:
    """Cycles of ``length`` 3 or 4 in the graph whose edges are ``pairs``."""
    adj: dict = {}
    for p in pairs:
        u, v = tuple(p)
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    found = set()
    nodes = sorted(adj, key=repr)
    if length == 3:
        for u, v, w in combinations(nodes, 3):
            if v in adj[u] and w in adj[v] and u in adj[w]:
                found.add(frozenset((frozenset((u, v)), frozenset((v, w)), frozenset((u, w)))))
    else:
        for u, w in combinations(nodes, 2):
            common = sorted(adj[u] & adj[w], key=repr)
            for v, x in combinations(common, 2):
                found.add(frozenset((frozenset((u, v)), frozenset((v, w)), frozenset((w, x)), frozenset((x, u)))))
    return sorted((tuple(sorted(c, key=lambda p: sorted(map(repr, p)))) for c in found), key=repr)


def forbidden_patterns(squares: Iterable[Square]) -> list[tuple[int, tuple]]:
    """Violations ``(condition, witness)`` among abstract squares.

    1. two squares with the same middle pair and top but different bottoms;
    2. three squares with common bottom and top whose middle pairs form a triangle;
    3. four squares with common bottom and top whose middle pairs form a 4-cycle.
    """
    squares = set(squares)
    out = []
    by_top: dict = {}
    by_ends: dict = {}
    for v0, mid, v3 in squares:
        by_top.setdefault((mid, v3), set()).add(v0)
        by_ends.setdefault((v0, v3), set()).add(mid)
    for (mid, v3), bottoms in sorted(by_top.items(), key=repr):
        if len(bottoms) > 1:
            out.append((1, (tuple(sorted(bottoms, key=repr)), tuple(sorted(mid, key=repr)), v3)))
    for (v0, v3), mids in sorted(by_ends.items(), key=repr):
        for cond, length in ((2, 3), (3, 4)):
            for cyc in _has_cycle_through(mids, length):
                out.append((cond, (v0, tuple(tuple(sorted(p, key=repr)) for p in cyc), v3)))
    return out


def forbidden_pattern_scan(K: InsertionComplex) -> list[tuple[int, tuple]]:
    return forbidden_patterns(square_of(s) for s in K.k_blocks(2))

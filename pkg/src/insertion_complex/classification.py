"""Isomorphism classes of valid blocks up to dimension 4, and block enumeration."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Iterator

from .blocks import (
    Block,
    canonical_pattern,
    format_block,
    isomorphic,
    parse_block,
    require_valid,
)
from .words import run_length


class UnsupportedDimension(ValueError):
    pass


@dataclass(frozen=True)
class BlockClass:
    dimension: int
    label: str
    representative: Block

    def __str__(self) -> str:
        return f"{self.label} {format_block(self.representative)}"


_REPRESENTATIVES = {
    0: [("dim0", "_")],
    1: [("dim1", "(a)")],
    2: [("dim2", "(a)b(a)")],
    3: [("dim3.1", "(a)(b)(a)"), ("dim3.2", "(a)b(a)b(a)")],
    4: [
        ("dim4.1", "(a)(b)(a)(b)"),
        ("dim4.2", "(a)(b)(a)b(a)"),
        ("dim4.3", "(a)(b)aa(b)(a)"),
        ("dim4.4", "(a)(b)a(b)(a)"),
        ("dim4.5", "(a)(b)ab(a)(b)"),
        ("dim4.6", "(a)b(a)b(a)b(a)"),
    ],
}

CLASSES: dict[int, list[BlockClass]] = {
    m: [BlockClass(m, label, parse_block(text)) for label, text in reps]
    for m, reps in _REPRESENTATIVES.items()
}


def classify(sigma: Block) -> BlockClass:
    sigma = require_valid(sigma)
    if sigma.dim not in CLASSES:
        raise UnsupportedDimension(f"classification is only available up to dimension 4, got {sigma.dim}")
    matches = [c for c in CLASSES[sigma.dim] if isomorphic(sigma, c.representative) is not None]
    if len(matches) != 1:
        raise AssertionError(
            f"{format_block(sigma)} matches {len(matches)} stored classes; expected exactly one"
        )
    return matches[0]


def blocks_with_max_word(w: str, dims: Iterable[int] | None = None) -> Iterator[Block]:
    """Canonical valid blocks whose maximum word is ``w``.

    They correspond to subsets of the runs of ``w``: the edge of a chosen run
    sits on its last symbol, the rest of the run moves into the segment in
    front.  Distinct subsets give distinct canonical blocks.
    """
    runs = run_length(w)
    ends = []
    pos = 0
    for _, r in runs:
        pos += r
        ends.append(pos - 1)
    sizes = range(len(runs) + 1) if dims is None else dims
    for d in sizes:
        for chosen in combinations(ends, d):
            yield block_from_positions(w, chosen)


def block_from_positions(w: str, positions: Iterable[int]) -> Block:
    """The raw block whose maximum word is ``w`` with edges at ``positions``."""
    segs = []
    syms = []
    last = 0
    for p in sorted(positions):
        segs.append(w[last:p])
        syms.append(w[p])
        last = p + 1
    segs.append(w[last:])
    return Block(tuple(segs), "".join(syms))


def all_words(symbols: str, max_len: int, min_len: int = 0) -> Iterator[str]:
    for n in range(min_len, max_len + 1):
        for t in product(symbols, repeat=n):
            yield "".join(t)


def enumerate_valid_blocks(symbols: str, max_len: int, dims: Iterable[int] | None = None) -> Iterator[Block]:
    """Every canonical valid block over ``symbols`` with maximum word length ``<= max_len``."""
    dims = None if dims is None else tuple(dims)
    for w in all_words(symbols, max_len):
        yield from blocks_with_max_word(w, dims)


def group_by_isomorphism(blocks: Iterable[Block]) -> dict[tuple[int, ...], list[Block]]:
    """Group blocks by their canonical coincidence pattern (an isomorphism invariant)."""
    groups: dict[tuple[int, ...], list[Block]] = {}
    for sigma in blocks:
        groups.setdefault((sigma.dim,) + canonical_pattern(sigma), []).append(sigma)
    return groups

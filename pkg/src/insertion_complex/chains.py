"""Integer chains of blocks and the boundary operator."""
from __future__ import annotations

from typing import Iterable, Iterator, Mapping

from .blocks import Block, canonicalize, facets, format_block, parse_block, require_valid, sort_key, vertices


class Chain:
    """A finite formal sum of canonical valid blocks of one dimension."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Block, int] | Iterable[tuple[Block, int]] = ()) -> None:
        acc: dict[Block, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for b, c in items:
            b = require_valid(b)
            acc[b] = acc.get(b, 0) + c
        self.terms = {b: c for b, c in acc.items() if c}
        if len({b.dim for b in self.terms}) > 1:
            raise ValueError("chain terms must share one dimension")

    @classmethod
    def of(cls, sigma: Block, coef: int = 1) -> "Chain":
        return cls({sigma: coef})

    @property
    def dim(self) -> int | None:
        return next(iter(self.terms)).dim if self.terms else None

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __iter__(self) -> Iterator[tuple[Block, int]]:
        return iter(sorted(self.terms.items(), key=lambda t: sort_key(t[0])))

    def __len__(self) -> int:
        return len(self.terms)

    def __getitem__(self, sigma: Block) -> int:
        return self.terms.get(canonicalize(sigma), 0)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Chain) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "Chain") -> "Chain":
        return Chain(list(self.terms.items()) + list(other.terms.items()))

    def __neg__(self) -> "Chain":
        return Chain({b: -c for b, c in self.terms.items()})

    def __sub__(self, other: "Chain") -> "Chain":
        return self + (-other)

    def __rmul__(self, k: int) -> "Chain":
        return Chain({b: k * c for b, c in self.terms.items()})

    def __repr__(self) -> str:
        return f"Chain({format_chain(self)!r})"

    def to_list(self) -> list[list]:
        return [[c, format_block(b)] for b, c in self]


def format_chain(c: Chain) -> str:
    if not c:
        return "0"
    out = []
    for b, k in c:
        sign = "-" if k < 0 else "+"
        mag = "" if abs(k) == 1 else f"{abs(k)}"
        out.append(f"{sign} {mag}{format_block(b)}")
    text = " ".join(out)
    return text[2:] if text.startswith("+ ") else "-" + text[2:]


def parse_chain(items: Iterable[tuple[int, str]]) -> Chain:
    return Chain((parse_block(t), int(k)) for k, t in items)


def boundary_terms(sigma: Block) -> list[tuple[Block, int]]:
    """``sum_i (-1)^(i+1) [upper_i - lower_i]`` for a canonical valid block."""
    out = []
    for i, up, low in facets(sigma):
        s = 1 if i % 2 else -1
        out.append((up, s))
        if low is not None:
            out.append((low, -s))
    return out


def boundary_block(sigma: Block) -> Chain:
    sigma = require_valid(sigma)
    if sigma.dim == 0:
        raise ValueError("the boundary is defined for blocks of dimension >= 1")
    return Chain(boundary_terms(sigma))


def boundary_chain(c: Chain) -> Chain:
    acc: dict[Block, int] = {}
    for sigma, k in c.terms.items():
        if sigma.dim == 0:
            return Chain()
        for tau, s in boundary_terms(sigma):
            acc[tau] = acc.get(tau, 0) + k * s
    return Chain(acc)


def is_cycle(c: Chain) -> bool:
    return not boundary_chain(c)


def star_chain(gamma: Chain, w: str) -> Chain:
    return Chain({b: k for b, k in gamma.terms.items() if w in vertices(b)})


def link_chain(gamma: Chain, w: str) -> Chain:
    return boundary_chain(star_chain(gamma, w))

"""Insertion graphs and insertion block complexes of finite word sets."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable

from .blocks import Block, canonicalize, faces, format_block, is_valid, sort_key, vertex_table, vertices
from .classification import block_from_positions
from .words import (
    WordSyntaxError,
    alphabet,
    format_word,
    insertion_decompositions,
    is_subword,
    parse_word,
    run_length,
)


def _run_ends(w: str) -> list[int]:
    ends = []
    pos = 0
    for _, r in run_length(w):
        pos += r
        ends.append(pos - 1)
    return ends


def word_order(words: Iterable[str]) -> list[str]:
    """Deterministic order: by length, then lexicographically."""
    return sorted(set(words), key=lambda w: (len(w), w))


@dataclass(frozen=True)
class InsertionGraph:
    nodes: tuple[str, ...]
    edges: tuple[tuple[str, str, Block], ...]

    def to_dot(self, name: str = "insertion") -> str:
        def q(text: str) -> str:
            return text.replace("\\", "\\\\").replace('"', '\\"')

        lines = [f"digraph {name} {{"]
        ids = {w: f"n{i}" for i, w in enumerate(self.nodes)}
        for w in self.nodes:
            lines.append(f'  {ids[w]} [label="{q(format_word(w))}"];')
        for u, v, b in self.edges:
            lines.append(f'  {ids[u]} -> {ids[v]} [label="{q(format_block(b))}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def insertion_graph(words: Iterable[str]) -> InsertionGraph:
    """Edges ``u -> v`` where ``v`` is ``u`` with one symbol inserted.

    Deleting one symbol from different runs of ``v`` gives different words,
    so each edge carries exactly one canonical 1-block.
    """
    nodes = word_order(words)
    present = set(nodes)
    edges = []
    for v in nodes:
        for p in _run_ends(v):
            u = v[:p] + v[p + 1:]
            if u in present:
                edges.append((u, v, block_from_positions(v, [p])))
    edges.sort(key=lambda e: ((len(e[0]), e[0]), (len(e[1]), e[1])))
    return InsertionGraph(tuple(nodes), tuple(edges))


@dataclass(frozen=True)
class InsertionComplex:
    words: frozenset[str]
    blocks: tuple[tuple[Block, ...], ...]
    _index: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def dim(self) -> int:
        return len(self.blocks) - 1

    @property
    def alphabet(self) -> tuple[str, ...]:
        return alphabet(self.words)

    def __len__(self) -> int:
        return sum(len(b) for b in self.blocks)

    def __contains__(self, sigma: Block) -> bool:
        return canonicalize(sigma) in self.index(sigma.dim)

    def counts(self) -> list[int]:
        return [len(b) for b in self.blocks]

    def k_blocks(self, k: int) -> tuple[Block, ...]:
        return self.blocks[k] if 0 <= k < len(self.blocks) else ()

    def index(self, k: int) -> dict[Block, int]:
        """Position of each ``k``-block in the deterministic ordering."""
        if k not in self._index:
            self._index[k] = {b: i for i, b in enumerate(self.k_blocks(k))}
        return self._index[k]

    def all_blocks(self) -> list[Block]:
        return [b for level in self.blocks for b in level]

    def blocks_containing(self, w: str) -> list[Block]:
        return [b for b in self.all_blocks() if w in vertices(b)]


def _graded(blocks: Iterable[Block]) -> tuple[tuple[Block, ...], ...]:
    by_dim: dict[int, list[Block]] = {}
    for b in blocks:
        by_dim.setdefault(b.dim, []).append(b)
    top = max(by_dim, default=-1)
    return tuple(tuple(sorted(by_dim.get(k, ()), key=sort_key)) for k in range(top + 1))


def default_max_dim(words: Iterable[str]) -> int:
    lengths = [len(w) for w in words]
    return max(lengths) - min(lengths) if lengths else 0


def build_complex(words: Iterable[str], max_dim: int | None = None) -> InsertionComplex:
    """All canonical valid blocks whose vertices lie in ``words``.

    Every valid block has a maximum word ``w`` and is determined by a subset
    ``S`` of the runs of ``w``; its vertices are ``w`` with some chosen runs
    shortened by one.  A subset is supported exactly when all its proper
    subsets are supported and its minimum word is present, so supported
    subsets are grown one run at a time.
    """
    present = frozenset(words)
    if max_dim is None:
        max_dim = default_max_dim(present)
    found: list[Block] = []
    for w in present:
        ends = _run_ends(w)
        # supported subsets of size k as sorted tuples of run indices, with min word
        level = {(): w}
        found.append(Block((w,), ""))
        for k in range(1, max_dim + 1):
            nxt = {}
            for subset, low in level.items():
                start = subset[-1] + 1 if subset else 0
                for r in range(start, len(ends)):
                    cand = subset + (r,)
                    if not all(cand[:j] + cand[j + 1:] in level for j in range(k)):
                        continue
                    # remove one symbol of run r from the minimum word of `subset`;
                    # earlier removals all lie in earlier runs, so shift by len(subset)
                    p = ends[r] - len(subset)
                    new_low = low[:p] + low[p + 1:]
                    if new_low in present:
                        nxt[cand] = new_low
            if not nxt:
                break
            for subset in nxt:
                found.append(block_from_positions(w, [ends[r] for r in subset]))
            level = nxt
    return InsertionComplex(present, _graded(found))


def build_complex_by_embeddings(words: Iterable[str], max_dim: int | None = None) -> InsertionComplex:
    """Slow reference builder: canonicalize every embedding of ``u`` into ``v``.

    For each pair ``u <= v`` with ``1 <= |v| - |u| <= max_dim`` every way of
    deleting positions of ``v`` to obtain ``u`` gives a raw block, which is
    kept when it is valid and supported.  Faces of kept blocks are added in a
    closing pass.
    """
    present = frozenset(words)
    if max_dim is None:
        max_dim = default_max_dim(present)
    found = {Block((w,), "") for w in present}
    for u in present:
        for v in present:
            d = len(v) - len(u)
            if not 1 <= d <= max_dim or not is_subword(u, v):
                continue
            for kept in _embeddings(u, v):
                inserted = [p for p in range(len(v)) if p not in kept]
                sigma = canonicalize(block_from_positions(v, inserted))
                if is_valid(sigma) and all(x in present for x in vertex_table(sigma)):
                    found.add(sigma)
    closed = set(found)
    for sigma in found:
        closed |= faces(sigma)
    return InsertionComplex(present, _graded(closed))


def _embeddings(u: str, v: str):
    """Every increasing position tuple ``p`` with ``v[p] == u``."""
    def rec(i: int, j: int, acc: tuple[int, ...]):
        if i == len(u):
            yield frozenset(acc)
            return
        for k in range(j, len(v) - (len(u) - i) + 1):
            if v[k] == u[i]:
                yield from rec(i + 1, k + 1, acc + (k,))

    yield from rec(0, 0, ())


def maximal_blocks(K: InsertionComplex) -> list[Block]:
    covered: set[Block] = set()
    for level in K.blocks[1:]:
        for sigma in level:
            covered |= faces(sigma) - {sigma}
    return sorted((b for b in K.all_blocks() if b not in covered), key=lambda b: (-b.dim, sort_key(b)))


def check_complex(K: InsertionComplex) -> None:
    """Structural self-checks; raises ``AssertionError`` on the first violation."""
    seen_vertex_sets = {}
    for sigma in K.all_blocks():
        vs = vertices(sigma)
        assert vs <= K.words, f"{format_block(sigma)} has vertices outside W"
        for tau in faces(sigma):
            assert tau in K.index(tau.dim), f"face {format_block(tau)} of {format_block(sigma)} missing"
        other = seen_vertex_sets.setdefault(vs, sigma)
        assert other == sigma, f"{format_block(other)} and {format_block(sigma)} share a vertex set"
    for u, v, _ in insertion_graph(K.words).edges:
        assert len(v) == len(u) + 1 and insertion_decompositions(u, v)
    assert K.dim <= default_max_dim(K.words)


# -- word-set files -----------------------------------------------------------

def parse_word_lines(text: str) -> list[str]:
    out = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            out.append(parse_word(line))
        except WordSyntaxError as exc:
            raise WordSyntaxError(f"line {lineno}: {exc}") from None
    return out


def parse_word_document(text: str) -> list[str]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise WordSyntaxError(f"malformed document: {exc}") from None
    if not isinstance(doc, dict) or not isinstance(doc.get("words"), list):
        raise WordSyntaxError("document needs a 'words' list")
    out = []
    for item in doc["words"]:
        if not isinstance(item, str):
            raise WordSyntaxError(f"word entries must be strings, got {item!r}")
        out.append(parse_word(item) if item else "")
    return out


def read_words(text: str, fmt: str = "auto") -> list[str]:
    """``fmt`` is ``text``, ``json`` or ``auto`` (JSON when the text starts with ``{``)."""
    if fmt == "auto":
        fmt = "json" if text.lstrip().startswith("{") else "text"
    if fmt == "json":
        return parse_word_document(text)
    if fmt == "text":
        return parse_word_lines(text)
    raise ValueError(f"unknown word-set format {fmt!r}")

"""Blocks ``x0 (1,a1) x1 ... (1,am) xm`` and their calculus.

Index sets are 1-based, as ``I ⊆ {1..m}``; internally they are often handled as
bitmasks where bit ``i - 1`` stands for index ``i``.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import permutations, product
from typing import Iterable, Mapping, NamedTuple

from .words import WordSyntaxError, format_word, is_symbol


class Block(NamedTuple):
    """``segments`` holds ``x0..xm`` and ``symbols`` holds ``a1..am`` as a string.

    A ``Block`` may be raw; use :func:`canonicalize` for the canonical
    representative of its equivalence class.
    """

    segments: tuple[str, ...]
    symbols: str

    @property
    def dim(self) -> int:
        return len(self.symbols)

    @property
    def min_word(self) -> str:
        return "".join(self.segments)

    @property
    def max_word(self) -> str:
        return vertex_mask(self, (1 << self.dim) - 1)

    def __str__(self) -> str:
        return format_block(self)


class BlockSyntaxError(WordSyntaxError):
    pass


class InvalidBlockError(ValueError):
    pass


def word_block(w: str) -> Block:
    return Block((w,), "")


def make_block(*parts: str) -> Block:
    """``make_block(x0, a1, x1, ..., am, xm)``."""
    if len(parts) % 2 != 1:
        raise ValueError("expected x0, a1, x1, ..., am, xm")
    return Block(tuple(parts[0::2]), "".join(parts[1::2]))


# -- text form ---------------------------------------------------------------

def parse_block(text: str) -> Block:
    """Read ``ab(a)b`` style text; ``_`` may appear as an empty literal."""
    text = text.strip()
    if not text:
        raise BlockSyntaxError("empty block expression")
    segments = [""]
    symbols = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "(":
            if i + 2 >= len(text) or text[i + 2] != ")":
                raise BlockSyntaxError(f"malformed edge at position {i} in {text!r}")
            a = text[i + 1]
            if not is_symbol(a):
                raise BlockSyntaxError(f"invalid edge symbol {a!r} at position {i + 1} in {text!r}")
            symbols.append(a)
            segments.append("")
            i += 3
        elif ch == "_":
            i += 1
        elif is_symbol(ch):
            segments[-1] += ch
            i += 1
        else:
            raise BlockSyntaxError(f"unexpected {ch!r} at position {i} in {text!r}")
    return Block(tuple(segments), "".join(symbols))


def format_block(sigma: Block) -> str:
    if sigma.dim == 0:
        return format_word(sigma.segments[0])
    out = [sigma.segments[0]]
    for a, x in zip(sigma.symbols, sigma.segments[1:]):
        out.append(f"({a}){x}")
    return "".join(out)


def sort_key(sigma: Block) -> str:
    return format_block(sigma)


# -- vertices and sub-blocks -------------------------------------------------

def _mask(indices: Iterable[int], m: int) -> int:
    mask = 0
    for i in indices:
        if not 1 <= i <= m:
            raise IndexError(f"index {i} out of range 1..{m}")
        mask |= 1 << (i - 1)
    return mask


def vertex_mask(sigma: Block, mask: int) -> str:
    segs, syms = sigma.segments, sigma.symbols
    out = [segs[0]]
    for i, a in enumerate(syms):
        if mask >> i & 1:
            out.append(a)
        out.append(segs[i + 1])
    return "".join(out)


def vertex(sigma: Block, indices: Iterable[int]) -> str:
    return vertex_mask(sigma, _mask(indices, sigma.dim))


def vertex_table(sigma: Block) -> tuple[str, ...]:
    """``v_I`` for every mask ``I`` in ``0 .. 2^m - 1``."""
    return _vertex_table(sigma)


@lru_cache(maxsize=1 << 16)
def _vertex_table(sigma: Block) -> tuple[str, ...]:
    return tuple(vertex_mask(sigma, mask) for mask in range(1 << sigma.dim))


def vertices(sigma: Block) -> frozenset[str]:
    return frozenset(vertex_table(sigma))


def sub_block(sigma: Block, upper: Iterable[int] = (), lower: Iterable[int] = ()) -> Block:
    """The raw block ``sigma(I+, I-)``."""
    m = sigma.dim
    up, low = _mask(upper, m), _mask(lower, m)
    if up & low:
        raise ValueError("upper and lower index sets overlap")
    return _sub_block_mask(sigma, up, low)


def _sub_block_mask(sigma: Block, up: int, low: int) -> Block:
    segs = [sigma.segments[0]]
    syms = []
    for i, a in enumerate(sigma.symbols):
        if up >> i & 1:
            segs[-1] += a + sigma.segments[i + 1]
        elif low >> i & 1:
            segs[-1] += sigma.segments[i + 1]
        else:
            syms.append(a)
            segs.append(sigma.segments[i + 1])
    return Block(tuple(segs), "".join(syms))


# -- canonical form and validity --------------------------------------------

def canonicalize(sigma: Block) -> Block:
    """Move every leading ``a_i`` run of ``x_i`` in front of the edge ``(1,a_i)``.

    One right-to-left pass suffices: moving a run into ``x_{i-1}`` only
    appends to it, and ``x_{i-1}`` is handled next.
    """
    segs = list(sigma.segments)
    for i in range(sigma.dim, 0, -1):
        a = sigma.symbols[i - 1]
        x = segs[i]
        stripped = x.lstrip(a)
        if len(stripped) != len(x):
            segs[i - 1] += x[: len(x) - len(stripped)]
            segs[i] = stripped
    return Block(tuple(segs), sigma.symbols)


def is_canonical(sigma: Block) -> bool:
    return all(not x or x[0] != a for a, x in zip(sigma.symbols, sigma.segments[1:]))


def equivalent(s1: Block, s2: Block) -> bool:
    return canonicalize(s1) == canonicalize(s2)


def _valid_canonical(sigma: Block) -> bool:
    syms, segs = sigma.symbols, sigma.segments
    return not any(segs[i] == "" and syms[i - 1] == syms[i] for i in range(1, len(syms)))


def is_valid(sigma: Block) -> bool:
    return _valid_canonical(canonicalize(sigma))


def require_valid(sigma: Block) -> Block:
    c = canonicalize(sigma)
    if not _valid_canonical(c):
        raise InvalidBlockError(f"invalid block {format_block(sigma)}")
    return c


# -- facets and faces -------------------------------------------------------

def upper_facet(sigma: Block, i: int) -> Block:
    sigma = require_valid(sigma)
    if not 1 <= i <= sigma.dim:
        raise IndexError(f"facet index {i} out of range 1..{sigma.dim}")
    return canonicalize(_sub_block_mask(sigma, 1 << (i - 1), 0))


def lower_facet(sigma: Block, i: int) -> Block | None:
    sigma = require_valid(sigma)
    if not 1 <= i <= sigma.dim:
        raise IndexError(f"facet index {i} out of range 1..{sigma.dim}")
    tau = canonicalize(_sub_block_mask(sigma, 0, 1 << (i - 1)))
    return tau if _valid_canonical(tau) else None


def facets(sigma: Block) -> list[tuple[int, Block, Block | None]]:
    """``(i, upper_i, lower_i)`` for ``i = 1..m``; ``sigma`` must be canonical and valid."""
    out = []
    for i in range(sigma.dim):
        up = canonicalize(_sub_block_mask(sigma, 1 << i, 0))
        low = canonicalize(_sub_block_mask(sigma, 0, 1 << i))
        out.append((i + 1, up, low if _valid_canonical(low) else None))
    return out


def selections(m: int):
    """Every disjoint ``(up, low)`` mask pair over ``m`` indices."""
    for states in product((0, 1, 2), repeat=m):
        up = low = 0
        for i, s in enumerate(states):
            if s == 1:
                up |= 1 << i
            elif s == 2:
                low |= 1 << i
        yield up, low


def faces(sigma: Block) -> frozenset[Block]:
    sigma = require_valid(sigma)
    out = set()
    for up, low in selections(sigma.dim):
        tau = canonicalize(_sub_block_mask(sigma, up, low))
        if _valid_canonical(tau):
            out.add(tau)
    return frozenset(out)


def is_face(tau: Block, sigma: Block) -> bool:
    return canonicalize(tau) in faces(sigma)


# -- isomorphism --------------------------------------------------------------

def coincidence_pattern(sigma: Block) -> tuple[int, ...]:
    """Label each mask by the first mask with the same vertex."""
    first: dict[str, int] = {}
    return tuple(first.setdefault(v, mask) for mask, v in enumerate(vertex_table(sigma)))


def _fingerprint(pattern: tuple[int, ...], m: int) -> tuple:
    sizes: dict[int, dict[int, int]] = {}
    for mask, label in enumerate(pattern):
        by_size = sizes.setdefault(mask.bit_count(), {})
        by_size[label] = by_size.get(label, 0) + 1
    return tuple(tuple(sorted(sizes.get(k, {}).values())) for k in range(m + 1))


def _permute_mask(mask: int, perm: tuple[int, ...]) -> int:
    out = 0
    for i, j in enumerate(perm):
        if mask >> i & 1:
            out |= 1 << j
    return out


def _same_partition(p1: tuple[int, ...], p2: tuple[int, ...], perm: tuple[int, ...]) -> bool:
    # p1[I] == p1[J]  <=>  p2[pi(I)] == p2[pi(J)]; a consistent label bijection decides it
    forward: dict[int, int] = {}
    backward: dict[int, int] = {}
    for mask, label in enumerate(p1):
        other = p2[_permute_mask(mask, perm)]
        if forward.setdefault(label, other) != other or backward.setdefault(other, label) != label:
            return False
    return True


def isomorphic(s1: Block, s2: Block) -> tuple[int, ...] | None:
    """A 1-based permutation ``pi`` (as ``pi[i-1]``) witnessing ``s1 ≅ s2``, or ``None``.

    Two valid blocks are isomorphic exactly when some index permutation
    carries the vertex-coincidence pattern of one onto the other.
    """
    s1, s2 = require_valid(s1), require_valid(s2)
    m = s1.dim
    if s2.dim != m:
        return None
    p1, p2 = coincidence_pattern(s1), coincidence_pattern(s2)
    if _fingerprint(p1, m) != _fingerprint(p2, m):
        return None
    perm = _search(p1, p2, m)
    return None if perm is None else tuple(j + 1 for j in perm)


def _search(p1: tuple[int, ...], p2: tuple[int, ...], m: int) -> tuple[int, ...] | None:
    # backtracking over pi(0), pi(1), ...; a partial map is checked on masks
    # whose bits all lie in the assigned prefix
    assigned: list[int] = []
    used = [False] * m

    def extend(k: int) -> tuple[int, ...] | None:
        if k == m:
            perm = tuple(assigned)
            return perm if _same_partition(p1, p2, perm) else None
        for j in range(m):
            if not used[j]:
                used[j] = True
                assigned.append(j)
                if _restricted_ok(p1, p2, assigned):
                    found = extend(k + 1)
                    if found is not None:
                        return found
                assigned.pop()
                used[j] = False
        return None

    return extend(0)


def _restricted_ok(p1: tuple[int, ...], p2: tuple[int, ...], assigned: list[int]) -> bool:
    """Check the pattern on masks supported in the first ``len(assigned)`` indices.

    Equality between such masks is compared against equality of their images;
    this is a necessary condition for the full permutation.
    """
    k = len(assigned)
    forward: dict[int, int] = {}
    backward: dict[int, int] = {}
    for mask in range(1 << k):
        img = 0
        for i in range(k):
            if mask >> i & 1:
                img |= 1 << assigned[i]
        a, b = p1[mask], p2[img]
        if forward.setdefault(a, b) != b or backward.setdefault(b, a) != a:
            return False
    return True


def canonical_pattern(sigma: Block) -> tuple[int, ...]:
    """Isomorphism invariant: lexicographically least relabelled pattern over all permutations."""
    return _canonical_pattern(coincidence_pattern(sigma), sigma.dim)


@lru_cache(maxsize=None)
def _canonical_pattern(pattern: tuple[int, ...], m: int) -> tuple[int, ...]:
    best = None
    for perm in permutations(range(m)):
        relabel: dict[int, int] = {}
        image = [0] * len(pattern)
        for mask, label in enumerate(pattern):
            image[_permute_mask(mask, perm)] = label
        out = tuple(relabel.setdefault(label, len(relabel)) for label in image)
        if best is None or out < best:
            best = out
    return best


# -- transforms ---------------------------------------------------------------

def permute_symbols(sigma: Block, mapping: Mapping[str, str]) -> Block:
    def tr(w: str) -> str:
        return "".join(mapping.get(ch, ch) for ch in w)

    return canonicalize(Block(tuple(tr(x) for x in sigma.segments), tr(sigma.symbols)))


def add_affixes(sigma: Block, prefix: str = "", suffix: str = "") -> Block:
    segs = list(sigma.segments)
    segs[0] = prefix + segs[0]
    segs[-1] = segs[-1] + suffix
    return canonicalize(Block(tuple(segs), sigma.symbols))


def reverse_block(sigma: Block) -> Block:
    """``x_m^R (1,a_m) ... (1,a_1) x_0^R``; index ``i`` becomes ``m + 1 - i``."""
    segs = tuple(x[::-1] for x in reversed(sigma.segments))
    return canonicalize(Block(segs, sigma.symbols[::-1]))


def transform(sigma: Block, kind: str, *args) -> Block:
    """``kind`` is ``"permute"`` (mapping), ``"affix"`` (prefix, suffix) or ``"reverse"``."""
    require_valid(sigma)
    if kind == "permute":
        return permute_symbols(sigma, *args)
    if kind == "affix":
        return add_affixes(sigma, *args)
    if kind == "reverse":
        return reverse_block(sigma)
    raise ValueError(f"unknown transform {kind!r}")

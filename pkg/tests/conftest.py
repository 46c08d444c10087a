import random

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from insertion_complex.blocks import Block, canonicalize, is_valid

settings.register_profile(
    "repo",
    derandomize=True,
    max_examples=150,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("repo")

# fixtures quoted by the homology statements
FOUR_CYCLE = ["a", "ab", "ba", "b"]
SPHERE8 = ["a", "aa", "b", "bb", "ab", "ba", "bab", "aba"]
CIRCLE_MONOMIAL = ["", "a", "aa", "b", "bb", "abb", "aab", "aabb"]
CUBE_WORDS = ["", "a", "b", "c", "ab", "ac", "bc", "abc"]
WORKED_EXAMPLE = ["", "a", "ab", "bab", "ba", "c", "ac", "bd", "bde"]


def words_st(symbols="ab", max_len=4):
    return st.text(alphabet=symbols, max_size=max_len)


def word_sets(symbols="ab", max_len=4, max_size=8):
    return st.sets(words_st(symbols, max_len), max_size=max_size)


@st.composite
def raw_blocks(draw, symbols="abc", max_dim=4, max_seg=3):
    m = draw(st.integers(0, max_dim))
    segs = tuple(draw(st.text(alphabet=symbols, max_size=max_seg)) for _ in range(m + 1))
    syms = "".join(draw(st.sampled_from(symbols)) for _ in range(m))
    return Block(segs, syms)


@st.composite
def valid_blocks(draw, symbols="abc", max_dim=4, max_seg=3):
    sigma = draw(raw_blocks(symbols, max_dim, max_seg))
    # an invalid pair (1,a)(1,a) with a-only gap is repaired by inserting another symbol
    segs = list(canonicalize(sigma).segments)
    syms = sigma.symbols
    for i in range(1, len(syms)):
        if syms[i - 1] == syms[i] and segs[i].strip(syms[i]) == "":
            other = next(c for c in symbols if c != syms[i])
            segs[i] = other + segs[i]
    out = canonicalize(Block(tuple(segs), syms))
    assert is_valid(out)
    return out


def random_valid_block(rng: random.Random, symbols="abc", max_dim=5, max_seg=4) -> Block:
    """Rejection sampling of a canonical valid block."""
    while True:
        m = rng.randint(0, max_dim)
        segs = tuple("".join(rng.choice(symbols) for _ in range(rng.randint(0, max_seg))) for _ in range(m + 1))
        syms = "".join(rng.choice(symbols) for _ in range(m))
        sigma = canonicalize(Block(segs, syms))
        if is_valid(sigma):
            return sigma


def shuffle_once(rng: random.Random, sigma: Block) -> Block:
    """Move part of an ``a_i`` run across the edge ``(1, a_i)``; the result is equivalent."""
    if sigma.dim == 0:
        return sigma
    segs = list(sigma.segments)
    i = rng.randrange(1, sigma.dim + 1)
    a = sigma.symbols[i - 1]
    left, right = segs[i - 1], segs[i]
    tail = len(left) - len(left.rstrip(a))
    head = len(right) - len(right.lstrip(a))
    if tail and (not head or rng.random() < 0.5):
        t = rng.randint(1, tail)
        segs[i - 1], segs[i] = left[:-t], a * t + right
    elif head:
        t = rng.randint(1, head)
        segs[i - 1], segs[i] = left + a * t, right[t:]
    return Block(tuple(segs), sigma.symbols)


@pytest.fixture
def rng():
    return random.Random(20261015)

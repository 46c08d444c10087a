"""Words over a finite alphabet.

A word is a plain ``str`` whose characters are its symbols; the empty word is
``""``.  In text form the single character ``_`` stands for the empty word.
"""
from __future__ import annotations

import os
from itertools import groupby, product
from typing import Iterable

EMPTY_TOKEN = "_"
RESERVED = frozenset("()#_")

DEFAULT_MAX_INTERVAL_LENGTH = 20


class WordSyntaxError(ValueError):
    """Raised when text cannot be read as a word."""


class GuardExceeded(RuntimeError):
    """Raised when an input is larger than a configured resource guard."""


def is_symbol(ch: str) -> bool:
    return len(ch) == 1 and ch.isprintable() and not ch.isspace() and ch not in RESERVED


def parse_word(text: str) -> str:
    if text == EMPTY_TOKEN:
        return ""
    if text == "":
        raise WordSyntaxError("empty text; use '_' for the empty word")
    for pos, ch in enumerate(text):
        if not is_symbol(ch):
            raise WordSyntaxError(f"invalid symbol {ch!r} at position {pos} in {text!r}")
    return text


def format_word(w: str) -> str:
    return w if w else EMPTY_TOKEN


def alphabet(words: Iterable[str]) -> tuple[str, ...]:
    """Sorted tuple of the symbols used by ``words``."""
    return tuple(sorted({ch for w in words for ch in w}))


def concat(u: str, v: str) -> str:
    return u + v


def reverse(w: str) -> str:
    return w[::-1]


def run_length(w: str) -> list[tuple[str, int]]:
    """Run-length form ``[(a_1, r_1), ...]`` with adjacent symbols distinct."""
    return [(a, len(list(g))) for a, g in groupby(w)]


def from_runs(runs: Iterable[tuple[str, int]]) -> str:
    return "".join(a * r for a, r in runs)


def is_subword(u: str, v: str) -> bool:
    """True iff ``u`` is a (scattered) subsequence of ``v``."""
    if len(u) > len(v):
        return False
    it = iter(v)
    return all(ch in it for ch in u)


def insertion_decompositions(u: str, v: str) -> list[tuple[str, str, str]]:
    """All ``(x, a, y)`` with ``u == x + y`` and ``v == x + a + y``."""
    if len(v) != len(u) + 1:
        return []
    return [(v[:i], v[i], v[i + 1:]) for i in range(len(v)) if v[:i] + v[i + 1:] == u]


def count_power_embeddings(u: str, v: str) -> int:
    """Number of sequences ``q`` with ``0 <= q_i <= r_i`` and ``u == a_1^q_1 ... a_m^q_m``.

    ``(a_i, r_i)`` are the runs of ``v``.
    """
    runs = run_length(v)
    n = len(u)
    # ways[p] = number of ways to spell u[p:] with the runs processed so far (right to left)
    ways = [0] * (n + 1)
    ways[n] = 1
    for a, r in reversed(runs):
        new = [0] * (n + 1)
        for p in range(n + 1):
            total = ways[p]
            q = 1
            while q <= r and p + q <= n and u[p + q - 1] == a:
                total += ways[p + q]
                q += 1
            new[p] = total
        ways = new
    return ways[0]


def embeds_uniquely(u: str, v: str) -> bool:
    return count_power_embeddings(u, v) == 1


def max_interval_length() -> int:
    return int(os.environ.get("INSCOMPLEX_MAX_INTERVAL_LENGTH", DEFAULT_MAX_INTERVAL_LENGTH))


def subwords(w: str) -> set[str]:
    """All distinct subwords of ``w``, including ``""`` and ``w``."""
    runs = run_length(w)
    return {
        "".join(a * q for (a, _), q in zip(runs, qs))
        for qs in product(*(range(r + 1) for _, r in runs))
    }


def subword_interval(w_min: str, w_max: str, limit: int | None = None) -> set[str]:
    """The words ``w`` with ``w_min <= w <= w_max`` in the subword order."""
    if not is_subword(w_min, w_max):
        raise ValueError(f"{format_word(w_min)!r} is not a subword of {format_word(w_max)!r}")
    limit = max_interval_length() if limit is None else limit
    if len(w_max) > limit:
        raise GuardExceeded(f"|w_M| = {len(w_max)} exceeds the interval guard {limit}")
    return {w for w in subwords(w_max) if len(w) >= len(w_min) and is_subword(w_min, w)}


def primitive_root(w: str) -> str:
    """Shortest ``z`` with ``w == z * k``; the root of ``""`` is ``""``."""
    if not w:
        return ""
    i = (w + w).find(w, 1)
    return w[:i]


def commutes(u: str, v: str) -> bool:
    return u + v == v + u

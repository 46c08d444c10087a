"""Homology of subword intervals ``{w : w_m <= w <= w_M}``."""
from __future__ import annotations

import random
from dataclasses import dataclass

from ..complex import build_complex
from ..homology import HomologyResult, homology_Z
from ..words import embeds_uniquely, format_word, is_subword, subword_interval


@dataclass
class NullHomologyReport:
    w_min: str
    w_max: str
    unique: bool
    words: int
    counts: tuple[int, ...]
    homology: HomologyResult

    @property
    def trivial(self) -> bool:
        return self.homology.is_trivial()

    @property
    def asserted(self) -> bool:
        """Only unique embeddings are claimed to give trivial homology."""
        return self.unique

    @property
    def passed(self) -> bool:
        return self.trivial or not self.asserted

    def to_dict(self) -> dict:
        return {
            "w_min": format_word(self.w_min),
            "w_max": format_word(self.w_max),
            "embeds_uniquely": self.unique,
            "words": self.words,
            "blocks": list(self.counts),
            "homology": self.homology.to_dict(),
            "trivial": self.trivial,
            "asserted": self.asserted,
            "passed": self.passed,
        }


def check_null_homology(w_min: str, w_max: str, limit: int | None = None) -> NullHomologyReport:
    if not is_subword(w_min, w_max):
        raise ValueError(f"{format_word(w_min)!r} is not a subword of {format_word(w_max)!r}")
    W = subword_interval(w_min, w_max, limit)
    K = build_complex(W)
    return NullHomologyReport(w_min, w_max, embeds_uniquely(w_min, w_max), len(W), tuple(K.counts()), homology_Z(K))


def random_interval(rng: random.Random, symbols: str = "abc", max_len: int = 8, unique: bool = True) -> tuple[str, str]:
    """A random pair ``w_m <= w_M`` with ``|w_M| <= max_len``; if ``unique``, ``w_m`` embeds uniquely."""
    while True:
        n = rng.randint(1, max_len)
        w_max = "".join(rng.choice(symbols) for _ in range(n))
        keep = sorted(rng.sample(range(n), rng.randint(0, n)))
        w_min = "".join(w_max[i] for i in keep)
        if not unique or embeds_uniquely(w_min, w_max):
            return w_min, w_max

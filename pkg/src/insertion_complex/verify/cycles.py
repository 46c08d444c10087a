"""Four-word sets with a nontrivial 1-cycle, and their six families."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from ..classification import all_words
from ..complex import build_complex, insertion_graph
from ..homology import homology_Z
from ..words import GuardExceeded, format_word

FAMILY_MIN_T = {1: 1, 2: 2, 3: 1, 4: 0, 5: 0, 6: 1}
MAX_CLASSIFICATION_LENGTH = 10


def _family(family: int, t: int) -> list[str]:
    p = "ab" * t
    q = "ab" * (t + 1)
    if family == 1:
        return [p, "a" + p, p + "a", q]
    if family == 2:
        return [p, "a" + p, p + "b", q]
    if family == 3:
        return [p, p + "a", "b" + p, q]
    if family == 4:
        return [p + "a", "b" + p + "a", q, "b" + p]
    if family == 5:
        return [q, q + "a", "b" + q, "b" + p + "a"]
    if family == 6:
        return [q, "a" + q, q + "b", "a" + p + "b"]
    raise ValueError(f"unknown family {family}")


def cycle_family_words(family: int, t: int, check_range: bool = True) -> frozenset[str]:
    if family not in FAMILY_MIN_T:
        raise ValueError(f"family must be 1..6, got {family}")
    if check_range and t < FAMILY_MIN_T[family]:
        raise ValueError(f"family {family} needs t >= {FAMILY_MIN_T[family]}, got {t}")
    return frozenset(_family(family, t))


def _common_prefix(words: Iterable[str]) -> str:
    words = list(words)
    lo, hi = min(words), max(words)
    n = 0
    while n < min(len(lo), len(hi)) and lo[n] == hi[n]:
        n += 1
    return lo[:n]


def strip_affixes(words: Iterable[str]) -> tuple[str, str, frozenset[str]]:
    """Remove the longest common prefix and then the longest common suffix."""
    words = list(words)
    pre = _common_prefix(words)
    rest = [w[len(pre):] for w in words]
    suf = _common_prefix([w[::-1] for w in rest])[::-1]
    core = frozenset(w[: len(w) - len(suf)] for w in rest)
    return pre, suf, core


def _swap(words: Iterable[str]) -> frozenset[str]:
    return frozenset(w.translate(str.maketrans("ab", "ba")) for w in words)


def _reverse(words: Iterable[str]) -> frozenset[str]:
    return frozenset(w[::-1] for w in words)


@dataclass
class Reduction:
    family: int
    t: int
    prefix: str
    suffix: str
    reversed: bool
    swapped: bool

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "t": self.t,
            "prefix": format_word(self.prefix),
            "suffix": format_word(self.suffix),
            "reversed": self.reversed,
            "swapped": self.swapped,
        }


def match_family(words: Iterable[str], families: Iterable[int] = range(1, 7), check_range: bool = True) -> Reduction | None:
    """Find a family member equal to ``words`` up to affixes, reversal and swapping ``a``/``b``."""
    words = frozenset(words)
    if len(words) != 4 or set("".join(words)) - set("ab"):
        return None
    pre, suf, core = strip_affixes(words)
    longest = max(len(w) for w in words)
    for fam in families:
        lo = FAMILY_MIN_T[fam] if check_range else 0
        for t in range(lo, longest // 2 + 1):
            target = _family(fam, t)
            if len(set(target)) != 4:
                continue
            target_core = strip_affixes(target)[2]
            for rev in (False, True):
                for sw in (False, True):
                    cand = core
                    if rev:
                        cand = _reverse(cand)
                    if sw:
                        cand = _swap(cand)
                    if cand == target_core:
                        return Reduction(fam, t, pre, suf, rev, sw)
    return None


@dataclass
class CycleReport:
    max_len: int
    candidates: int = 0
    hits: list[tuple[frozenset[str], Reduction | None]] = field(default_factory=list)

    @property
    def unmatched(self) -> list[frozenset[str]]:
        return [w for w, r in self.hits if r is None]

    @property
    def passed(self) -> bool:
        return not self.unmatched

    def family_counts(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for _, r in self.hits:
            if r is not None:
                out[r.family] = out.get(r.family, 0) + 1
        return dict(sorted(out.items()))

    def to_dict(self) -> dict:
        return {
            "max_len": self.max_len,
            "subsets_with_graph_cycle": self.candidates,
            "hits": len(self.hits),
            "family_counts": {str(k): v for k, v in self.family_counts().items()},
            "unmatched": [sorted(format_word(w) for w in ws) for ws in self.unmatched],
            "passed": self.passed,
        }


def has_one_cycles(words: Iterable[str]) -> bool:
    H = homology_Z(build_complex(words))
    return len(H.betti) > 1 and (H.betti[1] > 0 or bool(H.torsion[1]))


def brute_force_cycle_classification(max_len: int = 5, limit: int = MAX_CLASSIFICATION_LENGTH) -> CycleReport:
    """Every 4-subset of ``{a,b}^{<=max_len}`` with ``H1 != 0``, matched against the families.

    A complex whose 1-skeleton is a forest has no 1-cycles at all, and four
    words in a bipartite graph can only carry a cycle as a 4-cycle through all
    of them.  Subsets without such a cycle are skipped before any homology is
    computed.
    """
    if max_len > limit:
        raise GuardExceeded(f"max_len {max_len} exceeds the guard {limit}")
    words = list(all_words("ab", max_len))
    edges = {(u, v) for u, v, _ in insertion_graph(words).edges}
    adj: dict[str, set[str]] = {w: set() for w in words}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    report = CycleReport(max_len)
    seen: set[frozenset[str]] = set()
    # a 4-cycle u - x - v - y - u with u, v opposite; enumerate by opposite pairs
    for u, v in combinations(words, 2):
        common = sorted(adj[u] & adj[v])
        for x, y in combinations(common, 2):
            quad = frozenset((u, v, x, y))
            if quad in seen:
                continue
            seen.add(quad)
    for quad in sorted(seen, key=lambda q: sorted(q, key=lambda w: (len(w), w))):
        report.candidates += 1
        if not has_one_cycles(quad):
            continue
        report.hits.append((quad, match_family(quad)))
    return report

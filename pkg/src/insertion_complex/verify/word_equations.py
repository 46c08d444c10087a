"""Brute-force check of the two word-equation systems behind the 1-cycle families.

Unprimed: ``x a y b z = x' a y' b z'`` and ``x y z = x' y' z'``.
Primed:   ``x a y b z = x' b y' a z'`` and ``x y z = x' y' z'``.
``a`` and ``b`` are fixed symbols, possibly equal.  Every solution should
match one of three parametric shapes once common prefixes of ``x, x'`` and
common suffixes of ``z, z'`` are removed, up to exchanging the two sides and
reflecting the whole system.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from ..classification import all_words
from ..words import format_word

Solution = tuple[str, str, str, str, str, str]


def solutions(a: str, b: str, primed: bool, symbols: str = "ab", max_len: int = 3):
    """All ``(x, y, z, x', y', z')`` with every part of length ``<= max_len``."""
    words = list(all_words(symbols, max_len))
    c, d = (b, a) if primed else (a, b)
    for x in words:
        for y in words:
            for z in words:
                lhs = x + a + y + b + z
                base = x + y + z
                n = len(base)
                for i in range(n + 1):
                    if i > max_len:
                        break
                    for j in range(i, n + 1):
                        if j - i > max_len:
                            break
                        if n - j > max_len:
                            continue
                        x2, y2, z2 = base[:i], base[i:j], base[j:]
                        if x2 + c + y2 + d + z2 == lhs:
                            yield (x, y, z, x2, y2, z2)


def _lcp(u: str, v: str) -> int:
    n = 0
    while n < min(len(u), len(v)) and u[n] == v[n]:
        n += 1
    return n


def normalize(sol: Solution) -> Solution:
    x, y, z, x2, y2, z2 = sol
    p = _lcp(x, x2)
    x, x2 = x[p:], x2[p:]
    s = _lcp(z[::-1], z2[::-1])
    z, z2 = z[: len(z) - s], z2[: len(z2) - s]
    return x, y, z, x2, y2, z2


def _power(w: str, a: str) -> int | None:
    return len(w) if w == a * len(w) else None


def _shape_unprimed(sol: Solution, a: str, b: str) -> str | None:
    x, y, z, x2, y2, z2 = sol
    if x:
        return None
    r = _power(x2, a)
    if r is not None and z == "" and _power(z2, b) is not None and y == x2 + y2 + z2:
        return "S1"
    if z2 == "":
        r = _power(y, a)
        s = _power(y2, b)
        if r is not None and s is not None and x2.startswith(a * r):
            mid = x2[r:]
            t, rem = divmod(len(mid), 2)
            if not rem and mid == (a + b) * t and z == (a + b) * t + b * s:
                return "S2"
        r = _power(x2, a)
        if r is not None and _power(z, b) is not None and y.startswith(x2):
            gamma = y[r:]
            if y2 == gamma + z:
                return "S3"
    return None


def _shape_primed(sol: Solution, a: str, b: str) -> str | None:
    x, y, z, x2, y2, z2 = sol
    if x:
        return None
    r = _power(x2, a)
    if r is not None and z == "" and _power(z2, a) is not None and y == x2 + y2 + z2:
        return "S'1"
    if z2 == "":
        r = _power(y, a)
        s = _power(y2, a)
        if r is not None and s is not None and x2.startswith(a * (r + 1)):
            mid = x2[r + 1:]
            t, rem = divmod(len(mid), 2)
            if not rem and mid == (b + a) * t and z == (a + b) * t + a * (s + 1):
                return "S'2"
        r = _power(x2, a)
        if r is not None and _power(z, a) is not None and y.startswith(x2):
            gamma = y[r:]
            if y2 == gamma + z:
                return "S'3"
    return None


def classify_solution(sol: Solution, a: str, b: str, primed: bool) -> str | None:
    """Name of the shape matched after normalising, exchanging sides or reflecting."""
    x, y, z, x2, y2, z2 = sol
    variants = []
    for swap_sides in (False, True):
        for reflect in (False, True):
            s = (x2, y2, z2, x, y, z) if swap_sides else (x, y, z, x2, y2, z2)
            # exchanging sides of the primed system exchanges the roles of a and b
            c, d = (b, a) if swap_sides and primed else (a, b)
            if reflect:
                s = tuple(w[::-1] for w in (s[2], s[1], s[0], s[5], s[4], s[3]))
                c, d = d, c
            variants.append((normalize(s), c, d))
    for s, c, d in variants:
        shape = _shape_primed(s, c, d) if primed else _shape_unprimed(s, c, d)
        if shape:
            return shape
    return None


@dataclass
class EquationReport:
    max_len: int
    checked: int = 0
    shape_counts: dict[str, int] = field(default_factory=dict)
    unmatched: list[tuple[str, str, bool, Solution]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.unmatched

    def to_dict(self) -> dict:
        return {
            "max_len": self.max_len,
            "solutions": self.checked,
            "shape_counts": dict(sorted(self.shape_counts.items())),
            "unmatched": [
                {"a": a, "b": b, "primed": p, "solution": [format_word(w) for w in s]}
                for a, b, p, s in self.unmatched[:50]
            ],
            "unmatched_total": len(self.unmatched),
            "passed": self.passed,
        }


def check_word_equations(max_len: int = 3, symbols: str = "ab", equal_symbols: bool = False) -> EquationReport:
    """Classify every bounded solution; ``equal_symbols`` also runs the ``a == b`` systems."""
    report = EquationReport(max_len)
    for primed in (False, True):
        for a in symbols:
            for b in symbols:
                if a == b and not equal_symbols:
                    continue
                for sol in solutions(a, b, primed, symbols, max_len):
                    report.checked += 1
                    shape = classify_solution(sol, a, b, primed)
                    if shape is None:
                        report.unmatched.append((a, b, primed, sol))
                    else:
                        report.shape_counts[shape] = report.shape_counts.get(shape, 0) + 1
    return report

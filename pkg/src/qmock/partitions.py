"""Brute-force partition oracles for p_omega(n) and p_nu(n).

omega-partitions: positive parts, every odd part strictly below twice the
smallest part. nu-partitions: the same rule with distinct parts, where the
smallest part may be 0 (then no odd part is allowed at all). A zero part is
stored explicitly, so ``(2, 0)`` and ``(2,)`` are different nu-partitions.

Two independent routes are provided: a constructive enumerator that picks the
smallest part first, and a filter over all partitions of n.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, List, Sequence, Tuple

MODES = ("omega", "nu")


@dataclass(frozen=True)
class Partition:
    parts: Tuple[int, ...]
    smallest: int = field(init=False, repr=False)
    num_parts: int = field(init=False, repr=False)

    def __post_init__(self):
        parts = tuple(self.parts)
        if not parts:
            raise ValueError("a partition needs at least one part")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        if parts[-1] < 0:
            raise ValueError("parts must be nonnegative")
        if parts.count(0) > 1:
            raise ValueError("at most one zero part")
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "smallest", parts[-1])
        object.__setattr__(self, "num_parts", len(parts))

    @property
    def total(self) -> int:
        return sum(self.parts)

    def is_distinct(self) -> bool:
        return len(set(self.parts)) == len(self.parts)

    def odd_parts_ok(self) -> bool:
        """Every odd part is strictly less than twice the smallest part."""
        return all(p < 2 * self.smallest for p in self.parts if p % 2)


def _allowed_parts(s: int) -> Iterator[int]:
    """Parts that may sit above a smallest part ``s``: s..2s, then evens."""
    yield from range(s, 2 * s + 1)
    e = 2 * s + 2
    while True:
        yield e
        e += 2


def _decreasing(total: int, parts: Sequence[int], distinct: bool) -> Iterator[List[int]]:
    """Weakly (or strictly) decreasing lists from ``parts`` (sorted descending) summing to ``total``."""
    if total == 0:
        yield []
        return
    for i, p in enumerate(parts):
        if p > total or p == 0:
            continue
        rest = parts[i + 1:] if distinct else parts[i:]
        for tail in _decreasing(total - p, rest, distinct):
            yield [p] + tail


def _candidates(s: int, limit: int, above: bool) -> List[int]:
    out = []
    for p in _allowed_parts(s):
        if p > limit:
            break
        if above and p == s:
            continue
        out.append(p)
    return sorted(out, reverse=True)


def enumerate_omega(n: int) -> List[Partition]:
    """All omega-partitions of ``n``, grouped by smallest part."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    result = []
    for s in range(1, n + 1):
        for rest in _decreasing(n - s, _candidates(s, n - s, above=False), distinct=False):
            result.append(Partition(tuple(rest) + (s,)))
    return result


def enumerate_nu(n: int) -> List[Partition]:
    """All nu-partitions of ``n`` (distinct parts, optional zero smallest part)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    result = []
    for s in range(0, n + 1):
        for rest in _decreasing(n - s, _candidates(s, n - s, above=True), distinct=True):
            result.append(Partition(tuple(rest) + (s,)))
    return result


def enumerate_mode(mode: str, n: int) -> List[Partition]:
    if mode == "omega":
        return enumerate_omega(n)
    if mode == "nu":
        return enumerate_nu(n)
    raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")


def count_refined(mode: str, n: int, m: int) -> int:
    """Partitions of ``n`` with exactly ``m`` parts besides one copy of the smallest."""
    if m < 0:
        return 0
    return sum(1 for p in enumerate_mode(mode, n) if p.num_parts - 1 == m)


# --- second, slower oracle: filter every partition of n ---------------------


def all_partitions(n: int) -> Iterator[Tuple[int, ...]]:
    """Every partition of ``n`` into positive parts, parts weakly decreasing."""
    if n == 0:
        yield ()
        return

    def rec(rem, cap):
        if rem == 0:
            yield ()
            return
        for p in range(min(rem, cap), 0, -1):
            for tail in rec(rem - p, p):
                yield (p,) + tail

    yield from rec(n, n)


def filter_omega(n: int) -> List[Partition]:
    out = []
    for parts in all_partitions(n):
        if parts and all(p < 2 * parts[-1] for p in parts if p % 2):
            out.append(Partition(parts))
    return out


def filter_nu(n: int) -> List[Partition]:
    out = []
    for parts in all_partitions(n):
        if len(set(parts)) != len(parts):
            continue
        if parts and all(p < 2 * parts[-1] for p in parts if p % 2):
            out.append(Partition(parts))
        # the same parts with a zero appended: smallest 0 forbids odd parts
        if all(p % 2 == 0 for p in parts):
            out.append(Partition(parts + (0,)))
    return out


# --- counting tables (no listing), for generating series at high order -----


def omega_counts(n_max: int) -> List[int]:
    """``[p_omega(0), ..., p_omega(n_max)]`` with p_omega(0) = 0."""
    counts = [0] * (n_max + 1)
    for s in range(1, n_max + 1):
        # ways[t]: partitions of t into parts from s..2s and evens above 2s
        ways = [0] * (n_max - s + 1)
        ways[0] = 1
        for p in _candidates(s, n_max - s, above=False):
            for t in range(p, n_max - s + 1):
                ways[t] += ways[t - p]
        for t, w in enumerate(ways):
            counts[s + t] += w
    return counts


def nu_counts(n_max: int) -> List[int]:
    """``[p_nu(0), ..., p_nu(n_max)]``."""
    counts = [0] * (n_max + 1)
    for s in range(0, n_max + 1):
        ways = [0] * (n_max - s + 1)
        ways[0] = 1
        for p in _candidates(s, n_max - s, above=True):
            for t in range(n_max - s, p - 1, -1):
                ways[t] += ways[t - p]
        for t, w in enumerate(ways):
            counts[s + t] += w
    return counts

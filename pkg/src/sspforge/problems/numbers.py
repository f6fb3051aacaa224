"""Number problems: subset sum, knapsack, partition, two-machine
scheduling.

Element identity is positional; equal values are distinct universe
elements.  Partition and scheduling solutions are canonicalized: the last
universe element is required to lie on the complement side, so each
bipartition is represented exactly once.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..core import CapacityError, DomainError, FormatError


def _masked_sum(values, mask):
    total = 0
    i = 0
    while mask:
        if mask & 1:
            total += values[i]
        mask >>= 1
        i += 1
    return total


@dataclass(frozen=True)
class SubsetSumInstance:
    values: tuple[int, ...]
    target: int

    def __post_init__(self):
        if any(v <= 0 for v in self.values):
            raise FormatError("values must be positive")

    def universe_labels(self):
        return tuple(f"n{i}={v}" for i, v in enumerate(self.values))

    def verify(self, mask: int) -> bool:
        if mask >> len(self.values):
            raise DomainError("candidate outside number universe")
        return _masked_sum(self.values, mask) == self.target


@dataclass(frozen=True)
class KnapsackInstance:
    items: tuple[tuple[int, int], ...]  # (price, weight)
    price_goal: int
    weight_cap: int

    def __post_init__(self):
        if any(p <= 0 or w <= 0 for p, w in self.items):
            raise FormatError("prices and weights must be positive")

    def universe_labels(self):
        return tuple(f"it{i}=({p},{w})" for i, (p, w) in enumerate(self.items))

    def price(self, mask):
        return _masked_sum(tuple(p for p, _ in self.items), mask)

    def weight(self, mask):
        return _masked_sum(tuple(w for _, w in self.items), mask)

    def verify(self, mask: int) -> bool:
        if mask >> len(self.items):
            raise DomainError("candidate outside item universe")
        return self.price(mask) >= self.price_goal and self.weight(mask) <= self.weight_cap


@dataclass(frozen=True)
class PartitionInstance:
    values: tuple[int, ...]

    def __post_init__(self):
        if any(v <= 0 for v in self.values):
            raise FormatError("values must be positive")
        if not self.values:
            raise FormatError("need at least one number")

    def universe_labels(self):
        return tuple(f"n{i}={v}" for i, v in enumerate(self.values))

    def verify(self, mask: int) -> bool:
        n = len(self.values)
        if mask >> n:
            raise DomainError("candidate outside number universe")
        if mask >> (n - 1) & 1:
            return False  # canonical side excludes the last element
        total = sum(self.values)
        return 2 * _masked_sum(self.values, mask) == total


@dataclass(frozen=True)
class SchedulingInstance:
    times: tuple[int, ...]
    deadline: int

    def __post_init__(self):
        if any(v <= 0 for v in self.times):
            raise FormatError("processing times must be positive")
        if not self.times:
            raise FormatError("need at least one job")

    def universe_labels(self):
        return tuple(f"j{i}={v}" for i, v in enumerate(self.times))

    def verify(self, mask: int) -> bool:
        n = len(self.times)
        if mask >> n:
            raise DomainError("candidate outside job universe")
        if mask >> (n - 1) & 1:
            return False  # canonical machine-1 set excludes the last job
        total = sum(self.times)
        s1 = _masked_sum(self.times, mask)
        return s1 <= self.deadline and total - s1 <= self.deadline


def _subset_dfs(values, accept, prune, cap) -> list[int]:
    """Generic include/exclude over positive values.

    ``prune(cur, i)`` may cut a branch where ``cur`` is the running sum after
    deciding the first i elements; ``accept(cur)`` judges full selections.
    """
    n = len(values)
    suffix = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = suffix[i + 1] + values[i]
    out = []

    def rec(i, cur, mask):
        if prune(cur, i, suffix):
            return
        if i == n:
            if accept(cur):
                out.append(mask)
                if len(out) > cap:
                    raise CapacityError("solution cap exceeded")
            return
        rec(i + 1, cur, mask)
        rec(i + 1, cur + values[i], mask | 1 << i)

    rec(0, 0, 0)
    out.sort()
    return out


def subsetsum_solutions(inst: SubsetSumInstance, cap) -> list[int]:
    M = inst.target
    return _subset_dfs(
        inst.values,
        accept=lambda cur: cur == M,
        prune=lambda cur, i, suf: cur > M or cur + suf[i] < M,
        cap=cap,
    )


def subsetsum_feasible(inst: SubsetSumInstance, cap) -> list[int]:
    M = inst.target
    return _subset_dfs(
        inst.values,
        accept=lambda cur: cur >= M,
        prune=lambda cur, i, suf: cur + suf[i] < M,
        cap=cap,
    )


def knapsack_solutions(inst: KnapsackInstance, cap) -> list[int]:
    prices = tuple(p for p, _ in inst.items)
    sols = _subset_dfs(
        prices,
        accept=lambda cur: cur >= inst.price_goal,
        prune=lambda cur, i, suf: cur + suf[i] < inst.price_goal,
        cap=cap,
    )
    return [m for m in sols if inst.weight(m) <= inst.weight_cap]


def knapsack_feasible(inst: KnapsackInstance, cap) -> list[int]:
    prices = tuple(p for p, _ in inst.items)
    return _subset_dfs(
        prices,
        accept=lambda cur: cur >= inst.price_goal,
        prune=lambda cur, i, suf: cur + suf[i] < inst.price_goal,
        cap=cap,
    )


def partition_solutions(inst: PartitionInstance, cap) -> list[int]:
    total = sum(inst.values)
    if total % 2:
        return []
    half = total // 2
    head = inst.values[:-1]
    return _subset_dfs(
        head,
        accept=lambda cur: cur == half,
        prune=lambda cur, i, suf: cur > half or cur + suf[i] < half,
        cap=cap,
    )


def partition_feasible(inst: PartitionInstance, cap) -> list[int]:
    total = sum(inst.values)
    head = inst.values[:-1]
    return _subset_dfs(
        head,
        accept=lambda cur: 2 * cur >= total,
        prune=lambda cur, i, suf: 2 * (cur + suf[i]) < total,
        cap=cap,
    )


def scheduling_solutions(inst: SchedulingInstance, cap) -> list[int]:
    total = sum(inst.times)
    T = inst.deadline
    head = inst.times[:-1]
    return _subset_dfs(
        head,
        accept=lambda cur: cur <= T and total - cur <= T,
        prune=lambda cur, i, suf: cur > T or cur + suf[i] < total - T,
        cap=cap,
    )


def scheduling_feasible(inst: SchedulingInstance, cap) -> list[int]:
    total = sum(inst.times)
    T = inst.deadline
    head = inst.times[:-1]
    return _subset_dfs(
        head,
        accept=lambda cur: total - cur <= T,
        prune=lambda cur, i, suf: cur + suf[i] < total - T,
        cap=cap,
    )

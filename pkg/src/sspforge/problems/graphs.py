"""Vertex-universe graph problems: VC, IS, Clique, DS, FVS, and the
arc-universe FAS.

Enumerators here are exact: branch-and-bound trees are pruned only by
lower bounds that never cut a valid solution.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from ..core import CapacityError, DomainError, FormatError


def _check_edges(n, edges, directed=False):
    seen = set()
    for e in edges:
        u, v = e
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"endpoint out of range in {e}")
        if u == v:
            raise FormatError(f"self-loop {e}")
        key = (u, v) if directed else (min(u, v), max(u, v))
        if key in seen:
            raise FormatError(f"duplicate edge {e}")
        seen.add(key)


@dataclass(frozen=True)
class VertexCoverInstance:
    n: int
    edges: tuple[tuple[int, int], ...]
    k: int

    def __post_init__(self):
        _check_edges(self.n, self.edges)

    def universe_labels(self):
        return tuple(f"v{i}" for i in range(self.n))

    def is_cover(self, mask: int) -> bool:
        return all((mask >> u | mask >> v) & 1 for u, v in self.edges)

    def verify(self, mask: int) -> bool:
        if mask >> self.n:
            raise DomainError("candidate outside vertex universe")
        return self.is_cover(mask) and mask.bit_count() <= self.k


@dataclass(frozen=True)
class IndependentSetInstance:
    n: int
    edges: tuple[tuple[int, int], ...]
    k: int

    def __post_init__(self):
        _check_edges(self.n, self.edges)

    def universe_labels(self):
        return tuple(f"v{i}" for i in range(self.n))

    def is_independent(self, mask: int) -> bool:
        return not any((mask >> u & 1) and (mask >> v & 1) for u, v in self.edges)

    def verify(self, mask: int) -> bool:
        if mask >> self.n:
            raise DomainError("candidate outside vertex universe")
        return self.is_independent(mask) and mask.bit_count() >= self.k


@dataclass(frozen=True)
class CliqueInstance:
    n: int
    edges: tuple[tuple[int, int], ...]
    k: int

    def __post_init__(self):
        _check_edges(self.n, self.edges)

    def universe_labels(self):
        return tuple(f"v{i}" for i in range(self.n))

    def complement_edges(self) -> tuple[tuple[int, int], ...]:
        present = {(min(u, v), max(u, v)) for u, v in self.edges}
        return tuple(
            (u, v)
            for u in range(self.n)
            for v in range(u + 1, self.n)
            if (u, v) not in present
        )

    def verify(self, mask: int) -> bool:
        if mask >> self.n:
            raise DomainError("candidate outside vertex universe")
        present = {(min(u, v), max(u, v)) for u, v in self.edges}
        vs = [i for i in range(self.n) if mask >> i & 1]
        ok = all(
            (min(a, b), max(a, b)) in present for a, b in itertools.combinations(vs, 2)
        )
        return ok and mask.bit_count() >= self.k


@dataclass(frozen=True)
class DominatingSetInstance:
    n: int
    edges: tuple[tuple[int, int], ...]
    k: int

    def __post_init__(self):
        _check_edges(self.n, self.edges)

    def universe_labels(self):
        return tuple(f"v{i}" for i in range(self.n))

    def closed_neighborhoods(self) -> tuple[int, ...]:
        nb = [1 << i for i in range(self.n)]
        for u, v in self.edges:
            nb[u] |= 1 << v
            nb[v] |= 1 << u
        return tuple(nb)

    def verify(self, mask: int) -> bool:
        if mask >> self.n:
            raise DomainError("candidate outside vertex universe")
        if mask.bit_count() > self.k:
            return False
        dominated = 0
        for i, nb in enumerate(self.closed_neighborhoods()):
            if mask >> i & 1:
                dominated |= nb
        return dominated == (1 << self.n) - 1


@dataclass(frozen=True)
class FeedbackVertexSetInstance:
    n: int
    arcs: tuple[tuple[int, int], ...]
    k: int

    def __post_init__(self):
        _check_edges(self.n, self.arcs, directed=True)

    def universe_labels(self):
        return tuple(f"v{i}" for i in range(self.n))

    def acyclic_after(self, mask: int) -> bool:
        return _is_acyclic(
            self.n,
            [
                (u, v)
                for u, v in self.arcs
                if not (mask >> u & 1) and not (mask >> v & 1)
            ],
        )

    def verify(self, mask: int) -> bool:
        if mask >> self.n:
            raise DomainError("candidate outside vertex universe")
        return mask.bit_count() <= self.k and self.acyclic_after(mask)


@dataclass(frozen=True)
class FeedbackArcSetInstance:
    n: int
    arcs: tuple[tuple[int, int], ...]
    k: int

    def __post_init__(self):
        _check_edges(self.n, self.arcs, directed=True)

    def universe_labels(self):
        return tuple(f"a{i}:{u}->{v}" for i, (u, v) in enumerate(self.arcs))

    def acyclic_after(self, mask: int) -> bool:
        return _is_acyclic(
            self.n, [a for i, a in enumerate(self.arcs) if not (mask >> i & 1)]
        )

    def verify(self, mask: int) -> bool:
        if mask >> len(self.arcs):
            raise DomainError("candidate outside arc universe")
        return mask.bit_count() <= self.k and self.acyclic_after(mask)


def _is_acyclic(n, arcs) -> bool:
    out = [[] for _ in range(n)]
    indeg = [0] * n
    for u, v in arcs:
        out[u].append(v)
        indeg[v] += 1
    queue = [i for i in range(n) if indeg[i] == 0]
    seen = 0
    while queue:
        u = queue.pop()
        seen += 1
        for v in out[u]:
            indeg[v] -= 1
            if indeg[v] == 0:
                queue.append(v)
    return seen == n


def _pad_supersets(base: int, free: list[int], budget: int, out: list[int], cap: int):
    """base plus every subset of `free` with at most `budget` extra elements."""
    out.append(base)
    if len(out) > cap:
        raise CapacityError("solution cap exceeded")
    if budget <= 0:
        return
    for i, v in enumerate(free):
        _pad_supersets(base | 1 << v, free[i + 1 :], budget - 1, out, cap)


def covers_upto(n, edges, k, cap) -> list[int]:
    """All vertex covers of size at most k, as vertex masks."""
    if k < 0:
        return []
    edges = list(edges)
    out: list[int] = []

    def matching_lb(chosen):
        used = chosen
        cnt = 0
        for u, v in edges:
            if (used >> u | used >> v) & 1:
                continue
            used |= (1 << u) | (1 << v)
            cnt += 1
        return cnt

    def rec(chosen, banned, budget):
        while True:
            forced = -1
            for u, v in edges:
                if (chosen >> u | chosen >> v) & 1:
                    continue
                bu = banned >> u & 1
                bv = banned >> v & 1
                if bu and bv:
                    return
                if bu:
                    forced = v
                    break
                if bv:
                    forced = u
                    break
            if forced < 0:
                break
            if budget == 0:
                return
            chosen |= 1 << forced
            budget -= 1
        target = None
        for u, v in edges:
            if not ((chosen >> u | chosen >> v) & 1):
                target = (u, v)
                break
        if target is None:
            free = [
                i for i in range(n) if not ((chosen >> i | banned >> i) & 1)
            ]
            _pad_supersets(chosen, free, budget, out, cap)
            return
        if budget == 0 or matching_lb(chosen) > budget:
            return
        u, v = target
        rec(chosen | 1 << u, banned, budget - 1)
        rec(chosen, banned | 1 << u, budget)

    rec(0, 0, k)
    out.sort()
    return out


def independent_sets_atleast(n, edges, k, cap) -> list[int]:
    full = (1 << n) - 1
    res = [full ^ c for c in covers_upto(n, edges, n - k, cap)]
    res.sort()
    return res


def dominating_upto(inst: DominatingSetInstance, k, cap) -> list[int]:
    if k < 0:
        return []
    n = inst.n
    nbs = inst.closed_neighborhoods()
    full = (1 << n) - 1
    out: list[int] = []

    def lb(undominated, banned):
        cnt = 0
        taken = 0
        m = undominated
        while m:
            u = (m & -m).bit_length() - 1
            m &= m - 1
            reach = nbs[u] & ~banned
            if reach and not (reach & taken):
                taken |= reach
                cnt += 1
        return cnt

    def rec(chosen, banned, undominated, budget):
        if not undominated:
            free = [
                i for i in range(n) if not ((chosen >> i | banned >> i) & 1)
            ]
            _pad_supersets(chosen, free, budget, out, cap)
            return
        if budget == 0 or lb(undominated, banned) > budget:
            return
        best, best_c = -1, None
        m = undominated
        while m:
            u = (m & -m).bit_length() - 1
            m &= m - 1
            cands = nbs[u] & ~banned
            if best_c is None or cands.bit_count() < best_c.bit_count():
                best, best_c = u, cands
        if not best_c:
            return
        banned_local = banned
        c = best_c
        while c:
            w = (c & -c).bit_length() - 1
            c &= c - 1
            rec(chosen | 1 << w, banned_local, undominated & ~nbs[w], budget - 1)
            banned_local |= 1 << w
        return

    rec(0, 0, full if n else 0, k)
    out.sort()
    return out


def _find_cycle_arcs(n, arcs, removed_mask) -> list[int] | None:
    """Arc indices of some directed cycle avoiding removed arcs, or None."""
    out = [[] for _ in range(n)]
    for idx, (u, v) in enumerate(arcs):
        if not (removed_mask >> idx) & 1:
            out[u].append((idx, v))
    color = [0] * n  # 0 white, 1 gray, 2 black
    stack_arcs: list[int] = []
    path: list[int] = []

    def dfs(u):
        color[u] = 1
        path.append(u)
        for idx, v in out[u]:
            if color[v] == 0:
                stack_arcs.append(idx)
                r = dfs(v)
                if r is not None:
                    return r
                stack_arcs.pop()
            elif color[v] == 1:
                pos = path.index(v)
                return stack_arcs[pos:] + [idx]
        color[u] = 2
        path.pop()
        return None

    for s in range(n):
        if color[s] == 0:
            res = dfs(s)
            if res is not None:
                return res
    return None


def feedback_arcsets_upto(inst: FeedbackArcSetInstance, k, cap) -> list[int]:
    if k < 0:
        return []
    n, arcs = inst.n, inst.arcs
    out: list[int] = []

    def rec(removed, banned, budget):
        cyc = _find_cycle_arcs(n, arcs, removed)
        if cyc is None:
            free = [
                i
                for i in range(len(arcs))
                if not ((removed >> i | banned >> i) & 1)
            ]
            _pad_supersets(removed, free, budget, out, cap)
            return
        if budget == 0:
            return
        banned_local = banned
        for idx in cyc:
            if (banned_local >> idx) & 1:
                continue
            rec(removed | 1 << idx, banned_local, budget - 1)
            banned_local |= 1 << idx

    rec(0, 0, k)
    out.sort()
    return out


def feedback_vertexsets_upto(inst: FeedbackVertexSetInstance, k, cap) -> list[int]:
    if k < 0:
        return []
    n = inst.n
    out: list[int] = []
    for size in range(min(k, n) + 1):
        for combo in itertools.combinations(range(n), size):
            m = 0
            for v in combo:
                m |= 1 << v
            if inst.acyclic_after(m):
                out.append(m)
                if len(out) > cap:
                    raise CapacityError("solution cap exceeded")
    out.sort()
    return out


def connected_undirected(n, edges) -> bool:
    if n <= 1:
        return True
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for v in adj[u]:
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return len(seen) == n

"""Arc/edge-universe route problems: Hamiltonian paths and cycles, TSP,
and vertex-disjoint path systems.

Universes are the arc (edge) lists; solutions are arc masks.  Enumeration
is by depth-first search over simple paths, which stays cheap on the
chain-structured graphs the reductions produce.
"""

from __future__ import annotations

import itertools
import sys
from dataclasses import dataclass

from ..core import CapacityError, DomainError, FormatError

# path searches recurse once per visited vertex; reduction targets carry
# chains several hundred vertices long
sys.setrecursionlimit(max(sys.getrecursionlimit(), 100_000))


def _arc_labels(arcs):
    return tuple(f"a{i}:{u}->{v}" for i, (u, v) in enumerate(arcs))


def _edge_labels(edges):
    return tuple(f"e{i}:{u}-{v}" for i, (u, v) in enumerate(edges))


def _check_arcs(n, arcs):
    seen = set()
    for u, v in arcs:
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise FormatError(f"bad arc ({u},{v})")
        if (u, v) in seen:
            raise FormatError(f"duplicate arc ({u},{v})")
        seen.add((u, v))


@dataclass(frozen=True)
class DirectedHamPathInstance:
    n: int
    arcs: tuple[tuple[int, int], ...]
    s: int
    t: int

    def __post_init__(self):
        _check_arcs(self.n, self.arcs)
        if not (0 <= self.s < self.n and 0 <= self.t < self.n) or self.s == self.t:
            raise FormatError("bad s/t")

    def universe_labels(self):
        return _arc_labels(self.arcs)

    def verify(self, mask: int) -> bool:
        if mask >> len(self.arcs):
            raise DomainError("candidate outside arc universe")
        used = [self.arcs[i] for i in range(len(self.arcs)) if mask >> i & 1]
        if len(used) != self.n - 1:
            return False
        succ = {}
        for u, v in used:
            if u in succ:
                return False
            succ[u] = v
        cur, seen = self.s, {self.s}
        for _ in range(self.n - 1):
            if cur not in succ:
                return False
            cur = succ[cur]
            if cur in seen:
                return False
            seen.add(cur)
        return cur == self.t and len(seen) == self.n


@dataclass(frozen=True)
class DirectedHamCycleInstance:
    n: int
    arcs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        _check_arcs(self.n, self.arcs)

    def universe_labels(self):
        return _arc_labels(self.arcs)

    def verify(self, mask: int) -> bool:
        if mask >> len(self.arcs):
            raise DomainError("candidate outside arc universe")
        used = [self.arcs[i] for i in range(len(self.arcs)) if mask >> i & 1]
        if len(used) != self.n or self.n < 2:
            return False
        succ = {}
        for u, v in used:
            if u in succ:
                return False
            succ[u] = v
        cur, seen = 0, set()
        for _ in range(self.n):
            if cur not in succ or cur in seen:
                return False
            seen.add(cur)
            cur = succ[cur]
        return cur == 0 and len(seen) == self.n


@dataclass(frozen=True)
class UndirectedHamCycleInstance:
    n: int
    edges: tuple[tuple[int, int], ...]

    def universe_labels(self):
        return _edge_labels(self.edges)

    def adjacency(self):
        adj = [[] for _ in range(self.n)]
        for i, (u, v) in enumerate(self.edges):
            adj[u].append((i, v))
            adj[v].append((i, u))
        return adj

    def verify(self, mask: int) -> bool:
        if mask >> len(self.edges):
            raise DomainError("candidate outside edge universe")
        if self.n < 3:
            return False
        used = [self.edges[i] for i in range(len(self.edges)) if mask >> i & 1]
        if len(used) != self.n:
            return False
        deg = [0] * self.n
        adj = [[] for _ in range(self.n)]
        for u, v in used:
            deg[u] += 1
            deg[v] += 1
            adj[u].append(v)
            adj[v].append(u)
        if any(d != 2 for d in deg):
            return False
        prev, cur, cnt = -1, 0, 0
        while True:
            nxt = adj[cur][0] if adj[cur][0] != prev else adj[cur][1]
            prev, cur = cur, nxt
            cnt += 1
            if cur == 0:
                break
        return cnt == self.n


@dataclass(frozen=True)
class TspInstance:
    n: int
    weights: tuple[int, ...]  # aligned with the canonical edge order
    k: int

    def __post_init__(self):
        if len(self.weights) != self.n * (self.n - 1) // 2:
            raise FormatError("weight list does not match a complete graph")

    def edge_order(self) -> tuple[tuple[int, int], ...]:
        return tuple(
            (u, v) for u in range(self.n) for v in range(u + 1, self.n)
        )

    def edge_index(self) -> dict[tuple[int, int], int]:
        return {e: i for i, e in enumerate(self.edge_order())}

    def universe_labels(self):
        return _edge_labels(self.edge_order())

    def tour_mask(self, cycle_vertices) -> int:
        idx = self.edge_index()
        m = 0
        for a, b in zip(cycle_vertices, cycle_vertices[1:] + cycle_vertices[:1]):
            m |= 1 << idx[(min(a, b), max(a, b))]
        return m

    def weight(self, mask: int) -> int:
        total = 0
        i = 0
        while mask:
            if mask & 1:
                total += self.weights[i]
            mask >>= 1
            i += 1
        return total

    def is_tour(self, mask: int) -> bool:
        inst = UndirectedHamCycleInstance(self.n, self.edge_order())
        return inst.verify(mask)

    def verify(self, mask: int) -> bool:
        if mask >> len(self.weights):
            raise DomainError("candidate outside edge universe")
        return self.is_tour(mask) and self.weight(mask) <= self.k


@dataclass(frozen=True)
class DisjointPathsInstance:
    n: int
    arcs: tuple[tuple[int, int], ...]
    pairs: tuple[tuple[int, int], ...]  # (s_i, t_i)

    def __post_init__(self):
        _check_arcs(self.n, self.arcs)
        terms = [x for p in self.pairs for x in p]
        if len(set(terms)) != len(terms):
            raise FormatError("terminal vertices must be distinct")
        if len(self.pairs) < 2:
            raise FormatError("need at least two terminal pairs")

    def universe_labels(self):
        return _arc_labels(self.arcs)

    def verify(self, mask: int) -> bool:
        if mask >> len(self.arcs):
            raise DomainError("candidate outside arc universe")
        used = [self.arcs[i] for i in range(len(self.arcs)) if mask >> i & 1]
        succ = {}
        for u, v in used:
            if u in succ:
                return False
            succ[u] = v
        visited: set[int] = set()
        arcs_walked = 0
        for s, t in self.pairs:
            if s in visited:
                return False
            cur = s
            visited.add(cur)
            while cur != t:
                if cur not in succ:
                    return False
                cur = succ[cur]
                if cur in visited:
                    return False
                visited.add(cur)
                arcs_walked += 1
        return arcs_walked == len(used)


def ham_paths(inst: DirectedHamPathInstance, cap) -> list[int]:
    n = inst.n
    adj = [[] for _ in range(n)]
    for i, (u, v) in enumerate(inst.arcs):
        adj[u].append((i, v))
    full = (1 << n) - 1
    out: list[int] = []

    def dfs(cur, visited, arcmask):
        if cur == inst.t:
            if visited == full:
                out.append(arcmask)
                if len(out) > cap:
                    raise CapacityError("solution cap exceeded")
            return
        for i, v in adj[cur]:
            if not visited >> v & 1:
                dfs(v, visited | 1 << v, arcmask | 1 << i)

    dfs(inst.s, 1 << inst.s, 0)
    out.sort()
    return out


def ham_cycles_directed(inst: DirectedHamCycleInstance, cap) -> list[int]:
    n = inst.n
    if n < 2:
        return []
    adj = [[] for _ in range(n)]
    closing = {}
    for i, (u, v) in enumerate(inst.arcs):
        adj[u].append((i, v))
        if v == 0:
            closing[u] = i
    full = (1 << n) - 1
    out: list[int] = []

    def dfs(cur, visited, arcmask):
        if visited == full:
            if cur in closing:
                out.append(arcmask | 1 << closing[cur])
                if len(out) > cap:
                    raise CapacityError("solution cap exceeded")
            return
        for i, v in adj[cur]:
            if v != 0 and not visited >> v & 1:
                dfs(v, visited | 1 << v, arcmask | 1 << i)

    dfs(0, 1, 0)
    out.sort()
    return out


def ham_cycles_undirected(inst: UndirectedHamCycleInstance, cap) -> list[int]:
    n = inst.n
    if n < 3:
        return []
    adj = inst.adjacency()
    full = (1 << n) - 1
    found: set[int] = set()

    def dfs(cur, visited, edgemask):
        if visited == full:
            for i, v in adj[cur]:
                if v == 0:
                    found.add(edgemask | 1 << i)
                    if len(found) > cap:
                        raise CapacityError("solution cap exceeded")
            return
        for i, v in adj[cur]:
            if not visited >> v & 1:
                dfs(v, visited | 1 << v, edgemask | 1 << i)

    dfs(0, 1, 0)
    return sorted(found)


def tsp_tours(inst: TspInstance, cap) -> list[int]:
    n = inst.n
    if n < 3:
        return []
    out = []
    rest = list(range(1, n))
    for perm in itertools.permutations(rest):
        if perm[0] > perm[-1]:
            continue  # each undirected tour once
        out.append(inst.tour_mask([0, *perm]))
        if len(out) > cap:
            raise CapacityError("solution cap exceeded")
    out.sort()
    return out


def disjoint_path_systems(inst: DisjointPathsInstance, cap) -> list[int]:
    n = inst.n
    adj = [[] for _ in range(n)]
    for i, (u, v) in enumerate(inst.arcs):
        adj[u].append((i, v))
    terminals = set(x for p in inst.pairs for x in p)
    out: list[int] = []
    pairs = inst.pairs

    def route(pi, usedv, arcmask):
        if pi == len(pairs):
            out.append(arcmask)
            if len(out) > cap:
                raise CapacityError("solution cap exceeded")
            return
        s, t = pairs[pi]
        if usedv >> s & 1:
            return

        def dfs(cur, usedv2, am):
            if cur == t:
                route(pi + 1, usedv2, am)
                return
            for i, v in adj[cur]:
                if usedv2 >> v & 1:
                    continue
                if v in terminals and v != t:
                    continue
                dfs(v, usedv2 | 1 << v, am | 1 << i)

        dfs(s, usedv | 1 << s, arcmask)

    route(0, 0, 0)
    out.sort()
    return out

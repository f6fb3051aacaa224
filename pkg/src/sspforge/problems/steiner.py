"""Steiner tree: edge-universe trees spanning all terminals within a
cost budget.

The enumerator attaches terminals one by one along simple paths and then
grows optional non-terminal branches, pruning on the budget and a
disjoint-requirement lower bound over the unreached terminals.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..core import CapacityError, DomainError, FormatError


@dataclass(frozen=True)
class SteinerTreeInstance:
    n: int
    edges: tuple[tuple[int, int], ...]
    costs: tuple[int, ...]
    terminals: tuple[int, ...]
    k: int

    def __post_init__(self):
        if len(self.costs) != len(self.edges):
            raise FormatError("costs must align with edges")
        if not self.terminals:
            raise FormatError("need at least one terminal")
        seen = set()
        for u, v in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n) or u == v:
                raise FormatError(f"bad edge ({u},{v})")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise FormatError(f"duplicate edge ({u},{v})")
            seen.add(key)
        if any(c < 0 for c in self.costs):
            raise FormatError("negative edge cost")

    def universe_labels(self):
        return tuple(f"e{i}:{u}-{v}" for i, (u, v) in enumerate(self.edges))

    def cost(self, mask: int) -> int:
        total = 0
        i = 0
        while mask:
            if mask & 1:
                total += self.costs[i]
            mask >>= 1
            i += 1
        return total

    def is_terminal_tree(self, mask: int) -> bool:
        """True iff mask is a tree (connected forest) whose span contains
        every terminal; a single terminal is connected by the empty tree."""
        used = [self.edges[i] for i in range(len(self.edges)) if mask >> i & 1]
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        touched = set()
        for u, v in used:
            touched.add(u)
            touched.add(v)
            ru, rv = find(u), find(v)
            if ru == rv:
                return False  # cycle
            parent[ru] = rv
        if not used:
            return len(set(self.terminals)) == 1
        if any(t not in touched for t in self.terminals):
            return False
        root = find(self.terminals[0])
        return all(find(x) == root for x in touched)

    def verify(self, mask: int) -> bool:
        if mask >> len(self.edges):
            raise DomainError("candidate outside edge universe")
        return self.cost(mask) <= self.k and self.is_terminal_tree(mask)


def steiner_trees_upto(inst: SteinerTreeInstance, budget: int, cap) -> list[int]:
    """All edge sets forming a terminal-spanning tree of cost <= budget.

    Trees whose leaves are all terminals are generated by attaching each
    terminal in index order to the growing tree along a simple path (the
    decomposition is unique, so each such tree appears once).  Trees with
    non-terminal branches are grown from those bases afterwards with a
    pivot discipline, again uniquely.
    """
    if budget < 0:
        return []
    n, edges, costs = inst.n, inst.edges, inst.costs
    terminals = tuple(dict.fromkeys(inst.terminals))
    adj = [[] for _ in range(n)]
    for i, (u, v) in enumerate(edges):
        adj[u].append((i, v))
        adj[v].append((i, u))
    out: list[int] = []

    # static per-terminal claims: the incident edges (one needed when a
    # neighbor is already in the tree), and incident plus continuation
    # edges (two needed otherwise); claims overlapping a previous claim
    # count zero to stay a valid disjoint-requirement bound
    t_near = {}
    t_near_claim = {}
    t_far = {}
    t_far_claim = {}
    t_nbrs = {}
    for t in set(terminals):
        eset1 = 0
        cheapest = None
        nbrs = 0
        for i, y in adj[t]:
            eset1 |= 1 << i
            nbrs |= 1 << y
            if cheapest is None or costs[i] < cheapest:
                cheapest = costs[i]
        t_nbrs[t] = nbrs
        if cheapest is None:
            t_near[t] = None
            continue
        t_near[t], t_near_claim[t] = eset1, cheapest
        eset2 = eset1
        second = None
        for i, y in adj[t]:
            for i2, _ in adj[y]:
                eset2 |= 1 << i2
                if i2 != i and (second is None or costs[i2] < second):
                    second = costs[i2]
        t_far[t] = eset2
        t_far_claim[t] = cheapest + (second or 0)

    def remaining_lb(tree_v, skip):
        total = 0
        used = 0
        for t in terminals:
            if t == skip or tree_v >> t & 1:
                continue
            if t_near[t] is None:
                return None  # isolated terminal, unreachable
            if t_nbrs[t] & tree_v:
                claim, eset = t_near_claim[t], t_near[t]
            else:
                claim, eset = t_far_claim[t], t_far[t]
            if eset & used:
                continue
            total += claim
            used |= eset
        return total

    def extensions(tree_v, mask, cost, banned):
        # the caller emitted `mask`; grow it edge by edge, branching on the
        # smallest frontier edge (include vs ban) so every tree is created
        # exactly once
        pivot, grow = -1, -1
        tv = tree_v
        while tv:
            x = (tv & -tv).bit_length() - 1
            tv &= tv - 1
            for i, y in adj[x]:
                if banned >> i & 1 or mask >> i & 1 or tree_v >> y & 1:
                    continue
                if pivot < 0 or i < pivot:
                    pivot, grow = i, y
        if pivot < 0:
            return
        if cost + costs[pivot] <= budget:
            out.append(mask | 1 << pivot)
            if len(out) > cap:
                raise CapacityError("solution cap exceeded")
            extensions(
                tree_v | 1 << grow, mask | 1 << pivot, cost + costs[pivot], banned
            )
        extensions(tree_v, mask, cost, banned | 1 << pivot)

    def attach_next(tree_v, mask, cost):
        t = next((x for x in terminals if not tree_v >> x & 1), None)
        if t is None:
            out.append(mask)
            if len(out) > cap:
                raise CapacityError("solution cap exceeded")
            extensions(tree_v, mask, cost, 0)
            return

        def dfs(cur, pv, pmask, pcost):
            # the bound must see the path vertices: the path may run
            # through or beside other unreached terminals
            lb = remaining_lb(tree_v | pv, t)
            if lb is None or cost + pcost + lb > budget:
                return
            if tree_v >> cur & 1:
                attach_next(tree_v | pv, mask | pmask, cost + pcost)
                return
            for i, y in adj[cur]:
                if pv >> y & 1 or mask >> i & 1:
                    continue
                dfs(y, pv | 1 << y, pmask | 1 << i, pcost + costs[i])

        dfs(t, 1 << t, 0, 0)

    attach_next(1 << terminals[0], 0, 0)
    out.sort()
    return out

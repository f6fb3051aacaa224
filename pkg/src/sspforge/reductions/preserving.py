"""Blow-up preserving reductions.

Every builder returns an artifact whose extra target elements are split
into a mask of always-selected elements (u_on) and never-selected
elements (u_off); the embedded source universe makes up the rest.
"""

from __future__ import annotations

from ..core import PreconditionError
from ..problems import (
    CliqueInstance,
    DisjointPathsInstance,
    DirectedHamCycleInstance,
    DirectedHamPathInstance,
    DominatingSetInstance,
    FacilityLocationInstance,
    FeedbackArcSetInstance,
    FeedbackVertexSetInstance,
    HittingSetInstance,
    IndependentSetInstance,
    KnapsackInstance,
    PartitionInstance,
    PCenterInstance,
    PMedianInstance,
    ProblemKind,
    SchedulingInstance,
    SetCoverInstance,
    SubsetSumInstance,
    TspInstance,
    UndirectedHamCycleInstance,
    VertexCoverInstance,
    connected_undirected,
)
from .artifact import PRESERVING, ReductionArtifact

PRESERVING_EDGES = (
    "vc-ds",
    "vc-sc",
    "vc-hs",
    "vc-fvs",
    "vc-fas",
    "vc-ufl",
    "vc-pcenter",
    "vc-pmedian",
    "is-clique",
    "subsetsum-knapsack",
    "subsetsum-partition",
    "partition-scheduling",
    "dhampath-dhamcycle",
    "dhamcycle-uhamcycle",
    "uhamcycle-tsp",
    "2ddp-kddp",
)


def _artifact(edge, src_kind, src, tgt_kind, tgt, f, u_on=0, u_off=0):
    return ReductionArtifact(
        edge=edge,
        kind=PRESERVING,
        source_kind=src_kind,
        source=src,
        target_kind=tgt_kind,
        target=tgt,
        f=tuple(f),
        u_on=u_on,
        u_off=u_off,
    )


def _mask(indices):
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def _vc_ds(src: VertexCoverInstance):
    if not connected_undirected(src.n, src.edges):
        raise PreconditionError("dominating-set reduction needs a connected graph")
    n = src.n
    copies = n + 1
    edges = list(src.edges)
    mids = []
    nxt = n
    for u, v in src.edges:
        for _ in range(copies):
            edges.append((u, nxt))
            edges.append((v, nxt))
            mids.append(nxt)
            nxt += 1
    tgt = DominatingSetInstance(nxt, tuple(edges), src.k)
    return _artifact(
        "vc-ds",
        ProblemKind.VERTEX_COVER,
        src,
        ProblemKind.DOMINATING_SET,
        tgt,
        range(n),
        u_off=_mask(mids),
    )


def _vc_sc(src: VertexCoverInstance):
    subsets = []
    for v in range(src.n):
        subsets.append(tuple(i for i, e in enumerate(src.edges) if v in e))
    tgt = SetCoverInstance(len(src.edges), tuple(subsets), src.k)
    return _artifact(
        "vc-sc", ProblemKind.VERTEX_COVER, src, ProblemKind.SET_COVER, tgt,
        range(src.n),
    )


def _vc_hs(src: VertexCoverInstance):
    tgt = HittingSetInstance(src.n, tuple(tuple(e) for e in src.edges), src.k)
    return _artifact(
        "vc-hs", ProblemKind.VERTEX_COVER, src, ProblemKind.HITTING_SET, tgt,
        range(src.n),
    )


def _vc_fvs(src: VertexCoverInstance):
    arcs = []
    for u, v in src.edges:
        arcs.append((u, v))
        arcs.append((v, u))
    tgt = FeedbackVertexSetInstance(src.n, tuple(arcs), src.k)
    return _artifact(
        "vc-fvs", ProblemKind.VERTEX_COVER, src,
        ProblemKind.FEEDBACK_VERTEX_SET, tgt, range(src.n),
    )


def _vc_fas(src: VertexCoverInstance):
    n = src.n
    copies = n + 1
    arcs = [(2 * v, 2 * v + 1) for v in range(n)]  # f-arcs first
    nxt = 2 * n
    extra = []
    for u, v in src.edges:
        for tail, head in ((u, v), (v, u)):
            for _ in range(copies):
                mid = nxt
                nxt += 1
                extra.append((2 * tail + 1, mid))
                extra.append((mid, 2 * head))
    all_arcs = arcs + extra
    tgt = FeedbackArcSetInstance(nxt, tuple(all_arcs), src.k)
    return _artifact(
        "vc-fas", ProblemKind.VERTEX_COVER, src, ProblemKind.FEEDBACK_ARC_SET,
        tgt, range(n), u_off=_mask(range(n, len(all_arcs))),
    )


def _vc_facility(src: VertexCoverInstance, flavor: str):
    n, m = src.n, len(src.edges)
    service = tuple(
        tuple(0 if v in e else n + 1 for e in src.edges) for v in range(n)
    )
    if flavor == "ufl":
        tgt = FacilityLocationInstance(n, m, (1,) * n, service, src.k)
        kind = ProblemKind.UFL
    elif flavor == "pcenter":
        tgt = PCenterInstance(n, m, service, src.k, 0)
        kind = ProblemKind.P_CENTER
    else:
        tgt = PMedianInstance(n, m, service, src.k, 0)
        kind = ProblemKind.P_MEDIAN
    return _artifact(
        f"vc-{flavor}", ProblemKind.VERTEX_COVER, src, kind, tgt, range(n)
    )


def _is_clique(src: IndependentSetInstance):
    present = {(min(u, v), max(u, v)) for u, v in src.edges}
    comp = tuple(
        (u, v)
        for u in range(src.n)
        for v in range(u + 1, src.n)
        if (u, v) not in present
    )
    tgt = CliqueInstance(src.n, comp, src.k)
    return _artifact(
        "is-clique", ProblemKind.INDEPENDENT_SET, src, ProblemKind.CLIQUE, tgt,
        range(src.n),
    )


def _ss_knapsack(src: SubsetSumInstance):
    items = tuple((a, a) for a in src.values)
    tgt = KnapsackInstance(items, src.target, src.target)
    return _artifact(
        "subsetsum-knapsack", ProblemKind.SUBSET_SUM, src, ProblemKind.KNAPSACK,
        tgt, range(len(src.values)),
    )


def _ss_partition(src: SubsetSumInstance):
    total = sum(src.values)
    if src.target > total:
        raise PreconditionError("subset-sum target exceeds the total")
    n = len(src.values)
    on_value = total + 1 - src.target
    off_value = src.target + 1
    tgt = PartitionInstance(tuple(src.values) + (on_value, off_value))
    return _artifact(
        "subsetsum-partition", ProblemKind.SUBSET_SUM, src,
        ProblemKind.PARTITION, tgt, range(n),
        u_on=1 << n, u_off=1 << (n + 1),
    )


def _partition_scheduling(src: PartitionInstance):
    total = sum(src.values)
    tgt = SchedulingInstance(tuple(src.values), total // 2)
    return _artifact(
        "partition-scheduling", ProblemKind.PARTITION, src,
        ProblemKind.SCHEDULING, tgt, range(len(src.values)),
    )


def _dhp_dhc(src: DirectedHamPathInstance):
    if (src.t, src.s) in src.arcs:
        raise PreconditionError("closing arc already present")
    if any(u == src.t for u, _ in src.arcs) or any(v == src.s for _, v in src.arcs):
        raise PreconditionError(
            "cycle reduction needs t without out-arcs and s without in-arcs"
        )
    arcs = tuple(src.arcs) + ((src.t, src.s),)
    tgt = DirectedHamCycleInstance(src.n, arcs)
    return _artifact(
        "dhampath-dhamcycle", ProblemKind.DHAM_PATH, src,
        ProblemKind.DHAM_CYCLE, tgt, range(len(src.arcs)),
        u_on=1 << len(src.arcs),
    )


def _dhc_uhc(src: DirectedHamCycleInstance):
    n = src.n
    edges = []
    for u, v in src.arcs:  # f-edges first
        edges.append((3 * u + 2, 3 * v))
    on = []
    for v in range(n):
        on.append(len(edges))
        edges.append((3 * v, 3 * v + 1))
        on.append(len(edges))
        edges.append((3 * v + 1, 3 * v + 2))
    tgt = UndirectedHamCycleInstance(3 * n, tuple(edges))
    return _artifact(
        "dhamcycle-uhamcycle", ProblemKind.DHAM_CYCLE, src,
        ProblemKind.UHAM_CYCLE, tgt, range(len(src.arcs)), u_on=_mask(on),
    )


def _uhc_tsp(src: UndirectedHamCycleInstance):
    n = src.n
    present = {(min(u, v), max(u, v)) for u, v in src.edges}
    order = [(u, v) for u in range(n) for v in range(u + 1, n)]
    idx = {e: i for i, e in enumerate(order)}
    weights = tuple(0 if e in present else 1 for e in order)
    tgt = TspInstance(n, weights, 0)
    f = [idx[(min(u, v), max(u, v))] for u, v in src.edges]
    off = _mask(i for i, e in enumerate(order) if e not in present)
    return _artifact(
        "uhamcycle-tsp", ProblemKind.UHAM_CYCLE, src, ProblemKind.TSP, tgt, f,
        u_off=off,
    )


def _ddp_kddp(src: DisjointPathsInstance, k: int):
    if k < 2:
        raise PreconditionError("k-disjoint-path needs k >= 2")
    if len(src.pairs) != 2:
        raise PreconditionError("source must be a two-disjoint-path instance")
    n = src.n
    arcs = list(src.arcs)
    pairs = list(src.pairs)
    on = []
    nxt = n
    for _ in range(3, k + 1):
        s_i, t_i = nxt, nxt + 1
        nxt += 2
        on.append(len(arcs))
        arcs.append((s_i, t_i))
        pairs.append((s_i, t_i))
    tgt = DisjointPathsInstance(nxt, tuple(arcs), tuple(pairs))
    return _artifact(
        "2ddp-kddp", ProblemKind.TWO_DDP, src, ProblemKind.K_DDP, tgt,
        range(len(src.arcs)), u_on=_mask(on),
    )


def build_preserving(edge: str, source, params: dict | None = None):
    params = params or {}
    if edge == "vc-ds":
        return _vc_ds(source)
    if edge == "vc-sc":
        return _vc_sc(source)
    if edge == "vc-hs":
        return _vc_hs(source)
    if edge == "vc-fvs":
        return _vc_fvs(source)
    if edge == "vc-fas":
        return _vc_fas(source)
    if edge == "vc-ufl":
        return _vc_facility(source, "ufl")
    if edge == "vc-pcenter":
        return _vc_facility(source, "pcenter")
    if edge == "vc-pmedian":
        return _vc_facility(source, "pmedian")
    if edge == "is-clique":
        return _is_clique(source)
    if edge == "subsetsum-knapsack":
        return _ss_knapsack(source)
    if edge == "subsetsum-partition":
        return _ss_partition(source)
    if edge == "partition-scheduling":
        return _partition_scheduling(source)
    if edge == "dhampath-dhamcycle":
        return _dhp_dhc(source)
    if edge == "dhamcycle-uhamcycle":
        return _dhc_uhc(source)
    if edge == "uhamcycle-tsp":
        return _uhc_tsp(source)
    if edge == "2ddp-kddp":
        return _ddp_kddp(source, params.get("k", 3))
    raise PreconditionError(f"unknown preserving edge {edge}")

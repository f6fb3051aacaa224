"""JSON documents for instances and artifacts, plus DIMACS CNF.

Documents are canonical (sorted keys, fixed indentation) so golden files
diff cleanly and round-trips are byte-stable.
"""

from __future__ import annotations

import json

from .core import DistanceMeasure, FormatError, indices_of, mask_of
from .problems import (
    CnfInstance,
    CliqueInstance,
    DirectedHamCycleInstance,
    DirectedHamPathInstance,
    DisjointPathsInstance,
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
    SteinerTreeInstance,
    SubsetSumInstance,
    TspInstance,
    UndirectedHamCycleInstance,
    VertexCoverInstance,
    universe_labels,
)
from .reductions.artifact import ReductionArtifact
from .rr import CombRrInstance, CostRrInstance, RAdjSatInstance

SCHEMA_VERSION = 1


def _pairs(seq):
    return [[int(a), int(b)] for a, b in seq]


def instance_payload(kind: ProblemKind, inst) -> dict:
    k = kind
    if k in (ProblemKind.SAT, ProblemKind.THREE_SAT):
        return {"n_vars": inst.n_vars, "clauses": [list(c) for c in inst.clauses]}
    if k in (
        ProblemKind.VERTEX_COVER,
        ProblemKind.INDEPENDENT_SET,
        ProblemKind.CLIQUE,
        ProblemKind.DOMINATING_SET,
    ):
        return {"n": inst.n, "edges": _pairs(inst.edges), "k": inst.k}
    if k in (ProblemKind.FEEDBACK_VERTEX_SET, ProblemKind.FEEDBACK_ARC_SET):
        return {"n": inst.n, "arcs": _pairs(inst.arcs), "k": inst.k}
    if k is ProblemKind.DHAM_PATH:
        return {"n": inst.n, "arcs": _pairs(inst.arcs), "s": inst.s, "t": inst.t}
    if k is ProblemKind.DHAM_CYCLE:
        return {"n": inst.n, "arcs": _pairs(inst.arcs)}
    if k is ProblemKind.UHAM_CYCLE:
        return {"n": inst.n, "edges": _pairs(inst.edges)}
    if k is ProblemKind.TSP:
        return {"n": inst.n, "weights": list(inst.weights), "k": inst.k}
    if k in (ProblemKind.TWO_DDP, ProblemKind.K_DDP):
        return {"n": inst.n, "arcs": _pairs(inst.arcs), "pairs": _pairs(inst.pairs)}
    if k is ProblemKind.STEINER_TREE:
        return {
            "n": inst.n,
            "edges": _pairs(inst.edges),
            "costs": list(inst.costs),
            "terminals": list(inst.terminals),
            "k": inst.k,
        }
    if k is ProblemKind.SUBSET_SUM:
        return {"values": list(inst.values), "target": inst.target}
    if k is ProblemKind.KNAPSACK:
        return {
            "items": _pairs(inst.items),
            "price_goal": inst.price_goal,
            "weight_cap": inst.weight_cap,
        }
    if k is ProblemKind.PARTITION:
        return {"values": list(inst.values)}
    if k is ProblemKind.SCHEDULING:
        return {"times": list(inst.times), "deadline": inst.deadline}
    if k is ProblemKind.SET_COVER:
        return {
            "ground_size": inst.ground_size,
            "subsets": [list(s) for s in inst.subsets],
            "k": inst.k,
        }
    if k is ProblemKind.HITTING_SET:
        return {
            "ground_size": inst.ground_size,
            "subsets": [list(s) for s in inst.subsets],
            "k": inst.k,
        }
    if k is ProblemKind.UFL:
        return {
            "n_facilities": inst.n_facilities,
            "n_clients": inst.n_clients,
            "open_costs": list(inst.open_costs),
            "service": [list(r) for r in inst.service],
            "k": inst.k,
        }
    if k in (ProblemKind.P_CENTER, ProblemKind.P_MEDIAN):
        return {
            "n_facilities": inst.n_facilities,
            "n_clients": inst.n_clients,
            "service": [list(r) for r in inst.service],
            "p": inst.p,
            "k": inst.k,
        }
    raise FormatError(f"cannot serialize kind {kind}")


def instance_from_payload(kind: ProblemKind, p: dict):
    k = kind

    def pairs(key):
        return tuple((int(a), int(b)) for a, b in p[key])

    if k in (ProblemKind.SAT, ProblemKind.THREE_SAT):
        return CnfInstance(p["n_vars"], tuple(tuple(c) for c in p["clauses"]))
    if k is ProblemKind.VERTEX_COVER:
        return VertexCoverInstance(p["n"], pairs("edges"), p["k"])
    if k is ProblemKind.INDEPENDENT_SET:
        return IndependentSetInstance(p["n"], pairs("edges"), p["k"])
    if k is ProblemKind.CLIQUE:
        return CliqueInstance(p["n"], pairs("edges"), p["k"])
    if k is ProblemKind.DOMINATING_SET:
        return DominatingSetInstance(p["n"], pairs("edges"), p["k"])
    if k is ProblemKind.FEEDBACK_VERTEX_SET:
        return FeedbackVertexSetInstance(p["n"], pairs("arcs"), p["k"])
    if k is ProblemKind.FEEDBACK_ARC_SET:
        return FeedbackArcSetInstance(p["n"], pairs("arcs"), p["k"])
    if k is ProblemKind.DHAM_PATH:
        return DirectedHamPathInstance(p["n"], pairs("arcs"), p["s"], p["t"])
    if k is ProblemKind.DHAM_CYCLE:
        return DirectedHamCycleInstance(p["n"], pairs("arcs"))
    if k is ProblemKind.UHAM_CYCLE:
        return UndirectedHamCycleInstance(p["n"], pairs("edges"))
    if k is ProblemKind.TSP:
        return TspInstance(p["n"], tuple(p["weights"]), p["k"])
    if k in (ProblemKind.TWO_DDP, ProblemKind.K_DDP):
        return DisjointPathsInstance(p["n"], pairs("arcs"), pairs("pairs"))
    if k is ProblemKind.STEINER_TREE:
        return SteinerTreeInstance(
            p["n"], pairs("edges"), tuple(p["costs"]), tuple(p["terminals"]), p["k"]
        )
    if k is ProblemKind.SUBSET_SUM:
        return SubsetSumInstance(tuple(p["values"]), p["target"])
    if k is ProblemKind.KNAPSACK:
        return KnapsackInstance(pairs("items"), p["price_goal"], p["weight_cap"])
    if k is ProblemKind.PARTITION:
        return PartitionInstance(tuple(p["values"]))
    if k is ProblemKind.SCHEDULING:
        return SchedulingInstance(tuple(p["times"]), p["deadline"])
    if k is ProblemKind.SET_COVER:
        return SetCoverInstance(
            p["ground_size"], tuple(tuple(s) for s in p["subsets"]), p["k"]
        )
    if k is ProblemKind.HITTING_SET:
        return HittingSetInstance(
            p["ground_size"], tuple(tuple(s) for s in p["subsets"]), p["k"]
        )
    if k is ProblemKind.UFL:
        return FacilityLocationInstance(
            p["n_facilities"],
            p["n_clients"],
            tuple(p["open_costs"]),
            tuple(tuple(r) for r in p["service"]),
            p["k"],
        )
    if k is ProblemKind.P_CENTER:
        return PCenterInstance(
            p["n_facilities"], p["n_clients"],
            tuple(tuple(r) for r in p["service"]), p["p"], p["k"],
        )
    if k is ProblemKind.P_MEDIAN:
        return PMedianInstance(
            p["n_facilities"], p["n_clients"],
            tuple(tuple(r) for r in p["service"]), p["p"], p["k"],
        )
    raise FormatError(f"cannot deserialize kind {kind}")


def instance_to_doc(kind: ProblemKind, inst) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": kind.value,
        "payload": instance_payload(kind, inst),
        "universe_labels": list(universe_labels(inst)),
    }


def instance_from_doc(doc: dict):
    try:
        kind = ProblemKind(doc["kind"])
        inst = instance_from_payload(kind, doc["payload"])
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"bad instance document: {exc}") from exc
    return kind, inst


def artifact_to_doc(a: ReductionArtifact) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "edge": a.edge,
        "kind": a.kind,
        "source": instance_to_doc(a.source_kind, a.source),
        "target": instance_to_doc(a.target_kind, a.target),
        "f": list(a.f),
        "l_b": indices_of(a.l_b),
        "beta": None
        if a.beta is None
        else {m.value: v for m, v in a.beta},
        "u_on": indices_of(a.u_on),
        "u_off": indices_of(a.u_off),
    }


def artifact_from_doc(doc: dict) -> ReductionArtifact:
    try:
        src_kind, src = instance_from_doc(doc["source"])
        tgt_kind, tgt = instance_from_doc(doc["target"])
        beta = doc.get("beta")
        if beta is None:
            beta_t = None
        else:
            order = (
                DistanceMeasure.KAPPA_ADDITION,
                DistanceMeasure.KAPPA_DELETION,
                DistanceMeasure.HAMMING,
            )
            beta_t = tuple((m, beta[m.value]) for m in order if m.value in beta)
        return ReductionArtifact(
            edge=doc["edge"],
            kind=doc["kind"],
            source_kind=src_kind,
            source=src,
            target_kind=tgt_kind,
            target=tgt,
            f=tuple(doc["f"]),
            l_b=mask_of(doc.get("l_b", [])),
            beta=beta_t,
            u_on=mask_of(doc.get("u_on", [])),
            u_off=mask_of(doc.get("u_off", [])),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"bad artifact document: {exc}") from exc


def comb_rr_to_doc(inst: CombRrInstance) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "type": "comb-rr",
        "kind": inst.kind.value,
        "payload": instance_payload(inst.kind, inst.instance),
        "blockable": indices_of(inst.blockable),
        "gamma": inst.gamma,
        "kappa": inst.kappa,
        "measure": inst.measure.value,
    }


def comb_rr_from_doc(doc: dict) -> CombRrInstance:
    kind = ProblemKind(doc["kind"])
    return CombRrInstance(
        kind=kind,
        instance=instance_from_payload(kind, doc["payload"]),
        blockable=mask_of(doc["blockable"]),
        gamma=doc["gamma"],
        kappa=doc["kappa"],
        measure=DistanceMeasure(doc["measure"]),
    )


def cost_rr_to_doc(inst: CostRrInstance) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "type": "cost-rr",
        "kind": inst.kind.value,
        "payload": instance_payload(inst.kind, inst.instance),
        "c1": list(inst.c1),
        "c_lo": list(inst.c_lo),
        "c_hi": list(inst.c_hi),
        "t_rr": inst.t_rr,
        "gamma": inst.gamma,
        "kappa": inst.kappa,
        "measure": inst.measure.value,
    }


def cost_rr_from_doc(doc: dict) -> CostRrInstance:
    kind = ProblemKind(doc["kind"])
    return CostRrInstance(
        kind=kind,
        instance=instance_from_payload(kind, doc["payload"]),
        c1=tuple(doc["c1"]),
        c_lo=tuple(doc["c_lo"]),
        c_hi=tuple(doc["c_hi"]),
        t_rr=doc["t_rr"],
        gamma=doc["gamma"],
        kappa=doc["kappa"],
        measure=DistanceMeasure(doc["measure"]),
    )


def radjsat_to_doc(inst: RAdjSatInstance) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "type": "radjsat",
        "cnf": instance_payload(ProblemKind.THREE_SAT, inst.cnf),
        "x": list(inst.x_vars),
        "y": list(inst.y_vars),
        "z": list(inst.z_vars),
        "gamma": inst.gamma,
    }


def radjsat_from_doc(doc: dict) -> RAdjSatInstance:
    cnf = instance_from_payload(ProblemKind.THREE_SAT, doc["cnf"])
    return RAdjSatInstance(
        cnf, tuple(doc["x"]), tuple(doc["y"]), tuple(doc["z"]), doc["gamma"]
    )


def dumps(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def parse_dimacs(text: str) -> CnfInstance:
    n_vars = None
    n_clauses = None
    lits: list[int] = []
    clauses: list[tuple[int, ...]] = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise FormatError(f"bad DIMACS header: {line!r}")
            n_vars, n_clauses = int(parts[2]), int(parts[3])
            continue
        if n_vars is None:
            raise FormatError("DIMACS clauses before header")
        for tok in line.split():
            v = int(tok)
            if v == 0:
                if not lits:
                    raise FormatError("empty DIMACS clause")
                clauses.append(tuple(lits))
                lits = []
            else:
                idx = abs(v) - 1
                if idx >= n_vars:
                    raise FormatError(f"literal {v} exceeds declared variables")
                lits.append(idx if v > 0 else n_vars + idx)
    if lits:
        clauses.append(tuple(lits))
    if n_vars is None:
        raise FormatError("missing DIMACS header")
    if n_clauses is not None and len(clauses) != n_clauses:
        raise FormatError(
            f"DIMACS declares {n_clauses} clauses, found {len(clauses)}"
        )
    return CnfInstance(n_vars, tuple(clauses))


def emit_dimacs(inst: CnfInstance) -> str:
    n = inst.n_vars
    lines = [f"p cnf {n} {len(inst.clauses)}"]
    for c in inst.clauses:
        toks = []
        for lit in c:
            toks.append(str(lit + 1) if lit < n else str(-(lit - n + 1)))
        lines.append(" ".join(toks) + " 0")
    return "\n".join(lines) + "\n"

"""Recoverable-robust layer: budgeted scenario sets, exhaustive
evaluators for the combinatorial and cost formulations, the adjustable-SAT
game solver, and the two hardness-pipeline constructions.

Evaluators are plain exhaustive quantifier searches over the enumerated
solution and feasible families; witnesses are deterministic (the
lexicographically least first-stage solution wins).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Any

from .core import (
    Bounds,
    DEFAULT_BOUNDS,
    DistanceMeasure,
    FormatError,
    PreconditionError,
    UnsupportedKindError,
    distance,
)
from .problems import (
    CnfInstance,
    ProblemKind,
    enumerate_feasible,
    enumerate_solutions,
    is_lop,
    lop_cost,
    universe_size,
)
from .reductions import build_blowup

INFEASIBLE = float("inf")


@dataclass(frozen=True)
class CombRrInstance:
    kind: ProblemKind
    instance: Any
    blockable: int  # mask over the nominal universe
    gamma: int
    kappa: int
    measure: DistanceMeasure

    def __post_init__(self):
        if self.blockable >> universe_size(self.instance):
            raise FormatError("blockable set outside the universe")


@dataclass(frozen=True)
class CostRrInstance:
    kind: ProblemKind
    instance: Any
    c1: tuple[int, ...]
    c_lo: tuple[int, ...]
    c_hi: tuple[int, ...]
    t_rr: int
    gamma: int
    kappa: int
    measure: DistanceMeasure

    def __post_init__(self):
        n = universe_size(self.instance)
        if not len(self.c1) == len(self.c_lo) == len(self.c_hi) == n:
            raise FormatError("cost vectors must match the universe")
        if any(lo > hi for lo, hi in zip(self.c_lo, self.c_hi)):
            raise FormatError("lower costs must not exceed upper costs")


@dataclass(frozen=True)
class RAdjSatInstance:
    cnf: CnfInstance
    x_vars: tuple[int, ...]
    y_vars: tuple[int, ...]
    z_vars: tuple[int, ...]
    gamma: int

    def __post_init__(self):
        self.cnf.require_width(3)
        parts = (set(self.x_vars), set(self.y_vars), set(self.z_vars))
        all_vars = set(range(self.cnf.n_vars))
        if parts[0] | parts[1] | parts[2] != all_vars or sum(map(len, parts)) != len(
            all_vars
        ):
            raise FormatError("X, Y, Z must partition the variables")
        if not len(parts[0]) == len(parts[1]) == len(parts[2]):
            raise FormatError("X, Y, Z must have equal sizes")


@dataclass
class RrWitness:
    s1: int
    recoveries: dict = field(default_factory=dict)  # blocker/scenario -> s2
    objective: int | float | None = None


def _masked_cost(costs, mask):
    total = 0
    i = 0
    while mask:
        if mask & 1:
            total += costs[i]
        mask >>= 1
        i += 1
    return total


def _subsets_upto(indices, gamma):
    for size in range(min(gamma, len(indices)) + 1):
        yield from itertools.combinations(indices, size)


def enumerate_scenarios(inst: CostRrInstance, bounds: Bounds = DEFAULT_BOUNDS):
    """All cost functions of the budgeted set, deduplicated: only elements
    with a strict gap can deviate."""
    gap = [i for i in range(len(inst.c_lo)) if inst.c_hi[i] > inst.c_lo[i]]
    out = []
    for combo in _subsets_upto(gap, inst.gamma):
        raised = 0
        for i in combo:
            raised |= 1 << i
        c2 = tuple(
            inst.c_hi[i] if raised >> i & 1 else inst.c_lo[i]
            for i in range(len(inst.c_lo))
        )
        out.append((raised, c2))
        if len(out) > bounds.max_solutions:
            raise FormatError("scenario count exceeds the enumeration cap")
    return out


def eval_comb_rr(
    inst: CombRrInstance, bounds: Bounds = DEFAULT_BOUNDS
) -> tuple[bool, RrWitness | None]:
    """Exists S1, for all blockers of size <= gamma, exists S2 avoiding the
    blocker within distance kappa; all over the nominal solution set."""
    sols = enumerate_solutions(inst.kind, inst.instance, bounds)
    if not sols:
        return False, None
    blockers = []
    b_indices = [i for i in range(universe_size(inst.instance)) if inst.blockable >> i & 1]
    for combo in _subsets_upto(b_indices, inst.gamma):
        m = 0
        for i in combo:
            m |= 1 << i
        blockers.append(m)
    for s1 in sols:
        recov = {}
        ok = True
        for b in blockers:
            found = None
            for s2 in sols:
                if s2 & b:
                    continue
                if distance(inst.measure, s1, s2) <= inst.kappa:
                    found = s2
                    break
            if found is None:
                ok = False
                break
            recov[b] = found
        if ok:
            return True, RrWitness(s1=s1, recoveries=recov)
    return False, None


def eval_cost_rr(
    inst: CostRrInstance, bounds: Bounds = DEFAULT_BOUNDS
) -> tuple[int | float, bool, RrWitness | None]:
    """min over S1 of max over scenarios of min over S2 within kappa of
    c1(S1) + c2(S2); infeasible inner minimization yields infinity."""
    if not is_lop(inst.kind):
        raise UnsupportedKindError(
            f"cost recoverable robustness needs an LOP kind, got {inst.kind.value}"
        )
    feas = enumerate_feasible(inst.kind, inst.instance, bounds)
    scenarios = enumerate_scenarios(inst, bounds)
    best: int | float = INFEASIBLE
    best_witness = None
    lo_costs = [(_masked_cost(inst.c_lo, s2), s2) for s2 in feas]
    lo_costs.sort()
    lo_floor = lo_costs[0][0] if lo_costs else 0
    for s1 in feas:
        c1v = _masked_cost(inst.c1, s1)
        if c1v + lo_floor >= best:
            continue
        worst: int | float = 0
        recov = {}
        for raised, c2 in scenarios:
            inner: int | float = INFEASIBLE
            inner_s2 = None
            for lo, s2 in lo_costs:
                if c1v + lo >= inner:
                    break  # raising costs cannot beat this bound
                if distance(inst.measure, s1, s2) > inst.kappa:
                    continue
                val = c1v + _masked_cost(c2, s2)
                if val < inner:
                    inner = val
                    inner_s2 = s2
            if inner > worst:
                worst = inner
                if worst >= best:
                    break
            recov[raised] = inner_s2
        if worst < best:
            best = worst
            best_witness = RrWitness(s1=s1, recoveries=recov, objective=worst)
    ok = best <= inst.t_rr
    return best, ok, best_witness


def solve_eae_sat(cnf: CnfInstance, x_vars, y_vars, z_vars) -> bool:
    """Truth of: exists X-assignment, for all Y-assignments, exists
    Z-assignment satisfying the formula."""
    masks = cnf.clause_masks()
    xs, ys, zs = list(x_vars), list(y_vars), list(z_vars)

    def lit_mask(var_bits, variables):
        m = 0
        for pos, v in enumerate(variables):
            if var_bits >> pos & 1:
                m |= 1 << v
            else:
                m |= 1 << (cnf.n_vars + v)
        return m

    for ax in range(1 << len(xs)):
        mx = lit_mask(ax, xs)
        good = True
        for ay in range(1 << len(ys)):
            my = mx | lit_mask(ay, ys)
            if not any(
                all((my | lit_mask(az, zs)) & cm for cm in masks)
                for az in range(1 << len(zs))
            ):
                good = False
                break
        if good:
            return True
    return False


def solve_radjsat(
    inst: RAdjSatInstance, bounds: Bounds = DEFAULT_BOUNDS
) -> tuple[bool, int | None]:
    """Exhaustive play of the adjustable-SAT game: commit an X-assignment,
    the adversary zeroes at most gamma Y-variables, then complete Y and Z.

    Returns the winning X-assignment as a literal mask when the answer is
    yes."""
    cnf = inst.cnf
    n = cnf.n_vars
    masks = cnf.clause_masks()
    xs, ys, zs = list(inst.x_vars), list(inst.y_vars), list(inst.z_vars)

    def lit_mask(bits, variables):
        m = 0
        for pos, v in enumerate(variables):
            if bits >> pos & 1:
                m |= 1 << v
            else:
                m |= 1 << (n + v)
        return m

    yz_assignments = [
        lit_mask(ay, ys) | lit_mask(az, zs)
        for ay in range(1 << len(ys))
        for az in range(1 << len(zs))
    ]
    blockers = list(_subsets_upto(ys, inst.gamma))
    for ax in range(1 << len(xs)):
        mx = lit_mask(ax, xs)
        good = True
        for blocked in blockers:
            blocked_mask = 0
            for v in blocked:
                blocked_mask |= 1 << v  # positive literal of a zeroed var
            found = False
            for myz in yz_assignments:
                if myz & blocked_mask:
                    continue
                full = mx | myz
                if all(full & cm for cm in masks):
                    found = True
                    break
            if not found:
                good = False
                break
        if good:
            return True, mx
    return False, None


def radjsat_to_comb_rr(
    inst: RAdjSatInstance, edge: str, measure: DistanceMeasure
) -> CombRrInstance:
    """Hardness-pipeline step: blow up the X-literals, block the images of
    the positive Y-literals, and set the recovery radius to the blow-up
    factor."""
    cnf = inst.cnf
    n = cnf.n_vars
    l_b = 0
    for v in inst.x_vars:
        l_b |= 1 << v
        l_b |= 1 << (n + v)
    artifact = build_blowup(edge, cnf, l_b, measure)
    blockable = 0
    for v in inst.y_vars:
        blockable |= 1 << artifact.f[v]
    return CombRrInstance(
        kind=artifact.target_kind,
        instance=artifact.target,
        blockable=blockable,
        gamma=inst.gamma,
        kappa=artifact.beta_for(measure),
        measure=measure,
    )


def comb_to_cost_rr(comb: CombRrInstance) -> CostRrInstance:
    """Simulate blockable elements with budgeted costs: blocked elements
    jump to 2t+1, the threshold doubles."""
    if not is_lop(comb.kind):
        raise UnsupportedKindError(
            f"cost simulation needs an LOP nominal kind, got {comb.kind.value}"
        )
    d, t = lop_cost(comb.kind, comb.instance)
    if any(v < 0 for v in d):
        raise PreconditionError(
            "cost simulation is restricted to nonnegative nominal costs"
        )
    penalty = 2 * t + 1
    # an element whose nominal cost already exceeds the penalty can never
    # appear in a solution pair; keep the bound order intact for it
    c_hi = tuple(
        max(penalty, d[i]) if comb.blockable >> i & 1 else d[i]
        for i in range(len(d))
    )
    return CostRrInstance(
        kind=comb.kind,
        instance=comb.instance,
        c1=d,
        c_lo=d,
        c_hi=c_hi,
        t_rr=2 * t,
        gamma=comb.gamma,
        kappa=comb.kappa,
        measure=comb.measure,
    )


def pad_radjsat(
    cnf: CnfInstance, x_vars, y_vars, z_vars, gamma: int
) -> RAdjSatInstance:
    """Equalize the part sizes by appending fresh unconstrained variables
    to the short parts."""
    xs, ys, zs = list(x_vars), list(y_vars), list(z_vars)
    target = max(len(xs), len(ys), len(zs))
    nxt = cnf.n_vars
    extra = 0
    for part in (xs, ys, zs):
        while len(part) < target:
            part.append(nxt)
            nxt += 1
            extra += 1
    if extra:
        old_n = cnf.n_vars
        new_n = old_n + extra

        def remap(lit):
            return lit if lit < old_n else lit - old_n + new_n

        clauses = tuple(tuple(remap(x) for x in c) for c in cnf.clauses)
        cnf = CnfInstance(new_n, clauses)
    return RAdjSatInstance(cnf, tuple(xs), tuple(ys), tuple(zs), gamma)

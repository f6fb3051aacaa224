import random

import pytest

from sspforge.core import DistanceMeasure, UnsupportedKindError, mask_of
from sspforge.gen import random_comb_rr, random_radjsat
from sspforge.problems import (
    CnfInstance,
    ProblemKind,
    VertexCoverInstance,
    enumerate_feasible,
    lop_cost,
)
from sspforge.rr import (
    CombRrInstance,
    CostRrInstance,
    RAdjSatInstance,
    comb_to_cost_rr,
    enumerate_scenarios,
    eval_comb_rr,
    eval_cost_rr,
    pad_radjsat,
    radjsat_to_comb_rr,
    solve_eae_sat,
    solve_radjsat,
)

ADD = DistanceMeasure.KAPPA_ADDITION
DEL = DistanceMeasure.KAPPA_DELETION
HAM = DistanceMeasure.HAMMING
K3 = VertexCoverInstance(3, ((0, 1), (0, 2), (1, 2)), 2)


def _cost_instance(inst, gamma, kappa, measure=HAM, raisable=0):
    d, t = lop_cost(ProblemKind.VERTEX_COVER, inst)
    hi = tuple(
        2 * t + 1 if raisable >> i & 1 else d[i] for i in range(len(d))
    )
    return CostRrInstance(
        ProblemKind.VERTEX_COVER, inst, d, d, hi, 2 * t, gamma, kappa, measure
    )


def test_scenarios_gamma_zero():
    inst = _cost_instance(K3, gamma=0, kappa=0, raisable=mask_of([0]))
    assert enumerate_scenarios(inst) == [(0, (1, 1, 1))]


def test_scenarios_degenerate_bounds():
    inst = _cost_instance(K3, gamma=2, kappa=0, raisable=0)
    assert len(enumerate_scenarios(inst)) == 1


def test_scenarios_single_budget():
    inst = _cost_instance(K3, gamma=1, kappa=0, raisable=mask_of([0, 1, 2]))
    assert len(enumerate_scenarios(inst)) == 4  # empty plus three singletons


def test_comb_rr_gamma_zero_yes():
    comb = CombRrInstance(ProblemKind.VERTEX_COVER, K3, 0, 0, 0, HAM)
    ans, wit = eval_comb_rr(comb)
    assert ans and wit.recoveries[0] == wit.s1


def test_comb_rr_unsatisfiable_nominal():
    phi = CnfInstance(1, ((0, 0, 0), (1, 1, 1)))
    comb = CombRrInstance(ProblemKind.THREE_SAT, phi, mask_of([0]), 1, 3, HAM)
    ans, wit = eval_comb_rr(comb)
    assert not ans and wit is None


def test_comb_rr_triangle_example():
    comb = CombRrInstance(
        ProblemKind.VERTEX_COVER, K3, mask_of([0]), 1, 2, HAM
    )
    ans, wit = eval_comb_rr(comb)
    assert ans
    assert wit.s1 == mask_of([0, 1])  # lexicographically least winner
    assert wit.recoveries[mask_of([0])] == mask_of([1, 2])


def test_cost_rr_collapses_without_uncertainty():
    inst = _cost_instance(K3, gamma=0, kappa=0, measure=HAM)
    value, ok, wit = eval_cost_rr(inst)
    assert value == 4  # twice the optimal cover cost
    assert ok


def test_cost_rr_single_feasible_worst_case():
    # single-edge graph, only one cover once k pins the threshold: the
    # adversary raises every raisable element
    g = VertexCoverInstance(2, ((0, 1),), 1)
    d, t = lop_cost(ProblemKind.VERTEX_COVER, g)
    inst = CostRrInstance(
        ProblemKind.VERTEX_COVER, g, d, d, (5, 5), 100, 2, 0, HAM
    )
    value, ok, wit = eval_cost_rr(inst)
    assert value == 1 + 5


def test_cost_rr_rejects_pure_ssp_kind():
    phi = CnfInstance(1, ((0, 0, 0),))
    comb = CombRrInstance(ProblemKind.THREE_SAT, phi, 0, 0, 0, HAM)
    with pytest.raises(UnsupportedKindError):
        comb_to_cost_rr(comb)


def test_comb_to_cost_penalties():
    comb = CombRrInstance(
        ProblemKind.VERTEX_COVER, K3, mask_of([1]), 1, 2, HAM
    )
    cost = comb_to_cost_rr(comb)
    assert cost.c_hi == (1, 2 * K3.k + 1, 1)
    assert cost.t_rr == 2 * K3.k
    assert cost.c_lo == cost.c1 == (1, 1, 1)


def test_comb_to_cost_no_blockables():
    comb = CombRrInstance(ProblemKind.VERTEX_COVER, K3, 0, 2, 1, HAM)
    cost = comb_to_cost_rr(comb)
    assert cost.c_hi == cost.c_lo
    value, ok, _ = eval_cost_rr(cost)
    assert ok == eval_comb_rr(comb)[0]


def test_cost_simulation_needs_tight_threshold():
    """A star graph with threshold slack separates the two formulations:
    a cheap first stage can recover to an over-threshold feasible set that
    the combinatorial version may not use."""
    star = VertexCoverInstance(4, ((3, 0), (3, 1), (3, 2)), 2)  # optimum 1
    comb = CombRrInstance(
        ProblemKind.VERTEX_COVER, star, mask_of([3]), 1, 1, DEL
    )
    assert eval_comb_rr(comb)[0] is False
    value, ok, _ = eval_cost_rr(comb_to_cost_rr(comb))
    assert ok is True  # the simulation is exact only for t <= min d(F)


def test_radjsat_gamma_zero_is_satisfiability():
    phi = CnfInstance(3, ((0, 1, 2),))
    inst = RAdjSatInstance(phi, (0,), (1,), (2,), 0)
    assert solve_radjsat(inst)[0]
    unsat = CnfInstance(3, ((0, 0, 0), (3, 3, 3)))
    inst = RAdjSatInstance(unsat, (0,), (1,), (2,), 0)
    assert not solve_radjsat(inst)[0]


def test_radjsat_blocked_clause_dies():
    phi = CnfInstance(3, ((1, 1, 1),))  # (y | y | y) with y blockable
    inst = RAdjSatInstance(phi, (0,), (1,), (2,), 1)
    assert not solve_radjsat(inst)[0]


def test_radjsat_z_rescues():
    phi = CnfInstance(3, ((1, 2, 2),))  # (y | z | z)
    inst = RAdjSatInstance(phi, (0,), (1,), (2,), 1)
    ans, wit = solve_radjsat(inst)
    assert ans


def test_radjsat_requires_equal_parts():
    phi = CnfInstance(3, ((0, 1, 2),))
    with pytest.raises(Exception):
        RAdjSatInstance(phi, (0, 1), (2,), (), 0)
    padded = pad_radjsat(phi, (0, 1), (2,), (), 0)
    assert len(padded.x_vars) == len(padded.y_vars) == len(padded.z_vars) == 2
    assert solve_radjsat(padded)[0] == solve_radjsat(
        pad_radjsat(phi, (0,), (1,), (2,), 0)
    )[0]


def test_eae_sat_examples():
    taut = CnfInstance(1, ((0, 1, 0),))
    assert solve_eae_sat(taut, (0,), (), ())
    phi = CnfInstance(1, ((0, 0, 0),))
    assert not solve_eae_sat(phi, (), (0,), ())


def test_eae_sat_matches_truth_table():
    rng = random.Random(3)
    for _ in range(40):
        n = rng.randint(1, 6)
        m = rng.randint(1, 4)
        cnf = CnfInstance(
            n, tuple(tuple(rng.randrange(2 * n) for _ in range(3)) for _ in range(m))
        )
        variables = list(range(n))
        rng.shuffle(variables)
        a = rng.randint(0, n)
        b = rng.randint(a, n)
        xs, ys, zs = variables[:a], variables[a:b], variables[b:]
        got = solve_eae_sat(cnf, xs, ys, zs)
        want = _eae_by_table(cnf, xs, ys, zs)
        assert got == want


def _eae_by_table(cnf, xs, ys, zs):
    masks = cnf.clause_masks()
    n = cnf.n_vars
    table = {}
    for a in range(1 << n):
        m = cnf.assignment_mask(a)
        table[a] = all(m & cm for cm in masks)

    def bits_of(assign, variables):
        return tuple((assign >> v) & 1 for v in variables)

    for ax in range(1 << len(xs)):
        ok_all_y = True
        for ay in range(1 << len(ys)):
            found = False
            for az in range(1 << len(zs)):
                assign = 0
                for pos, v in enumerate(xs):
                    assign |= ((ax >> pos) & 1) << v
                for pos, v in enumerate(ys):
                    assign |= ((ay >> pos) & 1) << v
                for pos, v in enumerate(zs):
                    assign |= ((az >> pos) & 1) << v
                if table[assign]:
                    found = True
                    break
            if not found:
                ok_all_y = False
                break
        if ok_all_y:
            return True
    return False


def test_pipeline_gamma_zero_equals_satisfiability():
    rng = random.Random(5)
    for i in range(6):
        inst = random_radjsat(rng, max_part=1, max_clauses=2, max_gamma=0)
        comb = radjsat_to_comb_rr(inst, "3sat-vc", HAM)
        want = bool(
            __import__("sspforge.problems", fromlist=["enumerate_solutions"])
            .enumerate_solutions(ProblemKind.THREE_SAT, inst.cnf)
        )
        assert eval_comb_rr(comb)[0] == want


def test_pipeline_blockables_are_positive_y_images():
    phi = CnfInstance(3, ((1, 2, 2),))
    inst = RAdjSatInstance(phi, (0,), (1,), (2,), 1)
    comb = radjsat_to_comb_rr(inst, "3sat-vc", HAM)
    # image of positive literal of the y variable only
    assert comb.blockable.bit_count() == 1
    assert comb.kappa == 9  # base graph size: 6 literal + 3 clause vertices
    assert comb.gamma == 1


def test_monotone_kappa_and_gamma():
    rng = random.Random(9)
    for i in range(10):
        comb = random_comb_rr(rng, max_universe=6)
        base = eval_comb_rr(comb)[0]
        import dataclasses

        wider = dataclasses.replace(comb, kappa=comb.kappa + 2)
        assert not (base and not eval_comb_rr(wider)[0])
        if comb.gamma > 0:
            calmer = dataclasses.replace(comb, gamma=comb.gamma - 1)
            assert not (base and not eval_comb_rr(calmer)[0])


def test_cost_rr_gamma_zero_two_copy_form():
    from sspforge.core import distance

    rng = random.Random(17)
    for i in range(8):
        comb = random_comb_rr(rng, max_universe=6)
        import dataclasses

        comb = dataclasses.replace(comb, gamma=0)
        cost = comb_to_cost_rr(comb)
        value, ok, _ = eval_cost_rr(cost)
        feas = enumerate_feasible(cost.kind, cost.instance)
        best = None
        for s1 in feas:
            c1 = sum(cost.c1[i] for i in range(len(cost.c1)) if s1 >> i & 1)
            for s2 in feas:
                if distance(cost.measure, s1, s2) > cost.kappa:
                    continue
                c2 = sum(
                    cost.c_lo[i] for i in range(len(cost.c_lo)) if s2 >> i & 1
                )
                if best is None or c1 + c2 < best:
                    best = c1 + c2
        want = best if best is not None else float("inf")
        assert value == want


def test_cost_rr_single_feasible_full_raise():
    # the only feasible selection is the full set; with the whole budget
    # raised the value is c1(S) + c_hi(S)
    from sspforge.problems import SubsetSumInstance

    inst = SubsetSumInstance((2, 3), 5)
    cost = CostRrInstance(
        ProblemKind.SUBSET_SUM, inst, (2, 3), (2, 3), (7, 8), 100, 2, 0, HAM
    )
    value, ok, wit = eval_cost_rr(cost)
    assert value == 5 + 15
    assert wit.s1 == mask_of([0, 1])


def test_pipeline_unsat_formula_gives_no():
    phi = CnfInstance(3, ((0, 0, 0), (3, 3, 3)))  # x1 and ~x1
    inst = RAdjSatInstance(phi, (0,), (1,), (2,), 1)
    for edge in ("3sat-vc", "3sat-is"):
        comb = radjsat_to_comb_rr(inst, edge, HAM)
        assert eval_comb_rr(comb)[0] is False


def test_comb_rr_first_stage_may_touch_blockables():
    # the first-stage solution is allowed to intersect the blockable set
    from sspforge.problems import VertexCoverInstance

    g = VertexCoverInstance(2, ((0, 1),), 1)
    comb = CombRrInstance(
        ProblemKind.VERTEX_COVER, g, mask_of([0, 1]), 1, 2, HAM
    )
    ans, wit = eval_comb_rr(comb)
    assert ans
    assert wit.s1 & comb.blockable

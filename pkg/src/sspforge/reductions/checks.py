"""Exhaustive checkers for the SSP equation, the blow-up biconditional,
and the preserving partition.

All three enumerate the full solution families on both sides, so a
failing verdict always carries a concrete replayable counterexample.
"""

from __future__ import annotations

from ..core import (
    Bounds,
    DEFAULT_BOUNDS,
    DistanceMeasure,
    FormatError,
    distance,
    embed,
)
from ..problems import enumerate_solutions, universe_size
from .artifact import BLOWUP, PRESERVING, CheckVerdict, ReductionArtifact


def _families(artifact: ReductionArtifact, bounds: Bounds):
    src = enumerate_solutions(artifact.source_kind, artifact.source, bounds)
    tgt = enumerate_solutions(artifact.target_kind, artifact.target, bounds)
    return src, tgt


def check_ssp(artifact: ReductionArtifact, bounds: Bounds = DEFAULT_BOUNDS) -> CheckVerdict:
    """Equation check: {f(S)} must equal {S' restricted to f(U)}."""
    src_sols, tgt_sols = _families(artifact, bounds)
    stats = dict(source_solutions=len(src_sols), target_solutions=len(tgt_sols))
    if bool(src_sols) != bool(tgt_sols):
        witness = (src_sols or tgt_sols)[0]
        return CheckVerdict(
            False,
            reason="yes-instance mismatch: one side has solutions, the other none",
            counterexample=(witness,),
            **stats,
        )
    f = artifact.f
    f_mask = artifact.f_image_mask()
    left = {embed(f, s) for s in src_sols}
    right = {s & f_mask for s in tgt_sols}
    if left == right:
        return CheckVerdict(True, **stats)
    missing = left - right
    if missing:
        bad = min(missing)
        witness = next(s for s in src_sols if embed(f, s) == bad)
        return CheckVerdict(
            False,
            reason="a source solution image is hit by no target solution",
            counterexample=(witness,),
            **stats,
        )
    bad = min(right - left)
    witness = next(s for s in tgt_sols if s & f_mask == bad)
    return CheckVerdict(
        False,
        reason="a target solution restricts to a non-solution of the source",
        counterexample=(witness,),
        **stats,
    )


def check_blowup(
    artifact: ReductionArtifact,
    measure: DistanceMeasure,
    bounds: Bounds = DEFAULT_BOUNDS,
    beta: int | None = None,
) -> CheckVerdict:
    """Biconditional: agreement on the embedded blown literals must match
    distance at most beta, over all ordered solution pairs."""
    if artifact.beta is None:
        return CheckVerdict(False, reason="artifact carries no blow-up factor")
    if beta is None:
        beta = artifact.beta_for(measure)
    tgt_sols = enumerate_solutions(artifact.target_kind, artifact.target, bounds)
    stats = dict(source_solutions=0, target_solutions=len(tgt_sols))
    f_lb = embed(artifact.f, artifact.l_b)
    sigs = [s & f_lb for s in tgt_sols]
    m = len(tgt_sols)
    for i in range(m):
        si, gi = tgt_sols[i], sigs[i]
        for j in range(i, m):
            sj, gj = tgt_sols[j], sigs[j]
            agree = gi == gj
            d1 = distance(measure, si, sj)
            d2 = distance(measure, sj, si)
            if agree != (d1 <= beta) or agree != (d2 <= beta):
                return CheckVerdict(
                    False,
                    reason=(
                        f"pair with agreement={agree} at distances "
                        f"({d1},{d2}) against beta={beta}"
                    ),
                    counterexample=(si, sj),
                    **stats,
                )
    return CheckVerdict(True, **stats)


def check_preserving(
    artifact: ReductionArtifact, bounds: Bounds = DEFAULT_BOUNDS
) -> CheckVerdict:
    """Partition property plus the SSP equation and the solution-count
    bijection."""
    if artifact.kind != PRESERVING:
        return CheckVerdict(False, reason="artifact is not a preserving reduction")
    n_t = universe_size(artifact.target)
    full = (1 << n_t) - 1
    f_mask = artifact.f_image_mask()
    if f_mask & artifact.u_on or f_mask & artifact.u_off or artifact.u_on & artifact.u_off:
        return CheckVerdict(False, reason="partition masks overlap")
    if f_mask | artifact.u_on | artifact.u_off != full:
        return CheckVerdict(False, reason="partition does not cover the target universe")
    src_sols, tgt_sols = _families(artifact, bounds)
    stats = dict(source_solutions=len(src_sols), target_solutions=len(tgt_sols))
    for s in tgt_sols:
        if s & artifact.u_on != artifact.u_on:
            return CheckVerdict(
                False,
                reason="a target solution misses an always-on element",
                counterexample=(s,),
                **stats,
            )
        if s & artifact.u_off:
            return CheckVerdict(
                False,
                reason="a target solution contains an always-off element",
                counterexample=(s,),
                **stats,
            )
    eq = check_ssp(artifact, bounds)
    if not eq.passed:
        return eq
    if len(src_sols) != len(tgt_sols):
        return CheckVerdict(
            False,
            reason=(
                f"solution counts differ: {len(src_sols)} source vs "
                f"{len(tgt_sols)} target"
            ),
            **stats,
        )
    return CheckVerdict(True, **stats)


def check_artifact(
    artifact: ReductionArtifact,
    what: str = "all",
    measure: DistanceMeasure | None = None,
    bounds: Bounds = DEFAULT_BOUNDS,
) -> list[tuple[str, CheckVerdict]]:
    """Run the checks a given artifact supports."""
    results = []
    if what in ("all", "ssp"):
        results.append(("ssp", check_ssp(artifact, bounds)))
    if what in ("all", "blowup") and artifact.kind == BLOWUP:
        measures = [measure] if measure else list(DistanceMeasure)
        for m in measures:
            results.append((f"blowup[{m.value}]", check_blowup(artifact, m, bounds)))
    if what in ("all", "preserving") and artifact.kind == PRESERVING:
        results.append(("preserving", check_preserving(artifact, bounds)))
    if not results:
        raise FormatError(f"artifact kind {artifact.kind} supports no {what} check")
    return results

"""Composition of reduction artifacts.

preserving . preserving stays preserving (partition masks are pushed
forward and merged); preserving . blow-up stays blow-up with the inner
factor unchanged; blow-up . blow-up is rejected since blow-up reductions
are not transitive.  Any other legal chaining degrades to a plain SSP
artifact.
"""

from __future__ import annotations

from ..core import CompositionError, embed
from .artifact import BLOWUP, PRESERVING, SSP, ReductionArtifact


def compose(outer: ReductionArtifact, inner: ReductionArtifact) -> ReductionArtifact:
    if inner.target_kind != outer.source_kind:
        raise CompositionError(
            f"cannot chain {inner.edge} (target {inner.target_kind.value}) "
            f"into {outer.edge} (source {outer.source_kind.value})"
        )
    if inner.target != outer.source:
        raise CompositionError(
            "outer artifact was not built from the inner artifact's target"
        )
    if inner.kind == BLOWUP and outer.kind == BLOWUP:
        raise CompositionError("blow-up reductions do not compose")
    f = tuple(outer.f[t] for t in inner.f)
    edge = f"{inner.edge},{outer.edge}"
    if inner.kind == PRESERVING and outer.kind == PRESERVING:
        return ReductionArtifact(
            edge=edge,
            kind=PRESERVING,
            source_kind=inner.source_kind,
            source=inner.source,
            target_kind=outer.target_kind,
            target=outer.target,
            f=f,
            u_on=embed(outer.f, inner.u_on) | outer.u_on,
            u_off=embed(outer.f, inner.u_off) | outer.u_off,
        )
    if inner.kind == BLOWUP and outer.kind == PRESERVING:
        return ReductionArtifact(
            edge=edge,
            kind=BLOWUP,
            source_kind=inner.source_kind,
            source=inner.source,
            target_kind=outer.target_kind,
            target=outer.target,
            f=f,
            l_b=inner.l_b,
            beta=inner.beta,
        )
    return ReductionArtifact(
        edge=edge,
        kind=SSP,
        source_kind=inner.source_kind,
        source=inner.source,
        target_kind=outer.target_kind,
        target=outer.target,
        f=f,
    )

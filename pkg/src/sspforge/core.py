"""Universe, element-set, and distance-measure primitives.

Element sets are plain Python ints used as bitsets over a universe indexed
0..n-1.  All quantities are exact integers; there is no floating point in
this layer.
"""

from __future__ import annotations

import enum
import os
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence


class SspError(Exception):
    """Base class for all library errors."""


class DomainError(SspError):
    """An element lies outside the relevant universe or map domain."""


class FormatError(SspError):
    """Malformed instance data (bad clause width, bad payload, ...)."""


class PreconditionError(SspError):
    """A builder precondition was violated."""


class CompositionError(SspError):
    """Two artifacts cannot be composed."""


class CapacityError(SspError):
    """An enumeration bound was exceeded."""


class UnsupportedKindError(SspError):
    """Operation not defined for this problem kind."""


class DistanceMeasure(enum.Enum):
    KAPPA_ADDITION = "kappa_addition"
    KAPPA_DELETION = "kappa_deletion"
    HAMMING = "hamming"


MEASURES = (
    DistanceMeasure.KAPPA_ADDITION,
    DistanceMeasure.KAPPA_DELETION,
    DistanceMeasure.HAMMING,
)


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        if i < 0:
            raise DomainError(f"negative element index {i}")
        m |= 1 << i
    return m


def indices_of(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def check_within(mask: int, universe_size: int) -> None:
    if mask < 0 or mask >> universe_size:
        raise DomainError(
            f"element set {bin(mask)} not contained in universe of size {universe_size}"
        )


def distance(measure: DistanceMeasure, a1: int, a2: int) -> int:
    """Distance between two element sets of a shared universe.

    kappa-addition counts |A2 \\ A1|, kappa-deletion |A1 \\ A2|, Hamming the
    symmetric difference.
    """
    if measure is DistanceMeasure.KAPPA_ADDITION:
        return (a2 & ~a1).bit_count()
    if measure is DistanceMeasure.KAPPA_DELETION:
        return (a1 & ~a2).bit_count()
    if measure is DistanceMeasure.HAMMING:
        return (a1 ^ a2).bit_count()
    raise DomainError(f"unknown measure {measure!r}")


def distance_checked(
    measure: DistanceMeasure, a1: int, a2: int, universe_size: int
) -> int:
    check_within(a1, universe_size)
    check_within(a2, universe_size)
    return distance(measure, a1, a2)


def relabel(mapping: Mapping[int, int] | Sequence[int], s: int) -> int:
    """Image of the element set ``s`` under an injective element map.

    ``mapping`` is either a dict from source index to target index or a
    sequence indexed by source element.  Raises DomainError if ``s`` contains
    an element the map is not defined on, or if the map is not injective on
    its domain.
    """
    if isinstance(mapping, Mapping):
        getter = mapping.get
        values = list(mapping.values())
    else:
        seq = mapping
        getter = lambda i: seq[i] if i < len(seq) else None  # noqa: E731
        values = list(seq)
    if len(set(values)) != len(values):
        raise DomainError("element map is not injective")
    out = 0
    for i in indices_of(s):
        tgt = getter(i)
        if tgt is None:
            raise DomainError(f"element {i} outside the map domain")
        out |= 1 << tgt
    return out


def embed(f: Sequence[int], s: int) -> int:
    """Fast relabel for total embeddings given as an index tuple."""
    out = 0
    i = 0
    m = s
    while m:
        if m & 1:
            out |= 1 << f[i]
        m >>= 1
        i += 1
    return out


_ENV_MAX_UNIVERSE = "SSPFORGE_MAX_UNIVERSE"
_ENV_MAX_SOLUTIONS = "SSPFORGE_MAX_SOLUTIONS"


@dataclass(frozen=True)
class Bounds:
    """Enumeration limits.

    ``max_universe`` guards powerset-style enumeration; structured
    enumerators (paths, tours, trees) are instead capped by ``max_solutions``
    and ``max_vertices``.
    """

    max_universe: int = 24
    max_solutions: int = 1 << 20
    max_vertices: int = 4096

    @staticmethod
    def from_env() -> "Bounds":
        b = Bounds()
        mu = os.environ.get(_ENV_MAX_UNIVERSE)
        ms = os.environ.get(_ENV_MAX_SOLUTIONS)
        if mu is not None:
            b = Bounds(max_universe=int(mu), max_solutions=b.max_solutions,
                       max_vertices=b.max_vertices)
        if ms is not None:
            b = Bounds(max_universe=b.max_universe, max_solutions=int(ms),
                       max_vertices=b.max_vertices)
        return b


DEFAULT_BOUNDS = Bounds.from_env()

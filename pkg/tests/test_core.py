import random

import pytest

from sspforge.core import (
    DistanceMeasure,
    DomainError,
    MEASURES,
    distance,
    distance_checked,
    embed,
    indices_of,
    mask_of,
    relabel,
)

ADD = DistanceMeasure.KAPPA_ADDITION
DEL = DistanceMeasure.KAPPA_DELETION
HAM = DistanceMeasure.HAMMING


def test_distance_definitions():
    a = mask_of([0, 1])  # {a, b}
    b = mask_of([1, 2])  # {b, c}
    assert distance(HAM, a, b) == 2
    assert distance(ADD, a, a) == 0
    assert distance(DEL, mask_of([0, 1, 2]), mask_of([0])) == 2


def test_distance_outside_universe():
    with pytest.raises(DomainError):
        distance_checked(HAM, mask_of([5]), 0, universe_size=3)


def test_relabel_identity_and_image():
    assert relabel({0: 0, 1: 1}, mask_of([0, 1])) == mask_of([0, 1])
    assert relabel({0: 4, 1: 7}, mask_of([0, 1])) == mask_of([4, 7])


def test_relabel_unmapped_element():
    with pytest.raises(DomainError):
        relabel({0: 4}, mask_of([0, 1]))


def test_relabel_rejects_non_injective():
    with pytest.raises(DomainError):
        relabel({0: 3, 1: 3}, mask_of([0]))


def test_distance_axioms_random():
    rng = random.Random(0)
    n = 12
    for _ in range(2000):
        a1 = rng.getrandbits(n)
        a2 = rng.getrandbits(n)
        perm = list(range(2 * n))
        rng.shuffle(perm)
        f = tuple(perm[:n])
        for m in MEASURES:
            # invariance under injective maps
            assert distance(m, a1, a2) == distance(m, embed(f, a1), embed(f, a2))
            # invariance under union with a fresh element
            free = [i for i in range(n) if not ((a1 | a2) >> i) & 1]
            if free:
                x = 1 << rng.choice(free)
                assert distance(m, a1, a2) == distance(m, a1 | x, a2 | x)
            assert distance(m, a1, a1) == 0
        assert distance(HAM, a1, a2) == distance(ADD, a1, a2) + distance(DEL, a1, a2)


def test_mask_roundtrip():
    assert indices_of(mask_of([3, 1, 4])) == [1, 3, 4]


try:
    from hypothesis import given, settings
    from hypothesis import strategies as st

    @given(
        a1=st.integers(min_value=0, max_value=(1 << 14) - 1),
        a2=st.integers(min_value=0, max_value=(1 << 14) - 1),
        offset=st.integers(min_value=0, max_value=10),
    )
    @settings(max_examples=200, deadline=None)
    def test_axioms_hypothesis(a1, a2, offset):
        shift = tuple(i + offset for i in range(14))
        for m in MEASURES:
            assert distance(m, a1, a2) == distance(
                m, embed(shift, a1), embed(shift, a2)
            )
            assert distance(m, a1, a1) == 0
        assert distance(HAM, a1, a2) == distance(ADD, a1, a2) + distance(
            DEL, a1, a2
        )
        assert distance(ADD, a1, a2) == distance(DEL, a2, a1)
except ImportError:  # pragma: no cover - hypothesis is a test extra
    pass

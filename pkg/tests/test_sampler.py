"""Schedules, determinism and uniformity of the exact sampler."""

import random
from collections import Counter

import pytest
from scipy.stats import chisquare

from planemaps.enumerator import enumerate_maps
from planemaps.errors import BadParity, BadSchedule, OddCoordinate, TooManyOddFaces
from planemaps.sampler import (
    check_schedule,
    default_schedule,
    sample,
    sample_bipartite,
    sample_quasibipartite,
)


class TestSchedule:
    def test_displayed_route(self):
        assert default_schedule((4,)) == ((2,), (4,))
        assert default_schedule((4, 2)) == ((2,), (4,), (4, 2))
        assert default_schedule((2,)) == ((2,),)
        assert default_schedule((6, 4)) == (
            (2,), (4,), (6,), (6, 2), (6, 4),
        )

    def test_odd_coordinate(self):
        with pytest.raises(OddCoordinate):
            default_schedule((3,))
        with pytest.raises(OddCoordinate):
            sample_bipartite((4, 1), 0)

    def test_check_schedule(self):
        steps = [(2,), (2, 2), (4, 2), (4, 4)]
        assert check_schedule(steps, a=(4, 4), start=(2,)) == tuple(map(tuple, steps))
        with pytest.raises(BadSchedule):
            check_schedule([])
        with pytest.raises(BadSchedule):
            check_schedule([(2,), (6,)])
        with pytest.raises(BadSchedule):
            check_schedule([(2,), (2, 2, 2)])
        with pytest.raises(BadSchedule):
            check_schedule([(2,), (4,)], a=(6,))
        with pytest.raises(BadSchedule):
            check_schedule([(4,), (6,)], start=(2,))


class TestDeterminism:
    @pytest.mark.parametrize("a", [(4, 4), (3, 3), (2, 2, 2), (5, 1)])
    def test_same_seed_same_map(self, a):
        c1 = sample(a, 71).canonical_code()
        c2 = sample(a, 71).canonical_code()
        assert c1 == c2

    def test_seed_normalisation(self):
        assert (
            sample((4, 2), 9).canonical_code()
            == sample((4, 2), random.Random(9)).canonical_code()
        )

    def test_trivial_types(self):
        digon = enumerate_maps((2,))[0]
        loop = enumerate_maps((1, 1))[0]
        for s in range(10):
            assert sample((2,), s).canonical_code() == digon.canonical_code()
            assert sample((1, 1), s).canonical_code() == loop.canonical_code()


class TestUniformity:
    @pytest.mark.parametrize("a,n", [((2, 2), 2000), ((4, 2), 6000), ((3, 1), 3000)])
    def test_chi_square(self, a, n):
        support = sorted(m.canonical_code() for m in enumerate_maps(a))
        draws = Counter(sample(a, s).canonical_code() for s in range(n))
        assert set(draws) <= set(support)
        _, p = chisquare([draws.get(c, 0) for c in support])
        assert p > 0.001

    def test_full_support(self):
        for a in [(2, 2, 2), (3, 3), (2, 1, 1)]:
            support = {m.canonical_code() for m in enumerate_maps(a)}
            seen = {sample(a, s).canonical_code() for s in range(800)}
            assert seen == support


class TestResume:
    def test_initial_continues_route(self):
        rng = random.Random(3)
        m0 = sample_bipartite((4,), rng)
        m1 = sample_bipartite((4, 4), rng, initial=(m0, (4,)))
        assert m1.degrees == (4, 4)

    def test_initial_type_mismatch(self):
        m0 = sample_bipartite((4,), 0)
        with pytest.raises(BadSchedule):
            sample_bipartite((4, 4), 0, initial=(m0, (2, 2)))

    def test_initial_off_route(self):
        m0 = sample_bipartite((2, 2), 0)
        with pytest.raises(BadSchedule):
            sample_bipartite((4, 4), 0, initial=(m0, (2, 2)))

    def test_initial_stays_uniform(self):
        # two-stage sampling through an intermediate uniform (4,) map
        support = sorted(m.canonical_code() for m in enumerate_maps((4, 2)))
        cnt = Counter()
        for s in range(4000):
            rng = random.Random(s)
            mid = sample_bipartite((4,), rng)
            cnt[sample_bipartite((4, 2), rng, initial=(mid, (4,))).canonical_code()] += 1
        _, p = chisquare([cnt.get(c, 0) for c in support])
        assert p > 0.001

    def test_explicit_schedule_stays_uniform(self):
        # digon appended before face 1 is fully grown
        support = sorted(m.canonical_code() for m in enumerate_maps((4, 2)))
        sched = [(2,), (2, 2), (4, 2)]
        cnt = Counter(
            sample_bipartite((4, 2), s, schedule=sched).canonical_code()
            for s in range(4000)
        )
        _, p = chisquare([cnt.get(c, 0) for c in support])
        assert p > 0.001


class TestDispatch:
    def test_parity_errors(self):
        with pytest.raises(TooManyOddFaces):
            sample((3, 3, 3, 1), 0)
        with pytest.raises(BadParity):
            sample_quasibipartite((2, 2), 0)

    def test_quasibipartite_routes(self):
        # generic transfer and the dropped-coordinate loop split
        assert sample_quasibipartite((3, 3), 4).degrees == (3, 3)
        assert sample_quasibipartite((3, 1), 4).degrees == (3, 1)
        assert sample_quasibipartite((1, 5), 4).degrees == (1, 5)
        assert sample_quasibipartite((2, 1, 1), 4).degrees == (2, 1, 1)

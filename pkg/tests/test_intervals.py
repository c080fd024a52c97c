import random

import pytest

from mlk.errors import IntervalError
from mlk.intervals import (
    EMPTY, FULL, IntervalK, SatSet, interval_k, rinterval, rpoint, satset,
    singleton_k,
)
from mlk.numeric import KNum, knum


def test_interval_k_invariants():
    interval_k(0, 1)  # (0,1) fine
    singleton_k(1)
    interval_k(1, None)
    with pytest.raises(IntervalError):
        interval_k(0, 1, lo_open=False)  # [0,..) not inside (0,inf)
    with pytest.raises(IntervalError):
        interval_k(2, 1)
    with pytest.raises(IntervalError):
        interval_k(1, 1)  # (1,1) empty
    with pytest.raises(IntervalError):
        IntervalK(knum(1), None, True, False)


def test_complement_of_open_unit():
    s = satset(rinterval(0, 1))
    comp = s.complement()
    assert str(comp) == "(-inf,0] u [1,inf)"
    assert comp.complement() == s


def test_union_merges_touching():
    s = satset(rinterval(0, 1, lo_open=False, hi_open=True)).union(
        satset(rinterval(1, 2, lo_open=False, hi_open=False)))
    assert str(s) == "[0,2]"


def test_touching_open_intervals_do_not_merge():
    s = satset(rinterval(0, 1)).union(satset(rinterval(1, 2)))
    assert len(s.components) == 2
    assert not s.contains(knum(1))


def test_intersect_touching_open_closed_is_empty():
    a = satset(rinterval(0, 2))
    b = satset(rinterval(2, 3, lo_open=False, hi_open=False))
    assert a.intersect(b).is_empty()


def test_point_components():
    s = satset(rpoint("1/2"), rinterval(1, 2))
    assert s.contains(knum("1/2"))
    assert not s.contains(knum("3/4"))
    assert str(s) == "{1/2} u (1,2)"


def test_point_merges_into_open_neighbor():
    s = satset(rpoint(1), rinterval(0, 1), rinterval(1, 2))
    assert str(s) == "(0,2)"


def _random_satset(rng):
    pool = [knum(n) / 2 for n in range(-6, 7)]
    out = []
    for _ in range(rng.randrange(0, 4)):
        a, b = sorted(rng.sample(range(len(pool)), 2))
        out.append(rinterval(pool[a], pool[b],
                             rng.random() < 0.5, rng.random() < 0.5))
    if rng.random() < 0.3:
        out.append(rpoint(rng.choice(pool)))
    if rng.random() < 0.2:
        out.append(rinterval(None, rng.choice(pool)))
    if rng.random() < 0.2:
        out.append(rinterval(rng.choice(pool), None))
    return SatSet(out)


def _probes():
    probes = [knum(n) / 4 for n in range(-30, 31)]
    return probes


@pytest.mark.parametrize("seed", range(40))
def test_boolean_algebra_laws(seed):
    rng = random.Random(seed)
    a = _random_satset(rng)
    b = _random_satset(rng)
    # De Morgan
    lhs = a.union(b).complement()
    rhs = a.complement().intersect(b.complement())
    assert lhs == rhs
    # double complement
    assert a.complement().complement() == a
    # membership consistency on a probe grid
    for r in _probes():
        assert a.union(b).contains(r) == (a.contains(r) or b.contains(r))
        assert a.intersect(b).contains(r) == (a.contains(r) and b.contains(r))
        assert a.complement().contains(r) != a.contains(r)


def test_empty_and_full():
    assert EMPTY.complement() == FULL
    assert FULL.complement() == EMPTY
    assert EMPTY.is_empty() and not FULL.is_empty()


def test_subset_and_difference():
    a = satset(rinterval(0, 3))
    b = satset(rinterval(0, 1), rpoint(1), rinterval(1, 3))
    assert b.is_subset(a) and a.is_subset(b)
    c = satset(rinterval(0, 2))
    assert c.is_subset(a) and not a.is_subset(c)


def test_shift_reflect_scale():
    s = satset(rinterval(0, 1, lo_open=False))
    assert str(s.shift(knum(2))) == "[2,3)"
    assert str(s.reflect()) == "(-1,0]"
    assert str(s.scale(knum(2))) == "[0,2)"

import random
from fractions import Fraction

import pytest

from mlk.errors import NoSuchElement, ParseError
from mlk.numeric import (
    KGroup, KNum, SQRT2, ZERO, format_knum, group_contains, is_dense, knum,
    least_above, parse_knum, pick_nu,
)


def test_arith_examples():
    assert knum(1) + SQRT2 + (knum(2) - SQRT2) == knum(3)
    assert -(knum(Fraction(1, 2))) == knum(Fraction(-1, 2))
    assert (knum(1) + 2 * SQRT2) * knum(Fraction(1, 2)) == \
        knum(Fraction(1, 2)) + SQRT2


def test_sign_examples():
    assert ZERO.sign() == 0
    assert (knum(1) - SQRT2).sign() == -1
    assert (knum(3) - 2 * SQRT2).sign() == 1
    assert (2 * SQRT2 - knum(3)).sign() == -1


def test_canonical_form():
    x = KNum(2, 4, 6)
    assert (x.a, x.b, x.d) == (1, 2, 3)
    y = KNum(-2, 2, -4)
    assert y.d > 0 and (y.a, y.b, y.d) == (1, -1, 2)


def test_division_and_inverse():
    x = knum(3) - 2 * SQRT2
    assert x * x.inverse() == knum(1)
    assert (SQRT2 * SQRT2) == knum(2)
    assert (knum(1) / SQRT2) == SQRT2 / 2


def test_floor_ceil():
    assert (3 * SQRT2).floor() == 4
    assert (3 * SQRT2).ceil() == 5
    assert knum(3).floor() == 3 and knum(3).ceil() == 3
    assert (-SQRT2).floor() == -2
    assert (knum(-3) / 2).floor() == -2


def test_order_vs_float():
    rng = random.Random(0)
    for _ in range(500):
        x = KNum(rng.randrange(-40, 40), rng.randrange(-40, 40),
                 rng.randrange(1, 20))
        y = KNum(rng.randrange(-40, 40), rng.randrange(-40, 40),
                 rng.randrange(1, 20))
        if abs(float(x) - float(y)) > 1e-6:
            assert (x < y) == (float(x) < float(y))


def test_parse_format_roundtrip():
    texts = ["3/2+1/2*rt2", "-1+2*rt2", "rt2", "-rt2", "5", "-5/6",
             "0", "2*rt2", "1-rt2", "3-2*rt2"]
    for t in texts:
        x = parse_knum(t)
        assert parse_knum(format_knum(x)) == x


def test_parse_errors():
    for bad in ["", "x", "1/", "1//2", "rt3", "1+*rt2", "1 2"]:
        with pytest.raises(ParseError):
            parse_knum(bad)


def test_is_dense_table():
    assert is_dense(KGroup([])) == (True, None)
    assert is_dense(KGroup(["0"])) == (True, None)
    assert is_dense(KGroup(["1", "rt2"])) == (True, None)
    dense, eps = is_dense(KGroup(["1/2", "1/3"]))
    assert not dense and eps == knum(Fraction(1, 6))
    dense, eps = is_dense(KGroup(["rt2", "2*rt2"]))
    assert not dense and eps == SQRT2
    dense, eps = is_dense(KGroup(["1"]))
    assert not dense and eps == knum(1)


def test_non_dense_epsilon_is_sound():
    # every generator is a multiple of eps, and no small combination lands
    # strictly inside (0, eps)
    for gens in (["1/2", "1/3"], ["rt2", "2*rt2"], ["3", "5"], ["-1/2", "3/4"]):
        group = KGroup(gens)
        dense, eps = is_dense(group)
        assert not dense
        for g in group.generators:
            ratio = g / eps
            assert ratio.is_rational()
            assert ratio.rational_part.denominator == 1
        for m in range(-5, 6):
            for n in range(-5, 6):
                value = KNum(m) * group.generators[0] + \
                    KNum(n) * group.generators[1]
                assert not (ZERO < value < eps)


def test_group_contains():
    g = KGroup(["1/2", "1/3"])
    assert group_contains(g, knum(Fraction(5, 6)))
    assert not group_contains(g, knum(Fraction(1, 7)))
    g2 = KGroup(["1", "rt2"])
    assert group_contains(g2, knum(3) - 2 * SQRT2)
    assert not group_contains(g2, knum(Fraction(1, 2)))
    g3 = KGroup(["1+rt2"])
    assert group_contains(g3, 2 * (knum(1) + SQRT2))
    assert not group_contains(g3, knum(1))
    assert group_contains(KGroup([]), ZERO)
    assert not group_contains(KGroup([]), knum(1))


def test_group_closure_property():
    rng = random.Random(1)
    g = KGroup(["1/2", "1+rt2"])
    for _ in range(50):
        coeffs = [rng.randrange(-4, 5) for _ in g.generators]
        a = sum((KNum(c) * gen for c, gen in zip(coeffs, g.generators)),
                ZERO)
        coeffs = [rng.randrange(-4, 5) for _ in g.generators]
        b = sum((KNum(c) * gen for c, gen in zip(coeffs, g.generators)),
                ZERO)
        assert group_contains(g, a + b)
        assert group_contains(g, -a)


def test_pick_nu():
    assert pick_nu(KGroup(["1"]), knum(Fraction(3, 2))) == knum(1)
    nu = pick_nu(KGroup(["1", "rt2"]), knum(Fraction(1, 10)))
    assert ZERO < nu <= knum(Fraction(1, 10))
    with pytest.raises(NoSuchElement):
        pick_nu(KGroup(["2"]), knum(1))
    with pytest.raises(NoSuchElement):
        pick_nu(KGroup(["0"]), knum(1))


def test_pick_nu_dense_small_bounds():
    g = KGroup(["1", "rt2"])
    for bound in ("1", "1/10", "1/100"):
        nu = pick_nu(g, knum(bound))
        assert ZERO < nu <= knum(bound)
        assert group_contains(g, nu)


def test_pick_nu_deterministic():
    g = KGroup(["1", "rt2"])
    assert pick_nu(g, knum("1/10")) == pick_nu(g, knum("1/10"))


def test_least_above():
    assert least_above(KGroup(["1"]), knum(4)) == knum(5)
    assert least_above(KGroup(["1"]), knum("7/2")) == knum(4)
    assert least_above(KGroup(["1/2"]), knum(1)) == knum("3/2")
    n = least_above(KGroup(["1", "rt2"]), ZERO)
    assert n == knum(1)  # smallest positive value in the first norm tier

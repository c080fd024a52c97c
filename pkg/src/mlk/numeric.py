"""Exact arithmetic in the field Q[sqrt(2)] and finitely generated
additive subgroups of the reals.

A KNum is stored as a single integer triple (a, b, d) meaning
(a + b*sqrt(2)) / d with d > 0 and gcd(a, b, d) = 1, so equality is
structural and every comparison is decided by integer arithmetic alone.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import NoSuchElement, ParseError

_SQRT2 = math.sqrt(2.0)


def _normalized(a: int, b: int, d: int) -> tuple[int, int, int]:
    if d == 0:
        raise ZeroDivisionError("zero denominator in KNum")
    if d < 0:
        a, b, d = -a, -b, -d
    g = math.gcd(math.gcd(abs(a), abs(b)), d)
    if g > 1:
        a, b, d = a // g, b // g, d // g
    return a, b, d


class KNum:
    """An element a + b*sqrt(2) of Q[sqrt(2)], totally ordered like the reals."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a: int, b: int = 0, d: int = 1):
        a, b, d = _normalized(a, b, d)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "d", d)

    def __setattr__(self, name, value):
        raise AttributeError("KNum is immutable")

    @staticmethod
    def from_fraction(q) -> "KNum":
        q = Fraction(q)
        return KNum(q.numerator, 0, q.denominator)

    @staticmethod
    def from_parts(rat, rt2_coeff) -> "KNum":
        rat = Fraction(rat)
        rt2 = Fraction(rt2_coeff)
        d = (rat.denominator * rt2.denominator) // math.gcd(
            rat.denominator, rt2.denominator
        )
        return KNum(
            rat.numerator * (d // rat.denominator),
            rt2.numerator * (d // rt2.denominator),
            d,
        )

    @property
    def rational_part(self) -> Fraction:
        return Fraction(self.a, self.d)

    @property
    def sqrt2_part(self) -> Fraction:
        return Fraction(self.b, self.d)

    def is_rational(self) -> bool:
        return self.b == 0

    def sign(self) -> int:
        a, b = self.a, self.b
        if a == 0 and b == 0:
            return 0
        if a >= 0 and b >= 0:
            return 1
        if a <= 0 and b <= 0:
            return -1
        # Mixed signs: compare a^2 with 2 b^2, the order follows the
        # positive term.
        t = a * a - 2 * b * b
        if a > 0:  # b < 0
            return 1 if t > 0 else (-1 if t < 0 else 0)
        return 1 if t < 0 else (-1 if t > 0 else 0)

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return KNum(
            self.a * other.d + other.a * self.d,
            self.b * other.d + other.b * self.d,
            self.d * other.d,
        )

    __radd__ = __add__

    def __neg__(self):
        return KNum(-self.a, -self.b, self.d)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return KNum(
            self.a * other.a + 2 * self.b * other.b,
            self.a * other.b + self.b * other.a,
            self.d * other.d,
        )

    __rmul__ = __mul__

    def inverse(self) -> "KNum":
        # 1 / ((a + b rt2)/d) = d (a - b rt2) / (a^2 - 2 b^2)
        norm = self.a * self.a - 2 * self.b * self.b
        if norm == 0:
            raise ZeroDivisionError("division by zero KNum")
        return KNum(self.d * self.a, -self.d * self.b, norm)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.a == other.a and self.b == other.b and self.d == other.d

    def __hash__(self):
        return hash((self.a, self.b, self.d))

    def _cmp(self, other) -> int:
        return (self - other).sign()

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __float__(self):
        return (self.a + self.b * _SQRT2) / self.d

    def floor(self) -> int:
        n = math.floor(float(self))
        # float gives a near-exact start; fix up with exact comparisons
        while self._cmp(KNum(n)) < 0:
            n -= 1
        while self._cmp(KNum(n + 1)) >= 0:
            n += 1
        return n

    def ceil(self) -> int:
        return -(-self).floor()

    def __repr__(self):
        return f"KNum({format_knum(self)})"

    def __str__(self):
        return format_knum(self)


def _coerce(value):
    if isinstance(value, KNum):
        return value
    if isinstance(value, int):
        return KNum(value)
    if isinstance(value, Fraction):
        return KNum.from_fraction(value)
    return NotImplemented


ZERO = KNum(0)
ONE = KNum(1)
SQRT2 = KNum(0, 1)


def knum(value) -> KNum:
    """Coerce ints, Fractions, strings or KNums to KNum."""
    if isinstance(value, str):
        return parse_knum(value)
    coerced = _coerce(value)
    if coerced is NotImplemented:
        raise TypeError(f"cannot interpret {value!r} as KNum")
    return coerced


# --- constant text syntax ------------------------------------------------
#
# Shared with the CLI: `p`, `p/q`, `rt2`, `p/q*rt2` and signed sums such as
# `3/2+1/2*rt2` or `-1+2*rt2`.

_PART = re.compile(
    r"""(?P<sign>[+-]?)
        (?: (?P<num>\d+) (?:/(?P<den>\d+))? (?:\*(?P<rt2>rt2))?
          | (?P<bare_rt2>rt2) )""",
    re.VERBOSE,
)


def parse_knum(text: str) -> KNum:
    s = text.strip()
    if not s:
        raise ParseError("empty constant", text, 0)
    pos = 0
    total = ZERO
    first = True
    while pos < len(s):
        m = _PART.match(s, pos)
        if not m or (not first and m.group("sign") == ""):
            raise ParseError("malformed constant", text, pos)
        sign = -1 if m.group("sign") == "-" else 1
        if m.group("bare_rt2"):
            part = SQRT2
        else:
            num = int(m.group("num"))
            den = int(m.group("den") or 1)
            if den == 0:
                raise ParseError("zero denominator", text, pos)
            part = KNum(num, 0, den)
            if m.group("rt2"):
                part = part * SQRT2
        total = total + sign * part
        pos = m.end()
        first = False
    return total


def _format_fraction(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def format_knum(x: KNum) -> str:
    rat, rt2 = x.rational_part, x.sqrt2_part
    if rt2 == 0:
        return _format_fraction(rat)
    if abs(rt2) == 1:
        rt2_text = "rt2"
    else:
        rt2_text = f"{_format_fraction(abs(rt2))}*rt2"
    if rat == 0:
        return rt2_text if rt2 > 0 else f"-{rt2_text}"
    op = "+" if rt2 > 0 else "-"
    return f"{_format_fraction(rat)}{op}{rt2_text}"


# --- additive subgroups ---------------------------------------------------


@dataclass(frozen=True)
class KGroup:
    """A finitely generated additive subgroup of the reals.

    The represented set is the closure of the generators under integer
    linear combinations.
    """

    generators: tuple[KNum, ...]

    def __init__(self, generators):
        object.__setattr__(
            self, "generators", tuple(knum(g) for g in generators)
        )

    def is_trivial(self) -> bool:
        return all(g == ZERO for g in self.generators)

    def __str__(self):
        return "<" + ", ".join(format_knum(g) for g in self.generators) + ">"


def _fraction_gcd(p: Fraction, q: Fraction) -> Fraction:
    return Fraction(
        math.gcd(abs(p.numerator * q.denominator), abs(q.numerator * p.denominator)),
        p.denominator * q.denominator,
    )


def is_dense(group: KGroup) -> tuple[bool, KNum | None]:
    """Decide density; for a nontrivial non-dense group also return the
    unique epsilon > 0 with G = epsilon * Z.

    The trivial group is vacuously dense (there are no a < b to separate).
    """
    gens = [g for g in group.generators if g != ZERO]
    if not gens:
        return True, None
    g1 = gens[0]
    ratios = [g / g1 for g in gens]
    if any(not r.is_rational() for r in ratios):
        return True, None
    d = Fraction(0)
    for r in ratios:
        d = _fraction_gcd(d, r.rational_part) if d else abs(r.rational_part)
    return False, abs(g1 * KNum.from_fraction(d))


def _lattice_basis(vectors: list[tuple[int, int]]) -> tuple[int, int, int]:
    """Row-echelon basis ((d1, k), (0, d2)) of the integer lattice spanned
    by the given 2-d integer vectors, with d1, d2 >= 0."""
    d1 = k = d2 = 0
    for (u, v) in vectors:
        if u != 0:
            if d1 == 0:
                d1, k = abs(u), (v if u > 0 else -v)
                u, v = 0, 0
            else:
                g, s, t = _xgcd(d1, u)
                # combine rows to gcd of first coords; leftover goes to d2
                new_k = s * k + t * v
                leftover = (d1 // g) * v - (u // g) * k
                d1, k = g, new_k
                u, v = 0, leftover
        if v != 0:
            d2 = math.gcd(d2, abs(v))
    if d2:
        k %= d2
    return d1, k, d2


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def group_contains(group: KGroup, x: KNum) -> bool:
    """True iff x is an integer linear combination of the generators."""
    x = knum(x)
    coords = [(g.rational_part, g.sqrt2_part) for g in group.generators]
    coords.append((x.rational_part, x.sqrt2_part))
    lcm = 1
    for (p, q) in coords:
        lcm = lcm * p.denominator // math.gcd(lcm, p.denominator)
        lcm = lcm * q.denominator // math.gcd(lcm, q.denominator)
    ints = [(int(p * lcm), int(q * lcm)) for (p, q) in coords]
    xv = ints.pop()
    d1, k, d2 = _lattice_basis(ints)
    u, v = xv
    if d1 == 0:
        if u != 0:
            return False
        t = 0
    else:
        if u % d1 != 0:
            return False
        t = u // d1
    rem = v - t * k
    if d2 == 0:
        return rem == 0
    return rem % d2 == 0


def _combinations_by_norm(k: int, total: int):
    """All integer k-tuples with L1 norm == total, in lexicographic order."""
    if k == 1:
        if total == 0:
            yield (0,)
        else:
            yield (-total,)
            yield (total,)
        return
    for head in range(-total, total + 1):
        for rest in _combinations_by_norm(k - 1, total - abs(head)):
            yield (head,) + rest


_SEARCH_NORM_CAP = 400


def pick_nu(group: KGroup, bound: KNum) -> KNum:
    """Some nu in the group with 0 < nu <= bound.

    Deterministic: a non-dense group returns its epsilon (or fails); a dense
    group is searched by integer generator combinations ordered by L1
    coefficient norm, first match wins.
    """
    bound = knum(bound)
    if bound.sign() <= 0:
        raise NoSuchElement("bound must be positive")
    if group.is_trivial():
        raise NoSuchElement("trivial group has no positive element")
    dense, eps = is_dense(group)
    if not dense:
        if eps <= bound:
            return eps
        raise NoSuchElement(
            f"group is {format_knum(eps)}*Z and {format_knum(eps)} exceeds "
            f"bound {format_knum(bound)}"
        )
    gens = [g for g in group.generators if g != ZERO]
    for total in range(1, _SEARCH_NORM_CAP + 1):
        for coeffs in _combinations_by_norm(len(gens), total):
            value = ZERO
            for c, g in zip(coeffs, gens):
                if c:
                    value = value + KNum(c) * g
            if value.sign() > 0 and value <= bound:
                return value
    raise NoSuchElement("combination search exhausted")  # pragma: no cover


def least_above(group: KGroup, bound: KNum) -> KNum:
    """Smallest group element above `bound` found by the ordered search.

    For an epsilon-grid group this is exactly the least element > bound;
    for dense groups it is the minimum over the first qualifying norm tier.
    """
    bound = knum(bound)
    if group.is_trivial():
        raise NoSuchElement("trivial group has no element above the bound")
    dense, eps = is_dense(group)
    if not dense:
        n = (bound / eps).floor() + 1
        return eps * KNum(n)
    gens = [g for g in group.generators if g != ZERO]
    for total in range(1, _SEARCH_NORM_CAP + 1):
        best = None
        for coeffs in _combinations_by_norm(len(gens), total):
            value = ZERO
            for c, g in zip(coeffs, gens):
                if c:
                    value = value + KNum(c) * g
            if value > bound and (best is None or value < best):
                best = value
        if best is not None:
            return best
    raise NoSuchElement("combination search exhausted")  # pragma: no cover

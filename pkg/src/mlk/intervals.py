"""Intervals of the real line and normalized finite unions of them.

Two interval flavors live here: IntervalK is the constraint attached to a
temporal operator (subset of (0, inf), endpoints in Q[sqrt(2)]), RInterval
is an arbitrary interval of R with possibly infinite endpoints.  SatSet is
the canonical satisfaction-set representation: disjoint, non-adjacent,
sorted components.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import IntervalError
from .numeric import KNum, ZERO, format_knum, knum


@dataclass(frozen=True)
class IntervalK:
    """Operator constraint interval: subset of (0, inf), endpoints in
    K(>=0) plus infinity (hi=None)."""

    lo: KNum
    hi: KNum | None  # None means +infinity
    lo_open: bool
    hi_open: bool

    def __post_init__(self):
        if self.lo.sign() < 0:
            raise IntervalError("interval lower endpoint must be >= 0")
        if self.lo == ZERO and not self.lo_open:
            raise IntervalError("interval must be a subset of (0, inf)")
        if self.hi is None:
            if not self.hi_open:
                raise IntervalError("infinite endpoint must be open")
        else:
            c = (self.lo - self.hi).sign()
            if c > 0 or (c == 0 and (self.lo_open or self.hi_open)):
                raise IntervalError("empty interval")

    @property
    def is_singleton(self) -> bool:
        return self.hi is not None and self.lo == self.hi

    @property
    def is_bounded(self) -> bool:
        return self.hi is not None

    def contains(self, x: KNum) -> bool:
        if x < self.lo or (x == self.lo and self.lo_open):
            return False
        if self.hi is None:
            return True
        return x < self.hi or (x == self.hi and not self.hi_open)

    def __str__(self):
        if self.is_singleton:
            return "{%s}" % format_knum(self.lo)
        lo = ("(" if self.lo_open else "[") + format_knum(self.lo)
        hi = ("inf)" if self.hi is None
              else format_knum(self.hi) + (")" if self.hi_open else "]"))
        return f"{lo},{hi}"


def interval_k(lo, hi, lo_open=True, hi_open=True) -> IntervalK:
    return IntervalK(knum(lo), None if hi is None else knum(hi),
                     lo_open, hi_open)


def singleton_k(c) -> IntervalK:
    return IntervalK(knum(c), knum(c), False, False)


UNBOUNDED = IntervalK(ZERO, None, True, True)


@dataclass(frozen=True)
class RInterval:
    """A nonempty interval of R; lo=None is -inf, hi=None is +inf."""

    lo: KNum | None
    hi: KNum | None
    lo_open: bool
    hi_open: bool

    def __post_init__(self):
        if self.lo is None and not self.lo_open:
            raise IntervalError("infinite endpoint must be open")
        if self.hi is None and not self.hi_open:
            raise IntervalError("infinite endpoint must be open")
        if self.lo is not None and self.hi is not None:
            c = (self.lo - self.hi).sign()
            if c > 0 or (c == 0 and (self.lo_open or self.hi_open)):
                raise IntervalError("empty interval")

    def contains(self, x: KNum) -> bool:
        if self.lo is not None:
            if x < self.lo or (x == self.lo and self.lo_open):
                return False
        if self.hi is not None:
            if x > self.hi or (x == self.hi and self.hi_open):
                return False
        return True

    def is_degenerate(self) -> bool:
        return (self.lo is not None and self.hi is not None
                and self.lo == self.hi)

    def sample(self) -> KNum:
        """Some point inside the interval."""
        if self.lo is None and self.hi is None:
            return ZERO
        if self.lo is None:
            return self.hi - 1 if self.hi_open else self.hi
        if self.hi is None:
            return self.lo + 1 if self.lo_open else self.lo
        if not self.lo_open:
            return self.lo
        if not self.hi_open:
            return self.hi
        return (self.lo + self.hi) / KNum(2)

    def shift(self, c: KNum) -> "RInterval":
        return RInterval(
            None if self.lo is None else self.lo + c,
            None if self.hi is None else self.hi + c,
            self.lo_open, self.hi_open,
        )

    def reflect(self) -> "RInterval":
        return RInterval(
            None if self.hi is None else -self.hi,
            None if self.lo is None else -self.lo,
            self.hi_open, self.lo_open,
        )

    def scale(self, eps: KNum) -> "RInterval":
        # eps > 0 assumed
        return RInterval(
            None if self.lo is None else self.lo * eps,
            None if self.hi is None else self.hi * eps,
            self.lo_open, self.hi_open,
        )

    def __str__(self):
        if self.is_degenerate():
            return "{%s}" % format_knum(self.lo)
        lo = "(-inf" if self.lo is None else \
            ("(" if self.lo_open else "[") + format_knum(self.lo)
        hi = "inf)" if self.hi is None else \
            format_knum(self.hi) + (")" if self.hi_open else "]")
        return f"{lo},{hi}"


def rinterval(lo, hi, lo_open=True, hi_open=True) -> RInterval:
    return RInterval(None if lo is None else knum(lo),
                     None if hi is None else knum(hi), lo_open, hi_open)


def rpoint(x) -> RInterval:
    x = knum(x)
    return RInterval(x, x, False, False)


def from_interval_k(window: IntervalK) -> RInterval:
    return RInterval(window.lo, window.hi, window.lo_open, window.hi_open)


def _starts_before(i: RInterval, j: RInterval) -> bool:
    """Strictly earlier left edge (position, then closedness)."""
    if i.lo is None:
        return j.lo is not None
    if j.lo is None:
        return False
    c = (i.lo - j.lo).sign()
    if c != 0:
        return c < 0
    return (not i.lo_open) and j.lo_open


def _gap_between(first: RInterval, second: RInterval) -> bool:
    """True if `second` neither overlaps nor touches the end of `first`
    (assuming first starts no later than second)."""
    if first.hi is None or second.lo is None:
        return False
    c = (first.hi - second.lo).sign()
    if c > 0:
        return False
    if c < 0:
        return True
    return first.hi_open and second.lo_open


def _merge(first: RInterval, second: RInterval) -> RInterval:
    if first.hi is None:
        hi, hi_open = None, True
    elif second.hi is None:
        hi, hi_open = None, True
    else:
        c = (first.hi - second.hi).sign()
        if c < 0:
            hi, hi_open = second.hi, second.hi_open
        elif c > 0:
            hi, hi_open = first.hi, first.hi_open
        else:
            hi, hi_open = first.hi, first.hi_open and second.hi_open
    return RInterval(first.lo, hi, first.lo_open, hi_open)


class SatSet:
    """Normalized finite union of disjoint, non-adjacent intervals."""

    __slots__ = ("components",)

    def __init__(self, intervals=()):
        items = sorted(intervals, key=_SortKey)
        merged: list[RInterval] = []
        for item in items:
            if merged and not _gap_between(merged[-1], item):
                merged[-1] = _merge(merged[-1], item)
            else:
                merged.append(item)
        object.__setattr__(self, "components", tuple(merged))

    def __setattr__(self, name, value):
        raise AttributeError("SatSet is immutable")

    def is_empty(self) -> bool:
        return not self.components

    def __eq__(self, other):
        return isinstance(other, SatSet) and self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def __iter__(self):
        return iter(self.components)

    def contains(self, x: KNum) -> bool:
        lo, hi = 0, len(self.components)
        while lo < hi:
            mid = (lo + hi) // 2
            comp = self.components[mid]
            if comp.lo is not None and (
                    x < comp.lo or (x == comp.lo and comp.lo_open)):
                hi = mid
            elif comp.hi is not None and (
                    x > comp.hi or (x == comp.hi and comp.hi_open)):
                lo = mid + 1
            else:
                return True
        return False

    def union(self, other: "SatSet") -> "SatSet":
        return SatSet(self.components + other.components)

    def complement(self) -> "SatSet":
        out = []
        cursor: KNum | None = None  # None = -inf
        cursor_open = True  # openness of the complement edge at cursor
        for comp in self.components:
            if comp.lo is None:
                pass  # nothing to the left of -inf
            else:
                lo_flag = cursor_open
                hi_flag = not comp.lo_open
                nonempty = (cursor is None or cursor < comp.lo
                            or (cursor == comp.lo
                                and not lo_flag and not hi_flag))
                if nonempty:
                    out.append(RInterval(cursor, comp.lo, lo_flag, hi_flag))
            if comp.hi is None:
                return SatSet(out)
            cursor = comp.hi
            cursor_open = not comp.hi_open
        out.append(RInterval(cursor, None, cursor_open, True))
        return SatSet(out)

    def intersect(self, other: "SatSet") -> "SatSet":
        out = []
        for a in self.components:
            for b in other.components:
                piece = _intersect_pair(a, b)
                if piece is not None:
                    out.append(piece)
        return SatSet(out)

    def difference(self, other: "SatSet") -> "SatSet":
        return self.intersect(other.complement())

    def is_subset(self, other: "SatSet") -> bool:
        return self.difference(other).is_empty()

    def shift(self, c: KNum) -> "SatSet":
        return SatSet(comp.shift(c) for comp in self.components)

    def reflect(self) -> "SatSet":
        return SatSet(comp.reflect() for comp in self.components)

    def scale(self, eps: KNum) -> "SatSet":
        return SatSet(comp.scale(eps) for comp in self.components)

    def endpoints(self) -> list[KNum]:
        out = []
        for comp in self.components:
            if comp.lo is not None:
                out.append(comp.lo)
            if comp.hi is not None and comp.hi != comp.lo:
                out.append(comp.hi)
        return out

    def __str__(self):
        if not self.components:
            return "empty"
        return " u ".join(str(c) for c in self.components)

    def __repr__(self):
        return f"SatSet({self})"


class _SortKey:
    __slots__ = ("interval",)

    def __init__(self, interval):
        self.interval = interval

    def __lt__(self, other):
        return _starts_before(self.interval, other.interval)


def _intersect_pair(a: RInterval, b: RInterval) -> RInterval | None:
    if a.lo is None:
        lo, lo_open = b.lo, b.lo_open
    elif b.lo is None:
        lo, lo_open = a.lo, a.lo_open
    else:
        c = (a.lo - b.lo).sign()
        if c > 0:
            lo, lo_open = a.lo, a.lo_open
        elif c < 0:
            lo, lo_open = b.lo, b.lo_open
        else:
            lo, lo_open = a.lo, a.lo_open or b.lo_open
    if a.hi is None:
        hi, hi_open = b.hi, b.hi_open
    elif b.hi is None:
        hi, hi_open = a.hi, a.hi_open
    else:
        c = (a.hi - b.hi).sign()
        if c < 0:
            hi, hi_open = a.hi, a.hi_open
        elif c > 0:
            hi, hi_open = b.hi, b.hi_open
        else:
            hi, hi_open = a.hi, a.hi_open or b.hi_open
    if lo is not None and hi is not None:
        c = (lo - hi).sign()
        if c > 0 or (c == 0 and (lo_open or hi_open)):
            return None
    return RInterval(lo, hi, lo_open, hi_open)


EMPTY = SatSet()
FULL = SatSet([RInterval(None, None, True, True)])


def satset(*intervals) -> SatSet:
    return SatSet(intervals)

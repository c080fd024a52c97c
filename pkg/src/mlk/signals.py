"""Finitely representable signals: piecewise-constant functions from R to
sets of atomic propositions.

A signal is given by strictly increasing breakpoints b_0 < ... < b_m with a
valuation at every breakpoint, on every open segment between neighbors and
on the two infinite tails.  Point valuations are first-class: the value at
b_i may differ from both neighboring segments.
"""

from __future__ import annotations

import random
from bisect import bisect_left
from dataclasses import dataclass

from .errors import NonPositiveScale, ParseError, PoolTooSmall
from .intervals import RInterval, SatSet
from .numeric import KNum, ZERO, format_knum, knum, parse_knum


@dataclass(frozen=True)
class FiniteSignal:
    props: tuple[str, ...]
    left_tail: frozenset[str]
    breakpoints: tuple[KNum, ...]
    point_vals: tuple[frozenset[str], ...]
    segment_vals: tuple[frozenset[str], ...]
    right_tail: frozenset[str]

    def __post_init__(self):
        if not self.breakpoints:
            raise ValueError("a signal needs at least one breakpoint")
        if len(self.point_vals) != len(self.breakpoints):
            raise ValueError("one point valuation per breakpoint required")
        if len(self.segment_vals) != len(self.breakpoints) - 1:
            raise ValueError("one segment valuation per gap required")
        for i in range(len(self.breakpoints) - 1):
            if not self.breakpoints[i] < self.breakpoints[i + 1]:
                raise ValueError("breakpoints must be strictly increasing")
        allowed = set(self.props)
        for val in (self.left_tail, self.right_tail, *self.point_vals,
                    *self.segment_vals):
            if not set(val) <= allowed:
                raise ValueError("valuation mentions undeclared proposition")

    def value_at(self, r: KNum) -> frozenset[str]:
        bps = self.breakpoints
        i = bisect_left(bps, r)
        if i < len(bps) and bps[i] == r:
            return self.point_vals[i]
        if i == 0:
            return self.left_tail
        if i == len(bps):
            return self.right_tail
        return self.segment_vals[i - 1]

    def prop_satset(self, name: str) -> SatSet:
        pieces = []
        bps = self.breakpoints
        if name in self.left_tail:
            pieces.append(RInterval(None, bps[0], True, True))
        for i, val in enumerate(self.point_vals):
            if name in val:
                pieces.append(RInterval(bps[i], bps[i], False, False))
        for i, val in enumerate(self.segment_vals):
            if name in val:
                pieces.append(RInterval(bps[i], bps[i + 1], True, True))
        if name in self.right_tail:
            pieces.append(RInterval(bps[-1], None, True, True))
        return SatSet(pieces)

    def span(self) -> tuple[KNum, KNum]:
        return self.breakpoints[0], self.breakpoints[-1]


def make_signal(props, left_tail, pieces, right_tail) -> FiniteSignal:
    """pieces: alternating list starting/ending with (breakpoint, point_val),
    with segment valuations between; i.e. [bp_val, seg, bp_val, ...]."""
    breakpoints = tuple(p[0] for p in pieces[::2])
    point_vals = tuple(frozenset(p[1]) for p in pieces[::2])
    segment_vals = tuple(frozenset(v) for v in pieces[1::2])
    return FiniteSignal(
        props=tuple(sorted(props)),
        left_tail=frozenset(left_tail),
        breakpoints=breakpoints,
        point_vals=point_vals,
        segment_vals=segment_vals,
        right_tail=frozenset(right_tail),
    )


def constant_signal(props, valuation) -> FiniteSignal:
    val = frozenset(valuation)
    return FiniteSignal(tuple(sorted(props)), val, (ZERO,), (val,), (), val)


def refine(signal: FiniteSignal, points) -> FiniteSignal:
    """Same signal with extra breakpoints inserted (values preserved)."""
    extra = sorted({p for p in points if p not in set(signal.breakpoints)})
    if not extra:
        return signal
    bps = list(signal.breakpoints)
    pvals = list(signal.point_vals)
    svals = list(signal.segment_vals)
    for p in extra:
        i = bisect_left(bps, p)
        if i == 0:
            bps.insert(0, p)
            pvals.insert(0, signal.left_tail)
            svals.insert(0, signal.left_tail)
        elif i == len(bps):
            bps.append(p)
            pvals.append(signal.right_tail)
            svals.append(signal.right_tail)
        else:
            seg = svals[i - 1]
            bps.insert(i, p)
            pvals.insert(i, seg)
            svals.insert(i - 1, seg)  # split the segment in two
    return FiniteSignal(signal.props, signal.left_tail, tuple(bps),
                        tuple(pvals), tuple(svals), signal.right_tail)


def with_prop(signal: FiniteSignal, name: str, pieces: SatSet) -> FiniteSignal:
    """Add a fresh proposition whose satisfaction set is exactly `pieces`."""
    if name in signal.props:
        raise ValueError(f"proposition {name!r} already present")
    refined = refine(signal, pieces.endpoints())
    bps = refined.breakpoints

    def extend(val, member):
        return val | {name} if member else val

    point_vals = tuple(extend(v, pieces.contains(bps[i]))
                       for i, v in enumerate(refined.point_vals))
    segment_vals = tuple(
        extend(v, pieces.contains((bps[i] + bps[i + 1]) / KNum(2)))
        for i, v in enumerate(refined.segment_vals))
    left = extend(refined.left_tail, pieces.contains(bps[0] - 1))
    right = extend(refined.right_tail, pieces.contains(bps[-1] + 1))
    return FiniteSignal(tuple(sorted(refined.props + (name,))), left,
                        bps, point_vals, segment_vals, right)


def scale_signal(signal: FiniteSignal, eps: KNum) -> FiniteSignal:
    """Appendix-style time scaling: value_at(result, eps*x) = value_at(f, x)."""
    eps = knum(eps)
    if eps.sign() <= 0:
        raise NonPositiveScale("scale factor must be positive")
    return FiniteSignal(
        signal.props, signal.left_tail,
        tuple(b * eps for b in signal.breakpoints),
        signal.point_vals, signal.segment_vals, signal.right_tail,
    )


def random_signal(seed, num_breakpoints, props, endpoint_pool) -> FiniteSignal:
    """Deterministic random signal; breakpoints drawn without replacement
    from the pool, valuations uniform over subsets of props."""
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    pool = sorted(set(endpoint_pool))
    props = tuple(sorted(props))
    if num_breakpoints == 0:
        return constant_signal(
            props, [p for p in props if rng.random() < 0.5])
    if num_breakpoints > len(pool):
        raise PoolTooSmall(
            f"need {num_breakpoints} breakpoints, pool has {len(pool)}")
    idx = sorted(rng.sample(range(len(pool)), num_breakpoints))
    bps = tuple(pool[i] for i in idx)

    def rand_val():
        return frozenset(p for p in props if rng.random() < 0.5)

    return FiniteSignal(
        props=props,
        left_tail=rand_val(),
        breakpoints=bps,
        point_vals=tuple(rand_val() for _ in bps),
        segment_vals=tuple(rand_val() for _ in bps[:-1]),
        right_tail=rand_val(),
    )


# --- text format -----------------------------------------------------------
#
#   before {P Q}
#   at 0 {P}
#   on (0,1) {P Q}
#   at 1 {}
#   after {Q}


def _parse_valuation(text: str, line_no: int) -> frozenset[str]:
    text = text.strip()
    if not (text.startswith("{") and text.endswith("}")):
        raise ParseError(f"expected {{...}} valuation on line {line_no}")
    inner = text[1:-1].strip()
    return frozenset(inner.split()) if inner else frozenset()


def parse_signal(text: str) -> FiniteSignal:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if len(lines) < 3:
        raise ParseError("signal needs before/at/after lines")
    if not lines[0].startswith("before"):
        raise ParseError("signal must start with a `before` line")
    if not lines[-1].startswith("after"):
        raise ParseError("signal must end with an `after` line")
    left = _parse_valuation(lines[0][len("before"):], 1)
    right = _parse_valuation(lines[-1][len("after"):], len(lines))
    bps: list[KNum] = []
    pvals: list[frozenset[str]] = []
    svals: list[frozenset[str]] = []
    expect_at = True
    for no, line in enumerate(lines[1:-1], start=2):
        if line.startswith("at "):
            if not expect_at:
                raise ParseError(f"expected `on` line before line {no}")
            rest = line[3:].strip()
            cut = rest.find("{")
            if cut < 0:
                raise ParseError(f"missing valuation on line {no}")
            bps.append(parse_knum(rest[:cut].strip()))
            pvals.append(_parse_valuation(rest[cut:], no))
            expect_at = False
        elif line.startswith("on "):
            if expect_at:
                raise ParseError(f"expected `at` line at line {no}")
            rest = line[3:].strip()
            cut = rest.find("{")
            if cut < 0:
                raise ParseError(f"missing valuation on line {no}")
            svals.append(_parse_valuation(rest[cut:], no))
            expect_at = True
        else:
            raise ParseError(f"unrecognized signal line {no}: {line!r}")
    if expect_at:
        raise ParseError("signal must end its body with an `at` line")
    if not bps:
        raise ParseError("signal needs at least one `at` line")
    props = sorted(set().union(left, right, *pvals, *svals))
    return FiniteSignal(tuple(props), left, tuple(bps), tuple(pvals),
                        tuple(svals), right)


def _format_valuation(val) -> str:
    return "{" + " ".join(sorted(val)) + "}"


def format_signal(signal: FiniteSignal) -> str:
    out = [f"before {_format_valuation(signal.left_tail)}"]
    for i, bp in enumerate(signal.breakpoints):
        out.append(f"at {format_knum(bp)} "
                   f"{_format_valuation(signal.point_vals[i])}")
        if i < len(signal.segment_vals):
            nxt = signal.breakpoints[i + 1]
            out.append(f"on ({format_knum(bp)},{format_knum(nxt)}) "
                       f"{_format_valuation(signal.segment_vals[i])}")
    out.append(f"after {_format_valuation(signal.right_tail)}")
    return "\n".join(out) + "\n"

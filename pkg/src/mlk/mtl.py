"""Metric temporal logic abstract syntax (with counting operators).

Core constructors: truth, propositions, boolean connectives, interval-
constrained Until/Since, and the unit-window counting operators.  The
diamond/box operators are definitional sugar over Until/Since.
"""

from __future__ import annotations

from dataclasses import dataclass

from .intervals import IntervalK, UNBOUNDED, interval_k, singleton_k
from .numeric import format_knum


class MTLFormula:
    __slots__ = ()


@dataclass(frozen=True)
class Truth(MTLFormula):
    pass


@dataclass(frozen=True)
class Prop(MTLFormula):
    name: str


@dataclass(frozen=True)
class Not(MTLFormula):
    sub: MTLFormula


@dataclass(frozen=True)
class And(MTLFormula):
    left: MTLFormula
    right: MTLFormula


@dataclass(frozen=True)
class Or(MTLFormula):
    left: MTLFormula
    right: MTLFormula


@dataclass(frozen=True)
class Until(MTLFormula):
    """left holds on (r, t), right holds at the witness t, t - r in window."""
    left: MTLFormula
    right: MTLFormula
    window: IntervalK


@dataclass(frozen=True)
class Since(MTLFormula):
    left: MTLFormula
    right: MTLFormula
    window: IntervalK


@dataclass(frozen=True)
class CountF(MTLFormula):
    """At least n distinct time points satisfying sub in (r, r+1)."""
    n: int
    sub: MTLFormula

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("counting threshold must be >= 1")


@dataclass(frozen=True)
class CountP(MTLFormula):
    n: int
    sub: MTLFormula

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("counting threshold must be >= 1")


TRUE = Truth()
FALSE = Not(TRUE)


def eventually(window: IntervalK, sub: MTLFormula) -> Until:
    return Until(TRUE, sub, window)


def always(window: IntervalK, sub: MTLFormula) -> Not:
    return Not(Until(TRUE, Not(sub), window))


def once(window: IntervalK, sub: MTLFormula) -> Since:
    return Since(TRUE, sub, window)


def historically(window: IntervalK, sub: MTLFormula) -> Not:
    return Not(Since(TRUE, Not(sub), window))


def eventually_at(c, sub: MTLFormula) -> Until:
    return eventually(singleton_k(c), sub)


def once_at(c, sub: MTLFormula) -> Since:
    return once(singleton_k(c), sub)


def conj(parts) -> MTLFormula:
    parts = list(parts)
    if not parts:
        return TRUE
    out = parts[0]
    for p in parts[1:]:
        out = And(out, p)
    return out


def disj(parts) -> MTLFormula:
    parts = list(parts)
    if not parts:
        return FALSE
    out = parts[0]
    for p in parts[1:]:
        out = Or(out, p)
    return out


def propositions(formula: MTLFormula) -> set[str]:
    if isinstance(formula, Prop):
        return {formula.name}
    if isinstance(formula, (Truth,)):
        return set()
    if isinstance(formula, Not):
        return propositions(formula.sub)
    if isinstance(formula, (And, Or)):
        return propositions(formula.left) | propositions(formula.right)
    if isinstance(formula, (Until, Since)):
        return propositions(formula.left) | propositions(formula.right)
    if isinstance(formula, (CountF, CountP)):
        return propositions(formula.sub)
    raise TypeError(f"not an MTL formula: {formula!r}")


def window_constants(formula: MTLFormula) -> list:
    """All finite interval endpoints, one entry per occurrence."""
    out = []

    def walk(f):
        if isinstance(f, (Until, Since)):
            out.append(f.window.lo)
            if f.window.hi is not None:
                out.append(f.window.hi)
            walk(f.left)
            walk(f.right)
        elif isinstance(f, Not):
            walk(f.sub)
        elif isinstance(f, (And, Or)):
            walk(f.left)
            walk(f.right)
        elif isinstance(f, (CountF, CountP)):
            from .numeric import ONE
            out.append(ONE)
            walk(f.sub)

    walk(formula)
    return out


def uses_counting(formula: MTLFormula) -> bool:
    if isinstance(formula, (CountF, CountP)):
        return True
    if isinstance(formula, Not):
        return uses_counting(formula.sub)
    if isinstance(formula, (And, Or, Until, Since)):
        return uses_counting(formula.left) or uses_counting(formula.right)
    return False


def _window_text(window: IntervalK) -> str:
    if window.is_singleton:
        return "{%s}" % format_knum(window.lo)
    lo = ("(" if window.lo_open else "[") + format_knum(window.lo)
    hi = ("inf)" if window.hi is None
          else format_knum(window.hi) + (")" if window.hi_open else "]"))
    return f"{lo},{hi}"


def format_formula(formula: MTLFormula) -> str:
    """Canonical concrete syntax; parses back to the same tree."""
    return _fmt(formula, 0)


# precedence levels: 0 = or, 1 = and, 2 = until/since, 3 = unary/atom
def _fmt(f: MTLFormula, level: int) -> str:
    if isinstance(f, Truth):
        return "true"
    if isinstance(f, Prop):
        return f.name
    if isinstance(f, Not):
        sub = f.sub
        if isinstance(sub, Until) and sub.left == TRUE and \
                isinstance(sub.right, Not):
            return f"G{_window_text(sub.window)} {_fmt(sub.right.sub, 3)}"
        if isinstance(sub, Since) and sub.left == TRUE and \
                isinstance(sub.right, Not):
            return f"Gp{_window_text(sub.window)} {_fmt(sub.right.sub, 3)}"
        return "!" + _fmt(f.sub, 3)
    if isinstance(f, And):
        text = f"{_fmt(f.left, 2)} & {_fmt(f.right, 2)}"
        return f"({text})" if level > 1 else text
    if isinstance(f, Or):
        text = f"{_fmt(f.left, 1)} | {_fmt(f.right, 1)}"
        return f"({text})" if level > 0 else text
    if isinstance(f, Until):
        if f.left == TRUE:
            return f"F{_window_text(f.window)} {_fmt(f.right, 3)}"
        text = f"{_fmt(f.left, 3)} U{_window_text(f.window)} {_fmt(f.right, 3)}"
        return f"({text})" if level > 2 else text
    if isinstance(f, Since):
        if f.left == TRUE:
            return f"Fp{_window_text(f.window)} {_fmt(f.right, 3)}"
        text = f"{_fmt(f.left, 3)} S{_window_text(f.window)} {_fmt(f.right, 3)}"
        return f"({text})" if level > 2 else text
    if isinstance(f, CountF):
        return f"C>={f.n} {_fmt(f.sub, 3)}"
    if isinstance(f, CountP):
        return f"Cp>={f.n} {_fmt(f.sub, 3)}"
    raise TypeError(f"not an MTL formula: {f!r}")

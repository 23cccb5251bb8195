"""Computable totally ordered groups with exact arithmetic.

Groups are written additively even when they are not abelian; ``add(a, b)``
is the group operation ``a + b``.  Only totally ordered groups are used, so
meet and join are min and max.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Optional

from .errors import NotPositiveUnit


def _rational(rng: random.Random, bound: int, positive: bool = False) -> Fraction:
    q = rng.randint(1, bound)
    if positive:
        return Fraction(rng.randint(1, bound), q)
    return Fraction(rng.randint(-bound, bound), q)


class OrderedGroup:
    """Interface of a totally ordered group.  Subclasses fill in the basics."""

    name = "group"
    zero: Any = None

    def add(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def le(self, a, b) -> bool:
        raise NotImplementedError

    def sample(self, rng: random.Random, bound: int):
        raise NotImplementedError

    def fmt(self, a) -> str:
        return str(a)

    def interval(self, lo, hi) -> Optional[list]:
        """All elements of ``[lo, hi]`` in increasing order, or None if infinite."""
        return None

    # derived operations
    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def lt(self, a, b) -> bool:
        return self.le(a, b) and a != b

    def meet(self, a, b):
        return a if self.le(a, b) else b

    def join(self, a, b):
        return b if self.le(a, b) else a

    def times(self, a, n: int):
        acc = self.zero
        for _ in range(n):
            acc = self.add(acc, a)
        return acc

    def is_positive(self, a) -> bool:
        return self.le(self.zero, a)

    def __repr__(self):
        return f"<{type(self).__name__} {self.name}>"


class IntegerGroup(OrderedGroup):
    name = "z"
    zero = 0

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def le(self, a, b):
        return a <= b

    def sample(self, rng, bound):
        return rng.randint(-bound, bound)

    def interval(self, lo, hi):
        return list(range(lo, hi + 1))


@dataclass(frozen=True, order=True)
class Aff:
    """The affine map ``t ↦ a·t + b`` of the rationals, ``a > 0``.

    Dataclass ordering compares ``(a, b)`` lexicographically, which is the
    group order used here.
    """

    a: Fraction
    b: Fraction

    def __post_init__(self):
        if type(self.a) is not Fraction:
            object.__setattr__(self, "a", Fraction(self.a))
        if type(self.b) is not Fraction:
            object.__setattr__(self, "b", Fraction(self.b))
        if self.a <= 0:
            raise ValueError("affine maps need a positive slope")

    def __str__(self):
        return f"aff({self.a}, {self.b})"

    def __repr__(self):
        return str(self)

    def compose(self, other: "Aff") -> "Aff":
        """``self ∘ other``: apply ``other`` first."""
        return Aff(self.a * other.a, self.a * other.b + self.b)

    def inverse(self) -> "Aff":
        return Aff(1 / self.a, -self.b / self.a)


IDENTITY = Aff(1, 0)


class AffGroup(OrderedGroup):
    """Orientation-preserving affine maps of Q under composition.

    ``(a, b) + (c, d) = (a, b) ∘ (c, d) = (ac, ad + b)``; ordered
    lexicographically by slope, then intercept.  Conjugation maps
    ``(a, b)`` to ``(a, cb + d(1 - a))`` which keeps the positive cone, so
    the order is two-sided invariant.
    """

    name = "aff"
    zero = IDENTITY

    def add(self, f, g):
        return f.compose(g)

    def neg(self, f):
        return f.inverse()

    def le(self, f, g):
        return (f.a, f.b) <= (g.a, g.b)

    def sample(self, rng, bound):
        stratum = rng.random()
        if stratum < 0.2:
            return Aff(1, _rational(rng, bound))
        if stratum < 0.4:
            return Aff(_rational(rng, bound, positive=True), 0)
        return Aff(_rational(rng, bound, positive=True), _rational(rng, bound))


class LexProduct(OrderedGroup):
    """Lexicographic product ``left ×→ right``; pairs compared left first."""

    def __init__(self, left: OrderedGroup, right: OrderedGroup):
        self.left = left
        self.right = right
        self.name = f"{left.name}-lex-{right.name}"
        self.zero = (left.zero, right.zero)

    def add(self, p, q):
        return (self.left.add(p[0], q[0]), self.right.add(p[1], q[1]))

    def neg(self, p):
        return (self.left.neg(p[0]), self.right.neg(p[1]))

    def le(self, p, q):
        if p[0] != q[0]:
            return self.left.le(p[0], q[0])
        return self.right.le(p[1], q[1])

    def sample(self, rng, bound):
        return (self.left.sample(rng, bound), self.right.sample(rng, bound))

    def fmt(self, p):
        return f"({self.left.fmt(p[0])}, {self.right.fmt(p[1])})"


def lex_product(left: OrderedGroup, right: OrderedGroup) -> LexProduct:
    return LexProduct(left, right)


def aff_group() -> AffGroup:
    return AffGroup()


class UnitalGroup:
    """An ordered group with a fixed strong unit ``u > 0``."""

    def __init__(self, group: OrderedGroup, unit):
        if not group.lt(group.zero, unit):
            raise NotPositiveUnit(f"unit {group.fmt(unit)} is not positive")
        self.group = group
        self.unit = unit

    def unit_witness(self, g, cap: int = 10_000) -> Optional[int]:
        """Least ``n ≥ 1`` with ``g ≤ n·u``, or None if none up to ``cap``."""
        acc = self.unit
        for n in range(1, cap + 1):
            if self.group.le(g, acc):
                return n
            acc = self.group.add(acc, self.unit)
        return None

    def __repr__(self):
        return f"UnitalGroup({self.group.name}, {self.group.fmt(self.unit)})"


GROUPS = {
    "z": lambda: IntegerGroup(),
    "zxz": lambda: LexProduct(IntegerGroup(), IntegerGroup()),
    "aff": lambda: AffGroup(),
    "z-lex-aff": lambda: LexProduct(IntegerGroup(), AffGroup()),
}


def group_by_name(name: str) -> OrderedGroup:
    try:
        return GROUPS[name]()
    except KeyError:
        raise KeyError(f"unknown group {name!r}") from None


def default_unit(group: OrderedGroup):
    if isinstance(group, IntegerGroup):
        return 1
    if isinstance(group, LexProduct):
        return (1, group.right.zero)
    if isinstance(group, AffGroup):
        return Aff(2, 0)
    raise KeyError(f"no default unit for {group!r}")


def parse_element(group: OrderedGroup, text: str):
    """Parse comma-separated rationals, e.g. ``2`` for Z, ``1,0`` for Z×Z,
    ``2,0`` for Aff and ``1,1,0`` for Z ×→ Aff."""
    parts = [Fraction(p) for p in text.replace("(", "").replace(")", "").split(",")]

    def take(g: OrderedGroup, items):
        if isinstance(g, IntegerGroup):
            v = items.pop(0)
            if v.denominator != 1:
                raise ValueError("integer expected")
            return int(v)
        if isinstance(g, AffGroup):
            return Aff(items.pop(0), items.pop(0))
        if isinstance(g, LexProduct):
            return (take(g.left, items), take(g.right, items))
        raise ValueError(f"cannot parse elements of {g!r}")

    try:
        value = take(group, parts)
    except IndexError:
        raise ValueError(f"too few components in {text!r}") from None
    if parts:
        raise ValueError(f"too many components in {text!r}")
    return value

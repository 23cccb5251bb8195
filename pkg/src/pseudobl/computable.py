"""Exact infinite algebras behind the same interface as finite ones.

A :class:`ComputableAlgebra` exposes ``mul``, ``arrow``, ``sarrow``,
``meet``, ``join``, ``leq``, ``top`` and ``bottom`` exactly like
:class:`~pseudobl.core.FiniteAlgebra`, so term evaluation and the schema
checkers run unchanged on both.  Elements are exact (integers, fractions,
affine maps); sampling is a pure function of ``(seed, index)``.
"""
from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from .errors import NoMaxFilterPredicate, UnboundedAlgebra, UnknownPreset
from .groups import (
    Aff,
    AffGroup,
    IntegerGroup,
    LexProduct,
    OrderedGroup,
    UnitalGroup,
)


class ComputableAlgebra:
    name = "computable"
    top = None
    bottom = None
    #: optional closed-form membership predicate of the (unique) maximal filter
    max_filter: Optional[Callable] = None
    #: element used as default target by the unital checks
    default_unit = None

    def mul(self, x, y):
        raise NotImplementedError

    def arrow(self, x, y):
        raise NotImplementedError

    def sarrow(self, x, y):
        raise NotImplementedError

    def leq(self, x, y) -> bool:
        raise NotImplementedError

    def meet(self, x, y):
        return x if self.leq(x, y) else y

    def join(self, x, y):
        return y if self.leq(x, y) else x

    def contains(self, x) -> bool:
        raise NotImplementedError

    def sample(self, rng: random.Random, size_bound: int):
        """Return ``(element, stratum)``."""
        raise NotImplementedError

    def fmt(self, x) -> str:
        return str(x)

    @property
    def bounded(self) -> bool:
        return self.bottom is not None

    def minus(self, x):
        if self.bottom is None:
            raise UnboundedAlgebra(f"{self.name} has no bottom")
        return self.arrow(x, self.bottom)

    def tilde(self, x):
        if self.bottom is None:
            raise UnboundedAlgebra(f"{self.name} has no bottom")
        return self.sarrow(x, self.bottom)

    def oplus(self, x, y):
        return self.tilde(self.mul(self.minus(x), self.minus(y)))

    def power(self, x, n: int):
        acc = self.top
        for _ in range(n):
            acc = self.mul(acc, x)
        return acc

    def product(self, xs):
        acc = self.top
        for x in xs:
            acc = self.mul(acc, x)
        return acc

    def __repr__(self):
        return f"<{type(self).__name__} {self.name}>"


class GammaAlgebra(ComputableAlgebra):
    """The interval ``[0, u]`` of a unital group, in pseudo BL signature.

    ``x·y = (y − u + x) ∨ 0``, ``x → y = (u − x + y) ∧ u`` and
    ``x ⇝ y = (y − x + u) ∧ u``; the pseudo MV operations are
    ``x ⊕ y = (x + y) ∧ u``, ``x⁻ = u − x``, ``x˜ = (−x + u) ∧ u``.
    """

    def __init__(self, ug: UnitalGroup, name: Optional[str] = None,
                 max_filter: Optional[Callable] = None):
        self.ug = ug
        self.G = ug.group
        self.u = ug.unit
        self.top = ug.unit
        self.bottom = ug.group.zero
        self.default_unit = self.bottom
        self.name = name or f"gamma({ug.group.name}, {ug.group.fmt(ug.unit)})"
        self.max_filter = max_filter

    def mul(self, x, y):
        G = self.G
        return G.join(G.add(G.sub(y, self.u), x), G.zero)

    def arrow(self, x, y):
        G = self.G
        return G.meet(G.add(G.sub(self.u, x), y), self.u)

    def sarrow(self, x, y):
        G = self.G
        return G.meet(G.add(G.sub(y, x), self.u), self.u)

    def leq(self, x, y):
        return self.G.le(x, y)

    def contains(self, x):
        return self.G.le(self.G.zero, x) and self.G.le(x, self.u)

    # native pseudo MV signature
    def oplus(self, x, y):
        return self.G.meet(self.G.add(x, y), self.u)

    def pmv_minus(self, x):
        return self.G.sub(self.u, x)

    def pmv_tilde(self, x):
        return self.G.meet(self.G.add(self.G.neg(x), self.u), self.u)

    def odot(self, x, y):
        G = self.G
        return G.join(G.add(G.sub(y, self.u), x), G.zero)

    def fmt(self, x):
        return self.G.fmt(x)

    def sample(self, rng, size_bound):
        G = self.G
        if isinstance(G, LexProduct) and self.u[1] == G.right.zero:
            n = self.u[0]
            r = rng.random()
            if r < 0.02:
                return self.bottom, "bottom"
            if r < 0.04:
                return self.top, "top"
            k = rng.randint(0, n)
            g = G.right.sample(rng, size_bound)
            if k == 0 and not G.right.is_positive(g):
                g = G.right.neg(g)
            elif k == n and G.right.lt(G.right.zero, g):
                g = G.right.neg(g)
            stratum = "lower" if k == 0 else "upper" if k == n else "middle"
            return (k, g), stratum
        for _ in range(10_000):
            g = G.sample(rng, size_bound)
            if self.contains(g):
                return g, "rejection"
        raise RuntimeError(f"could not sample the interval of {self.name}")


class NegativeConeAlgebra(ComputableAlgebra):
    """The negative cone ``G⁻`` with ``x·y = x + y``,
    ``x → y = (y − x) ∧ 0`` and ``x ⇝ y = (−x + y) ∧ 0``."""

    def __init__(self, group: OrderedGroup, name: Optional[str] = None,
                 max_filter: Optional[Callable] = None, default_unit=None):
        self.G = group
        self.top = group.zero
        self.bottom = None
        self.name = name or f"negcone({group.name})"
        self.max_filter = max_filter
        self.default_unit = default_unit

    def mul(self, x, y):
        return self.G.add(x, y)

    def arrow(self, x, y):
        return self.G.meet(self.G.sub(y, x), self.G.zero)

    def sarrow(self, x, y):
        return self.G.meet(self.G.add(self.G.neg(x), y), self.G.zero)

    def leq(self, x, y):
        return self.G.le(x, y)

    def contains(self, x):
        return self.G.le(x, self.G.zero)

    def fmt(self, x):
        return self.G.fmt(x)

    def sample(self, rng, size_bound):
        if rng.random() < 0.02:
            return self.top, "top"
        g = self.G.sample(rng, size_bound)
        if self.G.lt(self.G.zero, g):
            g = self.G.neg(g)
        return g, "cone"


class RationalGodelHoop(ComputableAlgebra):
    """Rationals in ``(0, 1]`` with ``s·t = min(s, t)`` and
    ``s → t = 1`` if ``s ≤ t`` else ``t``.  Every filter is an up-set, and
    there is no maximal filter."""

    name = "q01"
    top = Fraction(1)
    bottom = None

    def mul(self, s, t):
        return min(s, t)

    def arrow(self, s, t):
        return Fraction(1) if s <= t else t

    sarrow = arrow

    def leq(self, s, t):
        return s <= t

    def contains(self, s):
        return 0 < s <= 1

    def sample(self, rng, size_bound):
        if rng.random() < 0.02:
            return Fraction(1), "top"
        q = rng.randint(1, size_bound)
        return Fraction(rng.randint(1, q), q), "interval"


# -- presets -----------------------------------------------------------------

def _zlex_max_filter(x) -> bool:
    return x[0] == 1


def _ncaff_max_filter(x: Aff) -> bool:
    return x.a == 1


def preset(name: str):
    """Named test beds.

    ``z-lex-aff-gamma``: Γ(Z ×→ Aff, (1, id)), a non-commutative pMV chain.
    ``zxz-gamma``: Γ(Z ×→ Z, (1, 0)).
    ``ncaff``: negative cone of Aff, with default strong unit ``aff(1/2, 0)``.
    ``ncz``: negative cone of Z.
    ``q01``: the rational Gödel hoop on ``(0, 1]``.
    ``z-gamma(n)`` (or ``z-gamma-n``): the finite chain Γ(Z, n).
    """
    from .constructions import gamma, negative_cone

    key = name.strip().lower()
    if key == "z-lex-aff-gamma":
        ug = UnitalGroup(LexProduct(IntegerGroup(), AffGroup()), (1, Aff(1, 0)))
        A = gamma(ug)
        A.name = key
        A.max_filter = _zlex_max_filter
        return A
    if key == "zxz-gamma":
        ug = UnitalGroup(LexProduct(IntegerGroup(), IntegerGroup()), (1, 0))
        A = gamma(ug)
        A.name = key
        A.max_filter = _zlex_max_filter
        return A
    if key == "ncaff":
        A = negative_cone(AffGroup())
        A.name = key
        A.max_filter = _ncaff_max_filter
        A.default_unit = Aff(Fraction(1, 2), 0)
        return A
    if key == "ncz":
        A = negative_cone(IntegerGroup())
        A.name = key
        A.max_filter = lambda x: x == 0
        A.default_unit = -1
        return A
    if key == "q01":
        return RationalGodelHoop()
    for prefix in ("z-gamma(", "z-gamma-"):
        if key.startswith(prefix):
            digits = key[len(prefix):].rstrip(")")
            if digits.isdigit() and int(digits) >= 1:
                n = int(digits)
                return gamma(UnitalGroup(IntegerGroup(), n))
    raise UnknownPreset(f"unknown preset {name!r}")


PRESETS = ("z-lex-aff-gamma", "zxz-gamma", "ncaff", "ncz", "q01", "z-gamma(n)")


# -- sampling and sampled checks -------------------------------------------------

def sample_elements(A: ComputableAlgebra, count: int, seed: int, size_bound: int = 10,
                    strata: Optional[Counter] = None) -> list:
    """Deterministic sample: element ``i`` depends only on ``(seed, i)``."""
    if count < 1:
        raise ValueError("count must be positive")
    out = []
    for i in range(count):
        x, stratum = A.sample(random.Random(f"{seed}:{i}"), size_bound)
        if strata is not None:
            strata[stratum] += 1
        out.append(x)
    return out


def sample_tuples(A: ComputableAlgebra, count: int, arity: int, seed, size_bound: int = 10,
                  strata: Optional[Counter] = None) -> list[tuple]:
    tuples = []
    for i in range(count):
        rng = random.Random(f"{seed}:t{arity}:{i}")
        items = []
        for _ in range(arity):
            x, stratum = A.sample(rng, size_bound)
            if strata is not None:
                strata[stratum] += 1
            items.append(x)
        tuples.append(tuple(items))
    return tuples


@dataclass
class MaxFilterReport:
    pairs: int
    violations: list = field(default_factory=list)
    cross_check_disagreements: list = field(default_factory=list)
    cross_check_undecided: int = 0

    @property
    def holds(self) -> bool:
        return not self.violations and not self.cross_check_disagreements


def power_membership(A: ComputableAlgebra, x, target, bound: int = 16) -> Optional[bool]:
    """Brute-force maximal-filter test on chains: ``x ∉ M`` iff some power of
    ``x`` is ``≤ target``.  Returns None when no power up to ``bound`` decides."""
    acc = x
    for _ in range(bound):
        if A.leq(acc, target):
            return False
        nxt = A.mul(acc, x)
        if nxt == acc:
            return True
        acc = nxt
    return None


def check_maxfilter_normality(A: ComputableAlgebra, pairs, target=None,
                              power_bound: int = 16) -> MaxFilterReport:
    """For every pair (x, y): ``x → y ∈ M`` iff ``x ⇝ y ∈ M``.

    The closed-form predicate is also cross-checked against
    :func:`power_membership` on every element it is applied to.
    """
    if A.max_filter is None:
        raise NoMaxFilterPredicate(f"{A.name} has no maximal-filter predicate")
    if target is None:
        target = A.bottom if A.bottom is not None else A.default_unit
    report = MaxFilterReport(pairs=len(pairs))
    inM = A.max_filter
    for x, y in pairs:
        a, b = A.arrow(x, y), A.sarrow(x, y)
        if inM(a) != inM(b):
            report.violations.append({"x": A.fmt(x), "y": A.fmt(y)})
        for z in (x, a, b):
            brute = power_membership(A, z, target, power_bound)
            if brute is None:
                report.cross_check_undecided += 1
            elif brute != inM(z):
                report.cross_check_disagreements.append({"element": A.fmt(z)})
    return report


@dataclass
class UnitWitness:
    element: str
    in_filter: Optional[bool]
    n: Optional[int] = None
    proof: Optional[str] = None


@dataclass
class StrongUnitReport:
    unit: str
    witnesses: list

    @property
    def refuted(self) -> bool:
        """Some sampled element is proven to lie outside F(u)."""
        return any(w.in_filter is False for w in self.witnesses)

    @property
    def fraction_witnessed(self) -> float:
        if not self.witnesses:
            return 0.0
        return sum(1 for w in self.witnesses if w.in_filter) / len(self.witnesses)


def strong_unit_witness(A, u, samples, cap: int = 64) -> StrongUnitReport:
    """For each sampled ``x`` find ``n`` with ``x ≥ uⁿ``.

    If the powers of ``u`` stabilise at ``uᵏ`` before ``x`` is reached, then
    the generated filter is exactly the up-set ``[uᵏ, 1]`` and ``x`` is
    proven to lie outside it.
    """
    witnesses = []
    for x in samples:
        acc = u
        found = None
        proof = None
        for n in range(1, cap + 1):
            if A.leq(acc, x):
                found = n
                break
            nxt = A.mul(acc, u)
            if nxt == acc:
                proof = f"u^{n} is idempotent, so F(u) = [{A.fmt(acc)}, 1]"
                break
            acc = nxt
        if found is not None:
            witnesses.append(UnitWitness(A.fmt(x), True, n=found))
        elif proof is not None:
            witnesses.append(UnitWitness(A.fmt(x), False, proof=proof))
        else:
            witnesses.append(UnitWitness(A.fmt(x), None))
    return StrongUnitReport(A.fmt(u), witnesses)


# -- sampled pseudo MV checks on Γ algebras ---------------------------------------

_PMV_ARITY = {"A1": 3, "A2": 1, "A3": 1, "A4": 0, "A5": 2, "A6": 2, "A7": 2, "A8": 1}


def pmv_checks_sampled(A: GammaAlgebra, count: int, seed, size_bound: int = 10) -> list:
    """(A1)–(A8) with the native ``⊕``, ``⁻``, ``˜`` on sampled tuples, plus
    agreement of those operations with the ones read off the pseudo BL
    signature."""
    from .core import AxiomCheck

    o, mi, ti, od = A.oplus, A.pmv_minus, A.pmv_tilde, A.odot
    zero, one = A.bottom, A.top
    preds = {
        "A1": lambda x, y, z: o(x, o(y, z)) == o(o(x, y), z),
        "A2": lambda x: o(x, zero) == x == o(zero, x),
        "A3": lambda x: o(x, one) == one == o(one, x),
        "A5": lambda x, y: ti(o(mi(x), mi(y))) == mi(o(ti(x), ti(y))),
        "A6": lambda x, y: o(x, od(y, ti(x))) == o(y, od(x, ti(y)))
        == o(od(mi(y), x), y) == o(od(mi(x), y), x),
        "A7": lambda x, y: od(o(mi(x), y), x) == od(y, o(x, ti(y))),
        "A8": lambda x: ti(mi(x)) == x,
    }
    out = []
    for name in ("A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8"):
        if name == "A4":
            ok = ti(one) == zero == mi(one)
            out.append(AxiomCheck(name, ok, None if ok else {"x": A.fmt(one)}))
            continue
        arity = _PMV_ARITY[name]
        witness = None
        for xs in sample_tuples(A, count, arity, f"{seed}:{name}", size_bound):
            if not preds[name](*xs):
                witness = dict(zip(("x", "y", "z"), map(A.fmt, xs)))
                break
        out.append(AxiomCheck(name, witness is None, witness))
    witness = None
    for x, y in sample_tuples(A, count, 2, f"{seed}:translation", size_bound):
        if (A.minus(x) != mi(x) or A.tilde(x) != ti(x)
                or ComputableAlgebra.oplus(A, x, y) != o(x, y) or A.mul(x, y) != od(x, y)):
            witness = {"x": A.fmt(x), "y": A.fmt(y)}
            break
    out.append(AxiomCheck("translation", witness is None, witness))
    return out


def pmv_properties_sampled(A: GammaAlgebra, count: int, seed, size_bound: int = 10) -> list:
    """``x∨y = x⊕(y⊙x˜)``, ``x∧y = (x⁻⊕y)⊙x`` and ``(x⁻⊕y)∨(y⁻⊕x) = 1``."""
    from .core import AxiomCheck

    o, mi, ti, od = A.oplus, A.pmv_minus, A.pmv_tilde, A.odot
    preds = {
        "join-form": lambda x, y: A.join(x, y) == o(x, od(y, ti(x))),
        "meet-form": lambda x, y: A.meet(x, y) == od(o(mi(x), y), x),
        "prelinear-form": lambda x, y: A.join(o(mi(x), y), o(mi(y), x)) == A.top,
    }
    out = []
    for name, pred in preds.items():
        witness = None
        for x, y in sample_tuples(A, count, 2, f"{seed}:{name}", size_bound):
            if not pred(x, y):
                witness = {"x": A.fmt(x), "y": A.fmt(y)}
                break
        out.append(AxiomCheck(name, witness is None, witness))
    return out


def noncommutativity_witness(A: ComputableAlgebra, pairs) -> Optional[dict]:
    """First sampled pair with ``x ⊕ y ≠ y ⊕ x``."""
    for x, y in pairs:
        a, b = A.oplus(x, y), A.oplus(y, x)
        if a != b:
            return {"x": A.fmt(x), "y": A.fmt(y), "x+y": A.fmt(a), "y+x": A.fmt(b)}
    return None


def negation_mismatch(A: ComputableAlgebra, samples) -> Optional[dict]:
    """First sampled ``x`` with ``x⁻ ≠ x˜``."""
    for x in samples:
        if A.minus(x) != A.tilde(x):
            return {"x": A.fmt(x), "minus": A.fmt(A.minus(x)), "tilde": A.fmt(A.tilde(x))}
    return None

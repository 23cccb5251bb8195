"""Filters of finite algebras: enumeration, classification, values and covers,
normality, membership of the class where every maximal filter is normal, and
strong units.

Carriers are frozensets; ordering of filter lists is by the bitset
``sum(1 << x for x in carrier)`` so output is reproducible.
"""
from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass
from typing import Iterable, Optional

from .core import FiniteAlgebra, check_basic
from .errors import GIsTop, JoinRequired, MissingJoin, NotBasic, SizeLimit, TheoryViolation

DEFAULT_SIZE_LIMIT = 20


def mask(carrier: Iterable[int]) -> int:
    return sum(1 << x for x in carrier)


@dataclass(frozen=True)
class FilterFlags:
    proper: bool
    maximal: bool
    prime: Optional[bool]
    minimal_prime: Optional[bool]
    normal: bool

    def as_dict(self) -> dict:
        return {"proper": self.proper, "maximal": self.maximal, "prime": self.prime,
                "minimal_prime": self.minimal_prime, "normal": self.normal}


@dataclass(frozen=True)
class Filter:
    carrier: frozenset

    @property
    def mask(self) -> int:
        return mask(self.carrier)

    def __contains__(self, x) -> bool:
        return x in self.carrier

    def __len__(self) -> int:
        return len(self.carrier)

    def __le__(self, other: "Filter") -> bool:
        return self.carrier <= other.carrier

    def __lt__(self, other: "Filter") -> bool:
        return self.carrier < other.carrier

    def as_list(self) -> list[int]:
        return sorted(self.carrier)

    def __repr__(self):
        return f"Filter({self.as_list()})"


def is_filter(A: FiniteAlgebra, S) -> bool:
    """Non-empty, closed under ·, upward closed."""
    S = set(S)
    if not S:
        return False
    if any(A.mul(x, y) not in S for x in S for y in S):
        return False
    return all(y in S for x in S for y in A.elements if A.leq(x, y))


def is_deductive_system(A: FiniteAlgebra, S) -> bool:
    """Contains top and is closed under modus ponens for both → and ⇝."""
    S = set(S)
    if A.top not in S:
        return False
    for x in S:
        for y in A.elements:
            if y not in S and (A.arrow(x, y) in S or A.sarrow(x, y) in S):
                return False
    return True


def generated_filter(A: FiniteAlgebra, S: Iterable[int] = ()) -> Filter:
    """Least filter containing ``S``: close under · and up-sets to a fixpoint."""
    F = set(S) | {A.top}
    while True:
        grown = set(F)
        grown |= {A.mul(x, y) for x in F for y in F}
        grown |= {y for x in grown for y in A.elements if A.leq(x, y)}
        if grown == F:
            return Filter(frozenset(F))
        F = grown


def principal_filter(A: FiniteAlgebra, a: int) -> Filter:
    """F(a) = {x : x ≥ aⁿ for some n ≥ 1}, by iterating powers."""
    seen = []
    p = a
    while p not in seen:
        seen.append(p)
        p = A.mul(p, a)
    return Filter(frozenset(x for x in A.elements if any(A.leq(q, x) for q in seen)))


def _check_size(A: FiniteAlgebra, limit: int):
    if A.size > limit:
        raise SizeLimit(f"algebra of size {A.size} exceeds the limit {limit}")


def all_filters(A: FiniteAlgebra, size_limit: int = DEFAULT_SIZE_LIMIT) -> list[Filter]:
    """Every filter, sorted by bitset.

    In a finite algebra a filter is closed under products of all its members,
    so it is generated by a single element; closing each singleton therefore
    reaches every filter.  Each result is checked against both the submonoid
    and the deductive-system characterizations.
    """
    _check_size(A, size_limit)
    found = {generated_filter(A, [a]).carrier for a in A.elements}
    out = sorted((Filter(c) for c in found), key=lambda F: F.mask)
    for F in out:
        if not (is_filter(A, F.carrier) and is_deductive_system(A, F.carrier)):
            raise TheoryViolation(f"closure produced a non-filter {F}")
    return out


def all_filters_raw(A: FiniteAlgebra, size_limit: int = 16) -> list[Filter]:
    """Power-set scan: every subset passing :func:`is_filter`."""
    _check_size(A, size_limit)
    out = []
    for bits in range(1, 1 << A.size):
        S = [x for x in A.elements if bits >> x & 1]
        if is_filter(A, S):
            out.append(Filter(frozenset(S)))
    return out


def is_normal(A: FiniteAlgebra, F: Filter) -> bool:
    """x → y ∈ F iff x ⇝ y ∈ F for all x, y."""
    return all((A.arrow(x, y) in F) == (A.sarrow(x, y) in F)
               for x in A.elements for y in A.elements)


def is_normal_cosets(A: FiniteAlgebra, F: Filter) -> bool:
    """a·F = F·a for every a."""
    return all({A.mul(a, h) for h in F.carrier} == {A.mul(h, a) for h in F.carrier}
               for a in A.elements)


def is_prime(A: FiniteAlgebra, F: Filter) -> bool:
    if not A.has_all_joins():
        raise JoinRequired("prime filters need binary joins")
    if len(F) == A.size:
        return False
    return all(x in F or y in F for x in A.elements for y in A.elements
               if A.join(x, y) in F)


def _is_basic(A: FiniteAlgebra) -> bool:
    try:
        return check_basic(A).basic
    except MissingJoin:
        return False


def maximal_filters(A: FiniteAlgebra, filters: Optional[list] = None) -> list[Filter]:
    fs = filters if filters is not None else all_filters(A)
    proper = [F for F in fs if len(F) < A.size]
    return [F for F in proper if not any(F < G for G in proper)]


def prime_filters(A: FiniteAlgebra, filters: Optional[list] = None) -> list[Filter]:
    fs = filters if filters is not None else all_filters(A)
    return [F for F in fs if is_prime(A, F)]


def minimal_prime_filters(A: FiniteAlgebra, filters: Optional[list] = None) -> list[Filter]:
    """Minimal prime filters; defined (and computed) for basic algebras only."""
    if not _is_basic(A):
        raise NotBasic("minimal prime filters are defined for basic algebras only")
    fs = filters if filters is not None else all_filters(A)
    primes = prime_filters(A, fs)
    out = [P for P in primes if not any(Q < P for Q in primes)]
    maxes = maximal_filters(A, fs)
    for P in out:
        if not any(P <= V for V in maxes):
            raise TheoryViolation(f"minimal prime {P} lies in no maximal filter")
    return out


def classify_filter(A: FiniteAlgebra, F: Filter,
                    filters: Optional[list] = None) -> FilterFlags:
    """Flags of ``F``.  ``prime`` is None when joins are missing,
    ``minimal_prime`` is None when ``A`` is not basic."""
    fs = filters if filters is not None else all_filters(A)
    proper = len(F) < A.size
    maximal = proper and not any(F < G and len(G) < A.size for G in fs)
    prime = is_prime(A, F) if A.has_all_joins() else None
    minimal_prime = None
    if prime is not None and _is_basic(A):
        minimal_prime = prime and not any(G < F and is_prime(A, G) for G in fs)
    normal = is_normal(A, F)
    if normal != is_normal_cosets(A, F):
        raise TheoryViolation(f"normality characterizations disagree on {F}")
    return FilterFlags(proper, maximal, prime, minimal_prime, normal)


def values_of(A: FiniteAlgebra, g: int, filters: Optional[list] = None) -> list[Filter]:
    """Filters maximal among those not containing ``g``."""
    if g == A.top:
        raise GIsTop("values are defined for g < 1 only")
    fs = filters if filters is not None else all_filters(A)
    avoid = [F for F in fs if g not in F]
    return [F for F in avoid if not any(F < G for G in avoid)]


def cover_of(A: FiniteAlgebra, V: Filter, g: int) -> Filter:
    if g == A.top:
        raise GIsTop("values are defined for g < 1 only")
    return generated_filter(A, set(V.carrier) | {g})


def is_normal_valued(A: FiniteAlgebra) -> bool:
    """Every value V of every g < 1 is normal in its cover V*:
    for x, y ∈ V*, x → y ∈ V iff x ⇝ y ∈ V."""
    fs = all_filters(A)
    for g in A.elements:
        if g == A.top:
            continue
        for V in values_of(A, g, fs):
            cover = cover_of(A, V, g)
            for x, y in itertools.product(sorted(cover.carrier), repeat=2):
                if (A.arrow(x, y) in V) != (A.sarrow(x, y) in V):
                    return False
    return True


def in_mnp(A: FiniteAlgebra) -> bool:
    """True iff ``A`` is trivial or every maximal filter is normal."""
    if A.is_trivial():
        return True
    maxes = maximal_filters(A)
    if not maxes:
        warnings.warn("non-trivial algebra without maximal filters; vacuously true")
        return True
    return all(is_normal(A, V) for V in maxes)


def is_strong_unit(A: FiniteAlgebra, u: int) -> bool:
    return len(generated_filter(A, [u])) == A.size


def strong_units(A: FiniteAlgebra) -> list[int]:
    units = [u for u in A.elements if is_strong_unit(A, u)]
    if A.bottom is not None and A.bottom not in units:
        raise TheoryViolation("bottom is not a strong unit")
    return units

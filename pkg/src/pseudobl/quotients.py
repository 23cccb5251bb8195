"""Equivalences induced by a filter, congruence tests, and quotient algebras."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from .core import FiniteAlgebra, Profile, detect_profile, satisfies
from .errors import NotNormal, TheoryViolation
from .filters import Filter, is_normal

Partition = tuple[tuple[int, ...], ...]


def _partition(A: FiniteAlgebra, related) -> Partition:
    classes: list[list[int]] = []
    for x in A.elements:
        for c in classes:
            if related(c[0], x):
                c.append(x)
                break
        else:
            classes.append([x])
    return tuple(tuple(c) for c in classes)


def left_partition(A: FiniteAlgebra, F: Filter) -> Partition:
    """x ∼l y iff x → y and y → x lie in F."""
    return _partition(A, lambda x, y: A.arrow(x, y) in F and A.arrow(y, x) in F)


def right_partition(A: FiniteAlgebra, F: Filter) -> Partition:
    """x ∼r y iff x ⇝ y and y ⇝ x lie in F."""
    return _partition(A, lambda x, y: A.sarrow(x, y) in F and A.sarrow(y, x) in F)


def class_map(partition: Partition) -> dict[int, int]:
    return {x: i for i, c in enumerate(partition) for x in c}


def is_congruence(A: FiniteAlgebra, partition: Partition) -> bool:
    """Compatibility with ·, →, ⇝, ∨ and ∧ (∨ only when all joins exist)."""
    cls = class_map(partition)
    ops = [A.mul, A.arrow, A.sarrow, A.meet]
    if A.has_all_joins():
        ops.append(A.join)
    for block_x in partition:
        for block_y in partition:
            for op in ops:
                seen = {cls[op(x, y)] for x in block_x for y in block_y}
                if len(seen) > 1:
                    return False
    return True


@dataclass(frozen=True)
class EquivalenceReport:
    left: Partition
    right: Partition
    left_congruence: bool
    right_congruence: bool
    equal: bool
    normal: bool

    @property
    def consistent(self) -> bool:
        return (self.left_congruence == self.right_congruence == self.equal
                == self.normal)


def equivalences_from_filter(A: FiniteAlgebra, F: Filter,
                             strict: bool = True) -> EquivalenceReport:
    """Both induced equivalences and the three conditions that must coincide
    (∼l congruence, ∼r congruence, ∼l = ∼r), together with normality of F.

    With ``strict`` a disagreement raises :class:`TheoryViolation`.
    """
    left = left_partition(A, F)
    right = right_partition(A, F)
    rep = EquivalenceReport(
        left, right,
        is_congruence(A, left), is_congruence(A, right),
        sorted(left) == sorted(right),
        is_normal(A, F),
    )
    if strict and not rep.consistent:
        raise TheoryViolation(f"filter {F.as_list()}: {rep}")
    return rep


@dataclass(frozen=True)
class Quotient:
    algebra: FiniteAlgebra
    classes: Partition
    class_of: dict

    def project(self, x: int) -> int:
        return self.class_of[x]


def quotient_map(A: FiniteAlgebra, F: Filter,
                 profile: "Profile | str | None" = None) -> Quotient:
    """Quotient by a normal filter, with the projection.

    Classes are labelled in order of their least member.  Every table entry
    is verified to be independent of the chosen representatives, and the
    result is revalidated under ``profile`` (default: the strongest profile
    the source satisfies).
    """
    if not is_normal(A, F):
        raise NotNormal(f"filter {F.as_list()} is not normal")
    classes = tuple(sorted(left_partition(A, F), key=min))
    cls = class_map(classes)

    def table(op):
        out = []
        for cx in classes:
            row = []
            for cy in classes:
                vals = {cls[op(x, y)] for x in cx for y in cy}
                if len(vals) != 1:
                    raise TheoryViolation("quotient operation depends on representatives")
                row.append(vals.pop())
            out.append(row)
        return out

    bottom = None if A.bottom is None else cls[A.bottom]
    Q = FiniteAlgebra(table(A.mul), table(A.arrow), table(A.sarrow), cls[A.top], bottom,
                      name=f"{A.name or 'A'}/{F.as_list()}")
    source = Profile.parse(profile) if profile is not None else detect_profile(A)
    if source is not None and not satisfies(Q, source):
        raise TheoryViolation(f"quotient fails the source profile {source.value}")
    return Quotient(Q, classes, cls)


def quotient(A: FiniteAlgebra, F: Filter,
             profile: "Profile | str | None" = None) -> FiniteAlgebra:
    return quotient_map(A, F, profile).algebra


def class_order(A: FiniteAlgebra, F: Filter, x: int, y: int, side: str = "left") -> bool:
    """``Fx ≤ Fy`` (side="left") or ``xF ≤ yF`` (side="right").

    Left: ``x → y ∈ F`` iff ``f·x ≤ y`` for some ``f ∈ F``.  Right:
    ``x ⇝ y ∈ F`` iff ``x·g ≤ y`` for some ``g ∈ F``.  Both forms are computed
    and must agree, and class equality is checked against the
    ``f₁x = f₂y`` (resp. ``xg₁ = yg₂``) description.
    """
    if side == "left":
        by_residuum = A.arrow(x, y) in F
        by_product = any(A.leq(A.mul(f, x), y) for f in F.carrier)
        same = A.arrow(x, y) in F and A.arrow(y, x) in F
        witnessed = any(A.mul(f1, x) == A.mul(f2, y)
                        for f1, f2 in itertools.product(F.carrier, repeat=2))
    elif side == "right":
        by_residuum = A.sarrow(x, y) in F
        by_product = any(A.leq(A.mul(x, g), y) for g in F.carrier)
        same = A.sarrow(x, y) in F and A.sarrow(y, x) in F
        witnessed = any(A.mul(x, g1) == A.mul(y, g2)
                        for g1, g2 in itertools.product(F.carrier, repeat=2))
    else:
        raise ValueError("side must be 'left' or 'right'")
    if by_residuum != by_product:
        raise TheoryViolation(f"class order characterizations disagree at {x}, {y}")
    if same != witnessed:
        raise TheoryViolation(f"class equality characterizations disagree at {x}, {y}")
    return by_residuum


def filter_from_classes(A: FiniteAlgebra, q: Quotient) -> Filter:
    """The class of top, which recovers the generating normal filter."""
    return Filter(frozenset(q.classes[q.class_of[A.top]]))


"""New algebras from old: products, ordinal sums, Γ, negative cones, and the
translations between pseudo BL and pseudo MV signatures."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .computable import GammaAlgebra, NegativeConeAlgebra
from .core import (
    AxiomCheck,
    FiniteAlgebra,
    Profile,
    pmv_axiom_checks,
    satisfies,
)
from .errors import NotInvolutive, ProfileMismatch
from .groups import OrderedGroup, UnitalGroup, aff_group, lex_product

__all__ = [
    "direct_product", "ordinal_sum", "gamma", "negative_cone", "lex_product",
    "aff_group", "PMVAlgebra", "pmv_to_pbl", "pbl_to_pmv", "validate_pmv",
]


def direct_product(A: FiniteAlgebra, B: FiniteAlgebra, name: Optional[str] = None,
                   profile: "Profile | str | None" = None) -> FiniteAlgebra:
    """Componentwise product; the pair ``(a, b)`` is element ``a·|B| + b``."""
    if A.bounded != B.bounded:
        raise ProfileMismatch("both factors must be bounded or both unbounded")
    if profile is not None and not (satisfies(A, profile) and satisfies(B, profile)):
        raise ProfileMismatch(f"factors do not both satisfy {Profile.parse(profile).value}")
    n = B.size
    pairs = [(a, b) for a in A.elements for b in B.elements]

    def tab(ta, tb):
        return [[ta[a][c] * n + tb[b][d] for (c, d) in pairs] for (a, b) in pairs]

    bottom = None if A.bottom is None else A.bottom * n + B.bottom
    return FiniteAlgebra(tab(A.prod, B.prod), tab(A.to, B.to), tab(A.sto, B.sto),
                         A.top * n + B.top, bottom, name=name)


def ordinal_sum(A1: FiniteAlgebra, A2: FiniteAlgebra,
                name: Optional[str] = None) -> FiniteAlgebra:
    """Stack ``A1`` below ``A2`` with the two tops identified.

    The non-top elements of ``A1`` keep their relative index order and come
    first; then all of ``A2``.  Across the summands, for ``x`` in the lower
    part and ``y`` in ``A2 ∖ {1}``: ``x·y = y·x = x``, ``x → y = x ⇝ y = 1``
    and ``y → x = y ⇝ x = x``.
    """
    low = [x for x in A1.elements if x != A1.top]
    k = len(low)
    index = {("a", x): i for i, x in enumerate(low)}
    for y in A2.elements:
        index[("b", y)] = k + y
    index[("a", A1.top)] = k + A2.top
    m = k + A2.size
    top = k + A2.top
    src = [None] * m
    for (part, x), i in index.items():
        if (part, x) != ("a", A1.top):
            src[i] = (part, x)

    def op(table1, table2, kind):
        out = [[0] * m for _ in range(m)]
        for i in range(m):
            for j in range(m):
                (p, x), (q, y) = src[i], src[j]
                if p == q == "a":
                    out[i][j] = index[("a", table1[x][y])]
                elif p == q == "b":
                    out[i][j] = index[("b", table2[x][y])]
                elif kind == "mul":
                    out[i][j] = i if p == "a" else j
                else:
                    out[i][j] = top if p == "a" else j
        return out

    bottom = None
    if A1.size > 1:
        if A1.bottom is not None:
            bottom = index[("a", A1.bottom)]
    elif A2.bottom is not None:
        bottom = index[("b", A2.bottom)]
    return FiniteAlgebra(op(A1.prod, A2.prod, "mul"), op(A1.to, A2.to, "res"),
                         op(A1.sto, A2.sto, "res"), top, bottom, name=name)


def gamma(ug: UnitalGroup):
    """Γ(G, u): a finite chain when ``[0, u]`` is finite, else computable."""
    G, u = ug.group, ug.unit
    elems = G.interval(G.zero, u)
    if elems is None:
        return GammaAlgebra(ug)
    A = GammaAlgebra(ug)
    idx = {g: i for i, g in enumerate(elems)}
    table = lambda f: [[idx[f(x, y)] for y in elems] for x in elems]  # noqa: E731
    return FiniteAlgebra(table(A.mul), table(A.arrow), table(A.sarrow),
                         idx[u], idx[G.zero], name=f"gamma({G.name}, {G.fmt(u)})")


def negative_cone(G: OrderedGroup) -> NegativeConeAlgebra:
    return NegativeConeAlgebra(G)


# -- pseudo MV signature -----------------------------------------------------

@dataclass(frozen=True)
class PMVAlgebra:
    """A finite pseudo MV algebra by its ``⊕`` table and both negations."""

    oplus: tuple
    minus: tuple
    tilde: tuple
    zero: int
    one: int

    def __post_init__(self):
        object.__setattr__(self, "oplus", tuple(tuple(r) for r in self.oplus))
        object.__setattr__(self, "minus", tuple(self.minus))
        object.__setattr__(self, "tilde", tuple(self.tilde))

    @property
    def size(self) -> int:
        return len(self.minus)

    def odot(self, x: int, y: int) -> int:
        return self.tilde[self.oplus[self.minus[x]][self.minus[y]]]


def validate_pmv(M: PMVAlgebra) -> list[AxiomCheck]:
    return pmv_axiom_checks(M.oplus, M.minus, M.tilde, M.zero, M.one, M.size)


def pmv_to_pbl(M: PMVAlgebra, name: Optional[str] = None) -> FiniteAlgebra:
    """``x·y = x ⊙ y``, ``x → y = x⁻ ⊕ y``, ``x ⇝ y = y ⊕ x˜``."""
    r = range(M.size)
    prod = [[M.odot(x, y) for y in r] for x in r]
    to = [[M.oplus[M.minus[x]][y] for y in r] for x in r]
    sto = [[M.oplus[y][M.tilde[x]] for y in r] for x in r]
    return FiniteAlgebra(prod, to, sto, M.one, M.zero, name=name)


def pbl_to_pmv(A: FiniteAlgebra) -> PMVAlgebra:
    """``x ⊕ y = (x⁻·y⁻)˜`` with ``x⁻ = x → 0`` and ``x˜ = x ⇝ 0``.

    Requires ``x⁻˜ = x = x˜⁻`` for every ``x``.
    """
    if A.bottom is None:
        raise ProfileMismatch("pseudo MV translation needs a bounded algebra")
    for x in A.elements:
        if A.tilde(A.minus(x)) != x or A.minus(A.tilde(x)) != x:
            raise NotInvolutive(f"double negation fails at {x}", witness={"x": x})
    minus = [A.minus(x) for x in A.elements]
    tilde = [A.tilde(x) for x in A.elements]
    oplus = [[tilde[A.prod[minus[x]][minus[y]]] for y in A.elements] for x in A.elements]
    return PMVAlgebra(oplus, minus, tilde, A.bottom, A.top)


"""Small named algebras used throughout tests, examples and the CLI."""
from __future__ import annotations

from .core import FiniteAlgebra, algebra_from_product


def chain_order(m: int):
    return [[x <= y for y in range(m)] for x in range(m)]


def trivial() -> FiniteAlgebra:
    return FiniteAlgebra([[0]], [[0]], [[0]], 0, 0, name="trivial")


def lukasiewicz(n: int) -> FiniteAlgebra:
    """The MV-chain Ł_{n+1} on ``0 < 1 < ... < n``."""
    r = range(n + 1)
    prod = [[max(0, x + y - n) for y in r] for x in r]
    to = [[min(n, n - x + y) for y in r] for x in r]
    return FiniteAlgebra(prod, to, to, n, 0, name=f"L{n + 1}")


def godel(m: int) -> FiniteAlgebra:
    """The Gödel chain with ``m`` elements: product is min."""
    r = range(m)
    prod = [[min(x, y) for y in r] for x in r]
    to = [[m - 1 if x <= y else y for y in r] for x in r]
    return FiniteAlgebra(prod, to, to, m - 1, 0, name=f"G{m}")


def c2() -> FiniteAlgebra:
    return FiniteAlgebra([[0, 0], [0, 1]], [[1, 1], [0, 1]], [[1, 1], [0, 1]], 1, 0,
                         name="C2")


def l3() -> FiniteAlgebra:
    return lukasiewicz(2)


def g3() -> FiniteAlgebra:
    return godel(3)


def b4() -> FiniteAlgebra:
    """C2 × C2; element ``2a + b`` is the pair ``(a, b)``."""
    from .constructions import direct_product
    return direct_product(c2(), c2(), name="B4")


def nb6() -> FiniteAlgebra:
    """Ordinal sum of B4 (below) and C2: the smallest non-basic pseudo hoop.

    Tops are identified, so it has five elements: the three non-top elements
    of B4, then the bottom of C2, then the common top.
    """
    from .constructions import ordinal_sum
    return ordinal_sum(b4(), c2(), name="NB6")


NAMED = {
    "trivial": trivial,
    "c2": c2,
    "l3": l3,
    "g3": g3,
    "b4": b4,
    "nb6": nb6,
}


def named(name: str) -> FiniteAlgebra:
    try:
        return NAMED[name.lower()]()
    except KeyError:
        raise KeyError(f"unknown named algebra {name!r}") from None


def by_product(prod, le, top, bottom=None, name=None) -> FiniteAlgebra:
    return algebra_from_product(prod, le, top, bottom, name)

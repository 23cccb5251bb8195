"""Terms over the pseudo hoop / pseudo BL / pseudo MV signature and two
independent evaluators.

:func:`eval_term` recurses over the term and calls the algebra's operations,
so it runs on finite and computable algebras alike.  :func:`eval_term_naive`
works on finite algebras only; it reads nothing but the product table and the
order, recomputes residua, meets and joins by search, and evaluates with an
explicit stack.  The two are meant to disagree only if a table is wrong.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Mapping, Optional

from .errors import UnboundedAlgebra, UnboundVariable

BINARY = ("mul", "to", "sto", "join", "meet", "oplus", "odot")
UNARY = ("minus", "tilde")
BOUNDED_ONLY = ("minus", "tilde", "oplus", "odot", "bottom")

_SYMBOL = {"mul": "·", "to": "→", "sto": "⇝", "join": "∨", "meet": "∧",
           "oplus": "⊕", "odot": "⊙"}


@dataclass(frozen=True)
class Term:
    op: str
    args: tuple = ()
    name: Optional[str] = None
    n: Optional[int] = None

    def __str__(self):
        if self.op == "var":
            return self.name
        if self.op == "top":
            return "1"
        if self.op == "bottom":
            return "0"
        if self.op == "pow":
            return f"({self.args[0]})^{self.n}"
        if self.op == "minus":
            return f"({self.args[0]})⁻"
        if self.op == "tilde":
            return f"({self.args[0]})˜"
        a, b = self.args
        return f"({a} {_SYMBOL[self.op]} {b})"

    def variables(self) -> set[str]:
        if self.op == "var":
            return {self.name}
        out: set[str] = set()
        for a in self.args:
            out |= a.variables()
        return out

    def needs_bottom(self) -> bool:
        return self.op in BOUNDED_ONLY or any(a.needs_bottom() for a in self.args)


TOP = Term("top")
BOTTOM = Term("bottom")


def var(name: str) -> Term:
    return Term("var", name=name)


def mul(a: Term, b: Term) -> Term:
    return Term("mul", (a, b))


def to(a: Term, b: Term) -> Term:
    return Term("to", (a, b))


def sto(a: Term, b: Term) -> Term:
    return Term("sto", (a, b))


def join(a: Term, b: Term) -> Term:
    return Term("join", (a, b))


def meet(a: Term, b: Term) -> Term:
    return Term("meet", (a, b))


def power(a: Term, n: int) -> Term:
    return Term("pow", (a,), n=n)


def minus(a: Term) -> Term:
    return Term("minus", (a,))


def tilde(a: Term) -> Term:
    return Term("tilde", (a,))


def oplus(a: Term, b: Term) -> Term:
    return Term("oplus", (a, b))


def odot(a: Term, b: Term) -> Term:
    return Term("odot", (a, b))


def product(terms) -> Term:
    terms = list(terms)
    if not terms:
        return TOP
    acc = terms[0]
    for t in terms[1:]:
        acc = mul(acc, t)
    return acc


def eval_term(A, t: Term, env: Mapping[str, object]):
    """Evaluate ``t`` in ``A`` under ``env`` by structural recursion."""
    op = t.op
    if op == "var":
        try:
            return env[t.name]
        except KeyError:
            raise UnboundVariable(t.name) from None
    if op in BOUNDED_ONLY and A.bottom is None:
        raise UnboundedAlgebra(f"{op} needs a bounded algebra")
    if op == "top":
        return A.top
    if op == "bottom":
        return A.bottom
    if op == "pow":
        x = eval_term(A, t.args[0], env)
        acc = A.top
        for _ in range(t.n):
            acc = A.mul(acc, x)
        return acc
    if op == "minus":
        return A.arrow(eval_term(A, t.args[0], env), A.bottom)
    if op == "tilde":
        return A.sarrow(eval_term(A, t.args[0], env), A.bottom)
    x = eval_term(A, t.args[0], env)
    y = eval_term(A, t.args[1], env)
    if op == "mul":
        return A.mul(x, y)
    if op == "to":
        return A.arrow(x, y)
    if op == "sto":
        return A.sarrow(x, y)
    if op == "join":
        return A.join(x, y)
    if op == "meet":
        return A.meet(x, y)
    if op == "oplus":
        return A.sarrow(A.mul(A.arrow(x, A.bottom), A.arrow(y, A.bottom)), A.bottom)
    if op == "odot":
        mx = A.arrow(x, A.bottom)
        my = A.arrow(y, A.bottom)
        s = A.sarrow(A.mul(A.arrow(mx, A.bottom), A.arrow(my, A.bottom)), A.bottom)
        return A.sarrow(s, A.bottom)
    raise ValueError(f"unknown operator {op!r}")


class _Naive:
    """Brute-force operations of a finite algebra from ``prod`` and ``≤``."""

    def __init__(self, A):
        self.m = A.size
        self.prod = A.prod
        self.le = [[A.leq(x, y) for y in range(self.m)] for x in range(self.m)]
        self.top = A.top
        self.bottom = A.bottom

    def greatest(self, cands):
        for c in cands:
            if all(self.le[d][c] for d in cands):
                return c
        raise ValueError("no greatest element")

    def least(self, cands):
        for c in cands:
            if all(self.le[c][d] for d in cands):
                return c
        raise ValueError("no least element")

    def to(self, y, z):
        return self.greatest([w for w in range(self.m) if self.le[self.prod[w][y]][z]])

    def sto(self, x, z):
        return self.greatest([w for w in range(self.m) if self.le[self.prod[x][w]][z]])

    def meet(self, x, y):
        return self.greatest([w for w in range(self.m) if self.le[w][x] and self.le[w][y]])

    def join(self, x, y):
        return self.least([w for w in range(self.m) if self.le[x][w] and self.le[y][w]])

    def minus(self, x):
        return self.to(x, self.bottom)

    def tilde(self, x):
        return self.sto(x, self.bottom)

    def oplus(self, x, y):
        return self.tilde(self.prod[self.minus(x)][self.minus(y)])


def eval_term_naive(A, t: Term, env: Mapping[str, int]) -> int:
    """Stack-based evaluation on finite algebras that ignores the residuum tables."""
    if t.needs_bottom() and A.bottom is None:
        raise UnboundedAlgebra("term needs a bounded algebra")
    N = _Naive(A)
    stack: list = [(t, False)]
    values: list[int] = []
    while stack:
        node, expanded = stack.pop()
        if node.op == "var":
            if node.name not in env:
                raise UnboundVariable(node.name)
            values.append(env[node.name])
            continue
        if node.op == "top":
            values.append(N.top)
            continue
        if node.op == "bottom":
            values.append(N.bottom)
            continue
        if not expanded:
            stack.append((node, True))
            for a in node.args:
                stack.append((a, False))
            continue
        # args were pushed left to right, so they were evaluated right to left
        args = [values.pop() for _ in node.args]
        op = node.op
        if op == "pow":
            x = args[0]
            val = N.top
            i = 0
            while i < node.n:
                val = N.prod[val][x]
                i += 1
        elif op == "minus":
            val = N.minus(args[0])
        elif op == "tilde":
            val = N.tilde(args[0])
        else:
            x, y = args
            if op == "mul":
                val = N.prod[x][y]
            elif op == "to":
                val = N.to(x, y)
            elif op == "sto":
                val = N.sto(x, y)
            elif op == "join":
                val = N.join(x, y)
            elif op == "meet":
                val = N.meet(x, y)
            elif op == "oplus":
                val = N.oplus(x, y)
            elif op == "odot":
                val = N.tilde(N.oplus(N.minus(x), N.minus(y)))
            else:
                raise ValueError(f"unknown operator {op!r}")
        values.append(val)
    return values.pop()


def random_term(rng: random.Random, depth: int, variables=("x", "y", "z"),
                bounded: bool = True, max_power: int = 3) -> Term:
    """A random term of depth at most ``depth``."""
    if depth <= 0 or rng.random() < 0.25:
        leaves = [var(v) for v in variables] + [TOP]
        if bounded:
            leaves.append(BOTTOM)
        return rng.choice(leaves)
    ops = ["mul", "to", "sto", "join", "meet", "pow"]
    if bounded:
        ops += ["minus", "tilde", "oplus", "odot"]
    op = rng.choice(ops)
    if op == "pow":
        return power(random_term(rng, depth - 1, variables, bounded, max_power),
                     rng.randint(0, max_power))
    if op in UNARY:
        return Term(op, (random_term(rng, depth - 1, variables, bounded, max_power),))
    return Term(op, (random_term(rng, depth - 1, variables, bounded, max_power),
                     random_term(rng, depth - 1, variables, bounded, max_power)))

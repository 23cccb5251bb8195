"""The inequality schemas characterizing algebras whose maximal filters are all
normal, checked against finite and computable algebras.

Every schema is written with a target ``u``: in pseudo BL mode ``u`` is the
bottom element (so ``x → u`` is ``x⁻``), in unital hoop mode it is a strong
unit.

* (i)   ``((∏ xᵢ) → u)² ≤ (∏ x_{π(i)}²) → u``
* (ii)  ``(((x → y)ⁿ) → u)² ≤ ((x ⇝ y)²ⁿ) → u``
* (iii) ``(((x ⇝ y)ⁿ) → u)² ≤ ((x → y)²ⁿ) → u``
"""
from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Optional

from . import terms as T
from .computable import sample_elements, sample_tuples, strong_unit_witness
from .core import FiniteAlgebra, is_commutative
from .errors import BudgetExceeded, NotInMNP, NotStrongUnit, ProfileMismatch
from .filters import in_mnp, is_strong_unit, maximal_filters
from .quotients import quotient_map

DEFAULT_BUDGET = 2_000_000
DEFAULT_SAMPLES = 10_000


@dataclass(frozen=True)
class Mode:
    kind: str = "exhaustive"
    count: Optional[int] = None
    seed: Optional[int] = None
    size_bound: int = 10

    @classmethod
    def sampled(cls, count: int = DEFAULT_SAMPLES, seed: int = 0, size_bound: int = 10):
        return cls("sampled", count, seed, size_bound)

    def as_dict(self) -> dict:
        if self.kind == "exhaustive":
            return {"kind": "exhaustive"}
        return {"kind": "sampled", "count": self.count, "seed": self.seed,
                "size_bound": self.size_bound}


EXHAUSTIVE = Mode()


@dataclass(frozen=True)
class UnitalContext:
    """An algebra with the target element used by the schemas."""

    algebra: object
    unit: object
    kind: str = "pbl"

    @classmethod
    def pbl(cls, A) -> "UnitalContext":
        if A.bottom is None:
            raise ProfileMismatch("pseudo BL mode needs a bounded algebra")
        return cls(A, A.bottom, "pbl")

    @classmethod
    def hoop(cls, A, u=None, samples: int = 200, seed: int = 0) -> "UnitalContext":
        """Unital hoop mode.  ``u`` defaults to the preset's unit or the bottom.

        On finite algebras ``F(u) = A`` is decided; on computable ones it is
        sample-witnessed and any proven non-member rejects ``u``.
        """
        if u is None:
            u = getattr(A, "default_unit", None)
            if u is None:
                u = A.bottom
        if u is None:
            raise NotStrongUnit("no unit given and the algebra has no bottom")
        if isinstance(A, FiniteAlgebra):
            if not is_strong_unit(A, u):
                raise NotStrongUnit(f"{A.fmt(u)} does not generate the whole algebra")
        else:
            rep = strong_unit_witness(A, u, sample_elements(A, samples, seed))
            if rep.refuted:
                raise NotStrongUnit(f"{A.fmt(u)} is not a strong unit of {A.name}")
        return cls(A, u, "hoop")

    @property
    def finite(self) -> bool:
        return isinstance(self.algebra, FiniteAlgebra)

    def default_mode(self, samples: int = DEFAULT_SAMPLES, seed: int = 0) -> Mode:
        return EXHAUSTIVE if self.finite else Mode.sampled(samples, seed)

    def imp(self, x):
        return self.algebra.arrow(x, self.unit)

    def below(self, x) -> bool:
        return self.algebra.leq(x, self.unit)


@dataclass
class SchemaVerdict:
    schema: str
    n: int
    pi: Optional[list]
    holds: bool
    mode: Mode
    witness: Optional[dict] = None
    env: Optional[dict] = None
    checked: int = 0
    strata: Optional[dict] = None

    def as_dict(self) -> dict:
        return {"schema": self.schema, "n": self.n, "pi": self.pi,
                "mode": self.mode.as_dict(), "holds": self.holds,
                "witness": self.witness}


# -- terms -------------------------------------------------------------------

U = T.var("u")


def _x(i: int) -> T.Term:
    return T.var(f"x{i}")


def schema_i_terms(n: int, pi) -> tuple[T.Term, T.Term]:
    """(lhs, rhs) of schema (i); ``pi`` is 1-based."""
    xs = [_x(i) for i in range(1, n + 1)]
    lhs = T.power(T.to(T.product(xs), U), 2)
    rhs = T.to(T.product(T.power(xs[p - 1], 2) for p in pi), U)
    return lhs, rhs


def schema_ii_terms(n: int, mirrored: bool = False) -> tuple[T.Term, T.Term]:
    x, y = T.var("x"), T.var("y")
    a, b = T.to(x, y), T.sto(x, y)
    if mirrored:
        a, b = b, a
    return T.power(T.to(T.power(a, n), U), 2), T.to(T.power(b, 2 * n), U)


def witness_violates(ctx: UnitalContext, verdict: SchemaVerdict) -> bool:
    """Re-evaluate a failure witness through the term evaluators.

    On finite algebras both evaluators must agree and show ``lhs ≰ rhs``.
    """
    if verdict.env is None:
        return False
    if verdict.schema == "i":
        lhs, rhs = schema_i_terms(verdict.n, verdict.pi)
    else:
        lhs, rhs = schema_ii_terms(verdict.n, verdict.schema == "iii")
    env = dict(verdict.env, u=ctx.unit)
    A = ctx.algebra
    a, b = T.eval_term(A, lhs, env), T.eval_term(A, rhs, env)
    if ctx.finite:
        if (a, b) != (T.eval_term_naive(A, lhs, env), T.eval_term_naive(A, rhs, env)):
            return False
    return not A.leq(a, b)


# -- single schema checks ----------------------------------------------------------

def _check_perm(pi, n: int) -> list[int]:
    pi = [int(p) for p in pi]
    if sorted(pi) != list(range(1, n + 1)):
        raise ValueError(f"{pi} is not a permutation of 1..{n}")
    return pi


def _sq(A, x):
    return A.mul(x, x)


def _schema_i_fails(ctx: UnitalContext, xs, pi) -> bool:
    A = ctx.algebra
    lhs = _sq(A, ctx.imp(A.product(xs)))
    rhs = ctx.imp(A.product(_sq(A, xs[p - 1]) for p in pi))
    return not A.leq(lhs, rhs)


def _tuples(ctx: UnitalContext, arity: int, mode: Mode, budget: int, strata: Counter):
    A = ctx.algebra
    if mode.kind == "exhaustive":
        if not ctx.finite:
            raise ValueError("exhaustive mode needs a finite algebra")
        total = A.size ** arity
        if total > budget:
            raise BudgetExceeded(f"{total} tuples exceed the budget {budget}")
        return itertools.product(A.elements, repeat=arity)
    return sample_tuples(A, mode.count, arity, mode.seed, mode.size_bound, strata)


def _env_i(A, xs) -> tuple[dict, dict]:
    env = {f"x{i + 1}": x for i, x in enumerate(xs)}
    return env, {k: A.fmt(v) for k, v in env.items()}


def check_schema_i(ctx: UnitalContext, n: int, pi, mode: Optional[Mode] = None,
                   budget: int = DEFAULT_BUDGET) -> SchemaVerdict:
    """Schema (i) for one ``n`` and one permutation ``pi`` (1-based list).

    The witness is the first violating tuple in enumeration order (the
    lexicographically least one in exhaustive mode).
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    pi = _check_perm(pi, n)
    mode = mode or ctx.default_mode()
    strata: Counter = Counter()
    checked = 0
    for xs in _tuples(ctx, n, mode, budget, strata):
        checked += 1
        if _schema_i_fails(ctx, xs, pi):
            env, shown = _env_i(ctx.algebra, xs)
            return SchemaVerdict("i", n, pi, False, mode, shown, env, checked, dict(strata))
    return SchemaVerdict("i", n, pi, True, mode, None, None, checked, dict(strata) or None)


def _schema_ii_fails(ctx: UnitalContext, x, y, n: int, mirrored: bool) -> bool:
    A = ctx.algebra
    a, b = A.arrow(x, y), A.sarrow(x, y)
    if mirrored:
        a, b = b, a
    lhs = _sq(A, ctx.imp(A.power(a, n)))
    rhs = ctx.imp(A.power(b, 2 * n))
    return not A.leq(lhs, rhs)


def _check_pairs(ctx, n, mode, budget, mirrored) -> SchemaVerdict:
    if n < 1:
        raise ValueError("n must be at least 1")
    name = "iii" if mirrored else "ii"
    mode = mode or ctx.default_mode()
    strata: Counter = Counter()
    checked = 0
    A = ctx.algebra
    for x, y in _tuples(ctx, 2, mode, budget, strata):
        checked += 1
        if _schema_ii_fails(ctx, x, y, n, mirrored):
            return SchemaVerdict(name, n, None, False, mode,
                                 {"x": A.fmt(x), "y": A.fmt(y)}, {"x": x, "y": y},
                                 checked, dict(strata) or None)
    return SchemaVerdict(name, n, None, True, mode, None, None, checked, dict(strata) or None)


def check_schema_ii(ctx: UnitalContext, n: int, mode: Optional[Mode] = None,
                    budget: int = DEFAULT_BUDGET) -> SchemaVerdict:
    return _check_pairs(ctx, n, mode, budget, False)


def check_schema_iii(ctx: UnitalContext, n: int, mode: Optional[Mode] = None,
                     budget: int = DEFAULT_BUDGET) -> SchemaVerdict:
    return _check_pairs(ctx, n, mode, budget, True)


# -- the whole base ------------------------------------------------------------------

@dataclass
class EqbaseVerdict:
    n_max: int
    mode: Mode
    verdicts: list = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return all(v.holds for v in self.verdicts)

    @property
    def first_failure(self) -> Optional[SchemaVerdict]:
        return next((v for v in self.verdicts if not v.holds), None)

    def as_dict(self) -> dict:
        fail = self.first_failure
        return {"n_max": self.n_max, "mode": self.mode.as_dict(), "holds": self.holds,
                "witness": None if fail is None else fail.as_dict(),
                "verdicts": [v.as_dict() for v in self.verdicts]}


def _multiset_products(A: FiniteAlgebra, n_max: int, budget: int):
    """For every multiset ``S`` of size ``n ≤ n_max`` the sets of all ordered
    products of ``S`` and of the squares of ``S``."""
    total = sum(math.comb(A.size + n - 1, n) for n in range(1, n_max + 1))
    if total > budget:
        raise BudgetExceeded(f"{total} multisets exceed the budget {budget}")
    sq = [A.mul(x, x) for x in A.elements]
    P = {(): frozenset([A.top])}
    Q = {(): frozenset([A.top])}
    for n in range(1, n_max + 1):
        for S in itertools.combinations_with_replacement(A.elements, n):
            p, q = set(), set()
            for i, x in enumerate(S):
                if i and S[i - 1] == x:
                    continue
                rest = S[:i] + S[i + 1:]
                p |= {A.mul(a, x) for a in P[rest]}
                q |= {A.mul(a, sq[x]) for a in Q[rest]}
            P[S] = frozenset(p)
            Q[S] = frozenset(q)
    return P, Q


def _failing_multisets(ctx: UnitalContext, P, Q, n: int) -> set:
    A = ctx.algebra
    bad = set()
    for S, ps in P.items():
        if len(S) != n:
            continue
        lhs = [_sq(A, ctx.imp(p)) for p in ps]
        rhs = [ctx.imp(q) for q in Q[S]]
        if any(not A.leq(a, b) for a in lhs for b in rhs):
            bad.add(S)
    return bad


def _schema_i_all_perms_finite(ctx: UnitalContext, n_max: int, budget: int) -> list:
    """Schema (i) for every ``n ≤ n_max`` and every permutation at once.

    Over all tuples and permutations, the pair (ordered product, ordered
    product of squares) ranges over independent orderings of the same
    multiset, so it suffices to compare the two product sets per multiset.
    A failure is re-located on the lexicographically least tuple and
    permutation.
    """
    A = ctx.algebra
    P, Q = _multiset_products(A, n_max, budget)
    out = []
    for n in range(1, n_max + 1):
        bad = _failing_multisets(ctx, P, Q, n)
        if not bad:
            out.append(SchemaVerdict("i", n, None, True, EXHAUSTIVE,
                                     checked=math.comb(A.size + n - 1, n)))
            continue
        for xs in itertools.product(A.elements, repeat=n):
            if tuple(sorted(xs)) not in bad:
                continue
            for perm in itertools.permutations(range(1, n + 1)):
                if _schema_i_fails(ctx, xs, perm):
                    env, shown = _env_i(A, xs)
                    out.append(SchemaVerdict("i", n, list(perm), False, EXHAUSTIVE,
                                             shown, env))
                    return out
        raise AssertionError("multiset scan and tuple scan disagree")
    return out


def _schema_i_all_perms_sampled(ctx: UnitalContext, n_max: int, mode: Mode) -> list:
    A = ctx.algebra
    out = []
    for n in range(1, n_max + 1):
        strata: Counter = Counter()
        tuples = sample_tuples(A, mode.count, n, mode.seed, mode.size_bound, strata)
        perms = list(itertools.permutations(range(1, n + 1)))
        failed: dict = {}
        for k, xs in enumerate(tuples, 1):
            lhs = _sq(A, ctx.imp(A.product(xs)))
            sq = [_sq(A, x) for x in xs]
            for perm in perms:
                if perm in failed:
                    continue
                if not A.leq(lhs, ctx.imp(A.product(sq[p - 1] for p in perm))):
                    failed[perm] = (k, xs)
        for perm in perms:
            if perm in failed:
                k, xs = failed[perm]
                env, shown = _env_i(A, xs)
                out.append(SchemaVerdict("i", n, list(perm), False, mode, shown, env,
                                         k, dict(strata)))
            else:
                out.append(SchemaVerdict("i", n, list(perm), True, mode,
                                         checked=len(tuples), strata=dict(strata)))
    return out


def check_eqbase(ctx: UnitalContext, n_max: Optional[int] = None, mode: Optional[Mode] = None,
                 budget: int = DEFAULT_BUDGET, schemas=("i", "ii", "iii")) -> EqbaseVerdict:
    """Schemas (i) to (iii) for all ``n ≤ n_max`` (and all permutations in (i)).

    ``n_max`` defaults to the size of a finite algebra and to 3 otherwise.
    """
    mode = mode or ctx.default_mode()
    if n_max is None:
        n_max = ctx.algebra.size if ctx.finite else 3
    report = EqbaseVerdict(n_max, mode)
    if "i" in schemas:
        if mode.kind == "exhaustive":
            report.verdicts += _schema_i_all_perms_finite(ctx, n_max, budget)
        else:
            report.verdicts += _schema_i_all_perms_sampled(ctx, n_max, mode)
    for n in range(1, n_max + 1):
        if "ii" in schemas:
            report.verdicts.append(check_schema_ii(ctx, n, mode, budget))
        if "iii" in schemas:
            report.verdicts.append(check_schema_iii(ctx, n, mode, budget))
    return report


# -- the direct oracle -----------------------------------------------------------------

@dataclass
class ConsistencyReport:
    direct: bool
    schemas: EqbaseVerdict

    @property
    def consistent(self) -> bool:
        # membership forces the schemas; the converse is only bounded evidence
        return self.schemas.holds or not self.direct

    @property
    def observation(self) -> str:
        if self.direct:
            return "every maximal filter is normal and the schemas hold up to n_max"
        if self.schemas.holds:
            return ("schemas hold up to n_max but some maximal filter is not normal; "
                    "this bounds evidence only and is not a contradiction")
        return "some maximal filter is not normal and a schema witness was found"

    def as_dict(self) -> dict:
        return {"direct": self.direct, "schemas_hold": self.schemas.holds,
                "consistent": self.consistent, "observation": self.observation,
                "witness": None if self.schemas.holds else self.schemas.first_failure.as_dict()}


def oracle_consistency(A: FiniteAlgebra, n_max: Optional[int] = None, unit=None,
                       budget: int = DEFAULT_BUDGET) -> ConsistencyReport:
    ctx = UnitalContext.pbl(A) if unit is None else UnitalContext.hoop(A, unit)
    return ConsistencyReport(in_mnp(A), check_eqbase(ctx, n_max, EXHAUSTIVE, budget))


# -- lemma and claim constructions ---------------------------------------------------

@dataclass
class LemmaReport:
    xs: list
    hypothesis: bool
    conclusion: Optional[bool]

    @property
    def status(self) -> str:
        if not self.hypothesis:
            return "hypothesis-not-met"
        return "verified" if self.conclusion else "violated"

    def as_dict(self) -> dict:
        return {"xs": self.xs, "hypothesis": self.hypothesis,
                "conclusion": self.conclusion, "status": self.status}


def _lemma(ctx: UnitalContext, xs) -> LemmaReport:
    A = ctx.algebra
    xs = list(xs)
    if not xs:
        raise ValueError("xs must be non-empty")
    if not in_mnp(A):
        raise NotInMNP(f"{A.name or 'algebra'} has a maximal filter that is not normal")
    p = A.product(xs)
    hyp = True
    for V in maximal_filters(A):
        q = quotient_map(A, V)
        if ctx.kind == "pbl":
            hyp = q.project(p) == q.project(ctx.unit)
        else:
            hyp = q.algebra.leq(q.project(p), q.project(ctx.unit))
        if not hyp:
            break
    if not hyp:
        return LemmaReport(xs, False, None)
    sq = A.product(A.mul(x, x) for x in xs)
    concl = sq == ctx.unit if ctx.kind == "pbl" else ctx.below(sq)
    return LemmaReport(xs, True, concl)


def check_lemma31(A: FiniteAlgebra, xs) -> LemmaReport:
    """If ``V0 = V(∏xᵢ)`` in every quotient by a maximal filter then
    ``∏xᵢ² = 0``."""
    return _lemma(UnitalContext.pbl(A), xs)


def check_lemma42(ctx: UnitalContext, xs) -> LemmaReport:
    """If ``V(∏xᵢ) ≤ Vu`` in every quotient by a maximal filter then
    ``∏xᵢ² ≤ u``."""
    return _lemma(ctx, xs)


@dataclass
class ClaimReport:
    name: str
    checked: int = 0
    skipped: int = 0
    violations: list = field(default_factory=list)
    constructions: list = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.violations

    def as_dict(self) -> dict:
        return {"name": self.name, "checked": self.checked, "skipped": self.skipped,
                "holds": self.holds, "violations": self.violations[:5]}


def check_claim_products(ctx: UnitalContext, n_max: int = 3) -> ClaimReport:
    """Wherever schema (i) holds for ``(n, π)``: ``∏xᵢ ≤ u`` forces
    ``∏x_{π(i)}² ≤ u`` (equality with 0 in pseudo BL mode)."""
    A = ctx.algebra
    rep = ClaimReport("products")
    for n in range(1, n_max + 1):
        for perm in itertools.permutations(range(1, n + 1)):
            if not check_schema_i(ctx, n, perm, EXHAUSTIVE).holds:
                rep.skipped += 1
                continue
            for xs in itertools.product(A.elements, repeat=n):
                if not ctx.below(A.product(xs)):
                    continue
                rep.checked += 1
                sq = A.product(_sq(A, xs[p - 1]) for p in perm)
                if not ctx.below(sq):
                    rep.violations.append({"xs": list(xs), "pi": list(perm)})
    return rep


def check_claim_maximal(ctx: UnitalContext, tuple_budget: int = 100_000) -> ClaimReport:
    """For each maximal filter ``V`` and ``x ∉ V``: find ``v₁..v_k ∈ V`` with
    ``∏(vᵢx) ≤ u``, put ``v = ∏vᵢ²`` and check ``v·x^{2k} ≤ u`` and
    ``x^{2k}·v ≤ u`` (both equal to 0 in pseudo BL mode).

    ``k`` is minimal: the least element of ``V`` gives the smallest products,
    so it decides the least ``k``; the tuple itself is the lexicographically
    first in ``V^k`` (falling back to the constant tuple past the budget).
    """
    A = ctx.algebra
    rep = ClaimReport("maximal")
    for V in maximal_filters(A):
        elems = sorted(V.carrier)
        e = next(c for c in elems if all(A.leq(c, d) for d in elems))
        for x in A.elements:
            if x in V:
                continue
            ex = A.mul(e, x)
            k, acc = 1, ex
            while not ctx.below(acc):
                acc = A.mul(acc, ex)
                k += 1
                if k > A.size + 1:
                    rep.violations.append({"V": V.as_list(), "x": x, "reason": "no k"})
                    break
            else:
                vs = [e] * k
                if len(elems) ** k <= tuple_budget:
                    for cand in itertools.product(elems, repeat=k):
                        if ctx.below(A.product(A.mul(c, x) for c in cand)):
                            vs = list(cand)
                            break
                v = A.product(_sq(A, c) for c in vs)
                xp = A.power(x, 2 * k)
                left, right = A.mul(v, xp), A.mul(xp, v)
                ok = v in V and ctx.below(left) and ctx.below(right)
                if ctx.kind == "pbl":
                    ok = ok and left == right == A.bottom
                rep.checked += 1
                record = {"V": V.as_list(), "x": x, "k": k, "vs": vs, "v": v}
                rep.constructions.append(record)
                if not ok:
                    rep.violations.append(record)
    return rep


# -- the commuting-negation case and the single inequality ----------------------------------

def _first(A, arity, pred) -> Optional[tuple]:
    for xs in itertools.product(A.elements, repeat=arity):
        if not pred(*xs):
            return xs
    return None


@dataclass
class CommutingNegationReport:
    premise_negation: bool
    premise_commute: bool
    consequence: Optional[bool] = None
    in_mnp: Optional[bool] = None
    schema_i: Optional[bool] = None
    pmv: bool = False
    commutative: Optional[bool] = None
    witnesses: dict = field(default_factory=dict)

    @property
    def premises(self) -> bool:
        return self.premise_negation and self.premise_commute

    @property
    def violations(self) -> list:
        out = []
        if self.premises and self.consequence is False:
            out.append("consequence")
        if self.premises and self.in_mnp and self.schema_i is False:
            out.append("equivalence")
        if self.pmv and self.premise_negation and self.commutative is False:
            out.append("remark")
        return out

    @property
    def holds(self) -> bool:
        return not self.violations

    def as_dict(self) -> dict:
        return {"premise_negation": self.premise_negation,
                "premise_commute": self.premise_commute,
                "consequence": self.consequence, "in_mnp": self.in_mnp,
                "schema_i": self.schema_i, "pmv": self.pmv,
                "commutative": self.commutative, "violations": self.violations,
                "witnesses": self.witnesses}


def _involutive(A: FiniteAlgebra) -> bool:
    return all(A.tilde(A.minus(x)) == x == A.minus(A.tilde(x)) for x in A.elements)


def check_thm35(A: FiniteAlgebra, n_max: int = 4) -> CommutingNegationReport:
    """Premises ``(x→y)⁻ = (x⇝y)⁻`` and ``(x→y)(x⇝y) = (x⇝y)(x→y)``.

    When both hold: ``((x→y)ⁿ)⁻ = ((x⇝y)ⁿ)⁻`` for ``n ≤ n_max``, and
    membership agrees with schema (i) alone (one-directionally, as for
    :func:`oracle_consistency`).  On involutive algebras the first premise
    must force commutativity.
    """
    if A.bottom is None:
        raise ProfileMismatch("needs a bounded algebra")
    w1 = _first(A, 2, lambda x, y: A.minus(A.arrow(x, y)) == A.minus(A.sarrow(x, y)))
    w2 = _first(A, 2, lambda x, y: A.mul(A.arrow(x, y), A.sarrow(x, y))
                == A.mul(A.sarrow(x, y), A.arrow(x, y)))
    rep = CommutingNegationReport(w1 is None, w2 is None)
    if w1:
        rep.witnesses["premise_negation"] = list(w1)
    if w2:
        rep.witnesses["premise_commute"] = list(w2)
    if rep.premises:
        wc = None
        for n in range(1, n_max + 1):
            wc = _first(A, 2, lambda x, y: A.minus(A.power(A.arrow(x, y), n))
                        == A.minus(A.power(A.sarrow(x, y), n)))
            if wc:
                rep.witnesses["consequence"] = [n, *wc]
                break
        rep.consequence = wc is None
        rep.in_mnp = in_mnp(A)
        rep.schema_i = check_eqbase(UnitalContext.pbl(A), n_max, EXHAUSTIVE,
                                    schemas=("i",)).holds
    rep.pmv = _involutive(A)
    if rep.pmv:
        rep.commutative = is_commutative(A)
    return rep


@dataclass
class SpecialReport:
    precondition: bool
    inequality: Optional[bool]
    witness: Optional[list] = None

    def as_dict(self) -> dict:
        return {"precondition": self.precondition, "inequality": self.inequality,
                "witness": self.witness}


def check_bdk_special(A: FiniteAlgebra) -> SpecialReport:
    """Where ``(x→y)⇝y = (x⇝y)→y`` holds identically, test ``x²y² ≤ yx``."""
    pre = _first(A, 2, lambda x, y: A.sarrow(A.arrow(x, y), y) == A.arrow(A.sarrow(x, y), y))
    if pre is not None:
        return SpecialReport(False, None, list(pre))
    w = _first(A, 2, lambda x, y: A.leq(A.mul(_sq(A, x), _sq(A, y)), A.mul(y, x)))
    return SpecialReport(True, w is None, None if w is None else list(w))


def negation_square_witness(A: FiniteAlgebra) -> Optional[int]:
    """First ``x`` with ``(x⁻)² ≰ (x²)⁻``, if any."""
    for x in A.elements:
        if not A.leq(_sq(A, A.minus(x)), A.minus(_sq(A, x))):
            return x
    return None


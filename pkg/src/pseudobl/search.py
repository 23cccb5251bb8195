"""Exhaustive enumeration of small finite models, one per isomorphism class.

A finite pseudo hoop is a finite meet-semilattice with top, hence a bounded
lattice, so enumeration runs over bounded lattices first (bottom 0, top
m−1, labels compatible with the order) and then completes the product table
cell by cell.  Rows and columns of 0 and 1 are fixed, every cell lies below
the meet of its arguments and above the products of lower covers, and at a
join-reducible argument the cell is forced to the join over its lower
covers, since residuated products preserve joins.  Associativity is checked
as soon as the cells involved are known.  Residua are then computed and the
candidate is validated against the requested profile.

Models are reported in their canonical labelling: the least table string
over all relabellings fixing 0 and 1.  Output is sorted by that string, so
neither worker count nor scheduling can change it.
"""
from __future__ import annotations

import itertools
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Iterator, Optional

from .core import (
    FiniteAlgebra,
    Profile,
    check_basic,
    dumps,
    is_commutative,
    residua,
    satisfies,
    validate_axioms,
)
from .errors import BudgetExceeded, SizeLimit
from .filters import all_filters, in_mnp, is_normal_valued, maximal_filters

MAX_SIZE = 7
DEFAULT_NODE_BUDGET = 5_000_000

# raw axiom subset below the hoop profiles: integral residuated lattice monoid
RESIDUATED = "residuated"


@dataclass
class SearchSpec:
    size: int
    profile: str = "pbl"
    constraints: tuple = ()
    node_budget: int = DEFAULT_NODE_BUDGET
    jobs: int = 1
    max_size: int = MAX_SIZE

    def __post_init__(self):
        if self.node_budget <= 0:
            raise ValueError("node budget must be positive")
        if self.jobs <= 0:
            raise ValueError("jobs must be positive")
        if self.profile != RESIDUATED:
            self.profile = Profile.parse(self.profile).value
        for c in self.constraints:
            if c not in PROPERTIES:
                raise ValueError(f"unknown property {c!r}")


@dataclass(frozen=True)
class Incomplete:
    """End-of-stream marker: some lattice ran out of node budget."""

    size: int
    lattices: tuple


# -- lattices ----------------------------------------------------------------------

def _closure(le, m):
    for k in range(m):
        for i in range(m):
            if le[i][k]:
                for j in range(m):
                    if le[k][j]:
                        le[i][j] = True
    return le


def _is_lattice(le, m) -> bool:
    for x in range(m):
        for y in range(x + 1, m):
            ub = [z for z in range(m) if le[x][z] and le[y][z]]
            if not any(all(le[z][w] for w in ub) for z in ub):
                return False
            lb = [z for z in range(m) if le[z][x] and le[z][y]]
            if not any(all(le[w][z] for w in lb) for z in lb):
                return False
    return True


def _order_key(le, perm, m) -> tuple:
    inv = [0] * m
    for i, p in enumerate(perm):
        inv[p] = i
    return tuple(le[inv[i]][inv[j]] for i in range(m) for j in range(m))


def _middle_perms(m: int):
    for mid in itertools.permutations(range(1, m - 1)):
        yield (0, *mid, m - 1)


def lattices(m: int) -> list[tuple]:
    """Bounded lattices of size ``m`` up to isomorphism, as ``≤`` matrices
    (tuples of tuples) with 0 least, ``m−1`` greatest and ``x ≤ y ⇒ x ≤ y``
    as integers."""
    if m == 1:
        return [((True,),)]
    if m == 2:
        return [((True, True), (False, True))]
    middle = m - 2
    found = {}

    def extend(downs):
        k = len(downs)
        if k == middle:
            le = [[False] * m for _ in range(m)]
            for i in range(m):
                le[0][i] = le[i][m - 1] = le[i][i] = True
            for i, d in enumerate(downs):
                for j in d:
                    le[j + 1][i + 1] = True
            le = _closure(le, m)
            if not _is_lattice(le, m):
                return
            key = min(_order_key(le, p, m) for p in _middle_perms(m))
            if key not in found:
                found[key] = tuple(tuple(r) for r in le)
            return
        # the new element's strict down-set: any down-closed subset of 0..k-1
        for bits in range(1 << k):
            d = {j for j in range(k) if bits >> j & 1}
            if all(set(downs[j]) <= d for j in d):
                extend(downs + [frozenset(d)])

    extend([])
    return [found[k] for k in sorted(found)]


# -- product tables ---------------------------------------------------------------------

class _Lattice:
    def __init__(self, le):
        m = len(le)
        self.m = m
        self.le = le
        self.meet = [[self._bound(x, y, lower=True) for y in range(m)] for x in range(m)]
        self.join = [[self._bound(x, y, lower=False) for y in range(m)] for x in range(m)]
        self.covers = []
        for x in range(m):
            below = [y for y in range(m) if y != x and le[y][x]]
            self.covers.append([y for y in below
                                if not any(z != y and le[y][z] for z in below)])

    def _bound(self, x, y, lower):
        le, m = self.le, self.m
        if lower:
            cand = [z for z in range(m) if le[z][x] and le[z][y]]
            return next(z for z in cand if all(le[w][z] for w in cand))
        cand = [z for z in range(m) if le[x][z] and le[y][z]]
        return next(z for z in cand if all(le[z][w] for w in cand))

    def join_all(self, xs, start=0):
        acc = start
        for x in xs:
            acc = self.join[acc][x]
        return acc


def _products(le, node_budget: int):
    """All associative, monotone, integral, join-preserving products on the
    lattice, as row lists.  Returns ``(tables, complete)``."""
    L = _Lattice(le)
    m = L.m
    top = m - 1
    if m == 1:
        return [[[0]]], True
    P = [[-1] * m for _ in range(m)]
    for x in range(m):
        P[0][x] = P[x][0] = 0
        P[top][x] = P[x][top] = x
    cells = [(x, y) for x in range(1, top) for y in range(1, top)]
    out = []
    nodes = 0

    def assoc_ok(x, y):
        v = P[x][y]
        for c in range(m):
            # (x·y)·c = x·(y·c)
            a, b = P[v][c], P[y][c]
            if a >= 0 and b >= 0 and P[x][b] >= 0 and P[x][b] != a:
                return False
            # (c·x)·y = c·(x·y)
            a, b = P[c][x], P[c][v]
            if a >= 0 and b >= 0 and P[a][y] >= 0 and P[a][y] != b:
                return False
        for a in range(m):
            for b in range(m):
                # (a·b)·y with a·b = x
                if P[a][b] == x:
                    bc = P[b][y]
                    if bc >= 0 and P[a][bc] >= 0 and P[a][bc] != v:
                        return False
                # x·(b·c) with b·c = y, read with (a, b) as (b, c)
                if P[a][b] == y:
                    xa = P[x][a]
                    if xa >= 0 and P[xa][b] >= 0 and P[xa][b] != v:
                        return False
        return True

    def rec(i):
        nonlocal nodes
        nodes += 1
        if nodes > node_budget:
            return False
        if i == len(cells):
            out.append([row[:] for row in P])
            return True
        x, y = cells[i]
        cx, cy = L.covers[x], L.covers[y]
        lower = L.join_all([P[c][y] for c in cx] + [P[x][c] for c in cy])
        if len(cx) > 1:
            choices = [L.join_all(P[c][y] for c in cx)]
        elif len(cy) > 1:
            choices = [L.join_all(P[x][c] for c in cy)]
        else:
            choices = range(m)
        cap = L.meet[x][y]
        for v in choices:
            if not (le[lower][v] and le[v][cap]):
                continue
            P[x][y] = v
            if assoc_ok(x, y) and not rec(i + 1):
                P[x][y] = -1
                return False
        P[x][y] = -1
        return True

    complete = rec(0)
    return out, complete


def _divisible(prod, to, sto, meet, m) -> bool:
    return all(prod[to[x][y]][x] == meet[x][y] == prod[x][sto[x][y]]
               for x in range(m) for y in range(m))


def _residuated(A: FiniteAlgebra) -> bool:
    p, t, s, le = A.prod, A.to, A.sto, A.leq
    return all(le(p[x][y], z) == le(x, t[y][z]) == le(y, s[x][z])
               for x in A.elements for y in A.elements for z in A.elements)


def _accept(A: FiniteAlgebra, profile: str) -> bool:
    if profile == RESIDUATED:
        return _residuated(A)
    return satisfies(A, profile)


# -- canonical form ----------------------------------------------------------------------

def canonical_key(A: FiniteAlgebra) -> tuple:
    """Least ``(prod, to, sto)`` string over relabellings fixing 0 and 1.

    Expects the natural layout with bottom at 0 and top at ``m − 1``.
    """
    return min(_relabelled_key(A, p) for p in _middle_perms(A.size)) if A.size > 2 \
        else _relabelled_key(A, tuple(range(A.size)))


def _relabelled_key(A: FiniteAlgebra, perm) -> tuple:
    m = A.size
    inv = [0] * m
    for i, p in enumerate(perm):
        inv[p] = i
    out = []
    for table in (A.prod, A.to, A.sto):
        out.extend(perm[table[inv[i]][inv[j]]] for i in range(m) for j in range(m))
    return tuple(out)


def canonical_form(A: FiniteAlgebra, name: Optional[str] = None) -> FiniteAlgebra:
    m = A.size
    if m <= 2:
        return FiniteAlgebra(A.prod, A.to, A.sto, A.top, A.bottom, name=name)
    best = min(_middle_perms(m), key=lambda p: _relabelled_key(A, p))
    return A.relabel(best, name=name)


def _to_natural(A: FiniteAlgebra) -> FiniteAlgebra:
    """Relabel so that bottom is 0 and top is ``m − 1``."""
    m = A.size
    if m == 1:
        return A
    lo = A.least
    rest = [x for x in A.elements if x not in (lo, A.top)]
    perm = [0] * m
    perm[lo] = 0
    perm[A.top] = m - 1
    for i, x in enumerate(rest, 1):
        perm[x] = i
    return A.relabel(perm)


def is_isomorphic(A: FiniteAlgebra, B: FiniteAlgebra) -> bool:
    if A.size != B.size:
        return False
    return canonical_key(_to_natural(A)) == canonical_key(_to_natural(B))


# -- enumeration -----------------------------------------------------------------------------

def _models_on(args):
    le, profile, node_budget = args
    m = len(le)
    lat = _Lattice(le)
    tables, complete = _products(le, node_budget)
    found = {}
    for prod in tables:
        res = residua(prod, le)
        if res is None:
            continue
        to, sto = res
        if profile != RESIDUATED and not _divisible(prod, to, sto, lat.meet, m):
            continue
        A = FiniteAlgebra(prod, to, sto, m - 1, 0)
        if not _accept(A, profile):
            continue
        key = canonical_key(A)
        if key not in found:
            found[key] = A
    return [(k, found[k]) for k in found], complete


def _map(fn, items, jobs: int):
    if jobs <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


def models_of_size(m: int, profile: str = "pbl", node_budget: int = DEFAULT_NODE_BUDGET,
                   jobs: int = 1) -> tuple[list[FiniteAlgebra], bool]:
    """All models of one size, canonical order, plus a completeness flag."""
    if profile != RESIDUATED:
        profile = Profile.parse(profile).value
    lats = lattices(m)
    results = _map(_models_on, [(le, profile, node_budget) for le in lats], jobs)
    merged = {}
    complete = True
    for pairs, done in results:
        complete = complete and done
        for k, A in pairs:
            merged.setdefault(k, A)
    models = []
    for i, k in enumerate(sorted(merged), 1):
        models.append(canonical_form(merged[k], name=f"{profile}-{m}-{i}"))
    return models, complete


def enumerate_models(spec: SearchSpec) -> Iterator:
    """Models of ``spec.size`` satisfying the profile and all constraints.

    The stream ends with an :class:`Incomplete` marker if any branch ran out
    of node budget.
    """
    if spec.size < 1:
        raise ValueError("size must be positive")
    if spec.size > spec.max_size:
        raise SizeLimit(f"size {spec.size} exceeds the cap {spec.max_size}")
    models, complete = models_of_size(spec.size, spec.profile, spec.node_budget, spec.jobs)
    for A in models:
        if all(PROPERTIES[c](A) for c in spec.constraints):
            yield A
    if not complete:
        yield Incomplete(spec.size, ())


# -- properties ------------------------------------------------------------------------------

def _basic(A):
    return check_basic(A).basic


def _prelinear(A):
    return check_basic(A).prelinear


def _negation_square(A):
    from .schemas import negation_square_witness
    return A.bottom is None or negation_square_witness(A) is None


def _maximal_prime(A):
    from .filters import is_prime
    return all(is_prime(A, V) for V in maximal_filters(A))


PROPERTIES: dict[str, Callable[[FiniteAlgebra], bool]] = {
    "commutative": is_commutative,
    "basic": _basic,
    "prelinear": _prelinear,
    "prelinearity": _prelinear,
    "mnp": in_mnp,
    "normal-valued": is_normal_valued,
    "chain": lambda A: A.is_chain(),
    "involutive": lambda A: A.bottom is not None and all(
        A.tilde(A.minus(x)) == x == A.minus(A.tilde(x)) for x in A.elements),
    "maximal-prime": _maximal_prime,
    # (x⁻)² ≤ (x²)⁻, explored only
    "negation-square": _negation_square,
}


def find_counterexample(spec: SearchSpec, prop: str):
    """Least model of size ``≤ spec.size`` (by size, then canonical order)
    violating ``prop``, or None.  Raises :class:`BudgetExceeded` when nothing
    was found but some branch was cut short."""
    if prop not in PROPERTIES:
        raise ValueError(f"unknown property {prop!r}")
    test = PROPERTIES[prop]
    incomplete = False
    for m in range(1, spec.size + 1):
        sub = SearchSpec(m, spec.profile, spec.constraints, spec.node_budget, spec.jobs,
                         spec.max_size)
        for A in enumerate_models(sub):
            if isinstance(A, Incomplete):
                incomplete = True
            elif not test(A):
                return A
    if incomplete:
        raise BudgetExceeded("search budget exhausted before a counterexample was found")
    return None


# -- brute-force recount ----------------------------------------------------------------------

def brute_force_count(m: int, profile: str = "pbl") -> int:
    """Independent recount for ``m ≤ 4``: every order on the middle elements,
    every product table with the forced 0/1 rows, full validation, then dedupe
    by trying all relabellings."""
    if m > 4:
        raise SizeLimit("brute-force recount is limited to size 4")
    if m == 1:
        return 1
    top = m - 1
    mids = list(range(1, top))
    pairs = [(a, b) for a in mids for b in mids if a != b]
    reps: list[FiniteAlgebra] = []
    for bits in range(1 << len(pairs)):
        le = [[a == b or a == 0 or b == top for b in range(m)] for a in range(m)]
        for i, (a, b) in enumerate(pairs):
            if bits >> i & 1:
                le[a][b] = True
        if any(le[a][b] and le[b][a] for a, b in pairs):
            continue
        if any(le[a][b] and le[b][c] and not le[a][c]
               for a in range(m) for b in range(m) for c in range(m)):
            continue
        free = [(x, y) for x in mids for y in mids]
        for values in itertools.product(range(m), repeat=len(free)):
            prod = [[0] * m for _ in range(m)]
            for x in range(m):
                prod[top][x] = prod[x][top] = x
            for (x, y), v in zip(free, values):
                prod[x][y] = v
            res = residua(prod, le)
            if res is None:
                continue
            try:
                A = FiniteAlgebra(prod, res[0], res[1], top, 0)
            except Exception:
                continue
            if profile == RESIDUATED:
                if not (_residuated(A) and all(c.holds for c in validate_axioms(A, "hoop")[:2])):
                    continue
            elif not satisfies(A, profile):
                continue
            if not any(_brute_iso(A, B) for B in reps):
                reps.append(A)
    return len(reps)


def _brute_iso(A: FiniteAlgebra, B: FiniteAlgebra) -> bool:
    m = A.size
    for perm in itertools.permutations(range(m)):
        if perm[A.top] != B.top or perm[A.bottom] != B.bottom:
            continue
        if all(perm[A.prod[x][y]] == B.prod[perm[x]][perm[y]]
               and perm[A.to[x][y]] == B.to[perm[x]][perm[y]]
               and perm[A.sto[x][y]] == B.sto[perm[x]][perm[y]]
               for x in range(m) for y in range(m)):
            return True
    return False


# -- catalog ---------------------------------------------------------------------------------

@dataclass
class Manifest:
    profile: str
    max_size: int
    counts: dict = field(default_factory=dict)
    observations: list = field(default_factory=list)
    models: list = field(default_factory=list)
    complete: bool = True

    def as_dict(self) -> dict:
        return {"profile": self.profile, "max_size": self.max_size,
                "counts": self.counts, "complete": self.complete,
                "observations": self.observations, "models": self.models}

    def dumps(self) -> str:
        return json.dumps(self.as_dict(), indent=1, sort_keys=True) + "\n"


def model_summary(A: FiniteAlgebra) -> dict:
    fs = all_filters(A)
    basic = check_basic(A)
    return {
        "size": A.size,
        "commutative": is_commutative(A),
        "basic": basic.basic,
        "chain": A.is_chain(),
        "filters": len(fs),
        "maximal_filters": len(maximal_filters(A, fs)),
        "mnp": in_mnp(A),
        "digest": A.digest(),
    }


def build_catalog(max_size: int, profile: str = "pbl", jobs: int = 1,
                  node_budget: int = DEFAULT_NODE_BUDGET) -> tuple[Manifest, list]:
    """Models of every size up to ``max_size`` and their manifest, in memory."""
    if max_size > MAX_SIZE:
        raise SizeLimit(f"size {max_size} exceeds the cap {MAX_SIZE}")
    if profile != RESIDUATED:
        profile = Profile.parse(profile).value
    man = Manifest(profile, max_size)
    models = []
    for m in range(1, max_size + 1):
        found, done = models_of_size(m, profile, node_budget, jobs)
        man.complete = man.complete and done
        man.counts[str(m)] = len(found)
        models.extend(found)
    for A in models:
        entry = {"name": A.name, "file": f"{A.name}.alg"}
        if profile != RESIDUATED:
            entry.update(model_summary(A))
        else:
            entry.update({"size": A.size, "commutative": is_commutative(A),
                          "digest": A.digest()})
        man.models.append(entry)
    man.observations = _observations(man)
    return man, models


def _observations(man: Manifest) -> list[str]:
    out = []
    noncomm = [e["name"] for e in man.models if not e["commutative"]]
    if noncomm:
        out.append(f"non-commutative models: {', '.join(noncomm)}")
    else:
        out.append(f"no non-commutative model up to size {man.max_size}")
    if man.profile != RESIDUATED:
        outside = [e["name"] for e in man.models if not e["mnp"]]
        if outside:
            out.append(f"models with a non-normal maximal filter: {', '.join(outside)}")
        else:
            out.append(f"every model up to size {man.max_size} has all maximal filters normal")
        nonbasic = [e["name"] for e in man.models if not e["basic"]]
        if nonbasic:
            out.append(f"non-basic models: {', '.join(nonbasic)}")
    if not man.complete:
        out.append("search budget exhausted; counts are lower bounds")
    return out


def catalog(max_size: int, out_dir, profile: str = "pbl", jobs: int = 1,
            node_budget: int = DEFAULT_NODE_BUDGET) -> Manifest:
    """Write every model up to ``max_size`` as an algebra file plus
    ``manifest.json``.  Reruns produce identical bytes."""
    man, models = build_catalog(max_size, profile, jobs, node_budget)
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    for A in models:
        text = dumps(A, comments=[f"{A.name}: {man.profile} model of size {A.size}"])
        (out / f"{A.name}.alg").write_text(text, encoding="utf-8")
    (out / "manifest.json").write_text(man.dumps(), encoding="utf-8")
    return man


def default_jobs() -> int:
    return max(1, os.cpu_count() or 1)

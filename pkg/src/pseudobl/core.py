"""Finite algebras given by operation tables, and exhaustive axiom checks.

A :class:`FiniteAlgebra` stores the tables of the monoid product ``·`` and of
the two residua ``→`` and ``⇝`` over the elements ``0..m-1``, together with the
index of the unit ``top`` and optionally a declared ``bottom``.  The order is
never stored: ``x ≤ y`` iff ``x → y = top``.  Residuation is read as

    x·y ≤ z  iff  x ≤ y → z  iff  y ≤ x ⇝ z,

so ``y → z`` is the largest ``w`` with ``w·y ≤ z`` and ``x ⇝ z`` is the largest
``w`` with ``x·w ≤ z``.
"""
from __future__ import annotations

import hashlib
import itertools
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Iterable, Optional, Sequence

from .errors import (
    DomainError,
    MissingJoin,
    NotMeetSemilattice,
    NotPartialOrder,
    OrderMismatch,
    ParseError,
    ProfileMismatch,
    TheoryViolation,
    UnboundedAlgebra,
)

Table = tuple[tuple[int, ...], ...]


class Profile(str, Enum):
    HOOP = "hoop"
    BASIC_HOOP = "basic"
    BOUNDED_HOOP = "bounded"
    PBL = "pbl"
    PMV = "pmv"

    @classmethod
    def parse(cls, name: "str | Profile") -> "Profile":
        if isinstance(name, Profile):
            return name
        key = name.strip().lower().replace("_", "-")
        aliases = {
            "hoop": cls.HOOP,
            "pseudo-hoop": cls.HOOP,
            "basic": cls.BASIC_HOOP,
            "basic-hoop": cls.BASIC_HOOP,
            "bounded": cls.BOUNDED_HOOP,
            "bounded-hoop": cls.BOUNDED_HOOP,
            "pbl": cls.PBL,
            "pseudo-bl": cls.PBL,
            "pmv": cls.PMV,
            "pseudo-mv": cls.PMV,
        }
        try:
            return aliases[key]
        except KeyError:
            raise ValueError(f"unknown profile {name!r}") from None

    @property
    def bounded(self) -> bool:
        return self in (Profile.BOUNDED_HOOP, Profile.PBL, Profile.PMV)


def _as_table(rows, m: int, label: str) -> Table:
    table = tuple(tuple(int(v) for v in row) for row in rows)
    if len(table) != m or any(len(row) != m for row in table):
        raise ParseError(f"{label} table must be {m}x{m}")
    for row in table:
        for v in row:
            if not 0 <= v < m:
                raise ParseError(f"{label} entry {v} out of range 0..{m - 1}")
    return table


@dataclass(frozen=True)
class FiniteAlgebra:
    """Operation tables of a finite pseudo hoop (possibly bounded).

    Construction checks the structural invariants: both residua give the same
    order, that order is a partial order with greatest element ``top`` (and
    least element ``bottom`` when declared), and all binary meets exist.
    Axioms proper are checked by :func:`validate_axioms`.
    """

    prod: Table
    to: Table
    sto: Table
    top: int
    bottom: Optional[int] = None
    name: Optional[str] = field(default=None, compare=False)

    _order: tuple = field(init=False, repr=False, compare=False)
    _meet: tuple = field(init=False, repr=False, compare=False)
    _join: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        m = len(self.prod)
        if m < 1:
            raise ParseError("an algebra needs at least one element")
        set_ = object.__setattr__
        set_(self, "prod", _as_table(self.prod, m, "prod"))
        set_(self, "to", _as_table(self.to, m, "to"))
        set_(self, "sto", _as_table(self.sto, m, "sto"))
        if not 0 <= self.top < m:
            raise ParseError("top out of range")
        if self.bottom is not None and not 0 <= self.bottom < m:
            raise ParseError("bottom out of range")
        t = self.top
        for x in range(m):
            for y in range(m):
                if (self.to[x][y] == t) != (self.sto[x][y] == t):
                    raise OrderMismatch(
                        f"to[{x}][{y}] and sto[{x}][{y}] disagree on the order"
                    )
        order = tuple(tuple(self.to[x][y] == t for y in range(m)) for x in range(m))
        set_(self, "_order", order)
        self._check_order()
        set_(self, "_meet", self._bounds(lower=True))
        set_(self, "_join", self._bounds(lower=False))
        for x in range(m):
            for y in range(m):
                if self._meet[x][y] is None:
                    raise NotMeetSemilattice(f"elements {x} and {y} have no meet")

    def _check_order(self):
        le = self._order
        m = self.size
        for x in range(m):
            if not le[x][x]:
                raise NotPartialOrder(f"order is not reflexive at {x}")
            if not le[x][self.top]:
                raise NotPartialOrder(f"top is not above {x}")
            if self.bottom is not None and not le[self.bottom][x]:
                raise NotPartialOrder(f"bottom is not below {x}")
        for x, y in itertools.product(range(m), repeat=2):
            if x != y and le[x][y] and le[y][x]:
                raise NotPartialOrder(f"order is not antisymmetric at {x}, {y}")
        for x, y, z in itertools.product(range(m), repeat=3):
            if le[x][y] and le[y][z] and not le[x][z]:
                raise NotPartialOrder(f"order is not transitive at {x}, {y}, {z}")

    def _bounds(self, lower: bool) -> tuple:
        le = self._order
        m = self.size
        rows = []
        for x in range(m):
            row = []
            for y in range(m):
                if lower:
                    cands = [z for z in range(m) if le[z][x] and le[z][y]]
                    best = [c for c in cands if all(le[d][c] for d in cands)]
                else:
                    cands = [z for z in range(m) if le[x][z] and le[y][z]]
                    best = [c for c in cands if all(le[c][d] for d in cands)]
                row.append(best[0] if best else None)
            rows.append(tuple(row))
        return tuple(rows)

    # -- basic accessors -------------------------------------------------
    @property
    def size(self) -> int:
        return len(self.prod)

    @property
    def elements(self) -> range:
        return range(self.size)

    @property
    def bounded(self) -> bool:
        return self.bottom is not None

    @property
    def least(self) -> Optional[int]:
        """The least element of the derived order (declared or not)."""
        for x in self.elements:
            if all(self._order[x]):
                return x
        return None

    def is_trivial(self) -> bool:
        return self.size == 1

    def leq(self, x: int, y: int) -> bool:
        return self._order[x][y]

    def mul(self, x: int, y: int) -> int:
        return self.prod[x][y]

    def arrow(self, x: int, y: int) -> int:
        return self.to[x][y]

    def sarrow(self, x: int, y: int) -> int:
        return self.sto[x][y]

    def meet(self, x: int, y: int) -> int:
        return self._meet[x][y]

    def join(self, x: int, y: int) -> int:
        v = self._join[x][y]
        if v is None:
            raise MissingJoin(f"elements {x} and {y} have no join")
        return v

    def has_all_joins(self) -> bool:
        return all(v is not None for row in self._join for v in row)

    def is_chain(self) -> bool:
        le = self._order
        return all(le[x][y] or le[y][x] for x in self.elements for y in self.elements)

    def minus(self, x: int) -> int:
        if self.bottom is None:
            raise UnboundedAlgebra("x⁻ needs a bottom element")
        return self.to[x][self.bottom]

    def tilde(self, x: int) -> int:
        if self.bottom is None:
            raise UnboundedAlgebra("x˜ needs a bottom element")
        return self.sto[x][self.bottom]

    def power(self, x: int, n: int) -> int:
        if n < 0:
            raise ValueError("negative exponent")
        acc = self.top
        for _ in range(n):
            acc = self.prod[acc][x]
        return acc

    def product(self, xs: Iterable[int]) -> int:
        acc = self.top
        for x in xs:
            acc = self.prod[acc][x]
        return acc

    def fmt(self, x: int) -> str:
        return str(x)

    @property
    def meet_table(self) -> Table:
        return self._meet

    @property
    def join_table(self) -> tuple:
        return self._join

    def relabel(self, perm: Sequence[int], name: Optional[str] = None) -> "FiniteAlgebra":
        """Return the isomorphic copy where element ``x`` becomes ``perm[x]``."""
        m = self.size
        inv = [0] * m
        for old, new in enumerate(perm):
            inv[new] = old

        def tab(t):
            return tuple(
                tuple(perm[t[inv[a]][inv[b]]] for b in range(m)) for a in range(m)
            )

        return FiniteAlgebra(
            tab(self.prod),
            tab(self.to),
            tab(self.sto),
            perm[self.top],
            None if self.bottom is None else perm[self.bottom],
            name=name if name is not None else self.name,
        )

    def with_bottom(self, bottom: Optional[int]) -> "FiniteAlgebra":
        return FiniteAlgebra(self.prod, self.to, self.sto, self.top, bottom, name=self.name)

    def digest(self) -> str:
        return hashlib.sha256(dumps(self).encode()).hexdigest()


# -- file format ---------------------------------------------------------

def dumps(A: FiniteAlgebra, comments: Sequence[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines += ["alg v1", f"size {A.size}", f"top {A.top}"]
    if A.bottom is not None:
        lines.append(f"bottom {A.bottom}")
    for label, table in (("prod", A.prod), ("to", A.to), ("sto", A.sto)):
        lines.append(label)
        lines.extend(" ".join(str(v) for v in row) for row in table)
    return "\n".join(lines) + "\n"


def load_algebra(document: str, profile: "Profile | str | None" = None,
                 name: Optional[str] = None) -> FiniteAlgebra:
    """Parse the ``alg v1`` text format.

    Optional ``meet``/``join`` blocks are cross-checked against the derived
    lattice operations.  When ``profile`` demands joins (pBL, pMV) their
    existence is checked as well.
    """
    lines = []
    for raw in document.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines or lines[0] != "alg v1":
        raise ParseError("missing 'alg v1' header")
    header: dict[str, int] = {}
    blocks: dict[str, list[list[int]]] = {}
    i = 1
    size = None
    while i < len(lines):
        words = lines[i].split()
        key = words[0]
        if key in ("size", "top", "bottom"):
            if len(words) != 2:
                raise ParseError(f"malformed line {lines[i]!r}")
            if key in header:
                raise ParseError(f"duplicate {key}")
            try:
                header[key] = int(words[1])
            except ValueError:
                raise ParseError(f"malformed line {lines[i]!r}") from None
            if key == "size":
                size = header[key]
            i += 1
        elif key in ("prod", "to", "sto", "meet", "join"):
            if len(words) != 1:
                raise ParseError(f"malformed block header {lines[i]!r}")
            if size is None:
                raise ParseError("size must precede the tables")
            if key in blocks:
                raise ParseError(f"duplicate block {key}")
            rows = lines[i + 1:i + 1 + size]
            if len(rows) != size:
                raise ParseError(f"block {key} is truncated")
            try:
                blocks[key] = [[int(v) for v in r.split()] for r in rows]
            except ValueError:
                raise ParseError(f"non-integer entry in block {key}") from None
            i += 1 + size
        else:
            raise ParseError(f"unexpected line {lines[i]!r}")
    for key in ("size", "top"):
        if key not in header:
            raise ParseError(f"missing {key}")
    for key in ("prod", "to", "sto"):
        if key not in blocks:
            raise ParseError(f"missing block {key}")
    if header["size"] < 1:
        raise ParseError("size must be positive")
    A = FiniteAlgebra(blocks["prod"], blocks["to"], blocks["sto"], header["top"],
                      header.get("bottom"), name=name)
    if "meet" in blocks and _as_table(blocks["meet"], A.size, "meet") != A.meet_table:
        raise ParseError("declared meet table disagrees with the derived order")
    if "join" in blocks and _as_table(blocks["join"], A.size, "join") != A.join_table:
        raise ParseError("declared join table disagrees with the derived order")
    if profile is not None and Profile.parse(profile) in (Profile.PBL, Profile.PMV):
        if not A.has_all_joins():
            raise MissingJoin("profile requires all binary joins")
    return A


def read_algebra(path, profile=None) -> FiniteAlgebra:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    return load_algebra(text, profile=profile, name=str(path))


def write_algebra(A: FiniteAlgebra, path, comments: Sequence[str] = ()) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(A, comments))


# -- axiom checks ----------------------------------------------------------

@dataclass(frozen=True)
class AxiomCheck:
    name: str
    holds: bool
    witness: Optional[dict] = None

    def as_dict(self) -> dict:
        return {"name": self.name, "status": "pass" if self.holds else "fail",
                "witness": self.witness}


_VARS = ("x", "y", "z")


def _search(A: FiniteAlgebra, arity: int, pred: Callable[..., bool]) -> Optional[dict]:
    for tup in itertools.product(A.elements, repeat=arity):
        if not pred(*tup):
            return dict(zip(_VARS, tup))
    return None


def _check(name: str, A: FiniteAlgebra, arity: int, pred) -> AxiomCheck:
    w = _search(A, arity, pred)
    return AxiomCheck(name, w is None, w)


def _hoop_checks(A: FiniteAlgebra) -> list[AxiomCheck]:
    p, t, s, one = A.prod, A.to, A.sto, A.top
    return [
        _check("assoc", A, 3, lambda x, y, z: p[p[x][y]][z] == p[x][p[y][z]]),
        _check("hoop-i", A, 1, lambda x: p[x][one] == x == p[one][x]),
        _check("hoop-ii", A, 1, lambda x: t[x][x] == one == s[x][x]),
        _check("hoop-iii", A, 3, lambda x, y, z: t[p[x][y]][z] == t[x][t[y][z]]),
        _check("hoop-iv", A, 3, lambda x, y, z: s[p[x][y]][z] == s[y][s[x][z]]),
        _check("hoop-v", A, 2, lambda x, y: p[t[x][y]][x] == p[t[y][x]][y]
               == p[x][s[x][y]] == p[y][s[y][x]]),
    ]


def _basic_checks(A: FiniteAlgebra) -> list[AxiomCheck]:
    t, s = A.to, A.sto
    le = A.leq
    return [
        _check("B1", A, 3, lambda x, y, z: le(t[t[x][y]][z], t[t[t[y][x]][z]][z])),
        _check("B2", A, 3, lambda x, y, z: le(s[s[x][y]][z], s[s[s[y][x]][z]][z])),
    ]


def _prelinearity_witness(A: FiniteAlgebra) -> Optional[dict]:
    if not A.has_all_joins():
        raise MissingJoin("prelinearity needs binary joins")
    t, s, one = A.to, A.sto, A.top
    return _search(A, 2, lambda x, y: A.join(t[x][y], t[y][x]) == one
                   == A.join(s[x][y], s[y][x]))


def _pbl_checks(A: FiniteAlgebra) -> list[AxiomCheck]:
    p, t, s, one = A.prod, A.to, A.sto, A.top
    le = A.leq
    monoid = _search(A, 3, lambda x, y, z: p[p[x][y]][z] == p[x][p[y][z]]
                     and p[x][one] == x == p[one][x])
    lattice_ok = A.has_all_joins() and A.bottom is not None
    lattice = None if lattice_ok else {"reason": "missing join or bottom"}
    checks = [
        AxiomCheck("pbl-i", monoid is None, monoid),
        AxiomCheck("pbl-ii", lattice is None, lattice),
        _check("pbl-iii", A, 3, lambda x, y, z: le(p[x][y], z) == le(x, t[y][z])
               == le(y, s[x][z])),
        _check("pbl-iv", A, 2, lambda x, y: p[t[x][y]][x] == A.meet(x, y)
               == p[y][s[y][x]]),
    ]
    if lattice_ok:
        w = _prelinearity_witness(A)
        checks.append(AxiomCheck("pbl-v", w is None, w))
    else:
        checks.append(AxiomCheck("pbl-v", False, {"reason": "joins required"}))
    return checks


def pmv_operations(A: FiniteAlgebra):
    """Pseudo MV operations read off pBL tables: (⊕, ⁻, ˜, ⊙) as callables.

    ``x ⊕ y = (x⁻·y⁻)˜`` with ``x⁻ = x → 0`` and ``x˜ = x ⇝ 0``; ``⊙`` is the
    derived ``x ⊙ y = (x⁻ ⊕ y⁻)˜``.
    """
    if A.bottom is None:
        raise UnboundedAlgebra("pseudo MV operations need a bottom element")
    minus = [A.minus(x) for x in A.elements]
    tilde = [A.tilde(x) for x in A.elements]
    oplus = [[tilde[A.prod[minus[x]][minus[y]]] for y in A.elements] for x in A.elements]
    odot = [[tilde[oplus[minus[x]][minus[y]]] for y in A.elements] for x in A.elements]
    return oplus, minus, tilde, odot


def pmv_axiom_checks(oplus, minus, tilde, zero: int, one: int, m: int) -> list[AxiomCheck]:
    """Check (A1)–(A8) on explicit tables of ⊕ and both negations."""
    o = oplus

    def od(x, y):
        return tilde[o[minus[x]][minus[y]]]

    def chk(name, arity, pred):
        for tup in itertools.product(range(m), repeat=arity):
            if not pred(*tup):
                return AxiomCheck(name, False, dict(zip(_VARS, tup)))
        return AxiomCheck(name, True)

    return [
        chk("A1", 3, lambda x, y, z: o[x][o[y][z]] == o[o[x][y]][z]),
        chk("A2", 1, lambda x: o[x][zero] == x == o[zero][x]),
        chk("A3", 1, lambda x: o[x][one] == one == o[one][x]),
        AxiomCheck("A4", tilde[one] == zero and minus[one] == zero,
                   None if tilde[one] == zero and minus[one] == zero else {"x": one}),
        chk("A5", 2, lambda x, y: tilde[o[minus[x]][minus[y]]]
            == minus[o[tilde[x]][tilde[y]]]),
        chk("A6", 2, lambda x, y: o[x][od(y, tilde[x])] == o[y][od(x, tilde[y])]
            == o[od(minus[y], x)][y] == o[od(minus[x], y)][x]),
        chk("A7", 2, lambda x, y: od(o[minus[x]][y], x) == od(y, o[x][tilde[y]])),
        chk("A8", 1, lambda x: tilde[minus[x]] == x),
    ]


def validate_axioms(A: FiniteAlgebra, profile: "Profile | str") -> list[AxiomCheck]:
    """Exhaustively check every axiom of ``profile``; one entry per axiom."""
    profile = Profile.parse(profile)
    if profile.bounded and A.bottom is None:
        raise ProfileMismatch(f"profile {profile.value} requires a declared bottom")
    if profile is Profile.HOOP:
        return _hoop_checks(A)
    if profile is Profile.BASIC_HOOP:
        return _hoop_checks(A) + _basic_checks(A)
    if profile is Profile.BOUNDED_HOOP:
        ok = A.least == A.bottom
        return _hoop_checks(A) + [AxiomCheck("bounded", ok, None if ok else {"x": A.bottom})]
    if profile is Profile.PBL:
        return _pbl_checks(A)
    oplus, minus, tilde, _ = pmv_operations(A)
    return pmv_axiom_checks(oplus, minus, tilde, A.bottom, A.top, A.size)


def satisfies(A: FiniteAlgebra, profile: "Profile | str") -> bool:
    try:
        return all(c.holds for c in validate_axioms(A, profile))
    except (ProfileMismatch, UnboundedAlgebra):
        return False


def detect_profile(A: FiniteAlgebra) -> Optional[Profile]:
    """Strongest profile satisfied by ``A`` (None if not even a pseudo hoop)."""
    for profile in (Profile.PMV, Profile.PBL, Profile.BASIC_HOOP,
                    Profile.BOUNDED_HOOP, Profile.HOOP):
        if profile is Profile.PMV and not satisfies(A, Profile.PBL):
            continue
        if satisfies(A, profile):
            return profile
    return None


@dataclass(frozen=True)
class BasicReport:
    basic: bool
    b1_witness: Optional[dict]
    b2_witness: Optional[dict]
    prelinear: bool
    prelinearity_witness: Optional[dict]


def check_basic(A: FiniteAlgebra) -> BasicReport:
    """(B1)/(B2) together with prelinearity; the two verdicts must agree."""
    b1, b2 = _basic_checks(A)
    pre = _prelinearity_witness(A)
    basic = b1.holds and b2.holds
    if basic != (pre is None):
        raise TheoryViolation("basicness and prelinearity disagree")
    return BasicReport(basic, b1.witness, b2.witness, pre is None, pre)


def is_commutative(A) -> bool:
    if not isinstance(A, FiniteAlgebra):
        raise DomainError("commutativity is decided on finite algebras only")
    comm = all(A.prod[x][y] == A.prod[y][x] for x in A.elements for y in A.elements)
    if comm and A.to != A.sto:
        raise TheoryViolation("commutative product but → differs from ⇝")
    return comm


def negations(A: FiniteAlgebra, x: int) -> tuple[int, int]:
    return A.minus(x), A.tilde(x)


def residua(prod: Sequence[Sequence[int]], le: Sequence[Sequence[bool]]):
    """Residua of ``prod`` w.r.t. the order ``le``, or None if one is missing.

    Returns ``(to, sto)`` with ``to[y][z] = max{w : w·y ≤ z}`` and
    ``sto[x][z] = max{w : x·w ≤ z}``.
    """
    m = len(prod)
    to = [[0] * m for _ in range(m)]
    sto = [[0] * m for _ in range(m)]
    for a in range(m):
        for z in range(m):
            left = [w for w in range(m) if le[prod[w][a]][z]]
            right = [w for w in range(m) if le[prod[a][w]][z]]
            lmax = [w for w in left if all(le[v][w] for v in left)]
            rmax = [w for w in right if all(le[v][w] for v in right)]
            if not lmax or not rmax:
                return None
            to[a][z] = lmax[0]
            sto[a][z] = rmax[0]
    return to, sto


def algebra_from_product(prod, le, top: int, bottom: Optional[int] = None,
                         name: Optional[str] = None) -> FiniteAlgebra:
    """Build a :class:`FiniteAlgebra` from a product table and an order."""
    res = residua(prod, le)
    if res is None:
        raise ParseError("product is not residuated for the given order")
    return FiniteAlgebra(prod, res[0], res[1], top, bottom, name=name)

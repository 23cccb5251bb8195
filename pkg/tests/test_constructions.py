import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from pseudobl import named
from pseudobl.computable import preset, sample_elements, sample_tuples, strong_unit_witness
from pseudobl.constructions import (
    direct_product,
    gamma,
    negative_cone,
    ordinal_sum,
    pbl_to_pmv,
    pmv_to_pbl,
    validate_pmv,
)
from pseudobl.core import check_basic, satisfies, validate_axioms
from pseudobl.errors import NotInvolutive, NotPositiveUnit, ProfileMismatch
from pseudobl.groups import (
    Aff,
    AffGroup,
    IntegerGroup,
    UnitalGroup,
    aff_group,
    lex_product,
    parse_element,
)
from pseudobl.search import is_isomorphic

from conftest import catalog


def test_products():
    assert is_isomorphic(direct_product(named.c2(), named.c2()), named.b4())
    A = named.g3()
    assert is_isomorphic(direct_product(A, named.trivial()), A)
    P = direct_product(A, named.c2())
    assert P.size == 6 and satisfies(P, "pbl")
    with pytest.raises(ProfileMismatch):
        direct_product(A, named.c2().with_bottom(None))
    with pytest.raises(ProfileMismatch):
        direct_product(A, named.l3(), profile="pmv")


def test_ordinal_sums():
    nb = ordinal_sum(named.b4(), named.c2())
    assert nb.size == 5
    assert satisfies(nb, "hoop") and not check_basic(nb).basic
    assert is_isomorphic(ordinal_sum(named.c2(), named.c2()), named.g3())
    A = named.l3()
    assert ordinal_sum(named.trivial(), A) == A.with_bottom(A.bottom)


def test_ordinal_sum_non_chain_not_prelinear():
    for A in catalog("pbl", 4):
        S = ordinal_sum(A, named.c2())
        assert satisfies(S, "hoop")
        assert check_basic(S).prelinear == A.is_chain()


def test_gamma_finite():
    assert gamma(UnitalGroup(IntegerGroup(), 2)) == named.l3().with_bottom(0)
    assert is_isomorphic(gamma(UnitalGroup(IntegerGroup(), 1)), named.c2())
    for n in range(1, 6):
        L = gamma(UnitalGroup(IntegerGroup(), n))
        assert all(c.holds for c in validate_axioms(L, "pmv"))
    with pytest.raises(NotPositiveUnit):
        UnitalGroup(IntegerGroup(), 0)


def test_gamma_noncommutative_witness():
    A = preset("z-lex-aff-gamma")
    f, g = Aff(2, 0), Aff(1, 1)
    x, y = (0, f), (0, g)
    assert A.oplus(x, y) == (0, Aff(2, 2))
    assert A.oplus(y, x) == (0, Aff(2, 1))


def test_aff_arithmetic():
    G = aff_group()
    assert G.add(Aff(2, 0), Aff(1, 1)) == Aff(2, 2)
    assert G.add(Aff(1, 1), Aff(2, 0)) == Aff(2, 1)
    L = lex_product(IntegerGroup(), G)
    assert L.lt((1, Aff(1, -3)), (1, Aff(2, -100)))
    assert L.add((1, Aff(2, 0)), (0, Aff(1, 1))) == (1, Aff(2, 2))
    assert L.fmt((1, Aff(Fraction(1, 2), Fraction(-3, 4)))) == "(1, aff(1/2, -3/4))"
    with pytest.raises(ValueError):
        Aff(0, 1)


def test_negative_cone_examples():
    Z = negative_cone(IntegerGroup())
    assert Z.arrow(-3, -5) == -2 and Z.arrow(-5, -3) == 0
    A = negative_cone(AffGroup())
    x, y = Aff(Fraction(1, 2), 0), Aff(1, -1)
    assert A.arrow(x, y) == Aff(1, 0) == A.sarrow(x, y)
    assert A.arrow(x, x) == A.top


HOOP = {
    "hoop-i": lambda A, x, y, z: A.mul(x, A.top) == x == A.mul(A.top, x),
    "hoop-ii": lambda A, x, y, z: A.arrow(x, x) == A.top == A.sarrow(x, x),
    "hoop-iii": lambda A, x, y, z: A.arrow(A.mul(x, y), z) == A.arrow(x, A.arrow(y, z)),
    "hoop-iv": lambda A, x, y, z: A.sarrow(A.mul(x, y), z) == A.sarrow(y, A.sarrow(x, z)),
    "hoop-v": lambda A, x, y, z: A.mul(A.arrow(x, y), x) == A.mul(A.arrow(y, x), y)
    == A.mul(x, A.sarrow(x, y)) == A.mul(y, A.sarrow(y, x)),
    "assoc": lambda A, x, y, z: A.mul(A.mul(x, y), z) == A.mul(x, A.mul(y, z)),
}


@pytest.mark.parametrize("name", ["z-lex-aff-gamma", "zxz-gamma", "ncaff", "ncz", "q01"])
def test_presets_sampled_hoop_axioms(name):
    A = preset(name)
    for x, y, z in sample_tuples(A, 500, 3, seed=11, size_bound=6):
        assert A.contains(x) and A.contains(A.mul(x, y))
        for law, pred in HOOP.items():
            assert pred(A, x, y, z), (law, x, y, z)


def test_negative_cone_cancellative():
    A = preset("ncaff")
    for x, y, z in sample_tuples(A, 500, 3, seed=2, size_bound=6):
        if A.mul(x, z) == A.mul(y, z) or A.mul(z, x) == A.mul(z, y):
            assert x == y


def test_translations_roundtrip():
    for A in catalog("pbl", 6):
        try:
            M = pbl_to_pmv(A)
        except NotInvolutive:
            continue
        assert all(c.holds for c in validate_pmv(M))
        assert pmv_to_pbl(M) == A.with_bottom(A.bottom)
        assert pbl_to_pmv(pmv_to_pbl(M)) == M


def test_translation_refused_on_g3():
    with pytest.raises(NotInvolutive) as err:
        pbl_to_pmv(named.g3())
    assert err.value.witness == {"x": 1}


def test_c2_translation():
    M = pbl_to_pmv(named.c2())
    assert pmv_to_pbl(M) == named.c2()


def test_parse_element():
    assert parse_element(IntegerGroup(), "2") == 2
    assert parse_element(lex_product(IntegerGroup(), AffGroup()), "1,1,0") == (1, Aff(1, 0))
    with pytest.raises(ValueError):
        parse_element(IntegerGroup(), "1/2")
    with pytest.raises(ValueError):
        parse_element(AffGroup(), "1")


rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
slopes = st.fractions(min_value=Fraction(1, 12), max_value=12, max_denominator=12)
affs = st.builds(Aff, slopes, rationals)


@settings(max_examples=200, deadline=None)
@given(affs, affs, affs)
def test_aff_group_laws(f, g, h):
    G = AffGroup()
    assert G.add(G.add(f, g), h) == G.add(f, G.add(g, h))
    assert G.add(f, G.zero) == f == G.add(G.zero, f)
    assert G.add(f, G.neg(f)) == G.zero == G.add(G.neg(f), f)


@settings(max_examples=200, deadline=None)
@given(affs, affs, affs)
def test_aff_order_two_sided_invariant(f, g, h):
    G = AffGroup()
    if G.le(f, g):
        assert G.le(G.add(h, f), G.add(h, g))
        assert G.le(G.add(f, h), G.add(g, h))
    assert G.le(f, g) or G.le(g, f)


def test_ncaff_unit_witness_bound():
    A = preset("ncaff")
    u = Aff(Fraction(1, 2), 0)
    xs = sample_elements(A, 300, seed=4, size_bound=8)
    rep = strong_unit_witness(A, u, xs)
    assert rep.fraction_witnessed == 1.0
    for x, w in zip(xs, rep.witnesses):
        bound = (math.ceil(math.log2(1 / x.a)) if x.a < 1 else 0) + 1
        assert w.n <= bound, (x, w)

import pytest
from hypothesis import given, settings, strategies as st

from pseudobl import named
from pseudobl.core import (
    FiniteAlgebra,
    Profile,
    check_basic,
    detect_profile,
    dumps,
    is_commutative,
    load_algebra,
    read_algebra,
    satisfies,
    validate_axioms,
)
from pseudobl.errors import (
    NotPartialOrder,
    OrderMismatch,
    ParseError,
    ProfileMismatch,
)

from conftest import DATA, catalog


def failures(A, profile):
    return [c for c in validate_axioms(A, profile) if not c.holds]


@pytest.mark.parametrize("name,profile", [
    ("l3", "pmv"), ("l3", "pbl"), ("g3", "pbl"), ("b4", "pbl"), ("c2", "pmv"),
    ("trivial", "pbl"), ("nb6", "hoop"), ("nb6", "bounded"),
])
def test_named_algebras_validate(name, profile):
    assert failures(named.named(name), profile) == []


def test_g3_fails_a8_at_middle():
    bad = failures(named.g3(), "pmv")
    a8 = next(c for c in bad if c.name == "A8")
    assert a8.witness == {"x": 1}
    # x ⊕ 0 is x⁻˜, so A2 breaks at the same element
    assert {c.name for c in bad} == {"A2", "A8"}


def test_nb6_is_not_basic():
    A = named.nb6()
    assert A.size == 5
    rep = check_basic(A)
    assert not rep.basic and not rep.prelinear
    assert rep.b1_witness is not None and rep.b2_witness is not None
    x, y = rep.prelinearity_witness["x"], rep.prelinearity_witness["y"]
    assert A.join(A.arrow(x, y), A.arrow(y, x)) != A.top
    assert [(c.name, c.witness) for c in failures(A, "pbl")] == [("pbl-v", {"x": 1, "y": 2})]


def test_detect_profile():
    assert detect_profile(named.l3()) is Profile.PMV
    assert detect_profile(named.g3()) is Profile.PBL
    assert detect_profile(named.nb6()) is Profile.BOUNDED_HOOP


def test_profile_parse_aliases():
    assert Profile.parse("pseudo-BL") is Profile.PBL
    assert Profile.parse("basic_hoop") is Profile.BASIC_HOOP
    with pytest.raises(ValueError):
        Profile.parse("ring")


def test_bounded_profile_needs_bottom():
    A = named.g3().with_bottom(None)
    with pytest.raises(ProfileMismatch):
        validate_axioms(A, "pbl")
    assert not satisfies(A, "pbl")
    assert satisfies(A, "basic")


def test_roundtrip_files():
    for path in sorted(DATA.glob("*.alg")):
        A = read_algebra(path)
        B = load_algebra(dumps(A))
        assert A == B
        assert load_algebra(dumps(A, ["a comment"])) == A


def test_parse_errors():
    text = dumps(named.l3())
    with pytest.raises(ParseError):
        load_algebra(text.replace("alg v1", "alg v2"))
    with pytest.raises(ParseError):
        load_algebra("\n".join(text.splitlines()[:-1]))
    with pytest.raises(ParseError):
        load_algebra(text.replace("size 3", "size x"))
    with pytest.raises(ParseError):
        load_algebra(text + "\nextra 1\n")
    with pytest.raises(ParseError):
        load_algebra("alg v1\nsize 1\ntop 0\nprod\n0\nto\n0\n")


def test_order_mismatch():
    A = named.c2()
    with pytest.raises(OrderMismatch):
        FiniteAlgebra(A.prod, A.to, [[0, 1], [0, 1]], 1, 0)


def test_not_partial_order():
    # top declared at the wrong element
    A = named.c2()
    with pytest.raises(NotPartialOrder):
        FiniteAlgebra(A.prod, A.to, A.sto, 1, 1)


def test_declared_meet_is_crosschecked():
    A = named.b4()
    text = dumps(A) + "meet\n" + "\n".join(" ".join("0" for _ in range(4)) for _ in range(4)) + "\n"
    with pytest.raises(ParseError):
        load_algebra(text)


def test_catalog_invariants():
    for A in catalog("pbl", 5):
        assert satisfies(A, "pbl")
        assert A.least == A.bottom == 0 and A.top == A.size - 1
        for x in A.elements:
            assert A.mul(x, A.top) == x == A.mul(A.top, x)
            for y in A.elements:
                lhs = A.mul(A.arrow(x, y), x)
                assert lhs == A.meet(x, y) == A.mul(y, A.sarrow(y, x))
        if is_commutative(A):
            assert A.to == A.sto


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(["l3", "g3", "b4", "c2", "nb6"]), st.randoms(use_true_random=False))
def test_relabel_preserves_axioms(name, rng):
    A = named.named(name)
    perm = list(A.elements)
    rng.shuffle(perm)
    B = A.relabel(perm)
    assert detect_profile(B) is detect_profile(A)
    for x in A.elements:
        for y in A.elements:
            assert B.mul(perm[x], perm[y]) == perm[A.mul(x, y)]
            assert B.leq(perm[x], perm[y]) == A.leq(x, y)

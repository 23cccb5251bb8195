import itertools

import pytest

from pseudobl import named
from pseudobl.computable import preset
from pseudobl.errors import BudgetExceeded, NotInMNP, NotStrongUnit, ProfileMismatch
from pseudobl.filters import in_mnp
from pseudobl.schemas import (
    EXHAUSTIVE,
    Mode,
    UnitalContext,
    check_bdk_special,
    check_claim_maximal,
    check_claim_products,
    check_eqbase,
    check_lemma31,
    check_lemma42,
    check_schema_i,
    check_schema_ii,
    check_schema_iii,
    check_thm35,
    oracle_consistency,
    witness_violates,
)

from conftest import catalog, models, synthetic


@pytest.mark.parametrize("name", ["trivial", "c2", "l3", "g3", "b4"])
def test_named_pbl_pass(name):
    ctx = UnitalContext.pbl(named.named(name))
    v = check_eqbase(ctx, 3)
    assert v.holds and v.first_failure is None


def test_nb6_hoop_mode():
    A = named.nb6()
    ctx = UnitalContext.hoop(A, 0)
    assert check_eqbase(ctx, 3).holds


def test_single_schema_verdicts():
    ctx = UnitalContext.pbl(named.l3())
    v = check_schema_i(ctx, 2, [2, 1])
    assert v.holds and v.checked == 9
    assert v.as_dict()["mode"] == {"kind": "exhaustive"}
    assert check_schema_ii(ctx, 2).holds and check_schema_iii(ctx, 2).holds


def test_bad_permutation():
    ctx = UnitalContext.pbl(named.l3())
    with pytest.raises(ValueError):
        check_schema_i(ctx, 2, [1, 1])
    with pytest.raises(ValueError):
        check_schema_i(ctx, 2, [1, 2, 3])


def test_budget_exceeded():
    ctx = UnitalContext.pbl(named.b4())
    with pytest.raises(BudgetExceeded):
        check_schema_i(ctx, 4, [1, 2, 3, 4], budget=100)
    with pytest.raises(BudgetExceeded):
        check_eqbase(ctx, 6, budget=100)


def test_pbl_mode_needs_bottom():
    with pytest.raises(ProfileMismatch):
        UnitalContext.pbl(named.g3().with_bottom(None))


def test_hoop_mode_rejects_non_unit():
    with pytest.raises(NotStrongUnit):
        UnitalContext.hoop(named.g3(), 1)


def test_schema_ii_failure_witness():
    A = synthetic("residuated-4-4")
    ctx = UnitalContext.pbl(A)
    v = check_schema_ii(ctx, 2)
    assert not v.holds
    assert v.witness == {"x": "1", "y": "0"}
    assert witness_violates(ctx, v)
    # the mirror table fails the mirrored schema
    mirror = UnitalContext.pbl(synthetic("residuated-4-5"))
    w = check_schema_iii(mirror, 1)
    assert not w.holds and witness_violates(mirror, w)


def test_schema_i_failure_witness():
    A = synthetic("residuated-5-33")
    ctx = UnitalContext.pbl(A)
    v = check_schema_i(ctx, 2, [2, 1])
    assert not v.holds
    assert v.witness == {"x1": "3", "x2": "2"}
    assert witness_violates(ctx, v)
    eq = check_eqbase(ctx, 2)
    assert not eq.holds
    assert witness_violates(ctx, eq.first_failure)


def test_eqbase_dp_matches_direct_search():
    # the multiset shortcut must report the same first witness as a plain scan
    for A in models("residuated", 4) + models("residuated", 5)[:60]:
        ctx = UnitalContext.pbl(A)
        fast = check_eqbase(ctx, 3, schemas=("i",))
        slow = [check_schema_i(ctx, n, p) for n in range(1, 4)
                for p in itertools.permutations(range(1, n + 1))]
        first = next((v for v in slow if not v.holds), None)
        if first is None:
            assert fast.holds
        else:
            ff = fast.first_failure
            assert (ff.n, ff.pi, ff.witness) == (first.n, first.pi, first.witness)


def test_oracle_consistency_over_synthetic():
    for A in models("residuated", 4) + models("residuated", 5):
        rep = oracle_consistency(A, 3)
        assert rep.consistent, A.name
    rep = oracle_consistency(synthetic("residuated-4-4"), 3)
    assert not rep.direct and not rep.schemas.holds
    assert rep.as_dict()["witness"] is not None


def test_square_product_bounded_examples():
    A = named.l3()
    assert check_lemma31(A, [1, 1]).status == "verified"
    assert check_lemma31(A, [2]).status == "hypothesis-not-met"
    with pytest.raises(ValueError):
        check_lemma31(A, [])


def test_lemma_requires_mnp():
    with pytest.raises(NotInMNP):
        check_lemma31(synthetic("residuated-4-4"), [1])


def test_square_product_unital_mode():
    ctx = UnitalContext.hoop(named.l3(), 1)
    rep = check_lemma42(ctx, [1])
    assert rep.status in ("verified", "hypothesis-not-met")
    assert rep.status != "violated"


def test_claims_on_catalog():
    for A in catalog("pbl", 5):
        ctx = UnitalContext.pbl(A)
        assert check_claim_products(ctx, 3).holds
        rep = check_claim_maximal(ctx)
        assert rep.holds, rep.violations
        for rec in rep.constructions:
            assert rec["v"] in rec["vs"] or A.product(A.mul(c, c) for c in rec["vs"]) == rec["v"]


def test_claim_maximal_minimal_k():
    A = named.l3()
    rep = check_claim_maximal(UnitalContext.pbl(A))
    assert [(r["x"], r["k"]) for r in rep.constructions] == [(0, 1), (1, 2)]


def test_commuting_negations_examples():
    for name in ("l3", "g3", "b4", "c2", "trivial"):
        rep = check_thm35(named.named(name))
        assert rep.premises and rep.holds
    rep = check_thm35(named.l3())
    assert rep.pmv and rep.commutative and rep.consequence


def test_commuting_negations_catalog():
    for A in catalog("pbl", 5):
        rep = check_thm35(A, 3)
        assert rep.holds, (A.name, rep.as_dict())


def test_square_product_inequality():
    for name in ("l3", "g3", "b4"):
        rep = check_bdk_special(named.named(name))
        assert rep.precondition and rep.inequality


def test_sampled_determinism():
    A = preset("ncaff")
    ctx = UnitalContext.hoop(A)
    mode = Mode.sampled(300, seed=5)
    a = check_eqbase(ctx, 2, mode).as_dict()
    b = check_eqbase(ctx, 2, mode).as_dict()
    assert a == b and a["holds"]
    assert check_eqbase(ctx, 2, Mode.sampled(300, seed=6)).holds


def test_mode_descriptions():
    assert EXHAUSTIVE.as_dict() == {"kind": "exhaustive"}
    assert Mode.sampled(10, 2).as_dict() == {"kind": "sampled", "count": 10, "seed": 2,
                                             "size_bound": 10}


def test_mnp_catalog_passes_eqbase():
    for A in catalog("pbl", 5):
        assert in_mnp(A)
        assert check_eqbase(UnitalContext.pbl(A), A.size).holds

"""The nine acceptance criteria.  Each test prints one PASS/FAIL line."""
import itertools
import json
import random
import subprocess
import sys
import time

from pseudobl import named, terms as T
from pseudobl.computable import preset, sample_elements, strong_unit_witness
from pseudobl.core import algebra_from_product, check_basic, is_commutative, validate_axioms
from pseudobl.filters import (
    all_filters,
    all_filters_raw,
    in_mnp,
    is_deductive_system,
    is_filter,
    is_normal,
    maximal_filters,
    minimal_prime_filters,
)
from pseudobl.quotients import equivalences_from_filter, quotient
from pseudobl.schemas import (
    Mode,
    UnitalContext,
    check_bdk_special,
    check_claim_maximal,
    check_claim_products,
    check_eqbase,
    check_lemma31,
    check_thm35,
)
from pseudobl.search import catalog, is_isomorphic, models_of_size

from conftest import catalog as cached_catalog


def criterion(capsys, n, title, body):
    start = time.perf_counter()
    try:
        ok, detail = body()
    except Exception as exc:
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    secs = time.perf_counter() - start
    with capsys.disabled():
        print(f"\n[C{n}] {'PASS' if ok else 'FAIL'} {title}: {detail} ({secs:.1f}s)")
    assert ok, detail


def _failed(A, profile):
    return [c for c in validate_axioms(A, profile) if not c.holds]


def test_c1_axiom_suite(capsys):
    def body():
        start = time.perf_counter()
        declared = {"l3": "pmv", "g3": "pbl", "b4": "pbl", "c2": "pmv"}
        bad = {k: _failed(named.named(k), p) for k, p in declared.items()}
        clean = all(not v for v in bad.values())
        a8 = next((c for c in _failed(named.g3(), "pmv") if c.name == "A8"), None)
        nb = named.nb6()
        rep = check_basic(nb)
        nb_ok = (not _failed(nb, "hoop") and not rep.prelinear and not rep.basic
                 and rep.prelinearity_witness is not None
                 and rep.b1_witness is not None and rep.b2_witness is not None)
        secs = time.perf_counter() - start
        ok = clean and a8 is not None and a8.witness == {"x": 1} and nb_ok and secs < 1
        return ok, (f"declared profiles clean={clean}, G3 A8 witness={a8 and a8.witness}, "
                    f"NB6 prelinearity witness={rep.prelinearity_witness}, "
                    f"B1={rep.b1_witness}, B2={rep.b2_witness}, {secs:.3f}s")
    criterion(capsys, 1, "axiom suite", body)


def test_c2_filter_oracle(capsys):
    def body():
        start = time.perf_counter()
        got = {}
        for k in ("l3", "g3", "b4"):
            A = named.named(k)
            fs = all_filters(A)
            raw = all_filters_raw(A)
            assert [F.as_list() for F in fs] == [F.as_list() for F in raw]
            # raw recount of the maxima and minimal primes from the power-set scan
            got[k] = (len(fs), len(maximal_filters(A, raw)), len(minimal_prime_filters(A, raw)))
        expected = {"l3": (2, 1, 1), "g3": (3, 1, 1), "b4": (4, 2, 2)}
        subsets = 0
        mismatches = []
        for A in cached_catalog("pbl", 5):
            for bits in range(1 << A.size):
                S = [x for x in A.elements if bits >> x & 1]
                subsets += 1
                if is_filter(A, S) != is_deductive_system(A, S):
                    mismatches.append((A.name, S))
        secs = time.perf_counter() - start
        ok = got == expected and not mismatches and secs < 60
        return ok, (f"(filters, maximal, minimal prime)={got}, {subsets} subsets, "
                    f"{len(mismatches)} mismatches")
    criterion(capsys, 2, "filter oracle", body)


def test_c3_congruences(capsys):
    def body():
        filters = violations = quotients = 0
        for A in cached_catalog("pbl", 5):
            for F in all_filters(A):
                filters += 1
                if not equivalences_from_filter(A, F, strict=False).consistent:
                    violations += 1
            for V in maximal_filters(A):
                if is_normal(A, V):
                    quotients += 1
                    if not is_commutative(quotient(A, V)):
                        violations += 1
        return violations == 0, (f"{filters} filters, {quotients} maximal quotients, "
                                 f"{violations} violations")
    criterion(capsys, 3, "congruence machinery", body)


def test_c4_equational_base(capsys):
    def body():
        start = time.perf_counter()
        algebras = cached_catalog("pbl", 6)
        eq_fail, lemma, claims = [], {"verified": 0, "hypothesis-not-met": 0, "violated": 0}, 0
        claim_fail = []
        for A in algebras:
            if not in_mnp(A):
                continue
            ctx = UnitalContext.pbl(A)
            if not check_eqbase(ctx, A.size).holds:
                eq_fail.append(A.name)
            for n in range(1, 4):
                for xs in itertools.product(A.elements, repeat=n):
                    lemma[check_lemma31(A, xs).status] += 1
            for rep in (check_claim_products(ctx, 3), check_claim_maximal(ctx)):
                claims += rep.checked
                if not rep.holds:
                    claim_fail.append((A.name, rep.name))
        secs = time.perf_counter() - start
        ok = not eq_fail and lemma["violated"] == 0 and not claim_fail and secs < 600
        return ok, (f"{len(algebras)} algebras, eqbase failures={eq_fail}, lemma {lemma}, "
                    f"{claims} claim instances, claim failures={claim_fail}")
    criterion(capsys, 4, "equational base consistency", body)


def test_c5_unital_hoops(capsys):
    def body():
        parts = []
        ok = True
        ncaff = preset("ncaff")
        zlex = preset("z-lex-aff-gamma")
        runs = [(UnitalContext.hoop(ncaff, ncaff.default_unit), "ncaff"),
                (UnitalContext.hoop(zlex, zlex.bottom), "z-lex-aff-gamma")]
        for ctx, name in runs:
            v = check_eqbase(ctx, 3, Mode.sampled(10_000, seed=0))
            least = min(x.checked for x in v.verdicts)
            ok = ok and v.holds and least >= 10_000
            parts.append(f"{name}: {len(v.verdicts)} schema instances hold={v.holds}, "
                         f"min samples {least}")
        xs = sample_elements(ncaff, 10_000, seed=1)
        rep = strong_unit_witness(ncaff, ncaff.default_unit, xs)
        ok = ok and rep.fraction_witnessed == 1.0
        parts.append(f"ncaff unit witnesses {rep.fraction_witnessed:.0%}")
        q = preset("q01")
        cands = [u for u in sample_elements(q, 3_000, seed=2) if u < 1][:1_000]
        upsets = 0
        for u in cands:
            r = strong_unit_witness(q, u, [u / 2])
            if r.refuted and f"[{q.fmt(u)}, 1]" in r.witnesses[0].proof:
                upsets += 1
        ok = ok and len(cands) >= 1_000 and upsets == len(cands)
        parts.append(f"q01 {upsets}/{len(cands)} candidates refuted with F(u) = [u, 1]")
        return ok, "; ".join(parts)
    criterion(capsys, 5, "unital hoop suite", body)


def test_c6_noncommutative_phenomena(capsys):
    def body():
        proc = subprocess.run([sys.executable, "-m", "pseudobl", "gamma", "--group", "z-lex-aff",
                               "--samples", "10000", "--pairs", "1000", "--seed", "0"],
                              capture_output=True, text=True)
        rep = json.loads(proc.stdout)
        st = {c["name"]: c for c in rep["checks"]}
        want = ("non-commutative-witness", "negations-coincide", "maxfilter-normality")
        ok = proc.returncode == 0 and all(st[k]["status"] == "pass" for k in want)
        w = st["non-commutative-witness"]["witness"]
        return ok, (f"exit {proc.returncode}, witness x={w['x']} y={w['y']} "
                    f"x+y={w['x+y']} y+x={w['y+x']}, "
                    + ", ".join(f"{k}={st[k]['status']}" for k in want[1:]))
    criterion(capsys, 6, "non-commutative phenomena", body)


def test_c7_commuting_negations(capsys):
    def body():
        premises = violations = special = 0
        for A in cached_catalog("pbl", 6):
            rep = check_thm35(A, 4)
            premises += rep.premises
            violations += len(rep.violations)
            s = check_bdk_special(A)
            if s.precondition:
                special += 1
                violations += not s.inequality
        return violations == 0, (f"premises hold on {premises} algebras, x²y² ≤ yx checked on "
                                 f"{special}, {violations} violations")
    criterion(capsys, 7, "commuting-negation checker", body)


def test_c8_search_determinism(capsys, tmp_path):
    def body():
        start = time.perf_counter()
        two, _ = models_of_size(2, "pbl")
        three, _ = models_of_size(3, "pbl")
        le = [[x <= y for y in range(3)] for x in range(3)]
        split = [algebra_from_product([[0, 0, 0], [0, aa, 1], [0, 1, 2]], le, 2, 0)
                 for aa in (0, 1)]
        split_ok = (len(three) == 2 and not is_isomorphic(*split)
                    and all(any(is_isomorphic(A, B) for B in three) for A in split))
        dirs = [tmp_path / "run1", tmp_path / "run2", tmp_path / "jobs4"]
        catalog(5, dirs[0], jobs=1)
        catalog(5, dirs[1], jobs=1)
        man = catalog(5, dirs[2], jobs=4)
        names = sorted(p.name for p in dirs[0].iterdir())
        same = all(sorted(p.name for p in d.iterdir()) == names for d in dirs[1:]) and all(
            (dirs[0] / f).read_bytes() == (d / f).read_bytes() for d in dirs[1:] for f in names)
        secs = time.perf_counter() - start
        ok = len(two) == 1 and split_ok and same and secs < 300
        return ok, (f"size 2: {len(two)}, size 3: {len(three)} (a·a ∈ {{0, a}} split ok="
                    f"{split_ok}), catalog {man.counts} over {len(names)} files "
                    f"byte-identical={same}")
    criterion(capsys, 8, "search determinism and counts", body)


def test_c9_evaluator_oracle(capsys):
    def body():
        algebras = cached_catalog("pbl", 6)
        rng = random.Random(20261014)
        total = mismatches = 0
        for A in algebras:
            for _ in range(10_000):
                t = T.random_term(rng, 5)
                env = {v: rng.randrange(A.size) for v in ("x", "y", "z")}
                total += 1
                if T.eval_term(A, t, env) != T.eval_term_naive(A, t, env):
                    mismatches += 1
        return mismatches == 0, (f"{len(algebras)} algebras, {total} terms, "
                                 f"{mismatches} disagreements")
    criterion(capsys, 9, "evaluator oracle", body)


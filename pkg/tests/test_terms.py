import random

import pytest

from pseudobl import named, terms as T
from pseudobl.computable import preset
from pseudobl.errors import UnboundedAlgebra, UnboundVariable

from conftest import catalog


def env_for(A, rng):
    return {v: rng.randrange(A.size) for v in ("x", "y", "z")}


def test_basic_evaluation():
    A = named.l3()
    x, y = T.var("x"), T.var("y")
    env = {"x": 1, "y": 1}
    assert T.eval_term(A, T.mul(x, y), env) == 0
    assert T.eval_term(A, T.to(x, T.BOTTOM), env) == 1
    assert T.eval_term(A, T.oplus(x, y), env) == 2
    assert T.eval_term(A, T.power(x, 0), env) == A.top
    assert T.eval_term_naive(A, T.odot(T.minus(x), y), env) == 0


def test_unbound_variable():
    A = named.g3()
    with pytest.raises(UnboundVariable):
        T.eval_term(A, T.var("w"), {})
    with pytest.raises(UnboundVariable):
        T.eval_term_naive(A, T.var("w"), {})


def test_bounded_only_ops_need_bottom():
    A = named.g3().with_bottom(None)
    t = T.minus(T.var("x"))
    with pytest.raises(UnboundedAlgebra):
        T.eval_term(A, t, {"x": 0})
    with pytest.raises(UnboundedAlgebra):
        T.eval_term_naive(A, t, {"x": 0})
    with pytest.raises(UnboundedAlgebra):
        T.eval_term(A, T.BOTTOM, {})


def test_evaluators_agree_on_catalog_sample():
    rng = random.Random(7)
    for A in catalog("pbl", 4) + [named.nb6()]:
        for _ in range(300):
            t = T.random_term(rng, 4)
            env = env_for(A, rng)
            assert T.eval_term(A, t, env) == T.eval_term_naive(A, t, env)


def test_unbounded_evaluation_on_hoops():
    rng = random.Random(3)
    for A in catalog("hoop", 4):
        A = A.with_bottom(None)
        for _ in range(200):
            t = T.random_term(rng, 4, bounded=False)
            env = env_for(A, rng)
            assert T.eval_term(A, t, env) == T.eval_term_naive(A, t, env)


def test_structural_evaluator_on_computable():
    A = preset("zxz-gamma")
    x = T.var("x")
    a = (0, 3)
    assert T.eval_term(A, T.to(x, x), {"x": a}) == A.top
    assert T.eval_term(A, T.tilde(T.minus(x)), {"x": a}) == a

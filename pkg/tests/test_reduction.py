"""Generators, rewriting, quotients, the involution, and the checkers."""

import random

import pytest

from ffmzv import (EMPTY, Index, IndexAlgebra, InvalidInput, RatFunc, Reducer,
                   ReductionDiverged, carlitz_bracket, compositions, field)
from ffmzv.reduction import BasisVector


def l1(ctx):
    return RatFunc.of(carlitz_bracket(ctx.field, 1), ctx.field)


def gen_triples(q, wmax):
    for w in range(q, wmax + 1):
        for m in range(1, w // q + 1):
            rest = w - m * q
            for ws in range(rest + 1):
                for s in compositions(ws):
                    for n in compositions(rest - ws):
                        yield s, m, n


def test_gen_a_fundamental_shape(ctx2, ctx3):
    for ctx in (ctx2, ctx3):
        A, R, q = ctx.algebra, ctx.reducer, ctx.field.q
        for fam in ("li", "zeta"):
            g = R.gen_A(fam, EMPTY, 1, EMPTY)
            assert g == A.mono((q,)) - A.mono((1, q - 1)).scale(l1(ctx))


def test_gen_a_weight(ctx3):
    R = ctx3.reducer
    rng = random.Random(0)
    pool = [s for w in range(0, 4) for s in compositions(w)]
    for _ in range(10):
        s, n = rng.choice(pool), rng.choice(pool)
        m = rng.randint(1, 2)
        for fam in ("li", "zeta"):
            g = R.gen_A(fam, s, m, n)
            w = s.weight + m * ctx3.field.q + n.weight
            assert all(t.weight == w for t in g.terms)


def test_decompose(ctx2):
    R = ctx2.reducer
    d = R.decompose_T(Index((1, 2, 2, 5, 1)))
    assert (d.s, d.m, d.n) == (Index((1,)), 3, Index((5, 1)))
    d = R.decompose_T(Index((2,)))
    assert (d.s, d.m, d.n) == (EMPTY, 2, EMPTY)
    d = R.decompose_T(Index((1, 2, 1)))
    assert (d.s, d.m, d.n) == (Index((1, 2, 1)), 1, EMPTY)
    assert d.s.is_thakur(2)


def test_decompose_roundtrip_random():
    rng = random.Random(42)
    for q in (2, 3, 4):
        R = Reducer(IndexAlgebra(field(q)))
        for _ in range(4000):
            s = Index([rng.randint(1, q + 3) for _ in range(rng.randint(0, 7))])
            d = R.decompose_T(s)
            assert d.reassemble(q) == s
            assert d.s.is_thakur(q)
            assert d.n.in_iprime(q)
            assert d.m >= 1


def test_u_step_examples(ctx2, ctx3):
    for ctx in (ctx2, ctx3):
        A, R, q = ctx.algebra, ctx.reducer, ctx.field.q
        got = R.u_step("li", A.mono((q,)))
        assert got == A.mono((1, q - 1)).scale(l1(ctx))
        assert R.u_step("li", A.mono((1,))) == A.mono((1,))
    # q=2: (3) -> (2,1) + L1*(1,2)
    A, R = ctx2.algebra, ctx2.reducer
    got = R.u_step("li", A.mono((3,)))
    assert got == A.mono((2, 1)) + A.mono((1, 2)).scale(l1(ctx2))


def test_u_step_preserves_values(ctx2, ctx3):
    for ctx in (ctx2, ctx3):
        A, R, E = ctx.algebra, ctx.reducer, ctx.evaluator
        for fam in ("li", "zeta"):
            for s in ((ctx.field.q,), (ctx.field.q + 1,), (1, ctx.field.q)):
                stepped = R.u_step(fam, A.mono(s))
                assert E.eval_value(fam, stepped, 40) == E.eval_value(fam, Index(s), 40)


def test_reduce_fixes_thakur_support(ctx3):
    A, R = ctx3.algebra, ctx3.reducer
    P = A.mono((1, 2)) + A.mono((3, 1)).scale(ctx3.field.rat(ctx3.field.T))
    assert R.reduce_to_T("li", P) == P


@pytest.mark.parametrize("q", [2, 3])
@pytest.mark.parametrize("fam", ["li", "zeta"])
def test_kernel_reduction(q, fam, ctx2, ctx3):
    ctx = ctx2 if q == 2 else ctx3
    R = ctx.reducer
    for s, m, n in gen_triples(q, 6):
        red = R.reduce_to_T(fam, R.gen_A(fam, s, m, n))
        assert red.is_zero, (fam, s, m, n)


def test_reduction_cap():
    ctx = Reducer(IndexAlgebra(field(2)))
    with pytest.raises(ReductionDiverged) as err:
        ctx.reduce_to_T("li", ctx.algebra.mono((5, 5)), cap=1)
    assert err.value.trail


def test_value_preservation(ctx2, ctx3):
    rng = random.Random(7)
    for ctx in (ctx2, ctx3):
        E, A, R = ctx.evaluator, ctx.algebra, ctx.reducer
        pool = [s for w in range(1, 7) for s in compositions(w)]
        for _ in range(10):
            s = rng.choice(pool)
            for fam in ("li", "zeta"):
                red = R.reduce_to_T(fam, A.mono(s))
                assert E.eval_value(fam, red, 40) == E.eval_value(fam, s, 40), (fam, s)


def test_reduce_li_3_at_q2_numeric_oracle(ctx2):
    """The weight-3 reduction, cross-checked against the numeric value."""
    A, R, E = ctx2.algebra, ctx2.reducer, ctx2.evaluator
    red = R.reduce_to_T("li", A.mono((3,)))
    assert all(t.is_thakur(2) for t in red.terms)
    assert E.eval_value("li", red, 40) == E.eval_value("li", Index((3,)), 40)


def test_dagger_expand(ctx2, ctx3):
    for ctx in (ctx2, ctx3):
        R, A = ctx.reducer, ctx.algebra
        for fam in ("li", "zeta"):
            assert R.dagger_expand(fam, EMPTY) == A.one()
            for s in (1, 2, 3):
                assert R.dagger_expand(fam, Index((s,))) == A.mono((s,), -1)
    # depth 2, li side: (s2, s1) + (s1+s2)
    A3, R3 = ctx3.algebra, ctx3.reducer
    assert R3.dagger_expand("li", Index((1, 2))) == A3.mono((2, 1)) + A3.mono((3,))
    # q=2: dagger(3,3) - (3,3) = (6)
    A2, R2 = ctx2.algebra, ctx2.reducer
    assert R2.dagger_expand("li", Index((3, 3))) - A2.mono((3, 3)) == A2.mono((6,))


def test_dagger_expand_soundness_numeric(ctx2, ctx3):
    for ctx in (ctx2, ctx3):
        E, R = ctx.evaluator, ctx.reducer
        for w in range(1, 8):
            for s in compositions(w, max_depth=4):
                if s.depth > 4 or w > 7:
                    continue
                for fam in ("li", "zeta"):
                    famd = fam + "-dagger"
                    lhs = E.eval_value(famd, s, 40)
                    rhs = E.eval_value(fam, R.dagger_expand(fam, s), 40)
                    assert lhs == rhs, (fam, s)


def test_linear_solve(ctx2):
    R = ctx2.reducer
    F = ctx2.field
    zero = BasisVector(2, {})
    v1 = BasisVector(2, {Index((1, 1)): RatFunc.of(1, F)})
    assert R.linear_solve([v1], zero) == [RatFunc.of(0, F)]
    assert R.linear_solve([v1], v1) == [RatFunc.of(1, F)]
    assert R.linear_solve([], zero) == []
    # q=2, w=2: reduce(li, (2)) lies in span of reduce(li, (1)*(1))
    A = ctx2.algebra
    t1 = R.to_vector(2, R.reduce_to_T("li", A.mono((2,))))
    t2 = R.to_vector(2, R.reduce_to_T("li", A.harmonic(A.mono((1,)), A.mono((1,)))))
    got = R.linear_solve([t2], t1)
    assert got == [RatFunc.of(1, F)]
    # and something outside a one-vector span at weight 3
    e1 = BasisVector(3, {Index((1, 1, 1)): RatFunc.of(1, F)})
    e2 = BasisVector(3, {Index((2, 1)): RatFunc.of(1, F)})
    assert R.linear_solve([e1], e2) is None
    both = BasisVector(3, {Index((1, 1, 1)): RatFunc.of(F.T, F),
                           Index((2, 1)): RatFunc.of(1, F)})
    coeffs = R.linear_solve([e1, e2], both)
    assert coeffs == [RatFunc.of(F.T, F), RatFunc.of(1, F)]


def test_quotient_dimensions(ctx2, ctx4):
    qs = ctx2.reducer.quotient_space(6)
    assert (qs.dim_space, qs.dim_ideal, qs.dim_quotient) == (8, 5, 3)
    # below the ideal weight there is nothing to mod out
    assert ctx4.reducer.quotient_space(2).dim_ideal == 0


def test_li6_class_nonzero(ctx2):
    A, R = ctx2.algebra, ctx2.reducer
    red = R.reduce_to_T("li", A.mono((6,)))
    qs = R.quotient_space(6)
    assert not qs.class_is_zero(R.to_vector(6, red))


def test_iota_weight_one_p_odd(ctx3):
    m = ctx3.reducer.iota_matrix(1)
    assert m.dim == 1
    assert m.rows[0][0] == RatFunc.of(-1, ctx3.field)


def test_iota_weight_zero(ctx2):
    m = ctx2.reducer.iota_matrix(0)
    assert m.dim == 1 and m.rows[0][0] == RatFunc.of(1, ctx2.field)


@pytest.mark.parametrize("q", [2, 3])
def test_iota_involution(q, ctx2, ctx3):
    ctx = ctx2 if q == 2 else ctx3
    for w in range(0, 7):
        assert ctx.reducer.iota_matrix(w).squared_is_identity(), w


def test_nontriviality_witnesses(ctx2, ctx3, ctx4):
    # p != 2: class(dagger(1) - (1)) != 0 at weight 1
    A3, R3 = ctx3.algebra, ctx3.reducer
    wit = R3.reduce_to_T("li", R3.dagger_expand("li", Index((1,))) - A3.mono((1,)))
    assert not R3.quotient_space(1).class_is_zero(R3.to_vector(1, wit))
    # q >= 4: class((2)) != 0 at weight 2
    A4, R4 = ctx4.algebra, ctx4.reducer
    wit = R4.reduce_to_T("li", A4.mono((2,)))
    assert not R4.quotient_space(2).class_is_zero(R4.to_vector(2, wit))
    # q = 2: class((6)) != 0 at weight 6
    A2, R2 = ctx2.algebra, ctx2.reducer
    wit = R2.reduce_to_T("li", A2.mono((6,)))
    assert not R2.quotient_space(6).class_is_zero(R2.to_vector(6, wit))


@pytest.mark.parametrize("q", [2, 3])
def test_check_theorem(q, ctx2, ctx3):
    ctx = ctx2 if q == 2 else ctx3
    for w in range(0, 7):
        rep = ctx.reducer.check_theorem(w)
        assert rep.ok, (q, w, [c for c in rep.cases if c.status == "fail"])


def test_check_theorem_weight_zero_vacuous(ctx2):
    rep = ctx2.reducer.check_theorem(0)
    assert rep.ok and len(rep.cases) == 1  # only the involution case


def test_check_keylemma(ctx2, ctx3):
    r = ctx2.reducer.check_keylemma(Index((2,)), EMPTY, [])
    assert r.ok and "exact zero" in r.cases[0].detail
    assert ctx2.reducer.check_keylemma(EMPTY, Index((1,)), [1]).ok
    assert ctx3.reducer.check_keylemma(Index((1,)), EMPTY, [2]).ok
    assert ctx3.reducer.check_keylemma(Index((1,)), Index((2,)), [1]).ok
    with pytest.raises(InvalidInput):
        ctx2.reducer.check_keylemma(EMPTY, EMPTY, [])


@pytest.mark.parametrize("q", [2, 3])
def test_check_prop41(q, ctx2, ctx3):
    ctx = ctx2 if q == 2 else ctx3
    for s in range(1, 5):
        for n in range(1, 5):
            rep = ctx.reducer.check_prop41(s, n)
            assert rep.ok, (q, s, n)


def test_check_prop42(ctx2, ctx3):
    assert ctx2.reducer.check_prop42(EMPTY, EMPTY).ok
    assert ctx3.reducer.check_prop42(Index((1,)), Index((2,))).ok
    # outside the hypotheses: only an observation, never a failure
    rep = ctx2.reducer.check_prop42(Index((2,)), EMPTY)
    assert rep.cases[0].status == "observation"
    rep = ctx2.reducer.check_prop42(EMPTY, Index((1, 1)))
    assert rep.cases[0].status == "observation"


def test_check_conjecture(ctx2):
    rep = ctx2.reducer.check_conjecture(EMPTY)
    assert rep.cases[0].status == "observation"
    assert "equal" in rep.cases[0].detail
    for s in ((1,), (2,), (3,), (4,)):
        rep = ctx2.reducer.check_conjecture(Index(s))
        assert rep.cases[0].status == "observation"
        assert rep.cases[0].detail == "classes equal"
    rep = ctx2.reducer.check_conjecture(Index((1, 2)))
    assert rep.cases[0].status == "observation"

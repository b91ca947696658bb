import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import small_ints
from oracles import SQRT_2_OVER_A, SQRT_2A, QSqrt
from jacksym.field import ALPHA, ONE, const, poly
from jacksym.jack import jack
from jacksym.partition import Partition, revlex_order
from jacksym.symfunc import SymExpr, heis, inner
from jacksym.virasoro import (L1, Ln_action, M_op, VirasoroParams, annihilated, beta_star,
                              central_charge, m1m2_values, singular_check, solve_singular_beta)

P = Partition
ONE_MINUS_INV = ONE - ALPHA.inverse()


def el(*parts):
    return SymExpr.basis_element("p", P(parts))


def J(*parts):
    return jack(parts, "J", "p").expr


def p_expr(weight):
    keys = revlex_order(weight)
    coeffs = st.lists(st.tuples(small_ints, small_ints), min_size=len(keys), max_size=len(keys))
    return coeffs.map(lambda cs: SymExpr("p", {k: poly(a, b) for k, (a, b) in zip(keys, cs)}))


betas = st.tuples(small_ints, small_ints).map(lambda ab: const(ab[0]) + ALPHA.inverse() * ab[1])


def M_general(n, f):
    """Sum_{i>=1} h_{-i} h_{i+n} on a p-expression, for any n >= 1."""
    top = max((la[0] for la in f.terms if la), default=0)
    out = SymExpr.zero("p")
    for i in range(1, top - n + 1):
        out = out + heis(-i, heis(i + n, f))
    return out


def L_modes(n, f, beta):
    """Oracle: L_n summed directly over Heisenberg modes."""
    inv = ALPHA.inverse()
    quad = M_general(n, f)
    for m in range(1, n):
        quad = quad + heis(n - m, heis(m, f))
    lin = beta - ONE_MINUS_INV * (n + 1)
    return quad.scale(inv * (-1) ** n) + heis(n, f).scale(lin * (-1) ** (n - 1))


def test_M_examples():
    assert not M_op(1, el(1))
    assert M_op(1, el(2)).terms == {P((1,)): ALPHA * 2}
    with pytest.raises(ValueError):
        M_op(3, el(3))


@pytest.mark.parametrize("n", [1, 2])
def test_M_adjoint(n):
    for w in range(n, 6):
        for la in revlex_order(w):
            for mu in revlex_order(w - n):
                assert inner(M_op(-n, el(*mu)), el(*la)) == inner(el(*mu), M_op(n, el(*la)))


def test_L1_on_J1():
    for b in (const(0), const(3), ALPHA, const(2) - ALPHA.inverse() * 2):
        got = L1(el(1), VirasoroParams(b))
        want = (b - 2 + ALPHA.inverse() * 2) * ALPHA
        assert got.terms.get(P(()), const(0)) == want
    assert annihilated(el(1), const(2) - ALPHA.inverse() * 2)


@settings(max_examples=25)
@given(st.integers(1, 6).flatmap(p_expr), betas)
def test_mode_sum_oracle(f, beta):
    params = VirasoroParams(beta)
    for n in range(1, 6):
        assert Ln_action(n, f, params, max_n=5) == L_modes(n, f, beta)


@settings(max_examples=25)
@given(st.integers(1, 6).flatmap(p_expr), betas)
def test_virasoro_relations(f, beta):
    params = VirasoroParams(beta)

    def L(n, g):
        return Ln_action(n, g, params, max_n=5)

    assert L(1, L(2, f)) - L(2, L(1, f)) + L(3, f) == SymExpr.zero("p")
    assert L(1, L(3, f)) - L(3, L(1, f)) + L(4, f).scale(const(2)) == SymExpr.zero("p")
    # not implied by the recursive definition
    assert L(2, L(3, f)) - L(3, L(2, f)) + L(5, f) == SymExpr.zero("p")


def test_Ln_bound():
    with pytest.raises(ValueError):
        Ln_action(5, el(5), VirasoroParams(ALPHA))
    with pytest.raises(ValueError):
        Ln_action(0, el(1), VirasoroParams(ALPHA))


def test_grading():
    f = J(3, 2, 1)
    for n in range(1, 5):
        assert all(sum(k) == 6 - n for k in Ln_action(n, f, VirasoroParams(ALPHA)).terms)


def test_rationalization_derivation():
    # alpha_0 = (alpha - 1)/sqrt(2 alpha) reproduces c = 1 - 12 alpha_0^2
    alpha0 = SQRT_2A * ((ALPHA - 1) / (ALPHA * 2))
    assert (QSqrt(1) - alpha0 * alpha0 * 12).rational() == central_charge()
    for r in range(1, 4):
        for s in range(1, 4):
            alpha_p = SQRT_2A * (const(r + 1) / 2) - QSqrt(1 + s) / SQRT_2A
            beta = (alpha_p * SQRT_2_OVER_A).rational()
            assert beta == beta_star(r, s)
            assert ((alpha0 * 3 - alpha_p) * SQRT_2_OVER_A).rational() == ONE_MINUS_INV * 3 - beta
            assert ((alpha_p * SQRT_2_OVER_A) - ONE_MINUS_INV * 2).rational() == \
                beta - ONE_MINUS_INV * 2


def test_central_charge():
    assert central_charge() == const(13) - (ALPHA + ALPHA.inverse()) * 6
    assert central_charge().evaluate(1) == 1
    assert VirasoroParams(ALPHA).to_json()["central_charge"] == central_charge().to_json()


@pytest.mark.parametrize("la,mu", [((2,), (1,)), ((1, 1), (1,)), ((3,), (1,)), ((2, 1), (1, 1)),
                                   ((2,), (2,)), ((3, 1), (2,))])
def test_m1m2_examples(la, mu):
    v = m1m2_values(la, mu)
    assert v.holds


def test_singular_examples():
    res = singular_check(1, 1)
    assert res["is_singular"] and res["beta_star"] == const(2) - ALPHA.inverse() * 2
    assert singular_check(2, 1)["is_singular"] and singular_check(1, 2)["is_singular"]
    b = beta_star(1, 2)
    assert not Ln_action(3, J(1, 1), VirasoroParams(b))
    assert not Ln_action(4, J(2, 2), VirasoroParams(beta_star(2, 2)))
    assert solve_singular_beta((2, 1)) is None
    assert solve_singular_beta((2, 2)) == beta_star(2, 2)
    with pytest.raises(ValueError):
        singular_check(0, 1)


def test_not_singular_at_wrong_beta():
    assert not annihilated(J(2, 2), beta_star(2, 1))

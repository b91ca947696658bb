"""Feigin-Fuchs Virasoro operators on the Fock space, rationalized into Q(alpha).

The background charge enters only through beta = alpha' * sqrt(2/alpha), so
every coefficient below is a rational function of alpha:

    L1 = -M1/alpha + (beta - 2(1 - 1/alpha)) h1
    L2 =  M2/alpha + (3(1 - 1/alpha) - beta) h2 + h1 h1/alpha

Higher modes come from [L1, L_n] = (1 - n) L_{n+1}.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .field import ALPHA, ONE, ZERO, RatFun, const
from .jack import jack
from .operator import eig
from .partition import Partition
from .symfunc import SymExpr, heis, inner, to_p

DEFAULT_MAX_N = 4
_ONE_MINUS_INV = ONE - ALPHA.inverse()          # 1 - 1/alpha


@dataclass(frozen=True)
class VirasoroParams:
    beta: RatFun

    @property
    def alpha(self) -> RatFun:
        return ALPHA

    @property
    def central_charge(self) -> RatFun:
        return central_charge()

    def to_json(self) -> dict:
        return {"beta": self.beta.to_json(), "central_charge": self.central_charge.to_json()}


def central_charge() -> RatFun:
    """c = 13 - 6(alpha + 1/alpha)."""
    return const(13) - (ALPHA + ALPHA.inverse()) * 6


def _max_part(fp: SymExpr) -> int:
    return max((la[0] for la in fp.terms if la), default=0)


def M_op(n: int, f: SymExpr) -> SymExpr:
    """M_n = sum_{i>=1} h_{-i} h_{i+n} and M_{-n} = sum_{i>=1} h_{-i-n} h_i."""
    if n not in (-2, -1, 1, 2):
        raise ValueError(f"M_n is provided for n in -2, -1, 1, 2, not {n}")
    fp = to_p(f)
    top = _max_part(fp)
    out = SymExpr.zero("p")
    if n > 0:
        for i in range(1, top - n + 1):
            out = out + heis(-i, heis(i + n, fp))
    else:
        for i in range(1, top + 1):
            out = out + heis(-i - (-n), heis(i, fp))
    return out


def L1(f: SymExpr, params: VirasoroParams) -> SymExpr:
    fp = to_p(f)
    return M_op(1, fp).scale(-ALPHA.inverse()) + heis(1, fp).scale(params.beta - _ONE_MINUS_INV * 2)


def L2(f: SymExpr, params: VirasoroParams) -> SymExpr:
    fp = to_p(f)
    inv = ALPHA.inverse()
    return (M_op(2, fp).scale(inv) + heis(2, fp).scale(_ONE_MINUS_INV * 3 - params.beta)
            + heis(1, heis(1, fp)).scale(inv))


def Ln_action(n: int, f: SymExpr, params: VirasoroParams, max_n: int = DEFAULT_MAX_N) -> SymExpr:
    """L_n f for 1 <= n <= max_n via L_{n} = [L1, L_{n-1}] / (2 - n)."""
    if n < 1:
        raise ValueError("only positive modes are implemented")
    if n > max_n:
        raise ValueError(f"L_{n} exceeds the configured bound {max_n}")
    if n == 1:
        return L1(f, params)
    if n == 2:
        return L2(f, params)
    a = L1(Ln_action(n - 1, f, params, max_n), params)
    b = Ln_action(n - 1, L1(f, params), params, max_n)
    return (a - b).scale(const(1) / (2 - n))


# ---------------------------------------------------------------------------
# inner-product identities for M1, M2

def _J(la: Partition) -> SymExpr:
    return jack(la, "J", "p").expr if la else SymExpr.one("p")


def J2_star(f: SymExpr) -> SymExpr:
    """Adjoint of multiplication by J_(2): alpha h2 + h1 h1."""
    fp = to_p(f)
    return heis(2, fp).scale(ALPHA) + heis(1, heis(1, fp))


@dataclass(frozen=True)
class M1M2Check:
    la: Partition
    mu: Partition
    m1: tuple          # (lhs, rhs)
    m2: tuple

    @property
    def holds(self) -> bool:
        return self.m1[0] == self.m1[1] and self.m2[0] == self.m2[1]


def m1m2_values(la, mu) -> M1M2Check:
    la, mu = Partition(la), Partition(mu)
    Jl, Jm = _J(la), _J(mu)
    inv2a = (ALPHA * 2).inverse()
    lhs1 = inner(M_op(1, Jl), Jm)
    rhs1 = inv2a * (eig(la) - eig(mu) - eig(Partition((1,)))) * inner(heis(1, Jl), Jm)
    lhs2 = inner(M_op(2, Jl), Jm)
    rhs2 = ((ALPHA * ALPHA * 4).inverse() * (eig(la) - eig(mu) - eig(Partition((2,))))
            * inner(J2_star(Jl), Jm)
            - ALPHA.inverse() * inner(M_op(1, heis(1, Jl)), Jm))
    return M1M2Check(la, mu, (lhs1, rhs1), (lhs2, rhs2))


def m1m2_identity_check(la, mu) -> bool:
    return m1m2_values(la, mu).holds


# ---------------------------------------------------------------------------
# singular vectors

def beta_star(r: int, s: int) -> RatFun:
    """(r + 1) - (1 + s)/alpha."""
    return const(r + 1) - ALPHA.inverse() * (1 + s)


def annihilated(f: SymExpr, beta: RatFun) -> bool:
    params = VirasoroParams(beta)
    return not L1(f, params) and not L2(f, params)


def singular_check(r: int, s: int) -> dict:
    if r < 1 or s < 1:
        raise ValueError("r and s must be positive")
    b = beta_star(r, s)
    la = Partition((r,) * s)
    return {"r": r, "s": s, "lambda": la, "beta_star": b,
            "is_singular": annihilated(_J(la), b), "central_charge": central_charge()}


def solve_singular_beta(la) -> Optional[RatFun]:
    """The beta in Q(alpha) with L1 J_la = L2 J_la = 0, or None.

    L1 J = A + beta B with B = h1 J, so beta is forced by any nonzero
    component of B; then both L1 and L2 are checked at that value.
    """
    la = Partition(la)
    if not la:
        return None
    f = _J(la)
    B = heis(1, f)
    A = L1(f, VirasoroParams(ZERO))
    key = next(iter(B.terms))
    beta = -(A[key] / B[key])
    return beta if annihilated(f, beta) else None

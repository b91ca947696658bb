"""Pieri and Littlewood-Richardson data for Jack functions, plus integrality sweeps.

J is the reference normalization: C^la_{mu nu} = <J_mu J_nu, J_la>.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Optional

from .field import ONE, ZERO, RatFun
from .jack import f_lower, f_upper, jack, register_cache
from .partition import (EMPTY, Partition, bottomed_split, enumerate_filtrations, filtrations_from,
                        full_hook_product, hook_product, is_horizontal_strip, lower_hook_product,
                        revlex_order, upper_hook_product)
from .symfunc import SymExpr, inner, mul


@dataclass(frozen=True)
class PieriDatum:
    n: int
    mu: Partition
    la: Partition
    value: RatFun
    strip: bool


@dataclass(frozen=True)
class LRDatum:
    mu: Partition
    nu: Partition
    la: Partition
    value: RatFun
    # J-normalization factor applied to the Q-Q-J filtration sum, when that route was used
    conversion: Optional[RatFun] = None
    witnesses: Optional[tuple] = None


@register_cache
@lru_cache(maxsize=None)
def J_p(la: Partition) -> SymExpr:
    """J_la on power sums; J of the empty partition is 1."""
    if not la:
        return SymExpr.one("p")
    return jack(la, "J", "p").expr


def pieri_hook(n: int, mu, la) -> RatFun:
    """<J_n J_mu, J_la> from the hook-length product; 0 off horizontal strips."""
    mu, la = Partition(mu), Partition(la)
    if not is_horizontal_strip(mu, la, n):
        return ZERO
    mu_b, mu_u, la_b, la_u = bottomed_split(mu, la)
    return (hook_product(mu, mu_u, "lower") * hook_product(mu, mu_b, "upper")
            * (full_hook_product(Partition((n,)), "upper") if n else ONE)
            * hook_product(la, la_u, "upper") * hook_product(la, la_b, "lower"))


def pieri_direct(n: int, mu, la) -> RatFun:
    """<J_n J_mu, J_la> by multiplying and pairing power-sum expansions."""
    mu, la = Partition(mu), Partition(la)
    if n + sum(mu) != sum(la):
        return ZERO
    return inner(mul(J_p(Partition((n,)) if n else EMPTY), J_p(mu)), J_p(la))


def pieri(n: int, mu, la) -> PieriDatum:
    mu, la = Partition(mu), Partition(la)
    return PieriDatum(n, mu, la, pieri_hook(n, mu, la), is_horizontal_strip(mu, la, n))


@register_cache
@lru_cache(maxsize=None)
def _product_p(mu: Partition, nu: Partition) -> SymExpr:
    if nu < mu:
        mu, nu = nu, mu
    return mul(J_p(mu), J_p(nu))


def lr_direct(mu, nu, la) -> RatFun:
    """C^la_{mu nu} = <J_mu J_nu, J_la>."""
    mu, nu, la = Partition(mu), Partition(nu), Partition(la)
    if sum(mu) + sum(nu) != sum(la):
        return ZERO
    key = (mu, nu) if mu <= nu else (nu, mu)
    return inner(_product_p(*key), J_p(la))


def lr_filtration_terms(mu, nu, la):
    """Yield (delta1, delta2, delta, term) for <Q_mu Q_nu, J_la> / v_{la la}."""
    mu, nu, la = Partition(mu), Partition(nu), Partition(la)
    if sum(mu) + sum(nu) != sum(la):
        return
    for d1 in filtrations_from(mu):
        a = f_lower(mu, d1) if len(d1) else ONE
        for d2 in filtrations_from(nu):
            b = f_lower(nu, d2) if len(d2) else ONE
            start = d1.end.union(d2.end)
            for d in enumerate_filtrations(start, la):
                yield d1, d2, d, a * b * (f_upper(la, d) if len(d) else ONE)


def lr_filtration(mu, nu, la, witnesses: bool = False) -> LRDatum:
    """C^la_{mu nu} from the filtration-triple sum, rescaled from Q-Q-J to J-J-J."""
    mu, nu, la = Partition(mu), Partition(nu), Partition(la)
    conv = upper_hook_product(mu) * upper_hook_product(nu)
    if sum(mu) + sum(nu) != sum(la):
        return LRDatum(mu, nu, la, ZERO, conv, () if witnesses else None)
    total = ZERO
    seen = [] if witnesses else None
    for d1, d2, d, t in lr_filtration_terms(mu, nu, la):
        total = total + t
        if witnesses:
            seen.append((d1.steps, d2.steps, d.steps, t))
    qqj = lower_hook_product(la) * total
    return LRDatum(mu, nu, la, conv * qqj, conv, tuple(seen) if witnesses else None)


# ---------------------------------------------------------------------------
# integrality

@dataclass
class ClaimResult:
    claim: str
    checked: int = 0
    violations: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {"claim": self.claim, "passed": self.passed, "checked": self.checked,
                "violations": [[str(x) for x in v] for v in self.violations]}


def knop_sahi_claim(max_weight: int) -> ClaimResult:
    """v_{la mu}/m(mu)! in Z>=0[alpha] for J_la = sum v_{la mu} m_mu."""
    res = ClaimResult("knop_sahi")
    for n in range(1, max_weight + 1):
        for la in revlex_order(n):
            for mu, v in jack(la, "J", "m").expr.items():
                res.checked += 1
                q = v / mu.m_factorial()
                if not q.is_nonneg_int_poly():
                    res.violations.append((la, mu, q))
    return res


def stanley_claim(max_weight: int) -> ClaimResult:
    """Power-sum coefficients of J_la lie in Z[alpha]."""
    res = ClaimResult("stanley_p_integrality")
    for n in range(1, max_weight + 1):
        for la in revlex_order(n):
            for mu, c in J_p(la).items():
                res.checked += 1
                if not c.is_int_poly():
                    res.violations.append((la, mu, c))
    return res


def lr_integrality_claim(max_weight: int) -> ClaimResult:
    """C^la_{mu nu} in Z[alpha] for nonempty mu, nu with |la| <= max_weight."""
    res = ClaimResult("lr_integrality")
    for n in range(2, max_weight + 1):
        for k in range(1, n // 2 + 1):
            for mu, nu in product(revlex_order(k), revlex_order(n - k)):
                if k == n - k and nu < mu:
                    continue
                for la in revlex_order(n):
                    c = lr_direct(mu, nu, la)
                    res.checked += 1
                    if not c.is_int_poly():
                        res.violations.append((mu, nu, la, c))
    return res


def integrality_report(max_weight: int, lr_max_weight: Optional[int] = None) -> dict:
    lr_w = max_weight if lr_max_weight is None else lr_max_weight
    claims = [knop_sahi_claim(max_weight), stanley_claim(max_weight), lr_integrality_claim(lr_w)]
    return {c.claim: c for c in claims}

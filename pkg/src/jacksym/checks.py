"""Invariant suites shared by ``jacksym selfcheck`` and the benchmarks.

Each suite returns a SuiteResult; failures are witnesses, never exceptions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Dict, Optional

from .field import ALPHA, ONE, ZERO
from .jack import FILTRATION_MAX_WEIGHT, jack, two_column_closed_form, two_row_closed_form
from .operator import apply_D_p, apply_Dprime, dprime_table, eig
from .partition import Partition, revlex_order
from .structure import integrality_report, lr_direct, lr_filtration, pieri_direct, pieri_hook
from .symfunc import SymExpr, inner
from .virasoro import beta_star, m1m2_values, singular_check, solve_singular_beta

FOUR_WAY = ("iteration", "determinant", "filtration", "gram_schmidt")
LR_MAX_WEIGHT = 6
VIRASORO_MAX_WEIGHT = 6
LR_INTEGRALITY_MAX_WEIGHT = 7


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, **witness):
        self.failures.append({k: _show(v) for k, v in witness.items()})

    def to_json(self) -> dict:
        return {"suite": self.name, "passed": self.passed, "checked": self.checked,
                "failures": self.failures}


def _show(v):
    if isinstance(v, Partition):
        return str(v)
    if isinstance(v, (list, tuple)):
        return [_show(x) for x in v]
    if isinstance(v, (bool, int, str)) or v is None:
        return v
    return str(v)


def _shapes(max_weight: int):
    for n in range(1, max_weight + 1):
        yield from revlex_order(n)


def four_way(max_weight: int) -> SuiteResult:
    res = SuiteResult("four_way")
    for la in _shapes(min(max_weight, FILTRATION_MAX_WEIGHT)):
        ref = jack(la, "Q", "q", FOUR_WAY[0])
        for method in FOUR_WAY[1:]:
            other = jack(la, "Q", "q", method)
            res.checked += 1
            if other.terms != ref.terms:
                mu = next(k for k in revlex_order(sum(la)) if ref[k] != other[k])
                res.fail(la=la, mu=mu, methods=[FOUR_WAY[0], method], values=[ref[mu], other[mu]])
    return res


def eigen(max_weight: int) -> SuiteResult:
    res = SuiteResult("eigenvector")
    for la in _shapes(max_weight):
        q = jack(la, "Q", "p").expr
        res.checked += 1
        if apply_D_p(q) != q.scale(eig(la)):
            res.fail(la=la, eigenvalue=eig(la))
    return res


def duality(max_weight: int) -> SuiteResult:
    """<P_la, Q_mu> = delta."""
    res = SuiteResult("duality")
    for n in range(1, min(max_weight, 7) + 1):
        for la in revlex_order(n):
            P = jack(la, "P", "p").expr
            for mu in revlex_order(n):
                v = inner(P, jack(mu, "Q", "p").expr)
                res.checked += 1
                if v != (ONE if la == mu else ZERO):
                    res.fail(la=la, mu=mu, value=v)
    return res


def operator_identities(max_weight: int) -> SuiteResult:
    """D = 2 alpha D' + alpha |la| on each graded piece; D self-adjoint."""
    res = SuiteResult("operator")
    for n in range(1, max_weight + 1):
        shift = ALPHA * n
        for nu in revlex_order(n):
            q = SymExpr.basis_element("q", nu)
            lhs = apply_D_p(q)
            rhs = apply_Dprime(q).scale(ALPHA * 2) + q.scale(shift)
            res.checked += 1
            if lhs != rhs:
                res.fail(la=nu, identity="shift")
        if n <= 6:
            ps = [SymExpr.basis_element("p", la) for la in revlex_order(n)]
            images = [apply_D_p(p) for p in ps]
            for i, a in enumerate(ps):
                for j in range(i, len(ps)):
                    res.checked += 1
                    if inner(images[i], ps[j]) != inner(a, images[j]):
                        res.fail(la=revlex_order(n)[i], mu=revlex_order(n)[j], identity="self-adjoint")
    return res


def closed_forms(max_weight: int) -> SuiteResult:
    """Two-row Q and two-column J closed forms against iteration."""
    res = SuiteResult("closed_forms")
    for n in range(2, max_weight + 1):
        for s in range(1, n // 2 + 1):
            r = n - s
            for cf in (two_row_closed_form(r, s), two_column_closed_form(r, s)):
                ref = jack(cf.shape, cf.normalization, cf.basis)
                res.checked += 1
                if cf.terms != ref.terms:
                    res.fail(la=cf.shape, methods=["closed_form", "iteration"],
                             values=[cf.expr, ref.expr])
    return res


def pieri(max_weight: int) -> SuiteResult:
    res = SuiteResult("pieri")
    for la in _shapes(max_weight):
        w = sum(la)
        for n in range(0, w + 1):
            for mu in revlex_order(w - n):
                a, b = pieri_hook(n, mu, la), pieri_direct(n, mu, la)
                res.checked += 1
                if a != b:
                    res.fail(n=n, mu=mu, la=la, methods=["hook", "direct"], values=[a, b])
    return res


def lr(max_weight: int) -> SuiteResult:
    res = SuiteResult("littlewood_richardson")
    for n in range(2, min(max_weight, LR_MAX_WEIGHT) + 1):
        for k in range(1, n):
            for mu in revlex_order(k):
                for nu in revlex_order(n - k):
                    for la in revlex_order(n):
                        a = lr_direct(mu, nu, la)
                        b = lr_filtration(mu, nu, la).value
                        res.checked += 1
                        if a != b:
                            res.fail(mu=mu, nu=nu, la=la, methods=["direct", "filtration"],
                                     values=[a, b])
    return res


def integrality(max_weight: int) -> SuiteResult:
    res = SuiteResult("integrality")
    report = integrality_report(max_weight, min(max_weight, LR_INTEGRALITY_MAX_WEIGHT))
    for claim in report.values():
        res.checked += claim.checked
        for v in claim.violations:
            res.fail(claim=claim.claim, witness=list(v))
    return res


def virasoro(max_weight: int) -> SuiteResult:
    res = SuiteResult("virasoro")
    top = min(max_weight, VIRASORO_MAX_WEIGHT)
    for la in _shapes(top):
        for d in (1, 2):
            for mu in revlex_order(sum(la) - d):
                c = m1m2_values(la, mu)
                res.checked += 1
                if not c.holds:
                    res.fail(la=la, mu=mu, m1=list(c.m1), m2=list(c.m2))
        beta = solve_singular_beta(la)
        res.checked += 1
        expected = beta_star(la[0], len(la)) if la.is_rectangle() else None
        if beta != expected:
            res.fail(la=la, singular_beta=beta, expected=expected)
    for r in range(1, 4):
        for s in range(1, 4):
            if r * s <= max_weight:
                res.checked += 1
                if not singular_check(r, s)["is_singular"]:
                    res.fail(r=r, s=s, beta_star=beta_star(r, s))
    return res


SUITES: Dict[str, Callable[[int], SuiteResult]] = {
    "four_way": four_way,
    "eigenvector": eigen,
    "duality": duality,
    "operator": operator_identities,
    "closed_forms": closed_forms,
    "pieri": pieri,
    "littlewood_richardson": lr,
    "integrality": integrality,
    "virasoro": virasoro,
}


def run_all(max_weight: int, only: Optional[list] = None) -> list:
    names = only or list(SUITES)
    return [SUITES[name](max_weight) for name in names]


def table_is_integral(weight: int) -> bool:
    """Off-diagonal r entries are integers (a cheap sanity check on cached tables)."""
    return all(c.is_int_poly() for nu, row in dprime_table(weight).items()
               for mu, c in row.items() if mu != nu)

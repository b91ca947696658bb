"""Jack symmetric functions by four independent constructions.

* ``iteration``: coefficients of Q_la on the q basis, solved upward in
  revlex order from the D' eigen-equation.
* ``determinant``: cofactors along the first row of (M_la - e'_la Id) with
  the first row replaced by formal q symbols.
* ``filtration``: sums over chains of moving-up operators.
* ``gram_schmidt``: orthogonalize monomials under the Jack pairing; uses
  only the symmetric-function layer, so it is an oracle for the rest.

Normalizations: P is monic on m_la, Q is dual to P, J = h^*(la) Q = h_*(la) P.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .field import ONE, ZERO, RatFun, poly, _divexact, _mul, _sub, _neg
from .operator import dprime_down_table, dprime_table, eig_prime
from .partition import (Partition, dominance_leq, enumerate_filtrations, lower_hook_product,
                        move_up, moves, revlex_index, revlex_order, upper_hook_product)
from .symfunc import SymExpr, _accumulate, convert, inner, m_partition_to_p, p_norm

METHODS = ("iteration", "determinant", "filtration", "gram_schmidt", "raising", "closed_form")
NORMS = ("P", "Q", "J")

# jack_filtration is exponential; refuse shapes above this weight unless overridden
FILTRATION_MAX_WEIGHT = 8


@dataclass(frozen=True)
class JackExpansion:
    shape: Partition
    normalization: str
    expr: SymExpr = field(compare=False)
    method: str = "iteration"

    @property
    def basis(self) -> str:
        return self.expr.basis

    @property
    def terms(self) -> dict:
        return self.expr.terms

    def __getitem__(self, la) -> RatFun:
        return self.expr[la]

    def in_basis(self, basis: str) -> "JackExpansion":
        return JackExpansion(self.shape, self.normalization, convert(self.expr, basis), self.method)

    def renormalize(self, to: str) -> "JackExpansion":
        return renormalize(self, to)

    def same_function(self, other: "JackExpansion") -> bool:
        a = renormalize(self, other.normalization).in_basis(other.basis)
        return a.expr.terms == other.expr.terms


def normalization_factor(la: Partition, src: str, dst: str) -> RatFun:
    """Scalar c with X_dst = c * X_src."""
    to_j = {"J": ONE, "Q": upper_hook_product(la), "P": lower_hook_product(la)}
    return to_j[src] / to_j[dst]


def renormalize(x: JackExpansion, to: str) -> JackExpansion:
    if to not in NORMS:
        raise ValueError(f"unknown normalization {to!r}")
    if to == x.normalization:
        return x
    c = normalization_factor(x.shape, x.normalization, to)
    return JackExpansion(x.shape, to, x.expr.scale(c), x.method)


# ---------------------------------------------------------------------------
# iteration

@lru_cache(maxsize=None)
def _iteration_coeffs(la: Partition) -> dict:
    n = sum(la)
    order = revlex_order(n)
    down = dprime_down_table(n)
    e_la = eig_prime(la)
    C = {la: ONE}
    for idx in range(revlex_index(la) - 1, -1, -1):
        mu = order[idx]
        s = ZERO
        for nu, r in down.get(mu, ()):
            c = C.get(nu)
            if c is not None:
                s = s + c * r
        if s:
            C[mu] = s / (e_la - eig_prime(mu))
    return C


def jack_iteration(la) -> JackExpansion:
    la = Partition(la)
    return JackExpansion(la, "Q", SymExpr._wrap("q", dict(_iteration_coeffs(la))), "iteration")


# ---------------------------------------------------------------------------
# determinant

def _bareiss_det(rows: list) -> tuple:
    """Determinant of a square matrix of integer polynomials (coefficient tuples)."""
    n = len(rows)
    if n == 0:
        return (1,)
    a = [list(r) for r in rows]
    sign = 1
    prev = (1,)
    for k in range(n - 1):
        if not a[k][k]:
            for p in range(k + 1, n):
                if a[p][k]:
                    a[k], a[p] = a[p], a[k]
                    sign = -sign
                    break
            else:
                return ()
        piv = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i = a[i]
            row_k = a[k]
            for j in range(k + 1, n):
                t = _sub(_mul(piv, row_i[j]), _mul(aik, row_k[j]))
                if t:
                    t = _divexact(t, prev)
                    if t is None:
                        raise ArithmeticError("inexact Bareiss division")
                row_i[j] = t
            row_i[k] = ()
        prev = piv
    d = a[n - 1][n - 1]
    return _neg(d) if sign < 0 else d


def _as_int_poly(x: RatFun) -> tuple:
    if not x.is_int_poly():
        raise ValueError("expected an integer polynomial")
    return x.num


@lru_cache(maxsize=None)
def _determinant_coeffs(la: Partition) -> dict:
    n = sum(la)
    order = revlex_order(n)
    # mu^1 = la <L mu^2 <L ..., restricted to the dominance up-set of la: over the
    # full revlex range, e' can tie between la and an incomparable shape
    # (e.g. (3,1,1,1) and (2,2,2)) and every first-row cofactor then vanishes
    mus = [mu for mu in reversed(order[: revlex_index(la) + 1]) if dominance_leq(la, mu)]
    s = len(mus)
    table = dprime_table(n)
    e_la = eig_prime(la)
    # A = M - e'_la Id with M_ij = r_{mu^j mu^i}; scale by 2 so entries lie in Z[alpha]
    A = [[None] * s for _ in range(s)]
    for i, mi in enumerate(mus):
        for j, mj in enumerate(mus):
            v = table[mj].get(mi, ZERO)
            if i == j:
                v = v - e_la
            A[i][j] = _as_int_poly(v * 2)
    c_la = ONE
    for mu in mus[1:]:
        c_la = c_la / (eig_prime(mu) - e_la)
    out = {}
    for k in range(s):
        minor = [[A[i][j] for j in range(s) if j != k] for i in range(1, s)]
        d = _bareiss_det(minor)
        if d:
            sign = -1 if k % 2 else 1
            # undo the factor 2 on each of the s-1 minor rows
            out[mus[k]] = RatFun(d, 2 ** (s - 1)) * c_la * sign
    return out


def jack_determinant(la) -> JackExpansion:
    la = Partition(la)
    return JackExpansion(la, "Q", SymExpr._wrap("q", dict(_determinant_coeffs(la))), "determinant")


# ---------------------------------------------------------------------------
# Gram-Schmidt over the monomials

@lru_cache(maxsize=None)
def _monomial_gram(weight: int) -> dict:
    order = revlex_order(weight)
    mp = {mu: m_partition_to_p(mu) for mu in order}
    gram = {}
    for a in order:
        for b in order:
            if revlex_index(b) < revlex_index(a):
                continue
            pa, pb = mp[a], mp[b]
            s = ZERO
            for k, c in pa.items():
                d = pb.get(k)
                if d is not None:
                    s = s + c * d * p_norm(k)
            gram[a, b] = gram[b, a] = s
    return gram


@lru_cache(maxsize=None)
def _gram_schmidt_weight(weight: int) -> dict:
    """{la: (P_la as {mu: coeff}, <P_la, P_la>)} for every la of the weight."""
    gram = _monomial_gram(weight)
    done = {}
    for la in reversed(revlex_order(weight)):            # (1^n) first
        vec = {la: ONE}
        for mu, (pm, norm) in done.items():
            proj = ZERO
            for nu, c in pm.items():
                proj = proj + c * gram[la, nu]
            if proj:
                coef = -(proj / norm)
                for nu, c in pm.items():
                    _accumulate(vec, nu, coef * c)
        norm = ZERO
        for a, ca in vec.items():
            for b, cb in vec.items():
                g = gram[a, b]
                if g:
                    norm = norm + ca * cb * g
        done[la] = (vec, norm)
    return done


def jack_gram_schmidt(la) -> JackExpansion:
    la = Partition(la)
    vec, _ = _gram_schmidt_weight(sum(la))[la]
    return JackExpansion(la, "P", SymExpr._wrap("m", dict(vec)), "gram_schmidt")


def gram_schmidt_norm(la) -> RatFun:
    """<P_la, P_la> from the orthogonalization."""
    la = Partition(la)
    return _gram_schmidt_weight(sum(la))[la][1]


# ---------------------------------------------------------------------------
# moving-up filtrations

def f_lower(mu: Partition, delta) -> RatFun:
    """f_mu(delta) = prod r_{la^i la^{i+1}} / (e'_mu - e'_{la^{i+1}})."""
    e = eig_prime(mu)
    out = ONE
    steps = delta.steps
    table = dprime_table(sum(mu))
    for a, b in zip(steps, steps[1:]):
        out = out * table[a].get(b, ZERO) / (e - eig_prime(b))
    return out


def f_upper(la: Partition, delta) -> RatFun:
    """f^la(delta) = prod r_{la^i la^{i+1}} / (e'_la - e'_{la^i})."""
    e = eig_prime(la)
    out = ONE
    steps = delta.steps
    table = dprime_table(sum(la))
    for a, b in zip(steps, steps[1:]):
        out = out * table[a].get(b, ZERO) / (e - eig_prime(a))
    return out


def _check_filtration_cap(la: Partition, cap):
    cap = FILTRATION_MAX_WEIGHT if cap is None else cap
    if sum(la) > cap:
        raise ValueError(f"filtration sums are capped at weight {cap}; got |la| = {sum(la)}")


@lru_cache(maxsize=None)
def filtration_q_coeffs(la: Partition) -> dict:
    """C_{la mu} = sum over filtrations la -> mu of f_la."""
    out = {}
    for mu in revlex_order(sum(la)):
        s = ZERO
        for d in enumerate_filtrations(la, mu):
            s = s + f_lower(la, d)
        if s:
            out[mu] = s
    return out


@lru_cache(maxsize=None)
def filtration_m_coeffs(la: Partition) -> dict:
    """v_{la mu} = h_*(la) * sum over filtrations mu -> la of f^la."""
    vll = lower_hook_product(la)
    out = {}
    for mu in revlex_order(sum(la)):
        s = ZERO
        for d in enumerate_filtrations(mu, la):
            s = s + f_upper(la, d)
        if s:
            out[mu] = vll * s
    return out


def jack_filtration(la, target: str = "q_expansion", cap=None) -> JackExpansion:
    """Q_la on q (target 'q_expansion') or J_la on m (target 'm_expansion')."""
    la = Partition(la)
    _check_filtration_cap(la, cap)
    if target == "q_expansion":
        return JackExpansion(la, "Q", SymExpr._wrap("q", dict(filtration_q_coeffs(la))), "filtration")
    if target == "m_expansion":
        return JackExpansion(la, "J", SymExpr._wrap("m", dict(filtration_m_coeffs(la))), "filtration")
    raise ValueError(f"unknown target {target!r}")


@lru_cache(maxsize=None)
def _raising_sequences(la: Partition) -> dict:
    """Sum over sequences of row-index moves, re-sorting after each move."""
    e = eig_prime(la)

    @lru_cache(maxsize=None)
    def from_(rho: Partition) -> tuple:
        acc = {rho: ONE}
        for m in moves(rho):
            nxt = move_up(rho, m)
            coef = RatFun(rho[m.i - 1] - rho[m.j - 1] + 2 * m.k) / (e - eig_prime(nxt))
            for end, v in from_(nxt):
                _accumulate(acc, end, coef * v)
        return tuple(acc.items())

    return dict(from_(la))


def jack_raising(la, cap=None) -> JackExpansion:
    """Q_la from the raising-operator-like sum over move sequences."""
    la = Partition(la)
    _check_filtration_cap(la, cap)
    return JackExpansion(la, "Q", SymExpr._wrap("q", dict(_raising_sequences(la))), "raising")


# ---------------------------------------------------------------------------
# two rows / two columns

def two_row_coefficients(r: int, s: int) -> list:
    """[a_0, ..., a_s] with Q_(r,s) = sum a_i q_(r+i, s-i)."""
    if r < s or s < 0:
        raise ValueError(f"need r >= s >= 0, got ({r}, {s})")
    a = r - s
    out = [ONE]
    for i in range(1, s + 1):
        c = RatFun((-1) ** i * (a + 2 * i))
        for t in range(a + 1, a + i):
            c = c * t
        for t in range(1, i + 1):
            c = c / t
        for t in range(1, i):
            c = c * poly(1, -t)
        for t in range(a + 1, a + i + 1):
            c = c / poly(1, t)
        out.append(c)
    return out


def two_column_coefficients(r: int, s: int) -> list:
    """[b_0, ..., b_s]: b_k = (r+s-2k)! prod_{j<=k} (s+1-j)(alpha+r+1-j).

    b_k multiplies m of the conjugate of (r+s-k, k).  The factor is
    alpha+r+1-j, not alpha+j: at k = s, b_s must be the lower hook product
    of (2^s, 1^(r-s)), which is (r-s)! s! prod_{j<=s} (alpha+r+1-j).
    """
    if r < s or s < 0:
        raise ValueError(f"need r >= s >= 0, got ({r}, {s})")
    from math import factorial
    out = []
    for k in range(s + 1):
        c = RatFun(factorial(r + s - 2 * k))
        for j in range(1, k + 1):
            c = c * poly(r + 1 - j, 1) * (s + 1 - j)
        out.append(c)
    return out


def two_row_closed_form(r: int, s: int) -> JackExpansion:
    if r < s or s < 1:
        raise ValueError(f"need r >= s >= 1, got ({r}, {s})")
    terms = {Partition((r + i, s - i)): c for i, c in enumerate(two_row_coefficients(r, s)) if c}
    return JackExpansion(Partition((r, s)), "Q", SymExpr._wrap("q", terms), "closed_form")


def two_column_closed_form(r: int, s: int) -> JackExpansion:
    """J of the conjugate of (r, s) on the monomial basis."""
    if r < s or s < 1:
        raise ValueError(f"need r >= s >= 1, got ({r}, {s})")
    b = two_column_coefficients(r, s)
    terms = {Partition((r + i, s - i)).conjugate(): b[s - i] for i in range(s + 1)}
    return JackExpansion(Partition((r, s)).conjugate(), "J", SymExpr._wrap("m", terms), "closed_form")


# ---------------------------------------------------------------------------
# front door

_CACHE: dict = {}


def jack(la, norm: str = "Q", basis: str = "q", method: str = "iteration") -> JackExpansion:
    """Jack function of shape la in the given normalization and basis."""
    la = Partition(la)
    if norm not in NORMS:
        raise ValueError(f"unknown normalization {norm!r}")
    key = (la, norm, basis, method)
    hit = _CACHE.get(key)
    if hit is not None:
        return hit
    if method == "iteration":
        x = jack_iteration(la)
    elif method == "determinant":
        x = jack_determinant(la)
    elif method == "filtration":
        x = jack_filtration(la, "m_expansion" if basis == "m" else "q_expansion")
    elif method == "raising":
        x = jack_raising(la)
    elif method == "gram_schmidt":
        x = jack_gram_schmidt(la)
    elif method == "closed_form":
        x = _closed_form(la)
    else:
        raise ValueError(f"unknown method {method!r}")
    x = renormalize(x, norm).in_basis(basis)
    _CACHE[key] = x
    return x


def _closed_form(la: Partition) -> JackExpansion:
    if len(la) <= 2 and la:
        r, s = (la[0], la[1]) if len(la) == 2 else (la[0], 0)
        if s == 0:
            return JackExpansion(la, "Q", SymExpr.basis_element("q", la), "closed_form")
        return two_row_closed_form(r, s)
    if la and la[0] <= 2:
        c = la.conjugate()
        r, s = (c[0], c[1]) if len(c) == 2 else (c[0], 0)
        if s == 0:
            # single column: J_(1^n) = n! m_(1^n)
            from math import factorial
            return JackExpansion(la, "J", SymExpr._wrap("m", {la: RatFun(factorial(r))}), "closed_form")
        return two_column_closed_form(r, s)
    raise ValueError(f"no closed form for {la}: need two rows or two columns")


# downstream memo tables that depend on Jack expansions (see register_cache)
_DEPENDENT_CACHES: list = []


def register_cache(fn):
    """Have clear_caches() also clear an lru_cache built on top of this module."""
    _DEPENDENT_CACHES.append(fn)
    return fn


def clear_caches():
    _CACHE.clear()
    for fn in (_iteration_coeffs, _determinant_coeffs, filtration_q_coeffs,
               filtration_m_coeffs, _raising_sequences, *_DEPENDENT_CACHES):
        fn.cache_clear()


def eigen_residual(x: JackExpansion) -> SymExpr:
    """D(alpha) X - e_la X in the p basis; zero for a Jack function."""
    from .operator import apply_D_p, eig
    xp = convert(x.expr, "p")
    return apply_D_p(xp) - xp.scale(eig(x.shape))


def pairing(a: JackExpansion, b: JackExpansion) -> RatFun:
    return inner(a.expr, b.expr)


def triangular_support_ok(x: JackExpansion) -> bool:
    """q support above the shape, m support below it (dominance)."""
    la = x.shape
    if x.basis == "q":
        return all(dominance_leq(la, mu) for mu in x.terms)
    if x.basis == "m":
        return all(dominance_leq(mu, la) for mu in x.terms)
    return True


__all__ = [
    "JackExpansion", "jack", "jack_iteration", "jack_determinant", "jack_gram_schmidt",
    "jack_filtration", "jack_raising", "renormalize", "normalization_factor",
    "two_row_closed_form", "two_column_closed_form", "two_row_coefficients",
    "two_column_coefficients", "gram_schmidt_norm", "f_lower", "f_upper",
    "eigen_residual", "clear_caches", "register_cache",
]

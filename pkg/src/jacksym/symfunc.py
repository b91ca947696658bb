"""Symmetric functions over Q(alpha) as sparse expansions.

Three bases are supported: power sums ``p``, monomials ``m`` and the
generalized homogeneous functions ``q`` (products of one-row Q_n).  The
power-sum basis is where products, pairings and the Heisenberg action are
evaluated; the other bases convert through it.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Callable, Dict, Iterable, Mapping

from .field import ALPHA, ONE, ZERO, RatFun, const
from .partition import EMPTY, Partition, revlex_key, revlex_order

BASES = ("p", "m", "q")


class SymExpr:
    """Finite linear combination of basis elements indexed by partitions.

    Keys may have different weights; each weight is one homogeneous component.
    Zero coefficients are never stored.
    """

    __slots__ = ("basis", "terms")

    def __init__(self, basis: str, terms: Mapping | Iterable = ()):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        self.basis = basis
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: Dict[Partition, RatFun] = {}
        for k, v in items:
            k = k if isinstance(k, Partition) else Partition(k)
            v = v if isinstance(v, RatFun) else const(v)
            if k in acc:
                acc[k] = acc[k] + v
            else:
                acc[k] = v
        self.terms = {k: v for k, v in acc.items() if v}

    @classmethod
    def _wrap(cls, basis: str, terms: dict) -> "SymExpr":
        e = object.__new__(cls)
        e.basis = basis
        e.terms = terms
        return e

    @classmethod
    def basis_element(cls, basis: str, la) -> "SymExpr":
        return cls._wrap(basis, {Partition(la): ONE})

    @classmethod
    def zero(cls, basis: str = "p") -> "SymExpr":
        return cls._wrap(basis, {})

    @classmethod
    def one(cls, basis: str = "p") -> "SymExpr":
        return cls._wrap(basis, {EMPTY: ONE})

    # -- container protocol ------------------------------------------------
    def __getitem__(self, la) -> RatFun:
        return self.terms.get(Partition(la), ZERO)

    def __iter__(self):
        return iter(self.sorted_keys())

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def items(self):
        return [(k, self.terms[k]) for k in self.sorted_keys()]

    def sorted_keys(self):
        return sorted(self.terms, key=revlex_key)

    def weights(self) -> set:
        return {sum(k) for k in self.terms}

    def component(self, weight: int) -> "SymExpr":
        return SymExpr._wrap(self.basis, {k: v for k, v in self.terms.items() if sum(k) == weight})

    def is_homogeneous(self) -> bool:
        return len(self.weights()) <= 1

    # -- linear structure --------------------------------------------------
    def _check(self, other: "SymExpr"):
        if self.basis != other.basis:
            raise ValueError(f"basis mismatch: {self.basis} vs {other.basis}")

    def __add__(self, other: "SymExpr") -> "SymExpr":
        self._check(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            w = out.get(k)
            w = v if w is None else w + v
            if w:
                out[k] = w
            else:
                out.pop(k, None)
        return SymExpr._wrap(self.basis, out)

    def __neg__(self) -> "SymExpr":
        return SymExpr._wrap(self.basis, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "SymExpr") -> "SymExpr":
        return self + (-other)

    def scale(self, c) -> "SymExpr":
        c = c if isinstance(c, RatFun) else const(c)
        if not c:
            return SymExpr.zero(self.basis)
        return SymExpr._wrap(self.basis, {k: v * c for k, v in self.terms.items()})

    def __rmul__(self, c) -> "SymExpr":
        return self.scale(c)

    def __mul__(self, other):
        if isinstance(other, SymExpr):
            return mul(self, other)
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, SymExpr):
            return NotImplemented
        if self.basis != other.basis:
            return to_p(self).terms == to_p(other).terms
        return self.terms == other.terms

    __hash__ = None

    def map_coeffs(self, fn: Callable[[RatFun], object]) -> dict:
        return {k: fn(v) for k, v in self.items()}

    def evaluate(self, alpha_value) -> Dict[Partition, Fraction]:
        """Coefficients at a rational alpha."""
        return {k: v.evaluate(alpha_value) for k, v in self.items()}

    def to_json(self) -> dict:
        return {"basis": self.basis,
                "terms": [{"partition": str(k), "coeff": v.to_json()} for k, v in self.items()]}

    @classmethod
    def from_json(cls, obj: dict) -> "SymExpr":
        return cls(obj["basis"], [(Partition.parse(t["partition"]), RatFun.from_json(t["coeff"]))
                                  for t in obj["terms"]])

    def __repr__(self):
        if not self.terms:
            return f"0[{self.basis}]"
        return " + ".join(f"({v}){self.basis}[{k}]" for k, v in self.items())


def _accumulate(out: dict, key, value: RatFun):
    w = out.get(key)
    w = value if w is None else w + value
    if w:
        out[key] = w
    else:
        out.pop(key, None)


def linear_map(f: SymExpr, image: Callable[[Partition], dict], basis: str) -> SymExpr:
    """Extend a basis-element map (partition -> {partition: coeff}) linearly."""
    acc: dict = defaultdict(list)
    for k, c in f.terms.items():
        for k2, c2 in image(k).items():
            acc[k2].append(c * c2)
    out = {}
    for k2, vals in acc.items():
        s = vals[0]
        for v in vals[1:]:
            s = s + v
        if s:
            out[k2] = s
    return SymExpr._wrap(basis, out)


# ---------------------------------------------------------------------------
# one-row Jack functions and the q basis

def alpha_pow(k: int) -> RatFun:
    return ALPHA ** k


@lru_cache(maxsize=None)
def _qn_terms(n: int) -> dict:
    if n < 0:
        return {}
    return {la: (alpha_pow(len(la)) * la.z()).inverse() for la in revlex_order(n)}


def qn_to_p(n: int) -> SymExpr:
    """Q_n = sum over la |- n of alpha^{-l} z_la^{-1} p_la; Q_0 = 1, Q_n = 0 for n < 0."""
    return SymExpr._wrap("p", dict(_qn_terms(n)))


def _mul_terms(a: dict, b: dict) -> dict:
    acc: dict = defaultdict(list)
    for k1, c1 in a.items():
        for k2, c2 in b.items():
            acc[k1.union(k2)].append(c1 * c2)
    out = {}
    for k, vals in acc.items():
        s = vals[0]
        for v in vals[1:]:
            s = s + v
        if s:
            out[k] = s
    return out


@lru_cache(maxsize=None)
def q_partition_to_p(la: Partition) -> dict:
    if not la:
        return {EMPTY: ONE}
    rest = q_partition_to_p(Partition(la[1:]))
    return _mul_terms(_qn_terms(la[0]), rest)


def q_to_p(f: SymExpr) -> SymExpr:
    if f.basis != "q":
        raise ValueError("expected a q-basis expression")
    return linear_map(f, q_partition_to_p, "p")


@lru_cache(maxsize=None)
def pn_to_q_terms(n: int) -> dict:
    """p_n = sum over mu |- n of n alpha (-1)^{l-1} (l-1)!/m(mu)! q_mu."""
    out = {}
    for mu in revlex_order(n):
        l = len(mu)
        out[mu] = ALPHA * Fraction(n * (-1) ** (l - 1) * factorial(l - 1), mu.m_factorial())
    return out


@lru_cache(maxsize=None)
def p_partition_to_q(la: Partition) -> dict:
    if not la:
        return {EMPTY: ONE}
    return _mul_terms(pn_to_q_terms(la[0]), p_partition_to_q(Partition(la[1:])))


def p_to_q(f: SymExpr) -> SymExpr:
    if f.basis != "p":
        raise ValueError("expected a p-basis expression")
    return linear_map(f, p_partition_to_q, "q")


# ---------------------------------------------------------------------------
# products and pairing

def mul(f: SymExpr, g: SymExpr) -> SymExpr:
    """Product; q-basis inputs stay in q (multiset union), others go through p."""
    if f.basis == g.basis and f.basis in ("p", "q"):
        return SymExpr._wrap(f.basis, _mul_terms(f.terms, g.terms))
    return SymExpr._wrap("p", _mul_terms(to_p(f).terms, to_p(g).terms))


@lru_cache(maxsize=None)
def p_norm(la: Partition) -> RatFun:
    """<p_la, p_la> = alpha^{l(la)} z_la."""
    return alpha_pow(len(la)) * la.z()


def inner(f: SymExpr, g: SymExpr) -> RatFun:
    """Jack scalar product."""
    f, g = to_p(f), to_p(g)
    if len(f.terms) > len(g.terms):
        f, g = g, f
    out = ZERO
    for k, c in f.terms.items():
        d = g.terms.get(k)
        if d is not None:
            out = out + c * d * p_norm(k)
    return out


# ---------------------------------------------------------------------------
# monomial basis

@lru_cache(maxsize=None)
def p_to_m_table(weight: int) -> dict:
    """{la: {nu: <p_la, q_nu>}}: the m-expansion of each p_la by duality."""
    table = {}
    qs = {nu: q_partition_to_p(nu) for nu in revlex_order(weight)}
    for la in revlex_order(weight):
        row = {}
        n = p_norm(la)
        for nu, qp in qs.items():
            c = qp.get(la)
            if c is not None:
                row[nu] = c * n
        table[la] = row
    return table


@lru_cache(maxsize=None)
def m_partition_to_p(nu: Partition) -> dict:
    """p-expansion of m_nu by back substitution in the triangular p -> m table."""
    weight = sum(nu)
    table = p_to_m_table(weight)
    order = revlex_order(weight)
    idx = order.index(nu)
    # m_nu = (p_nu - sum_{rho >L nu} c_{nu rho} m_rho) / c_{nu nu}
    row = table[nu]
    out: dict = {nu: ONE}
    for rho in order[:idx]:
        c = row.get(rho)
        if c:
            for k, v in m_partition_to_p(rho).items():
                _accumulate(out, k, -(c * v))
    diag = row[nu].inverse()
    return {k: v * diag for k, v in out.items()}


def to_m(f: SymExpr) -> SymExpr:
    """m-expansion: the coefficient of m_nu is <f, q_nu>."""
    if f.basis == "m":
        return f
    fp = to_p(f)
    acc: dict = {}
    for la, c in fp.terms.items():
        for nu, v in p_to_m_table(sum(la))[la].items():
            _accumulate(acc, nu, c * v)
    return SymExpr._wrap("m", acc)


def m_to_p(f: SymExpr) -> SymExpr:
    if f.basis != "m":
        raise ValueError("expected an m-basis expression")
    return linear_map(f, m_partition_to_p, "p")


def to_p(f: SymExpr) -> SymExpr:
    if f.basis == "p":
        return f
    if f.basis == "q":
        return q_to_p(f)
    return m_to_p(f)


def to_q(f: SymExpr) -> SymExpr:
    if f.basis == "q":
        return f
    return p_to_q(to_p(f))


def convert(f: SymExpr, basis: str) -> SymExpr:
    if basis == "p":
        return to_p(f)
    if basis == "q":
        return to_q(f)
    if basis == "m":
        return to_m(f)
    raise ValueError(f"unknown basis {basis!r}")


# ---------------------------------------------------------------------------
# Heisenberg action: h_{-n} multiplies by p_n, h_n = n alpha d/dp_n

def _remove_part(la: Partition, n: int) -> Partition:
    parts = list(la)
    parts.remove(n)
    return Partition(parts)


def _add_part(la: Partition, n: int) -> Partition:
    return Partition.sorted(la + (n,))


def heis(n: int, f: SymExpr) -> SymExpr:
    if n == 0:
        raise ValueError("h_0 is not a Heisenberg mode here")
    fp = to_p(f)
    out: dict = {}
    if n < 0:
        for la, c in fp.terms.items():
            _accumulate(out, _add_part(la, -n), c)
    else:
        na = ALPHA * n
        for la, c in fp.terms.items():
            m = la.mult(n)
            if m:
                _accumulate(out, _remove_part(la, n), c * na * m)
    return SymExpr._wrap("p", out)


def heis_word(modes: Iterable[int], f: SymExpr) -> SymExpr:
    """Apply h_{n_1} h_{n_2} ... with the rightmost mode acting first."""
    modes = list(modes)
    for n in reversed(modes):
        f = heis(n, f)
    return f


def adjoint_mul(g: SymExpr, f: SymExpr) -> SymExpr:
    """Adjoint of multiplication by g: each p_k in g becomes h_k."""
    gp = to_p(g)
    out = SymExpr.zero("p")
    fp = to_p(f)
    for la, c in gp.terms.items():
        v = fp
        for part in la:
            v = heis(part, v)
            if not v:
                break
        if v:
            out = out + v.scale(c)
    return out


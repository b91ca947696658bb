"""Integer partitions, orders, hook lengths and moving-up combinatorics.

Cells are 1-indexed ``(row, column)`` pairs.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import factorial, prod
from typing import Iterable, Iterator

from .field import ONE, RatFun, poly


class Partition(tuple):
    """Weakly decreasing tuple of positive integers; hashable value type."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        parts = tuple(p for p in parts if p)
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts not weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def sorted(cls, parts: Iterable[int]) -> "Partition":
        """Sort arbitrary nonnegative parts and drop zeros."""
        return cls(sorted((p for p in parts if p), reverse=True))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        text = text.strip()
        if not text:
            return cls()
        try:
            parts = [int(t) for t in text.split(",")]
        except ValueError:
            raise ValueError(f"malformed partition {text!r}") from None
        if any(p <= 0 for p in parts):
            raise ValueError(f"malformed partition {text!r}: parts must be positive")
        return cls(parts)

    def __repr__(self):
        return f"Partition({tuple(self)})"

    def __str__(self):
        return ",".join(map(str, self))

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """lambda_i with 1-indexed i; zero past the end."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def multiplicities(self) -> dict:
        return dict(Counter(self))

    def mult(self, value: int) -> int:
        return tuple.count(self, value)

    def m_factorial(self) -> int:
        """m(lambda)! = prod_i m_i!"""
        return prod(factorial(c) for c in Counter(self).values())

    def z(self) -> int:
        """z_lambda = prod_i i^{m_i} m_i!"""
        return prod(i ** c * factorial(c) for i, c in Counter(self).items())

    def conjugate(self) -> "Partition":
        return _conjugate(self)

    def cells(self) -> list:
        return [(i, j) for i, row in enumerate(self, 1) for j in range(1, row + 1)]

    def contains(self, other: "Partition") -> bool:
        """True if other is a subdiagram of self."""
        return len(other) <= len(self) and all(o <= s for o, s in zip(other, self))

    def union(self, other: "Partition") -> "Partition":
        """Multiset union of parts."""
        return Partition(sorted(self + other, reverse=True))

    def is_rectangle(self) -> bool:
        return len(self) > 0 and self[0] == self[-1]


@lru_cache(maxsize=None)
def _conjugate(la: tuple) -> Partition:
    if not la:
        return Partition()
    return Partition(sum(1 for p in la if p >= j) for j in range(1, la[0] + 1))


EMPTY = Partition()


# ---------------------------------------------------------------------------
# orders and enumeration

def dominance_leq(mu: Partition, la: Partition) -> bool:
    """mu <= la in dominance order; False for unequal weights."""
    if sum(mu) != sum(la):
        return False
    a = b = 0
    for i in range(max(len(mu), len(la))):
        a += mu[i] if i < len(mu) else 0
        b += la[i] if i < len(la) else 0
        if a > b:
            return False
    return True


def dominance_lt(mu: Partition, la: Partition) -> bool:
    return mu != la and dominance_leq(mu, la)


@lru_cache(maxsize=None)
def revlex_order(weight: int) -> tuple:
    """All partitions of weight, decreasing in reverse lexicographic order."""
    if weight < 0:
        return ()
    out = []

    def gen(n, maxpart, prefix):
        if n == 0:
            out.append(Partition(prefix))
            return
        for p in range(min(n, maxpart), 0, -1):
            gen(n - p, p, prefix + [p])

    gen(weight, weight, [])
    return tuple(out)


def partitions(weight: int) -> tuple:
    return revlex_order(weight)


@lru_cache(maxsize=None)
def revlex_index(la: Partition) -> int:
    """Position of la in revlex_order(|la|); 0 is the one-row partition."""
    return _index_table(sum(la))[la]


@lru_cache(maxsize=None)
def _index_table(weight: int) -> dict:
    return {p: i for i, p in enumerate(revlex_order(weight))}


def revlex_key(la: Partition):
    """Sort key: larger in revlex sorts first; lower weight before higher."""
    return (sum(la), tuple(-p for p in la))


# ---------------------------------------------------------------------------
# hooks and bottomed squares

def hook(la: Partition, cell, kind: str = "lower") -> RatFun:
    """Lower hook alpha*arm + leg + 1, or upper hook alpha*(arm + 1) + leg."""
    i, j = cell
    if not (1 <= i <= len(la) and 1 <= j <= la[i - 1]):
        raise ValueError(f"cell {cell} not in {la}")
    arm = la[i - 1] - j
    leg = la.conjugate()[j - 1] - i
    if kind == "lower":
        return poly(leg + 1, arm)
    if kind == "upper":
        return poly(leg, arm + 1)
    raise ValueError(f"unknown hook kind {kind!r}")


def hook_product(la: Partition, cells, kind: str = "lower") -> RatFun:
    out = ONE
    for c in cells:
        out = out * hook(la, c, kind)
    return out


@lru_cache(maxsize=None)
def full_hook_product(la: Partition, kind: str) -> RatFun:
    return hook_product(la, la.cells(), kind)


def lower_hook_product(la: Partition) -> RatFun:
    """h_*^la(la): ratio J/P."""
    return full_hook_product(la, "lower")


def upper_hook_product(la: Partition) -> RatFun:
    """h^*_la(la): ratio J/Q."""
    return full_hook_product(la, "upper")


def bottomed_split(mu: Partition, la: Partition):
    """(mu_b, mu_u, la_b, la_u): cells in / not in columns meeting la/mu."""
    if not la.contains(mu):
        raise ValueError(f"{mu} is not contained in {la}")
    mu_cells = set(mu.cells())
    skew_cols = {j for (i, j) in la.cells() if (i, j) not in mu_cells}
    mu_b = {c for c in mu_cells if c[1] in skew_cols}
    la_cells = set(la.cells())
    la_b = {c for c in la_cells if c[1] in skew_cols}
    return mu_b, mu_cells - mu_b, la_b, la_cells - la_b


def is_horizontal_strip(mu: Partition, la: Partition, n: int) -> bool:
    if not la.contains(mu) or sum(la) - sum(mu) != n:
        return False
    return all(la.part(i + 1) <= mu.part(i) for i in range(1, len(la)))


# ---------------------------------------------------------------------------
# moving up

@dataclass(frozen=True)
class MoveUp:
    """Transfer k squares from row j to row i (i < j, 1-indexed)."""
    i: int
    j: int
    k: int

    def applicable(self, la: Partition) -> bool:
        return 1 <= self.i < self.j <= len(la) and 1 <= self.k <= la[self.j - 1]


def move_up(la: Partition, m: MoveUp) -> Partition:
    if not m.applicable(la):
        raise ValueError(f"{m} is not applicable to {la}")
    parts = list(la)
    parts[m.i - 1] += m.k
    parts[m.j - 1] -= m.k
    return Partition.sorted(parts)


def moves(la: Partition) -> Iterator[MoveUp]:
    """Every applicable moving-up operator, by row indices."""
    n = len(la)
    for i in range(1, n):
        for j in range(i + 1, n + 1):
            for k in range(1, la[j - 1] + 1):
                yield MoveUp(i, j, k)


@lru_cache(maxsize=None)
def moving_up_set(la: Partition) -> frozenset:
    """M^*(la)."""
    return frozenset(move_up(la, m) for m in moves(la))


@lru_cache(maxsize=None)
def moving_down_set(mu: Partition) -> frozenset:
    """M_*(mu) = {la : mu in M^*(la)}, searched within |mu|."""
    return frozenset(la for la in revlex_order(sum(mu)) if mu in moving_up_set(la))


@dataclass(frozen=True)
class Filtration:
    """Chain of partitions, each in M^* of the previous."""
    steps: tuple

    @property
    def start(self) -> Partition:
        return self.steps[0]

    @property
    def end(self) -> Partition:
        return self.steps[-1]

    def __len__(self):
        return len(self.steps) - 1


@lru_cache(maxsize=None)
def enumerate_filtrations(mu: Partition, la: Partition) -> tuple:
    """All moving-up filtrations from mu to la."""
    if sum(mu) != sum(la) or not dominance_leq(mu, la):
        return ()
    if mu == la:
        return (Filtration((mu,)),)
    out = []
    for nxt in sorted(moving_up_set(mu), key=revlex_key):
        if dominance_leq(nxt, la):
            for tail in enumerate_filtrations(nxt, la):
                out.append(Filtration((mu,) + tail.steps))
    return tuple(out)


def filtrations_from(mu: Partition) -> Iterator[Filtration]:
    """Every filtration starting at mu, any end."""
    for la in revlex_order(sum(mu)):
        yield from enumerate_filtrations(mu, la)


def filtrations_to(la: Partition) -> Iterator[Filtration]:
    """Every filtration ending at la, any start."""
    for mu in revlex_order(sum(la)):
        yield from enumerate_filtrations(mu, la)


def n_partitions(weight: int) -> int:
    return len(revlex_order(weight))


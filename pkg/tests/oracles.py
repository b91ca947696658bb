"""Reference computations that share no code with the package internals."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product

from jacksym.field import ALPHA, RatFun


# -- p -> m by counting -------------------------------------------------------

def p_to_m_count(la, nu) -> int:
    """Coefficient of m_nu in p_la: ways to drop the parts of la into the rows of nu."""
    nu = tuple(nu)
    count = 0
    for assign in product(range(len(nu)), repeat=len(la)):
        sums = [0] * len(nu)
        for part, row in zip(la, assign):
            sums[row] += part
        count += tuple(sums) == nu
    return count


# -- Schur functions via Kostka numbers -----------------------------------------

def _partitions(n, maxpart=None):
    maxpart = n if maxpart is None else maxpart
    if n == 0:
        yield ()
        return
    for p in range(min(n, maxpart), 0, -1):
        for rest in _partitions(n - p, p):
            yield (p,) + rest


def _horizontal_strips(la, k):
    """All mu with la/mu a horizontal strip of k cells."""
    la = list(la)
    n = len(la)

    def rec(i, left, acc):
        if i == n:
            if left == 0:
                yield tuple(p for p in acc if p)
            return
        lo = la[i + 1] if i + 1 < n else 0
        for take in range(0, min(left, la[i] - lo) + 1):
            yield from rec(i + 1, left - take, acc + [la[i] - take])

    yield from rec(0, k, [])


@lru_cache(maxsize=None)
def kostka(la: tuple, nu: tuple) -> int:
    """Number of semistandard tableaux of shape la and content nu."""
    if not nu:
        return 1 if not la else 0
    return sum(kostka(mu, nu[:-1]) for mu in _horizontal_strips(la, nu[-1]))


def schur_m(la) -> dict:
    """s_la = sum_nu K_{la nu} m_nu."""
    la = tuple(la)
    return {nu: k for nu in _partitions(sum(la)) if (k := kostka(la, nu))}


# -- sqrt(2 alpha) adjoined to Q(alpha), for the rationalization derivation ---

class QSqrt:
    """a + b t with t^2 = 2 alpha; a, b in Q(alpha)."""

    def __init__(self, a, b=0):
        self.a = a if isinstance(a, RatFun) else RatFun.from_fraction(Fraction(a))
        self.b = b if isinstance(b, RatFun) else RatFun.from_fraction(Fraction(b))

    def __add__(self, o):
        o = _lift(o)
        return QSqrt(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return QSqrt(-self.a, -self.b)

    def __sub__(self, o):
        return self + (-_lift(o))

    def __mul__(self, o):
        o = _lift(o)
        return QSqrt(self.a * o.a + self.b * o.b * ALPHA * 2, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def inverse(self):
        norm = self.a * self.a - self.b * self.b * ALPHA * 2
        return QSqrt(self.a / norm, -self.b / norm)

    def __truediv__(self, o):
        return self * _lift(o).inverse()

    def __eq__(self, o):
        o = _lift(o)
        return self.a == o.a and self.b == o.b

    def rational(self) -> RatFun:
        assert not self.b, "element is not in Q(alpha)"
        return self.a


def _lift(x):
    if isinstance(x, QSqrt):
        return x
    return QSqrt(x if isinstance(x, RatFun) else RatFun.from_fraction(Fraction(x)))


SQRT_2A = QSqrt(0, 1)                                   # sqrt(2 alpha)
SQRT_2_OVER_A = SQRT_2A / QSqrt(ALPHA)                  # sqrt(2/alpha) = sqrt(2 alpha)/alpha

"""Exact arithmetic in Q(alpha).

Polynomials are integer coefficient tuples in ascending powers of alpha;
rational functions are reduced pairs of such polynomials.  Everything is
immutable and exact.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence, Union

Coeffs = tuple  # tuple[int, ...], ascending powers


class PoleError(ZeroDivisionError):
    """Raised when a rational function is evaluated at a zero of its denominator."""


# ---------------------------------------------------------------------------
# raw coefficient-tuple kernels

def _trim(c: Sequence[int]) -> Coeffs:
    n = len(c)
    while n and c[n - 1] == 0:
        n -= 1
    return tuple(c[:n])


def _add(a: Coeffs, b: Coeffs) -> Coeffs:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] += x
    return _trim(out)


def _neg(a: Coeffs) -> Coeffs:
    return tuple(-x for x in a)


def _sub(a: Coeffs, b: Coeffs) -> Coeffs:
    return _add(a, _neg(b))


def _mul(a: Coeffs, b: Coeffs) -> Coeffs:
    if not a or not b:
        return ()
    if len(a) == 1:
        x = a[0]
        return tuple(x * y for y in b)
    if len(b) == 1:
        y = b[0]
        return tuple(x * y for x in a)
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return tuple(out)


def _scale(a: Coeffs, k: int) -> Coeffs:
    if k == 0:
        return ()
    return tuple(k * x for x in a)


def _content(a: Coeffs) -> int:
    g = 0
    for x in a:
        g = gcd(g, x)
        if g == 1:
            break
    return g


def _exact_div_int(a: Coeffs, k: int) -> Coeffs:
    return tuple(x // k for x in a)


def _divexact(a: Coeffs, b: Coeffs):
    """Quotient a/b over Z, or None if b does not divide a exactly."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return ()
    if len(a) < len(b):
        return None
    if len(b) == 1:
        d = b[0]
        if any(x % d for x in a):
            return None
        return tuple(x // d for x in a)
    rem = list(a)
    lb = b[-1]
    db = len(b) - 1
    q = [0] * (len(a) - db)
    for k in range(len(a) - 1, db - 1, -1):
        c = rem[k]
        if c == 0:
            continue
        t, r = divmod(c, lb)
        if r:
            return None
        q[k - db] = t
        off = k - db
        for j, y in enumerate(b):
            rem[off + j] -= t * y
    if any(rem[:db]):
        return None
    return tuple(q)


def _eval_int(a: Coeffs, x: int) -> int:
    v = 0
    for c in reversed(a):
        v = v * x + c
    return v


def _prem(a: Coeffs, b: Coeffs) -> Coeffs:
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    while r and len(r) - 1 >= db:
        c = r[-1]
        shift = len(r) - 1 - db
        r = [lb * x for x in r]
        for j, y in enumerate(b):
            r[shift + j] -= c * y
        r = list(_trim(r))
    return tuple(r)


def _prem_gcd(a: Coeffs, b: Coeffs) -> Coeffs:
    """Primitive polynomial remainder sequence; returns a primitive gcd."""
    a = _exact_div_int(a, _content(a))
    b = _exact_div_int(b, _content(b))
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _prem(a, b)
        if r:
            r = _exact_div_int(r, _content(r))
        a, b = b, r
    if a[-1] < 0:
        a = _neg(a)
    return a


def _heu_gcd(a: Coeffs, b: Coeffs):
    """Heuristic integer-evaluation gcd of primitive polynomials, or None."""
    na = max(abs(x) for x in a)
    nb = max(abs(x) for x in b)
    xi = max(min(na, nb) * 2 + 29, 2 * min(na, nb) + 2)
    for _ in range(6):
        h = gcd(_eval_int(a, xi), _eval_int(b, xi))
        if h:
            digits = []
            half = xi // 2
            while h:
                d = h % xi
                if d > half:
                    d -= xi
                digits.append(d)
                h = (h - d) // xi
            cand = _trim(digits)
            if cand:
                cont = _content(cand)
                cand = _exact_div_int(cand, cont)
                if cand[-1] < 0:
                    cand = _neg(cand)
                if _divexact(a, cand) is not None and _divexact(b, cand) is not None:
                    return cand
        xi = xi * 73794 // 27011
    return None


def poly_gcd(a: Coeffs, b: Coeffs) -> Coeffs:
    """Greatest common divisor over Z[alpha] with positive leading coefficient."""
    if not a:
        return b if not b or b[-1] > 0 else _neg(b)
    if not b:
        return a if a[-1] > 0 else _neg(a)
    ca, cb = _content(a), _content(b)
    cg = gcd(ca, cb)
    if len(a) == 1 or len(b) == 1:
        return (cg,)
    pa = _exact_div_int(a, ca)
    pb = _exact_div_int(b, cb)
    if pa == pb or pa == _neg(pb):
        g = pa
    else:
        g = _heu_gcd(pa, pb)
        if g is None:
            g = _prem_gcd(pa, pb)
    if g[-1] < 0:
        g = _neg(g)
    return _scale(g, cg)


# ---------------------------------------------------------------------------
# public types

class IntPoly:
    """Polynomial in alpha with integer coefficients (ascending powers)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        self.coeffs = _trim([int(c) for c in coeffs])

    @classmethod
    def _raw(cls, coeffs: Coeffs) -> "IntPoly":
        p = object.__new__(cls)
        p.coeffs = coeffs
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPoly((other,))
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: "IntPoly") -> "IntPoly":
        return IntPoly._raw(_add(self.coeffs, other.coeffs))

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return IntPoly._raw(_sub(self.coeffs, other.coeffs))

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        return IntPoly._raw(_mul(self.coeffs, other.coeffs))

    def __neg__(self) -> "IntPoly":
        return IntPoly._raw(_neg(self.coeffs))

    def __call__(self, x):
        v = 0
        for c in reversed(self.coeffs):
            v = v * x + c
        return v

    def gcd(self, other: "IntPoly") -> "IntPoly":
        return IntPoly._raw(poly_gcd(self.coeffs, other.coeffs))

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self):
        return format_poly(self.coeffs)


def format_poly(c: Coeffs, var: str = "a") -> str:
    if not c:
        return "0"
    out = []
    for k in range(len(c) - 1, -1, -1):
        x = c[k]
        if x == 0:
            continue
        sign = "-" if x < 0 else "+"
        m = abs(x)
        if k == 0:
            body = str(m)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if m == 1 else f"{m}*{mono}"
        out.append((sign, body))
    s = ("-" if out[0][0] == "-" else "") + out[0][1]
    for sign, body in out[1:]:
        s += f" {sign} {body}"
    return s


class RatFun:
    """Reduced element num/den of Q(alpha).

    Canonical form: gcd(num, den) = 1 as polynomials, the integer content of
    num and den together is 1, and den has positive leading coefficient.
    Zero is 0/1.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=1):
        n = _coerce(num)
        d = _coerce(den)
        if not d:
            raise ZeroDivisionError("zero denominator")
        self.num, self.den = _normalize(n, d)
        self._hash = None

    @classmethod
    def _raw(cls, num: Coeffs, den: Coeffs) -> "RatFun":
        r = object.__new__(cls)
        r.num = num
        r.den = den
        r._hash = None
        return r

    @classmethod
    def _make(cls, num: Coeffs, den: Coeffs) -> "RatFun":
        return cls._raw(*_normalize(num, den))

    @classmethod
    def from_fraction(cls, q) -> "RatFun":
        q = Fraction(q)
        return cls._make(_trim((q.numerator,)), (q.denominator,))

    # -- predicates -------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def is_poly(self) -> bool:
        return len(self.den) == 1

    def is_constant(self) -> bool:
        return len(self.den) == 1 and len(self.num) <= 1

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        other = _as_rf(other)
        if other is NotImplemented:
            return other
        n1, d1, n2, d2 = self.num, self.den, other.num, other.den
        if not n1:
            return other
        if not n2:
            return self
        if d1 == d2:
            if d1 == (1,):
                return RatFun._raw(_add(n1, n2), (1,)) if _add(n1, n2) else ZERO
            return RatFun._make(_add(n1, n2), d1)
        if len(d1) == 1 and len(d2) == 1:
            a, b = d1[0], d2[0]
            return RatFun._make(_add(_scale(n1, b), _scale(n2, a)), (a * b,))
        return RatFun._make(_add(_mul(n1, d2), _mul(n2, d1)), _mul(d1, d2))

    __radd__ = __add__

    def __neg__(self):
        return RatFun._raw(_neg(self.num), self.den)

    def __sub__(self, other):
        other = _as_rf(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _as_rf(other)
        if other is NotImplemented:
            return other
        n1, d1, n2, d2 = self.num, self.den, other.num, other.den
        if not n1 or not n2:
            return ZERO
        if d1 == (1,) and d2 == (1,):
            return RatFun._make(_mul(n1, n2), (1,))
        # cross-cancel before multiplying
        g1 = poly_gcd(n1, d2) if d2 != (1,) else (1,)
        g2 = poly_gcd(n2, d1) if d1 != (1,) else (1,)
        if g1 != (1,):
            n1 = _divexact(n1, g1)
            d2 = _divexact(d2, g1)
        if g2 != (1,):
            n2 = _divexact(n2, g2)
            d1 = _divexact(d1, g2)
        return RatFun._fix_content(_mul(n1, n2), _mul(d1, d2))

    __rmul__ = __mul__

    def inverse(self) -> "RatFun":
        if not self.num:
            raise ZeroDivisionError("inverse of zero in Q(alpha)")
        n, d = self.den, self.num
        if d[-1] < 0:
            n, d = _neg(n), _neg(d)
        return RatFun._raw(n, d)

    def __truediv__(self, other):
        other = _as_rf(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _as_rf(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    @staticmethod
    def _fix_content(n: Coeffs, d: Coeffs) -> "RatFun":
        c = gcd(_content(n), _content(d))
        if d[-1] < 0:
            c = -c
        if c != 1:
            n = _exact_div_int(n, c)
            d = _exact_div_int(d, c)
        return RatFun._raw(n, d)

    # -- comparisons / hashing -------------------------------------------
    def __eq__(self, other):
        other = _as_rf(other)
        if other is NotImplemented:
            return False
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    # -- evaluation -------------------------------------------------------
    def __call__(self, x) -> Fraction:
        return self.evaluate(x)

    def evaluate(self, x) -> Fraction:
        """Exact value at the rational point alpha = x."""
        x = Fraction(x)
        d = _eval_frac(self.den, x)
        if d == 0:
            raise PoleError(f"pole of {self} at alpha = {x}")
        return _eval_frac(self.num, x) / d

    # -- structure queries ------------------------------------------------
    def is_int_poly(self) -> bool:
        """Membership in Z[alpha]."""
        return self.den == (1,)

    def is_nonneg_int_poly(self) -> bool:
        """Membership in Z_{>=0}[alpha]."""
        return self.den == (1,) and all(c >= 0 for c in self.num)

    def numerator(self) -> IntPoly:
        return IntPoly._raw(self.num)

    def denominator(self) -> IntPoly:
        return IntPoly._raw(self.den)

    # -- io ---------------------------------------------------------------
    def to_json(self) -> dict:
        return {"num": [str(c) for c in self.num] or ["0"],
                "den": [str(c) for c in self.den]}

    @classmethod
    def from_json(cls, obj: dict) -> "RatFun":
        return cls(IntPoly(int(c) for c in obj["num"]),
                   IntPoly(int(c) for c in obj["den"]))

    def __repr__(self):
        return f"RatFun({list(self.num)}, {list(self.den)})"

    def __str__(self):
        n = format_poly(self.num)
        if self.den == (1,):
            return n
        d = format_poly(self.den)
        if len(self.num) > 1 and sum(1 for c in self.num if c) > 1:
            n = f"({n})"
        if sum(1 for c in self.den if c) > 1 or len(self.den) > 1 and self.den[-1] != 1:
            d = f"({d})"
        return f"{n}/{d}"


def _eval_frac(c: Coeffs, x: Fraction) -> Fraction:
    v = Fraction(0)
    for a in reversed(c):
        v = v * x + a
    return v


def _coerce(x) -> Coeffs:
    if isinstance(x, IntPoly):
        return x.coeffs
    if isinstance(x, int):
        return (x,) if x else ()
    if isinstance(x, (tuple, list)):
        return _trim([int(c) for c in x])
    raise TypeError(f"cannot build a polynomial from {x!r}")


def _normalize(n: Coeffs, d: Coeffs):
    if not n:
        return (), (1,)
    if len(d) > 1:
        g = poly_gcd(n, d)
        if len(g) > 1:
            n = _divexact(n, g)
            d = _divexact(d, g)
    c = gcd(_content(n), _content(d))
    if d[-1] < 0:
        c = -c
    if c != 1:
        n = _exact_div_int(n, c)
        d = _exact_div_int(d, c)
    return n, d


def _as_rf(x):
    if isinstance(x, RatFun):
        return x
    if isinstance(x, int):
        return RatFun._raw((x,) if x else (), (1,))
    if isinstance(x, Fraction):
        return RatFun.from_fraction(x)
    return NotImplemented


Scalar = Union[RatFun, int, Fraction]

ZERO = RatFun._raw((), (1,))
ONE = RatFun._raw((1,), (1,))
ALPHA = RatFun._raw((0, 1), (1,))


def const(x) -> RatFun:
    """Embed an int or rational number into Q(alpha)."""
    return _as_rf(Fraction(x)) if not isinstance(x, int) else _as_rf(x)


def poly(*coeffs: int) -> RatFun:
    """The polynomial c0 + c1*alpha + ... as a field element."""
    return RatFun._make(_trim(coeffs), (1,))


def rf_arith(a: RatFun, b: RatFun, kind: str) -> RatFun:
    """Field operation by name: add, sub, mul or div."""
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    if kind == "div":
        return a / b
    raise ValueError(f"unknown operation {kind!r}")


def rf_eval(a: RatFun, alpha_value) -> Fraction:
    return a.evaluate(alpha_value)


def rf_is_nonneg_int_poly(a: RatFun, *, allow_negative: bool = False) -> bool:
    """Z_{>=0}[alpha] membership; with allow_negative, plain Z[alpha] membership."""
    return a.is_int_poly() if allow_negative else a.is_nonneg_int_poly()


def parse_rational(text: str) -> Fraction:
    """Parse 'p/q' or an integer literal."""
    return Fraction(text.strip())

"""Exact coefficients: Laurent polynomials in q and the fraction field Q(q).

Laurent polynomials are stored densely as ``(val, coeffs)`` where
``coeffs[i]`` is the coefficient of ``q**(val + i)``.  Both ends of
``coeffs`` are nonzero, so equal polynomials have equal representations.

ScalarQ is a reduced fraction ``num/den``.  The denominator is kept with
lowest exponent 0, positive leading coefficient, and no common integer
content with the numerator, so equality is structural.  Internally both
parts live in python-flint ``fmpz_poly`` values next to a q-valuation.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Mapping, Union

from flint import fmpz_poly

__all__ = [
    "LaurentPoly",
    "ScalarQ",
    "Q",
    "laurent_arith",
    "scalar_arith",
    "q_int",
    "q_fact",
    "q_binom",
    "bar_involution",
    "as_scalar",
]


def _trim(val: int, coeffs: list[int]) -> tuple[int, tuple[int, ...]]:
    lo = 0
    hi = len(coeffs)
    while lo < hi and coeffs[lo] == 0:
        lo += 1
    while hi > lo and coeffs[hi - 1] == 0:
        hi -= 1
    if lo == hi:
        return 0, ()
    return val + lo, tuple(coeffs[lo:hi])


class LaurentPoly:
    """Element of Z[q, q^-1]."""

    __slots__ = ("val", "coeffs", "_hash")

    def __init__(self, terms: Mapping[int, int] | None = None):
        if not terms:
            self.val, self.coeffs = 0, ()
        else:
            lo = min(terms)
            hi = max(terms)
            dense = [0] * (hi - lo + 1)
            for e, c in terms.items():
                dense[e - lo] += int(c)
            self.val, self.coeffs = _trim(lo, dense)
        self._hash = None

    @classmethod
    def _raw(cls, val: int, coeffs: tuple[int, ...]) -> "LaurentPoly":
        p = object.__new__(cls)
        p.val = val
        p.coeffs = coeffs
        p._hash = None
        return p

    @classmethod
    def _from_dense(cls, val: int, coeffs: list[int]) -> "LaurentPoly":
        return cls._raw(*_trim(val, coeffs))

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls._raw(0, (int(c),)) if c else cls._raw(0, ())

    @classmethod
    def monomial(cls, e: int, c: int = 1) -> "LaurentPoly":
        return cls._raw(e, (int(c),)) if c else cls._raw(0, ())

    @property
    def terms(self) -> dict[int, int]:
        return {self.val + i: c for i, c in enumerate(self.coeffs) if c}

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.val == 0 and self.coeffs == (1,)

    def is_monomial(self) -> bool:
        return len(self.coeffs) == 1

    @property
    def degree(self) -> int:
        return self.val + len(self.coeffs) - 1

    @property
    def valuation(self) -> int:
        return self.val

    def lead(self) -> int:
        return self.coeffs[-1]

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
            if g == 1:
                break
        return g

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.val == other.val and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self == LaurentPoly.const(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.val, self.coeffs))
        return self._hash

    def __bool__(self):
        return bool(self.coeffs)

    def __neg__(self):
        return LaurentPoly._raw(self.val, tuple(-c for c in self.coeffs))

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        elif not isinstance(other, LaurentPoly):
            return NotImplemented
        if not other.coeffs:
            return self
        if not self.coeffs:
            return other
        lo = min(self.val, other.val)
        hi = max(self.degree, other.degree)
        out = [0] * (hi - lo + 1)
        off = self.val - lo
        for i, c in enumerate(self.coeffs):
            out[off + i] = c
        off = other.val - lo
        for i, c in enumerate(other.coeffs):
            out[off + i] += c
        return LaurentPoly._from_dense(lo, out)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        elif not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly._raw(0, ())
            return LaurentPoly._raw(self.val, tuple(c * other for c in self.coeffs))
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return LaurentPoly._raw(0, ())
        if len(a) == 1:
            a0 = a[0]
            if a0 == 1:
                return LaurentPoly._raw(self.val + other.val, b)
            return LaurentPoly._raw(self.val + other.val, tuple(a0 * c for c in b))
        if len(b) == 1:
            b0 = b[0]
            if b0 == 1:
                return LaurentPoly._raw(self.val + other.val, a)
            return LaurentPoly._raw(self.val + other.val, tuple(b0 * c for c in a))
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return LaurentPoly._from_dense(self.val + other.val, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if self.is_monomial() and abs(self.coeffs[0]) == 1:
                return LaurentPoly.monomial(self.val * n, self.coeffs[0] ** (-n))
            raise ValueError("negative power of a non-unit Laurent polynomial")
        result = LaurentPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, e: int) -> "LaurentPoly":
        """Multiply by q**e."""
        if not self.coeffs:
            return self
        return LaurentPoly._raw(self.val + e, self.coeffs)

    def bar(self) -> "LaurentPoly":
        """Substitute q -> q^-1."""
        if not self.coeffs:
            return self
        return LaurentPoly._raw(-self.degree, self.coeffs[::-1])

    def divexact(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact quotient; raises ArithmeticError if ``other`` does not divide."""
        quo, rem = _divmod_int(list(self.coeffs), list(other.coeffs))
        if rem is None or any(rem):
            raise ArithmeticError(f"{other} does not divide {self} in Z[q,q^-1]")
        return LaurentPoly._from_dense(self.val - other.val, quo)

    def evaluate(self, x):
        return sum(c * x ** (self.val + i) for i, c in enumerate(self.coeffs))

    def __repr__(self):
        return f"LaurentPoly({self.terms!r})"

    def __str__(self):
        return _laurent_str(self)

    def to_json(self) -> list[list[int]]:
        return [[e, c] for e, c in sorted(self.terms.items())]

    @classmethod
    def from_json(cls, data: Iterable) -> "LaurentPoly":
        return cls({int(e): int(c) for e, c in data})


def _laurent_str(p: LaurentPoly) -> str:
    if not p.coeffs:
        return "0"
    parts = []
    for e in range(p.degree, p.val - 1, -1):
        c = p.coeffs[e - p.val]
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if e == 0:
            body = str(a)
        else:
            var = "q" if e == 1 else f"q^{e}"
            body = var if a == 1 else f"{a}*{var}"
        parts.append((sign, body))
    s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        s += f" {sign} {body}"
    return s


def _divmod_int(a: list[int], b: list[int]):
    """Divide dense polys (lowest-degree first).  Returns (quo, rem) or (None, None)
    when the quotient would need non-integer coefficients."""
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    a = a[:]
    lb = b[-1]
    n = len(a) - len(b) + 1
    if n <= 0:
        return [0], a
    quo = [0] * n
    for i in range(n - 1, -1, -1):
        t = a[i + len(b) - 1]
        if t == 0:
            continue
        if t % lb:
            return None, None
        f = t // lb
        quo[i] = f
        for j, c in enumerate(b):
            a[i + j] -= f * c
    return quo, a[: len(b) - 1]


# -- Q(q) ------------------------------------------------------------------------------
#
# A nonzero ScalarQ is stored as q^v * N(q) / D(q) with N, D ordinary integer
# polynomials (python-flint fmpz_poly), N(0) != 0, D(0) != 0, gcd(N, D) = 1
# including integer content, and D with positive leading coefficient.  Zero is
# N = 0, D = 1, v = 0.  This is the same normal form as "den at valuation 0",
# and makes equality structural.

_F_ONE = fmpz_poly([1])
_F_ZERO = fmpz_poly([])


def _to_fmpz(p: LaurentPoly) -> tuple[int, fmpz_poly]:
    return p.val, fmpz_poly(list(p.coeffs))


def _to_laurent(v: int, p: fmpz_poly) -> LaurentPoly:
    return LaurentPoly._raw(v, tuple(int(c) for c in p.coeffs())) if not p.is_zero() else LaurentPoly._raw(0, ())


def _strip(v: int, n: fmpz_poly) -> tuple[int, fmpz_poly]:
    """Move factors of q out of n into the valuation."""
    if n[0] != 0 or n.is_zero():
        return v, n
    j = 1
    while n[j] == 0:
        j += 1
    return v + j, n.right_shift(j)


def _make(v: int, n: fmpz_poly, d: fmpz_poly) -> "ScalarQ":
    s = object.__new__(ScalarQ)
    s._v, s._n, s._d = v, n, d
    s._hash = None
    return s


def _normalize(v: int, n: fmpz_poly, d: fmpz_poly) -> "ScalarQ":
    if n.is_zero():
        return ZERO
    if d.is_zero():
        raise ZeroDivisionError("ScalarQ with zero denominator")
    v, n = _strip(v, n)
    if d[0] == 0:
        dv, d = _strip(0, d)
        v -= dv
    if not d.is_one():
        g = n.gcd(d)
        if not g.is_one():
            n = n // g
            d = d // g
        if d.leading_coefficient() < 0:
            n, d = -n, -d
    return _make(v, n, d)


class ScalarQ:
    """Element of Q(q) as a reduced fraction of Laurent polynomials."""

    __slots__ = ("_v", "_n", "_d", "_hash")

    def __init__(self, num: Union[int, LaurentPoly, "ScalarQ"] = 0, den: Union[int, LaurentPoly, None] = None):
        if isinstance(num, ScalarQ):
            other = num if den is None else num / as_scalar(den)
            self._v, self._n, self._d, self._hash = other._v, other._n, other._d, None
            return
        if isinstance(num, int):
            num = LaurentPoly.const(num)
        if den is None:
            den = LaurentPoly.const(1)
        elif isinstance(den, int):
            den = LaurentPoly.const(den)
        if den.is_zero():
            raise ZeroDivisionError("ScalarQ with zero denominator")
        nv, n = _to_fmpz(num)
        dv, d = _to_fmpz(den)
        other = _normalize(nv - dv, n, d)
        self._v, self._n, self._d, self._hash = other._v, other._n, other._d, None

    @classmethod
    def _poly(cls, p: LaurentPoly) -> "ScalarQ":
        v, n = _to_fmpz(p)
        return _make(v if p.coeffs else 0, n, _F_ONE)

    @property
    def num(self) -> LaurentPoly:
        return _to_laurent(self._v, self._n)

    @property
    def den(self) -> LaurentPoly:
        return _to_laurent(0, self._d)

    def is_zero(self) -> bool:
        return self._n.is_zero()

    def __bool__(self):
        return not self._n.is_zero()

    def is_polynomial(self) -> bool:
        return self._d.is_one()

    def to_laurent(self) -> LaurentPoly:
        if not self.is_polynomial():
            raise ArithmeticError(f"{self} is not a Laurent polynomial")
        return self.num

    def __eq__(self, other):
        if not isinstance(other, ScalarQ):
            if isinstance(other, (int, LaurentPoly)):
                other = as_scalar(other)
            else:
                return NotImplemented
        return self._v == other._v and self._n == other._n and self._d == other._d

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._v, tuple(int(c) for c in self._n.coeffs()), tuple(int(c) for c in self._d.coeffs())))
        return self._hash

    def __neg__(self):
        return _make(self._v, -self._n, self._d)

    def __add__(self, other):
        if not isinstance(other, ScalarQ):
            other = _coerce(other)
            if other is None:
                return NotImplemented
        if other._n.is_zero():
            return self
        if self._n.is_zero():
            return other
        v1, v2 = self._v, other._v
        n1, n2 = self._n, other._n
        if v1 < v2:
            n2 = n2.left_shift(v2 - v1)
            v = v1
        elif v2 < v1:
            n1 = n1.left_shift(v1 - v2)
            v = v2
        else:
            v = v1
        d1, d2 = self._d, other._d
        if d1 == d2:
            n = n1 + n2
            if n.is_zero():
                return ZERO
            if d1.is_one():
                v, n = _strip(v, n)
                return _make(v, n, _F_ONE)
            return _normalize(v, n, d1)
        return _normalize(v, n1 * d2 + n2 * d1, d1 * d2)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, ScalarQ):
            other = _coerce(other)
            if other is None:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, ScalarQ):
            other = _coerce(other)
            if other is None:
                return NotImplemented
        n1, n2 = self._n, other._n
        if n1.is_zero() or n2.is_zero():
            return ZERO
        d1, d2 = self._d, other._d
        v = self._v + other._v
        one1, one2 = d1.is_one(), d2.is_one()
        # units +-q^k only shift the valuation
        if one2 and n2.length() == 1:
            c = n2[0]
            if c == 1:
                return _make(v, n1, d1)
            if c == -1:
                return _make(v, -n1, d1)
        if one1 and n1.length() == 1:
            c = n1[0]
            if c == 1:
                return _make(v, n2, d2)
            if c == -1:
                return _make(v, -n2, d2)
        if one1 and one2:
            # N1(0) N2(0) != 0, so no q-factors appear
            return _make(v, n1 * n2, _F_ONE)
        if not one2:
            g = n1.gcd(d2)
            if not g.is_one():
                n1, d2 = n1 // g, d2 // g
        if not one1:
            g = n2.gcd(d1)
            if not g.is_one():
                n2, d1 = n2 // g, d1 // g
        n, d = n1 * n2, d1 * d2
        if d.leading_coefficient() < 0:
            n, d = -n, -d
        return _make(v, n, d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, ScalarQ):
            other = _coerce(other)
            if other is None:
                return NotImplemented
        if other._n.is_zero():
            raise ZeroDivisionError("division by zero scalar")
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _coerce(other) / self

    def inverse(self) -> "ScalarQ":
        if self._n.is_zero():
            raise ZeroDivisionError("division by zero scalar")
        n, d = self._d, self._n
        if d.leading_coefficient() < 0:
            n, d = -n, -d
        return _make(-self._v, n, d)

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        if self._n.is_zero():
            return ONE if n == 0 else ZERO
        return _make(self._v * n, self._n**n, self._d**n)

    def bar(self) -> "ScalarQ":
        return ScalarQ(self.num.bar(), self.den.bar())

    def evaluate(self, x):
        return self.num.evaluate(x) / self.den.evaluate(x)

    def __repr__(self):
        if self.is_polynomial():
            return f"ScalarQ({self.num!r})"
        return f"ScalarQ({self.num!r}, {self.den!r})"

    def __str__(self):
        if self.is_polynomial():
            return f"({self.num})"
        return f"({self.num})/({self.den})"

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data: Mapping) -> "ScalarQ":
        return cls(LaurentPoly.from_json(data["num"]), LaurentPoly.from_json(data["den"]))


def _coerce(x) -> ScalarQ | None:
    if isinstance(x, ScalarQ):
        return x
    if isinstance(x, LaurentPoly):
        return ScalarQ._poly(x)
    if isinstance(x, int):
        return ScalarQ._poly(LaurentPoly.const(x))
    if isinstance(x, Fraction):
        return ScalarQ(x.numerator, x.denominator)
    return None


def as_scalar(x) -> ScalarQ:
    s = _coerce(x)
    if s is None:
        raise TypeError(f"cannot interpret {x!r} as a scalar in Q(q)")
    return s


ZERO = ScalarQ._poly(LaurentPoly.const(0))
ONE = ScalarQ._poly(LaurentPoly.const(1))

#: the indeterminate q
Q = LaurentPoly.monomial(1)


def laurent_arith(a: LaurentPoly, b: LaurentPoly, op: str) -> LaurentPoly:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown Laurent operation {op!r}")


def scalar_arith(a, b, op: str) -> ScalarQ:
    a, b = as_scalar(a), as_scalar(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown scalar operation {op!r}")


@lru_cache(maxsize=None)
def q_int(n: int) -> LaurentPoly:
    """The q-integer [n] = (q^n - q^-n)/(q - q^-1), with [-n] = -[n]."""
    if n < 0:
        return -q_int(-n)
    return LaurentPoly({n - 1 - 2 * i: 1 for i in range(n)})


@lru_cache(maxsize=None)
def q_fact(n: int) -> LaurentPoly:
    if n < 0:
        raise ValueError("q-factorial of a negative integer")
    result = LaurentPoly.const(1)
    for k in range(2, n + 1):
        result = result * q_int(k)
    return result


@lru_cache(maxsize=None)
def q_binom(n: int, r: int) -> LaurentPoly:
    """Gaussian binomial [n choose r] in Z[q, q^-1]."""
    if n < 0 or r < 0:
        raise ValueError("q-binomial needs nonnegative arguments")
    if r > n:
        raise ValueError(f"q-binomial with r={r} > n={n}")
    return q_fact(n).divexact(q_fact(n - r) * q_fact(r))


def bar_involution(a):
    """q -> q^-1 on a Laurent polynomial or rational function."""
    if isinstance(a, LaurentPoly):
        return a.bar()
    return as_scalar(a).bar()

"""Truncated formal series in one variable z with algebra-valued coefficients.

A series stores coefficients only on its *exact window*: the exponents whose
coefficient is known for certain.  The window is ``[lo, hi]`` where either
bound may be None (unbounded).  This gives four shapes:

* ``lo`` set, ``hi`` None: a z^-1 series, e.g. X_0^+(z) truncated at z^-D.
  Every exponent >= lo is exact; high exponents are genuinely zero.
* ``lo`` None, ``hi`` set: a z series, e.g. X^-(z).
* both None: a finite Laurent polynomial in z; everything is exact.
* both set: two-sided (only produced by sums such as X(z)).

Products keep track of which coefficients are still exact, so comparisons
never read a coefficient that truncation has corrupted.
"""

from __future__ import annotations

from typing import Callable, Mapping, Optional, Union

from .pbw import Element, PBWMonomial, UNIT, phi_element, psi_element, x, y
from .scalar import LaurentPoly, ScalarQ, as_scalar
from .tensor import TensorElement, Tensor3Element, tensor_of

__all__ = [
    "WindowError",
    "TruncatedSeries",
    "SERIES_NAMES",
    "gen_series",
    "series_arith",
    "substitute",
    "coefficient",
    "constant_series",
    "tensor_series",
]

Coeff = Union[Element, TensorElement, Tensor3Element]
_INF = float("inf")

SERIES_NAMES = (
    "Xplus",
    "X0plus",
    "Xminus",
    "X0minus",
    "Yplus",
    "Y0plus",
    "Yminus",
    "Y0minus",
    "Psi",
    "Phi",
    "Xfull",
    "Yfull",
)


class WindowError(ValueError):
    """Access outside the exact window, or an ill-defined product."""


def _lo(v):
    return -_INF if v is None else v


def _hi(v):
    return _INF if v is None else v


def _fin(v):
    return None if v in (_INF, -_INF) else int(v)


class TruncatedSeries:
    __slots__ = ("ring", "coeffs", "lo", "hi")

    def __init__(self, coeffs: Mapping[int, Coeff], lo: Optional[int], hi: Optional[int], ring=Element):
        self.ring = ring
        self.lo = lo
        self.hi = hi
        d = {}
        for e, c in coeffs.items():
            if not isinstance(c, ring):
                raise TypeError(f"coefficient {c!r} is not a {ring.__name__}")
            if not c:
                continue
            if _lo(lo) <= e <= _hi(hi):
                d[int(e)] = c
        self.coeffs = d

    # -- shape -------------------------------------------------------------------

    @property
    def kind(self) -> str:
        if self.lo is None and self.hi is None:
            return "finite"
        if self.hi is None:
            return "minus"
        if self.lo is None:
            return "plus"
        return "two"

    @property
    def window(self) -> tuple[Optional[int], Optional[int]]:
        return (self.lo, self.hi)

    @property
    def order(self) -> int:
        """Largest D such that every exponent in [-D, D] is exact (or -1)."""
        return int(min(-_lo(self.lo), _hi(self.hi), 10**9))

    def is_exact(self, e: int) -> bool:
        return _lo(self.lo) <= e <= _hi(self.hi)

    def _top(self) -> float:
        """Largest exponent that may carry a nonzero coefficient."""
        if self.hi is not None:
            return _INF
        t = max(self.coeffs, default=-_INF)
        if self.lo is not None:
            t = max(t, self.lo - 1)
        return t

    def _bottom(self) -> float:
        if self.lo is not None:
            return -_INF
        b = min(self.coeffs, default=_INF)
        if self.hi is not None:
            b = min(b, self.hi + 1)
        return b

    def zero_coeff(self) -> Coeff:
        return self.ring.zero()

    def coefficient(self, e: int) -> Coeff:
        if not self.is_exact(e):
            raise WindowError(f"exponent {e} outside exact window [{self.lo}, {self.hi}]")
        return self.coeffs.get(e, self.ring.zero())

    def items(self):
        return sorted(self.coeffs.items())

    # -- arithmetic -----------------------------------------------------------------

    def _check_ring(self, other: "TruncatedSeries"):
        if self.ring is not other.ring:
            raise TypeError("series with different coefficient rings")

    def __add__(self, other):
        other = _as_series(other, self.ring)
        if other is None:
            return NotImplemented
        self._check_ring(other)
        lo = _fin(max(_lo(self.lo), _lo(other.lo)))
        hi = _fin(min(_hi(self.hi), _hi(other.hi)))
        d = dict(self.coeffs)
        for e, c in other.coeffs.items():
            d[e] = d[e] + c if e in d else c
        return TruncatedSeries(d, lo, hi, self.ring)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries({e: -c for e, c in self.coeffs.items()}, self.lo, self.hi, self.ring)

    def __sub__(self, other):
        other = _as_series(other, self.ring)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, s) -> "TruncatedSeries":
        s = as_scalar(s)
        return TruncatedSeries({e: c.scale(s) for e, c in self.coeffs.items()}, self.lo, self.hi, self.ring)

    def __mul__(self, other):
        if isinstance(other, (int, ScalarQ, LaurentPoly)):
            return self.scale(other)
        other = _as_series(other, self.ring)
        if other is None:
            return NotImplemented
        self._check_ring(other)
        return cauchy(self, other, lambda a, b: a * b, self.ring)

    def __rmul__(self, other):
        if isinstance(other, (int, ScalarQ, LaurentPoly)):
            return self.scale(other)
        other = _as_series(other, self.ring)
        if other is None:
            return NotImplemented
        return other * self

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a series")
        result = constant_series(self.ring.one())
        for _ in range(n):
            result = result * self
        return result

    def shift_z(self, k: int) -> "TruncatedSeries":
        """Multiply by z^k."""
        lo = None if self.lo is None else self.lo + k
        hi = None if self.hi is None else self.hi + k
        return TruncatedSeries({e + k: c for e, c in self.coeffs.items()}, lo, hi, self.ring)

    def truncate(self, lo: Optional[int] = None, hi: Optional[int] = None) -> "TruncatedSeries":
        """Shrink the exact window (never widens it)."""
        nlo = _fin(max(_lo(self.lo), _lo(lo)))
        nhi = _fin(min(_hi(self.hi), _hi(hi)))
        return TruncatedSeries(self.coeffs, nlo, nhi, self.ring)

    def map_coefficients(self, f: Callable[[Coeff], Coeff], ring=None) -> "TruncatedSeries":
        ring = ring or self.ring
        return TruncatedSeries({e: f(c) for e, c in self.coeffs.items()}, self.lo, self.hi, ring)

    # -- comparison ---------------------------------------------------------------------

    def differences(self, other: "TruncatedSeries") -> list[int]:
        """Exponents in the common exact window where the coefficients differ."""
        self._check_ring(other)
        lo = max(_lo(self.lo), _lo(other.lo))
        hi = min(_hi(self.hi), _hi(other.hi))
        keys = set(self.coeffs) | set(other.coeffs)
        return sorted(
            e for e in keys if lo <= e <= hi and self.coeffs.get(e, self.ring.zero()) != other.coeffs.get(e, self.ring.zero())
        )

    def common_window(self, other: "TruncatedSeries") -> tuple[Optional[int], Optional[int]]:
        return _fin(max(_lo(self.lo), _lo(other.lo))), _fin(min(_hi(self.hi), _hi(other.hi)))

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.ring is other.ring and self.window == other.window and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.lo, self.hi, frozenset(self.coeffs.items())))

    # -- rendering ----------------------------------------------------------------------

    def __str__(self):
        if not self.coeffs:
            body = "0"
        else:
            body = " + ".join(f"({c}) z^{e}" for e, c in sorted(self.coeffs.items(), reverse=True))
        lo = "-inf" if self.lo is None else self.lo
        hi = "+inf" if self.hi is None else self.hi
        return f"sum_k {body}  [exact window {lo}..{hi}]"

    def __repr__(self):
        return f"TruncatedSeries({self})"

    def to_json(self) -> dict:
        return {
            "window": [self.lo, self.hi],
            "coeffs": [[e, c.to_json()] for e, c in sorted(self.coeffs.items())],
        }


def _as_series(v, ring) -> Optional[TruncatedSeries]:
    if isinstance(v, TruncatedSeries):
        return v
    if isinstance(v, ring):
        return constant_series(v)
    if isinstance(v, (int, ScalarQ, LaurentPoly)):
        return constant_series(ring.one().scale(v))
    return None


def constant_series(c: Coeff) -> TruncatedSeries:
    """A coefficient viewed as a series with only a z^0 term (exact everywhere)."""
    return TruncatedSeries({0: c}, None, None, type(c))


def cauchy(a: TruncatedSeries, b: TruncatedSeries, op: Callable, ring) -> TruncatedSeries:
    """Cauchy product with coefficient multiplication ``op``; result window
    restricted to the exponents that are provably exact."""
    ka, kb = a.kind, b.kind
    if "two" in (ka, kb) and "finite" not in (ka, kb):
        raise WindowError("two-sided series can only be multiplied by finite ones")
    if {ka, kb} == {"minus", "plus"}:
        raise WindowError("product of a z^-1 series and a z series is not defined")
    lo_c = [v.lo + w._top() for v, w in ((a, b), (b, a)) if v.lo is not None]
    hi_c = [v.hi + w._bottom() for v, w in ((a, b), (b, a)) if v.hi is not None]
    lo = max(lo_c, default=-_INF)
    hi = min(hi_c, default=_INF)
    if lo == _INF or hi == -_INF or lo > hi:
        raise WindowError("product has no exact coefficients")
    out: dict = {}
    for ea, ca in a.coeffs.items():
        for eb, cb in b.coeffs.items():
            e = ea + eb
            if not (lo <= e <= hi):
                continue
            p = op(ca, cb)
            out[e] = out[e] + p if e in out else p
    return TruncatedSeries(out, _fin(lo), _fin(hi), ring)


def tensor_series(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """A(z) (x) B(z) as a single series with TensorElement coefficients."""
    if a.ring is not Element or b.ring is not Element:
        raise TypeError("tensor_series pairs two Element-valued series")
    return cauchy(a, b, tensor_of, TensorElement)


def gen_series(name: str, D: int) -> TruncatedSeries:
    """The generating functions, truncated at order D."""
    if D < 0:
        raise ValueError("order must be nonnegative")
    if name == "Xplus":
        return TruncatedSeries({-k: x(k) for k in range(1, D + 1)}, -D, None)
    if name == "X0plus":
        return TruncatedSeries({-k: x(k) for k in range(0, D + 1)}, -D, None)
    if name == "Xminus":
        return TruncatedSeries({k: x(-k) for k in range(1, D + 1)}, None, D)
    if name == "X0minus":
        return TruncatedSeries({k: x(-k) for k in range(0, D + 1)}, None, D)
    if name == "Yplus":
        return TruncatedSeries({-k: y(k) for k in range(1, D + 1)}, -D, None)
    if name == "Y0plus":
        return TruncatedSeries({-k: y(k) for k in range(0, D + 1)}, -D, None)
    if name == "Yminus":
        return TruncatedSeries({k: y(-k) for k in range(1, D + 1)}, None, D)
    if name == "Y0minus":
        return TruncatedSeries({k: y(-k) for k in range(0, D + 1)}, None, D)
    if name == "Psi":
        return TruncatedSeries({-k: psi_element(k) for k in range(0, D + 1)}, -D, None)
    if name == "Phi":
        return TruncatedSeries({k: phi_element(-k) for k in range(0, D + 1)}, None, D)
    if name == "Xfull":
        return gen_series("X0plus", D) + gen_series("Xminus", D)
    if name == "Yfull":
        return gen_series("Y0plus", D) + gen_series("Yminus", D)
    raise ValueError(f"unknown series {name!r}; expected one of {SERIES_NAMES}")


def series_arith(a: TruncatedSeries, b: TruncatedSeries, op: str) -> TruncatedSeries:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown series operation {op!r}")


def _central_scale(scale, ring):
    """Normalize a central scale to (q-coefficient, c-exponents per factor)."""
    if isinstance(scale, (int, ScalarQ, LaurentPoly)):
        return as_scalar(scale), (0,) * (1 if ring is Element else ring.ARITY)
    if isinstance(scale, Element):
        if len(scale.terms) != 1:
            raise ValueError("scale must be a single central monomial")
        ((m, c),) = scale.terms.items()
        if not m.is_central():
            raise ValueError(f"scale {m} is not central")
        return c, (m.c_half,)
    if isinstance(scale, (TensorElement, Tensor3Element)):
        if len(scale.terms) != 1:
            raise ValueError("scale must be a single central monomial")
        ((key, c),) = scale.terms.items()
        if not all(m.is_central() for m in key):
            raise ValueError("scale is not central")
        return c, tuple(m.c_half for m in key)
    raise TypeError(f"cannot use {scale!r} as a scale")


def substitute(a: TruncatedSeries, scale, power: int = 1) -> TruncatedSeries:
    """Multiply the z^-k coefficient by scale^(k*power).

    With power=+1 this is a(z/s); with power=-1 it is a(s z), the form in which
    central rescalings like X(q^2 c z) appear.  The scale must be central.
    """
    if power not in (1, -1):
        raise ValueError("power must be +1 or -1")
    s, c2 = _central_scale(scale, a.ring)
    if a.ring is Element:
        if len(c2) != 1:
            raise ValueError("tensor scale applied to an Element series")
    elif len(c2) != a.ring.ARITY:
        raise ValueError("scale arity does not match the series coefficients")
    out = {}
    for e, c in a.coeffs.items():
        k = -e * power
        f = s**k
        if any(c2):
            c = c.shift_central(*(b * k for b in c2))
        out[e] = c.scale(f)
    return TruncatedSeries(out, a.lo, a.hi, a.ring)


def coefficient(a: TruncatedSeries, e: int) -> Coeff:
    return a.coefficient(e)

"""Ordered index tuples, the coefficients c_{m_n..m_1}(q), closed forms for
powers of X_0^+(z) and Y_0^+(z), and closed-form coproducts of the loop
generators.

Tuples are written (m_n, ..., m_1) with m_n <= ... <= m_1 and stored in that
order, so ``t[0]`` is the smallest entry m_n and ``t[-1]`` is m_1.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, Sequence

from .pbw import Element, c_half, phi_element, psi_element, word_element
from .scalar import LaurentPoly, ScalarQ, q_binom, q_fact, q_int
from .series import TruncatedSeries
from .tensor import TensorElement, tensor_of

__all__ = [
    "enumerate_omega",
    "l_profile",
    "c_coeff_recursive",
    "c_coeff_closed",
    "c_shift_check",
    "power_closed",
    "delta_closed",
    "READINGS",
]

READINGS = ("printed", "corrected")

_QQ = LaurentPoly({1: 1, -1: -1})


def _qp(e: int) -> LaurentPoly:
    return LaurentPoly.monomial(e)


# -- index tuples -------------------------------------------------------------------


def _weak(n: int, m: int, low: int) -> Iterator[tuple]:
    """Weakly increasing n-tuples with entries >= low summing to m, lexicographic."""
    if n == 0:
        if m == 0:
            yield ()
        return
    if n == 1:
        if m >= low:
            yield (m,)
        return
    # smallest entry first; the rest must be >= it
    for first in range(low, m // n + 1):
        for rest in _weak(n - 1, m - first, first):
            yield (first,) + rest


def enumerate_omega(n: int, m: int, positive: bool = False) -> list[tuple]:
    """Omega_{n,m} (entries >= 0) or Omega^+_{n,m} (entries >= 1)."""
    if n < 1 or m < 0:
        raise ValueError("need n >= 1 and m >= 0")
    return list(_weak(n, m, 1 if positive else 0))


def _check_tuple(t: Sequence[int]) -> tuple:
    t = tuple(int(v) for v in t)
    if any(a > b for a, b in zip(t, t[1:])):
        raise ValueError(f"tuple {t} is not weakly increasing")
    if t and t[0] < 0:
        raise ValueError(f"tuple {t} has negative entries")
    return t


def l_profile(t: Sequence[int]) -> tuple:
    """Run lengths of equal entries, scanning from the smallest entry m_n."""
    t = _check_tuple(t)
    out: list[int] = []
    prev = None
    for v in t:
        if v == prev:
            out[-1] += 1
        else:
            out.append(1)
            prev = v
    return tuple(out)


@lru_cache(maxsize=None)
def _c_rec(t: tuple) -> ScalarQ:
    k = len(t)
    if k <= 1:
        return ScalarQ(1)
    mk = t[0]
    total = ScalarQ(0)
    for j in range(k):
        # delta_{m_{j+1}, m_k}; m_{j+1} sits at position k-j-1
        if t[k - j - 1] != mk:
            continue
        sign = -1 if (k + j + 1) % 2 else 1
        term = q_binom(k, j) * _qp((k - j) * (k - 1) - j * (j - 1) * mk) * sign
        total = total + _c_rec(t[k - j :]) * ScalarQ(term)
    return total * ScalarQ(_qp(k * (k - 1) * mk))


def c_coeff_recursive(t: Sequence[int]) -> ScalarQ:
    """c_{m_k..m_1}(q) by its defining recursion."""
    return _c_rec(_check_tuple(t))


@lru_cache(maxsize=None)
def _c_closed(t: tuple) -> LaurentPoly:
    n = len(t)
    if n == 0:
        return LaurentPoly.const(1)
    ls = l_profile(t)
    denom = LaurentPoly.const(1)
    for l in ls:
        denom = denom * q_fact(l)
    mult = q_fact(n).divexact(denom)
    # m_i = t[n - i]
    e2 = sum(2 * (i - 1) * t[n - i] for i in range(1, n + 1))
    rest = n * (n - 1) - sum(l * (l - 1) for l in ls)
    return mult.shift(e2 + rest // 2)


def c_coeff_closed(t: Sequence[int]) -> LaurentPoly:
    """Product formula [n]!/([l_1]!...[l_j]!) q^(...); always in Z[q, q^-1]."""
    return _c_closed(_check_tuple(t))


def c_shift_check(t: Sequence[int], a: int) -> bool:
    """c(t - a) == q^{-k(k-1)a} c(t)."""
    t = _check_tuple(t)
    if a < 0 or (t and a > t[0]):
        raise ValueError("need 0 <= a <= min entry")
    k = len(t)
    lhs = c_coeff_closed(tuple(v - a for v in t))
    return lhs == c_coeff_closed(t).shift(-k * (k - 1) * a)


def _c(t: tuple, inverse: bool = False) -> ScalarQ:
    v = _c_closed(t)
    return ScalarQ(v.bar() if inverse else v)


# -- powers -------------------------------------------------------------------------


def power_closed(kind: str, n: int, D: int) -> TruncatedSeries:
    """X_0^+(z)^n or Y_0^+(z)^n from the c-coefficients, exact down to z^-D."""
    if n < 1 or D < 0:
        raise ValueError("need n >= 1 and D >= 0")
    if kind not in ("X0plus", "Y0plus"):
        raise ValueError("kind must be X0plus or Y0plus")
    letter = "x" if kind == "X0plus" else "y"
    coeffs = {}
    for m in range(D + 1):
        acc = Element.zero()
        for t in enumerate_omega(n, m):
            word = t if letter == "x" else t[::-1]
            acc = acc + word_element([(letter, i) for i in word], _c(t))
        coeffs[-m] = acc
    return TruncatedSeries(coeffs, -D, None)


# -- closed-form coproducts ---------------------------------------------------------------


def _word(letters, c2: int = 0, coeff=1) -> Element:
    return word_element(list(letters) + ([("c", c2)] if c2 else []), coeff)


def _x_word(t: Sequence[int], sign: int = 1) -> list:
    """x_{t[0]} ... x_{t[-1]} (indices negated when sign = -1)."""
    return [("x", sign * a) for a in t]


def _y_word(t: Sequence[int], sign: int = 1) -> list:
    """y_{t[-1]} ... y_{t[0]}, i.e. y_{b_1} ... y_{b_n}."""
    return [("y", sign * b) for b in reversed(t)]


def _cp(b2: int) -> Element:
    return c_half(b2) if b2 else Element.one()


def _delta_x_pos(N: int) -> TensorElement:
    out = tensor_of(_cp(2 * N), _word(_x_word([N])))
    for k in range(N + 1):
        out = out + tensor_of(_cp(2 * (N - k)) * _word(_x_word([k])), _cp(N + 3 * k) * psi_element(N - k))
    for n in range(1, N + 1):
        pref = ScalarQ((_qp(1) * _QQ**2 * -1) ** n * _qp(-n * (n - 1)))
        for m in range(N + 1):
            left = Element.zero()
            for a in enumerate_omega(n + 1, m):
                left = left + _word(_x_word(a), 2 * (N - m), _c(a))
            if not left:
                continue
            right = Element.zero()
            for k in range(N - m + 1):
                for b in enumerate_omega(n, N - m - k, True):
                    coef = _c(b) * ScalarQ(_qp(-2 * (N - m - k)))
                    right = right + _word(_y_word(b), 2 * N + 2 * m - k, coef) * psi_element(k)
            if right:
                out = out + tensor_of(left, right).scale(pref)
    return out


def _delta_x_neg(N: int) -> TensorElement:
    out = tensor_of(_cp(-2 * N), _word(_x_word([-N])))
    for k in range(1, N + 1):
        out = out + tensor_of(_cp(-2 * (N - k)) * _word(_x_word([-k])), _cp(N - k) * phi_element(-(N - k)))
    for n in range(1, N + 1):
        pref = ScalarQ((_qp(1) * _QQ**2 * -1) ** n * _qp(n * (n + 1)))
        for m in range(N + 1):
            left = Element.zero()
            for a in enumerate_omega(n + 1, m, True):
                left = left + _word(_x_word(a, -1), -2 * (N - m), _c(a, True))
            if not left:
                continue
            right = Element.zero()
            for k in range(N - m + 1):
                for b in enumerate_omega(n, N - m - k):
                    coef = _c(b, True) * ScalarQ(_qp(2 * (N - m - k)))
                    right = right + _word(_y_word(b, -1), 2 * (N - m) - k, coef) * phi_element(-k)
            if right:
                out = out + tensor_of(left, right).scale(pref)
    return out


def _delta_y_pos(N: int, psi_fix: bool, coeff_fix: bool) -> TensorElement:
    out = tensor_of(_word(_y_word([N])), _cp(2 * N))
    for k in range(1, N + 1):
        out = out + tensor_of(_cp(-(N - k)) * psi_element(N - k), _cp(2 * (N - k)) * _word(_y_word([k])))
    for n in range(1, N + 1):
        pref = ScalarQ((_qp(-1) * _QQ**2 * -1) ** n * _qp(-n * (n + 1)))
        for m in range(N + 1):
            right = Element.zero()
            for b in enumerate_omega(n + 1, m, True):
                coef = _c(b) if coeff_fix else _c(b[1:])
                right = right + _word(_y_word(b), 2 * (N - m), coef)
            if not right:
                continue
            left = Element.zero()
            for k in range(N - m + 1):
                if psi_fix:
                    head = psi_element(k)
                elif k == 0:
                    head = phi_element(0)
                else:
                    continue  # phi_k vanishes for k > 0
                for a in enumerate_omega(n, N - m - k):
                    coef = _c(a) * ScalarQ(_qp(-2 * (N - m - k)))
                    left = left + head * _word(_x_word(a), -(2 * (N - m) - k), coef)
            if left:
                out = out + tensor_of(left, right).scale(pref)
    return out


def _delta_y_neg(N: int) -> TensorElement:
    out = tensor_of(_word(_y_word([-N])), _cp(-2 * N))
    for k in range(N + 1):
        out = out + tensor_of(_cp(-(N + 3 * k)) * phi_element(-(N - k)), _cp(-2 * (N - k)) * _word(_y_word([-k])))
    for n in range(1, N + 1):
        pref = ScalarQ((_qp(-1) * _QQ**2 * -1) ** n * _qp(n * (n - 1)))
        for m in range(N + 1):
            right = Element.zero()
            for b in enumerate_omega(n + 1, m):
                right = right + _word(_y_word(b, -1), -2 * (N - m), _c(b, True))
            if not right:
                continue
            left = Element.zero()
            for k in range(N - m + 1):
                for a in enumerate_omega(n, N - m - k, True):
                    coef = _c(a, True) * ScalarQ(_qp(2 * (N - m - k)))
                    left = left + phi_element(-k) * _word(_x_word(a, -1), -(2 * N + 2 * m - k), coef)
            if left:
                out = out + tensor_of(left, right).scale(pref)
    return out


def _delta_psi(N: int) -> TensorElement:
    out = TensorElement.zero()
    for k in range(N + 1):
        out = out + tensor_of(_cp(N - k) * psi_element(k), _cp(3 * k) * psi_element(N - k))
    for n in range(1, N + 1):
        pref = ScalarQ(_QQ ** (2 * n) * q_int(n + 1) * _qp(-n * (n - 1)) * (-1) ** n)
        for m in range(N + 1):
            left = Element.zero()
            for k in range(m + 1):
                for a in enumerate_omega(n, m - k):
                    coef = _c(a) * ScalarQ(_qp(-2 * (m - k)))
                    left = left + psi_element(k) * _word(_x_word(a), N - 2 * m + k, coef)
            if not left:
                continue
            right = Element.zero()
            for l in range(N - m + 1):
                for b in enumerate_omega(n, N - m - l, True):
                    coef = _c(b) * ScalarQ(_qp(-2 * (N - m - l)))
                    right = right + _word(_y_word(b), N + 2 * m - l, coef) * psi_element(l)
            if right:
                out = out + tensor_of(left, right).scale(pref)
    return out


def _delta_phi(N: int) -> TensorElement:
    out = TensorElement.zero()
    for k in range(N + 1):
        out = out + tensor_of(_cp(-3 * k) * phi_element(-(N - k)), _cp(-(N - k)) * phi_element(-k))
    for n in range(1, N + 1):
        pref = ScalarQ(_QQ ** (2 * n) * q_int(n + 1) * _qp(n * (n - 1)) * (-1) ** n)
        for m in range(N + 1):
            right = Element.zero()
            for k in range(m + 1):
                for b in enumerate_omega(n, m - k):
                    coef = _c(b, True) * ScalarQ(_qp(2 * (m - k)))
                    right = right + _word(_y_word(b, -1), -(N - 2 * m + k), coef) * phi_element(-k)
            if not right:
                continue
            left = Element.zero()
            for l in range(N - m + 1):
                for a in enumerate_omega(n, N - m - l, True):
                    coef = _c(a, True) * ScalarQ(_qp(2 * (N - m - l)))
                    left = left + phi_element(-l) * _word(_x_word(a, -1), -(N + 2 * m - l), coef)
            if left:
                out = out + tensor_of(left, right).scale(pref)
    return out


@lru_cache(maxsize=None)
def delta_closed(family: str, index: int, reading: str = "corrected") -> TensorElement:
    """Closed-form coproduct of x_N, y_N, psi_N (N >= 0) or phi_N (N <= 0).

    ``reading`` only affects y_N with N >= 1, where the printed formula has a
    phi_k that should be psi_k and a coefficient c_{b_n..b_1} that should be
    c_{b_{n+1}..b_1}.  "printed" evaluates it literally; "corrected" uses
    psi_k and the full tuple.  The readings "psi_only" and "coeff_only" fix
    one of the two.  Index 0 for x and y returns the defining values.
    """
    fixes = {
        "printed": (False, False),
        "corrected": (True, True),
        "psi_only": (True, False),
        "coeff_only": (False, True),
    }
    if reading not in fixes:
        raise ValueError(f"unknown reading {reading!r}")
    if family == "x":
        if index == 0:
            return tensor_of(word_element([("x", 0)]), Element.monomial((1,))) + tensor_of(
                Element.one(), word_element([("x", 0)])
            )
        return _delta_x_pos(index) if index > 0 else _delta_x_neg(-index)
    if family == "y":
        if index == 0:
            return tensor_of(word_element([("y", 0)]), Element.one()) + tensor_of(
                Element.monomial((-1,)), word_element([("y", 0)])
            )
        if index > 0:
            return _delta_y_pos(index, *fixes[reading])
        return _delta_y_neg(-index)
    if family == "psi":
        if index < 0:
            raise ValueError("psi index must be >= 0")
        return _delta_psi(index)
    if family == "phi":
        if index > 0:
            raise ValueError("phi index must be <= 0")
        return _delta_phi(-index)
    raise ValueError(f"unknown family {family!r}")

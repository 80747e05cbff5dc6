"""Algebra maps: index shifts S and T, the antiautomorphisms alpha and beta,
and the comultiplication Delta.

Delta is fixed on a small seed set (K, c^{1/2}, x_0, y_0, x_{-1}, y_1, h_{+-1})
and extended to every generator by commutators:

    x_{n+-1} = [2]^-1 c^{1/2} [h_{+-1}, x_n]
    y_{n+-1} = -[2]^-1 c^{-1/2} [h_{+-1}, y_n]
    psi_N = (q - q^-1) c^{-N/2} [x_N, y_0]          (N >= 1)
    phi_-N = -(q - q^-1) c^{-N/2} [x_-N, y_0]        (N >= 1)

Higher h_m come from taking the logarithm of K^-1 psi(z) (resp. K phi(z)).
"""

from __future__ import annotations

from functools import lru_cache
from typing import Callable, Union

from .pbw import (
    UNIT,
    Element,
    PBWMonomial,
    _acc,
    c_half,
    h,
    word_element,
    x,
    y,
)
from .scalar import ONE, LaurentPoly, Q, ScalarQ, q_int
from .tensor import Tensor3Element, TensorElement, tensor_commutator, tensor_of

__all__ = [
    "SEED_TAGS",
    "shift_S",
    "shift_T",
    "alpha",
    "beta",
    "alpha_tensor",
    "alpha_series",
    "delta_seed",
    "delta_recursive",
    "delta_h",
    "delta",
    "delta_on_factor",
]

SEED_TAGS = ("x0", "y0", "x_minus1", "y1", "K", "Kinv", "c_half", "c_minus_half", "h1", "h_minus1")

_QQ = LaurentPoly({1: 1, -1: -1})  # q - q^-1
_INV_QQ = ScalarQ(1) / ScalarQ(_QQ)
_INV_2 = ScalarQ(1) / ScalarQ(q_int(2))


def _map_monomials(a: Element, f: Callable[[PBWMonomial], Element], coeff=None) -> Element:
    out: dict = {}
    for m, c in a.terms.items():
        if coeff is not None:
            c = coeff(c)
        for m2, c2 in f(m).terms.items():
            _acc(out, m2, c * c2)
    return Element._raw(out)


# -- S and T -----------------------------------------------------------------


def shift_S(a: Element, direction: int = 1) -> Element:
    """x_n -> x_{n+direction}; h, K, c fixed.  Defined on the y-free part."""
    if direction not in (1, -1):
        raise ValueError("direction must be +1 or -1")
    out = {}
    for m, c in a.terms.items():
        if m.y_block:
            raise ValueError("shift_S is only defined on elements without y-generators")
        out[m._replace(x_block=tuple(i + direction for i in m.x_block))] = c
    return Element._raw(out)


def shift_T(a: Element, direction: int = 1) -> Element:
    """y_n -> y_{n+direction}; h, K, c fixed.  Defined on the x-free part."""
    if direction not in (1, -1):
        raise ValueError("direction must be +1 or -1")
    out = {}
    for m, c in a.terms.items():
        if m.x_block:
            raise ValueError("shift_T is only defined on elements without x-generators")
        out[m._replace(y_block=tuple(l + direction for l in m.y_block))] = c
    return Element._raw(out)


# -- alpha and beta -------------------------------------------------------------


@lru_cache(maxsize=None)
def _alpha_mono(m: PBWMonomial) -> Element:
    k, c2, xs, hs, ys = m
    letters = [("K", -k)]
    letters += [("x", -l) for l in reversed(ys)]
    letters += [("h", -j) for j in reversed(hs)]
    letters += [("y", -i) for i in reversed(xs)]
    letters.append(("c", -c2))
    return word_element(letters)


@lru_cache(maxsize=None)
def _beta_mono(m: PBWMonomial) -> Element:
    k, c2, xs, hs, ys = m
    letters = [("K", k)]
    letters += [("x", l) for l in reversed(ys)]
    letters += [("h", j) for j in reversed(hs)]
    letters += [("y", i) for i in reversed(xs)]
    letters.append(("c", -c2))
    return word_element(letters)


def alpha(a: Element) -> Element:
    """Antiautomorphism with q -> q^-1, c^{1/2} -> c^{-1/2}, x_n -> y_-n,
    y_n -> x_-n, h_k -> h_-k, K -> K^-1."""
    return _map_monomials(a, _alpha_mono, coeff=ScalarQ.bar)


def beta(a: Element) -> Element:
    """Q(q)-linear antiautomorphism with c^{1/2} -> c^{-1/2}, x_n <-> y_n,
    h_k and K fixed."""
    return _map_monomials(a, _beta_mono)


def alpha_tensor(t: TensorElement) -> TensorElement:
    """(alpha (x) alpha) composed with the flip."""
    out: dict = {}
    for (a, b), c in t.terms.items():
        cb = c.bar()
        ea, eb = _alpha_mono(a), _alpha_mono(b)
        for mb, c1 in eb.terms.items():
            for ma, c2 in ea.terms.items():
                _acc(out, (mb, ma), cb * c1 * c2)
    return TensorElement._raw(out)


def alpha_series(s):
    """alpha applied coefficientwise; z is an inert variable."""
    f = alpha_tensor if s.ring is TensorElement else alpha
    return s.map_coefficients(f)


# -- coproduct -----------------------------------------------------------------------


def _one() -> Element:
    return Element.one()


def _K(e: int) -> Element:
    return Element._raw({PBWMonomial(e): ONE})


def _cpow(b: int) -> Element:
    return c_half(b) if b else _one()


def _t(a: Element, b: Element) -> TensorElement:
    return tensor_of(a, b)


@lru_cache(maxsize=None)
def delta_seed(tag: str) -> TensorElement:
    """Delta on the seed generators."""
    qq2 = ScalarQ(Q**2 - LaurentPoly.monomial(-2))  # q^2 - q^-2
    if tag == "x0":
        return _t(x(0), _K(1)) + _t(_one(), x(0))
    if tag == "y0":
        return _t(y(0), _one()) + _t(_K(-1), y(0))
    if tag == "x_minus1":
        return _t(x(-1), _K(-1)) + _t(_cpow(-2), x(-1))
    if tag == "y1":
        return _t(y(1), _cpow(2)) + _t(_K(1), y(1))
    if tag == "K":
        return _t(_K(1), _K(1))
    if tag == "Kinv":
        return _t(_K(-1), _K(-1))
    if tag == "c_half":
        return _t(_cpow(1), _cpow(1))
    if tag == "c_minus_half":
        return _t(_cpow(-1), _cpow(-1))
    if tag == "h1":
        return (
            _t(h(1), _cpow(3))
            + _t(_cpow(1), h(1))
            - _t(_cpow(1) * x(0), _cpow(1) * y(1)).scale(qq2)
        )
    if tag == "h_minus1":
        # image of Delta(h_1) under (alpha (x) alpha) o flip
        return (
            _t(h(-1), _cpow(-1))
            + _t(_cpow(-3), h(-1))
            + _t(_cpow(-1) * x(-1), _cpow(-1) * y(0)).scale(qq2)
        )
    raise ValueError(f"unknown seed tag {tag!r}; expected one of {SEED_TAGS}")


@lru_cache(maxsize=None)
def delta_recursive(family: str, index: int) -> TensorElement:
    """Delta of x_n, y_n, psi_n (n >= 0) or phi_n (n <= 0) built from the seeds."""
    if family == "x":
        if index == 0:
            return delta_seed("x0")
        if index == -1:
            return delta_seed("x_minus1")
        if index > 0:
            hh, prev = delta_seed("h1"), delta_recursive("x", index - 1)
        else:
            hh, prev = delta_seed("h_minus1"), delta_recursive("x", index + 1)
        return tensor_commutator(hh, prev).shift_central(1, 1).scale(_INV_2)
    if family == "y":
        if index == 0:
            return delta_seed("y0")
        if index == 1:
            return delta_seed("y1")
        if index > 1:
            hh, prev = delta_seed("h1"), delta_recursive("y", index - 1)
        else:
            hh, prev = delta_seed("h_minus1"), delta_recursive("y", index + 1)
        return tensor_commutator(hh, prev).shift_central(-1, -1).scale(-_INV_2)
    if family == "psi":
        if index < 0:
            raise ValueError("psi index must be >= 0")
        if index == 0:
            return delta_seed("K")
        com = tensor_commutator(delta_recursive("x", index), delta_seed("y0"))
        return com.shift_central(-index, -index).scale(ScalarQ(_QQ))
    if family == "phi":
        if index > 0:
            raise ValueError("phi index must be <= 0")
        if index == 0:
            return delta_seed("Kinv")
        n = -index
        com = tensor_commutator(delta_recursive("x", index), delta_seed("y0"))
        return com.shift_central(-n, -n).scale(-ScalarQ(_QQ))
    raise ValueError(f"unknown family {family!r}")


@lru_cache(maxsize=None)
def delta_h(k: int) -> TensorElement:
    """Delta(h_k) for any k != 0.

    With u_m = K^-1 psi_m / (q - q^-1) for m >= 1, K^-1 psi(z) = exp(H(z)) where
    H(z) = (q - q^-1) sum h_m z^-m, so
    h_m = u_m - (q - q^-1)/m * sum_{j=1}^{m-1} j h_j u_{m-j}
    (the usual recursion for the logarithm of a power series with constant
    term 1).  The phi side is identical with K <-> K^-1, h_m -> h_-m and
    q - q^-1 -> -(q - q^-1).
    """
    if k == 0:
        raise ValueError("h-index must be nonzero")
    if k == 1:
        return delta_seed("h1")
    if k == -1:
        return delta_seed("h_minus1")
    m = abs(k)
    if k > 0:
        kpow, family, sgn = delta_seed("Kinv"), "psi", 1
    else:
        kpow, family, sgn = delta_seed("K"), "phi", -1
    lam = ScalarQ(_QQ) * sgn

    def u(j: int) -> TensorElement:
        return (kpow * delta_recursive(family, sgn * j)).scale(ScalarQ(1) / lam)

    acc = u(m)
    corr = TensorElement.zero()
    for j in range(1, m):
        corr = corr + (delta_h(sgn * j) * u(m - j)).scale(j)
    return acc - corr.scale(lam / ScalarQ(m))


def _delta_letter(kind: str, idx: int) -> TensorElement:
    if kind == "x":
        return delta_recursive("x", idx)
    if kind == "y":
        return delta_recursive("y", idx)
    return delta_h(idx)


@lru_cache(maxsize=None)
def _delta_mono(m: PBWMonomial) -> TensorElement:
    k, c2, xs, hs, ys = m
    out = TensorElement._raw({(PBWMonomial(0, c2), PBWMonomial(0, c2)): ONE})
    for kind, idx in m.letters():
        out = out * _delta_letter(kind, idx)
    if k:
        out = out * TensorElement._raw({(PBWMonomial(k), PBWMonomial(k)): ONE})
    return out


def delta(a: Element) -> TensorElement:
    """Delta extended multiplicatively and linearly to any Element."""
    out: dict = {}
    for m, c in a.terms.items():
        for key, c2 in _delta_mono(m).terms.items():
            _acc(out, key, c * c2)
    return TensorElement._raw(out)


def delta_on_factor(t: TensorElement, i: int) -> Tensor3Element:
    """(Delta (x) id) for i = 0, (id (x) Delta) for i = 1."""
    out: dict = {}
    for (a, b), c in t.terms.items():
        if i == 0:
            for (a1, a2), c2 in _delta_mono(a).terms.items():
                _acc(out, (a1, a2, b), c * c2)
        else:
            for (b1, b2), c2 in _delta_mono(b).terms.items():
                _acc(out, (a, b1, b2), c * c2)
    return Tensor3Element._raw(out)

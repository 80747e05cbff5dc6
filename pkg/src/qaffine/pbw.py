"""The algebra U_q(sl2^) in Drinfeld generators, with PBW normal ordering.

A PBW monomial is ``c^(c2/2) x_{i1}..x_{ia} h_{j1}..h_{jb} y_{l1}..y_{lc} K^k``
with the x-indices weakly increasing, h-indices weakly increasing and
y-indices weakly decreasing.  K stands at the right end, so ``K x_n`` has
normal form ``q^2 x_n K``.  ``psi_m`` and ``phi_-m`` are never stored as
generators; they are expanded into K^{+-1} and h's.

Multiplication works one letter at a time: a generator times a normal-ordered
word is straightened recursively using the defining relations, and the
result is memoized.  The c-power and the trailing K-power produced along
the way are kept outside the word so the cache is keyed on words only.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator, Mapping, NamedTuple, Optional

from .scalar import ONE, ZERO, LaurentPoly, Q, ScalarQ, as_scalar, q_int

__all__ = [
    "PBWMonomial",
    "Element",
    "GeneratorSymbol",
    "mono_mul",
    "mul",
    "commutator",
    "psi_element",
    "phi_element",
    "bigrading",
    "x",
    "y",
    "h",
    "K",
    "c_half",
    "word_element",
    "monomial_to_json",
    "monomial_from_json",
]


class GeneratorSymbol(NamedTuple):
    kind: str  # "X", "Y" or "H"
    index: int

    def validate(self) -> "GeneratorSymbol":
        if self.kind not in ("X", "Y", "H"):
            raise ValueError(f"unknown generator kind {self.kind!r}")
        if self.kind == "H" and self.index == 0:
            raise ValueError("h-index must be nonzero")
        return self


class PBWMonomial(NamedTuple):
    k_exp: int = 0
    c_half: int = 0
    x_block: tuple = ()
    h_block: tuple = ()
    y_block: tuple = ()

    @property
    def degree(self) -> int:
        return sum(self.x_block) + sum(self.h_block) + sum(self.y_block)

    @property
    def weight(self) -> int:
        return 2 * len(self.x_block) - 2 * len(self.y_block)

    def is_ordered(self) -> bool:
        xs, hs, ys = self.x_block, self.h_block, self.y_block
        return (
            all(a <= b for a, b in zip(xs, xs[1:]))
            and all(a <= b for a, b in zip(hs, hs[1:]))
            and all(a >= b for a, b in zip(ys, ys[1:]))
            and 0 not in hs
        )

    def is_central(self) -> bool:
        """Only c-powers: such monomials commute with everything."""
        return not (self.k_exp or self.x_block or self.h_block or self.y_block)

    def letters(self) -> list[tuple[str, int]]:
        return (
            [("x", i) for i in self.x_block]
            + [("h", j) for j in self.h_block]
            + [("y", l) for l in self.y_block]
        )

    def sort_key(self):
        return (self.k_exp, self.c_half, self.x_block, self.h_block, self.y_block)

    def __str__(self):
        return monomial_text(self)


UNIT = PBWMonomial()

_Q2 = ScalarQ(Q * Q)
_QQINV = ScalarQ(1) / ScalarQ(Q - LaurentPoly.monomial(-1))  # 1/(q - q^-1)


@lru_cache(maxsize=None)
def _qpow(e: int) -> ScalarQ:
    return ScalarQ(LaurentPoly.monomial(e))


@lru_cache(maxsize=None)
def _hx_coef(m: int) -> ScalarQ:
    """[2m]/m, the structure constant of [h_m, x_n]."""
    return ScalarQ(q_int(2 * m), LaurentPoly.const(m))


def _acc(d: dict, key, c: ScalarQ) -> None:
    old = d.get(key)
    if old is None:
        if c:
            d[key] = c
    else:
        s = old + c
        if s:
            d[key] = s
        else:
            del d[key]


# -- pure x- and y-words ------------------------------------------------------


@lru_cache(maxsize=None)
def _x_ins(n: int, xs: tuple) -> tuple:
    """x_n * (ordered x-word), as ((word, coeff), ...)."""
    if not xs or n <= xs[0]:
        return (((n,) + xs, ONE),)
    l = xs[0]
    rest = xs[1:]
    out: dict = {}
    for w, c in _x_ins(n, rest):
        _acc(out, (l,) + w, _Q2 * c)
    if n > l + 1:
        # x_n x_l = q^2 x_l x_n + q^2 x_{n-1} x_{l+1} - x_{l+1} x_{n-1}
        for w1, c1 in _x_ins(l + 1, rest):
            for w2, c2 in _x_ins(n - 1, w1):
                _acc(out, w2, _Q2 * c1 * c2)
        for w1, c1 in _x_ins(n - 1, rest):
            for w2, c2 in _x_ins(l + 1, w1):
                _acc(out, w2, -(c1 * c2))
    return tuple(out.items())


@lru_cache(maxsize=None)
def _y_ins(n: int, ys: tuple) -> tuple:
    """y_n * (ordered y-word, indices decreasing)."""
    if not ys or n >= ys[0]:
        return (((n,) + ys, ONE),)
    k = ys[0]
    rest = ys[1:]
    out: dict = {}
    for w, c in _y_ins(n, rest):
        _acc(out, (k,) + w, _Q2 * c)
    if k > n + 1:
        # y_l y_k = q^2 y_k y_l - y_{k-1} y_{l+1} + q^2 y_{l+1} y_{k-1}
        for w1, c1 in _y_ins(n + 1, rest):
            for w2, c2 in _y_ins(k - 1, w1):
                _acc(out, w2, -(c1 * c2))
        for w1, c1 in _y_ins(k - 1, rest):
            for w2, c2 in _y_ins(n + 1, w1):
                _acc(out, w2, _Q2 * c1 * c2)
    return tuple(out.items())


# -- psi / phi expansion ------------------------------------------------------


def _partitions(m: int, max_part: Optional[int] = None) -> Iterator[tuple]:
    """Partitions of m as weakly increasing tuples."""
    if max_part is None:
        max_part = m
    if m == 0:
        yield ()
        return
    for p in range(min(m, max_part), 0, -1):
        for rest in _partitions(m - p, p):
            yield rest + (p,)


@lru_cache(maxsize=None)
def _exp_terms(m: int, sign: int) -> tuple:
    """Coefficient of t^m in exp(sign*(q - q^-1) * sum_k h_{k} t^k), as (h-tuple, coeff)."""
    qq = LaurentPoly({1: 1, -1: -1}) * sign
    out = []
    for lam in _partitions(m):
        denom = 1
        for part in set(lam):
            a = lam.count(part)
            for i in range(2, a + 1):
                denom *= i
        out.append((lam, ScalarQ(qq ** len(lam), LaurentPoly.const(denom))))
    out.sort()
    return tuple(out)


@lru_cache(maxsize=None)
def _psi_terms(m: int) -> tuple:
    """psi_m as ((k_exp, h-tuple, coeff), ...); zero for m < 0."""
    if m < 0:
        return ()
    return tuple((1, lam, c) for lam, c in _exp_terms(m, 1))


@lru_cache(maxsize=None)
def _phi_terms(m: int) -> tuple:
    """phi_m for m <= 0; zero for m > 0."""
    if m > 0:
        return ()
    return tuple((-1, tuple(sorted(-p for p in lam)), c) for lam, c in _exp_terms(-m, -1))


# -- one generator times a normal-ordered word ----------------------------------
#
# A "word" is (xs, hs, ys).  Results are tuples of ((dk, dc2, word), coeff)
# standing for c^(dc2/2) word K^dk.


def _wt(w: tuple) -> int:
    """K w = q^_wt(w) w K."""
    return 2 * (len(w[0]) - len(w[2]))


def _apply(kind: str, idx: int, terms: Mapping) -> dict:
    """Left-multiply a combination of c^(dc/2) word K^dk by one generator."""
    out: dict = {}
    for (dk, dc, w), coeff in terms.items():
        for (ek, ec, w2), c2 in _letter_word(kind, idx, w):
            _acc(out, (dk + ek, dc + ec, w2), coeff * c2)
    return out


def _h_word_times(hs: tuple, w: tuple) -> dict:
    """(h_{hs[0]} ... h_{hs[-1]}) * word."""
    terms: dict = {(0, 0, w): ONE}
    for j in reversed(hs):
        terms = _apply("h", j, terms)
    return terms


@lru_cache(maxsize=None)
def _letter_word(kind: str, idx: int, w: tuple) -> tuple:
    xs, hs, ys = w
    out: dict = {}
    if kind == "x":
        for xw, c in _x_ins(idx, xs):
            out[(0, 0, (xw, hs, ys))] = c
        return tuple(out.items())

    if kind == "h":
        m = idx
        if xs:
            i = xs[0]
            rest = (xs[1:], hs, ys)
            # h_m x_i = x_i h_m + [2m]/m c^{-|m|/2} x_{m+i}
            out = _apply("x", i, dict(_letter_word("h", m, rest)))
            coef = _hx_coef(m)
            for (dk, dc, w2), c in _letter_word("x", m + i, rest):
                _acc(out, (dk, dc - abs(m), w2), coef * c)
            return tuple(out.items())
        if hs and m > hs[0]:
            j = hs[0]
            rest = ((), hs[1:], ys)
            for (dk, dc, (_, hw, yw)), c in _letter_word("h", m, rest):
                _acc(out, (dk, dc, ((), (j,) + hw, yw)), c)
            if m == -j:
                # [h_m, h_-m] = [2m]/m (c^m - c^-m)/(q - q^-1)
                coef = _hx_coef(m) * _QQINV
                _acc(out, (0, 2 * m, rest), coef)
                _acc(out, (0, -2 * m, rest), -coef)
            return tuple(out.items())
        return (((0, 0, ((), (m,) + hs, ys)), ONE),)

    # kind == "y"
    n = idx
    if xs:
        i = xs[0]
        rest = (xs[1:], hs, ys)
        # y_n x_i = x_i y_n - (c^{(i-n)/2} psi_{i+n} - c^{-(i-n)/2} phi_{i+n}) / (q - q^-1)
        out = _apply("x", i, dict(_letter_word("y", n, rest)))
        p = i + n
        for k_exp, lam, c in _psi_terms(p):
            for (dk, dc, w2), c2 in _h_word_times(lam, rest).items():
                f = _qpow(k_exp * _wt(w2))
                _acc(out, (dk + k_exp, dc + (i - n), w2), -(_QQINV * c * c2 * f))
        for k_exp, lam, c in _phi_terms(p):
            for (dk, dc, w2), c2 in _h_word_times(lam, rest).items():
                f = _qpow(k_exp * _wt(w2))
                _acc(out, (dk + k_exp, dc - (i - n), w2), _QQINV * c * c2 * f)
        return tuple(out.items())
    if hs:
        j = hs[0]
        rest = ((), hs[1:], ys)
        # y_n h_j = h_j y_n + [2j]/j c^{|j|/2} y_{n+j}
        for (dk, dc, (_, hw, yw)), c in _letter_word("y", n, rest):
            _acc(out, (dk, dc, ((), (j,) + hw, yw)), c)
        coef = _hx_coef(j)
        for (dk, dc, w2), c in _letter_word("y", n + j, rest):
            _acc(out, (dk, dc + abs(j), w2), coef * c)
        return tuple(out.items())
    for yw, c in _y_ins(n, ys):
        out[(0, 0, ((), (), yw))] = c
    return tuple(out.items())


@lru_cache(maxsize=1 << 20)
def _word_mul(wa: tuple, wb: tuple) -> tuple:
    xs, hs, ys = wa
    terms: dict = {(0, 0, wb): ONE}
    for l in reversed(ys):
        terms = _apply("y", l, terms)
    for j in reversed(hs):
        terms = _apply("h", j, terms)
    for i in reversed(xs):
        terms = _apply("x", i, terms)
    return tuple(terms.items())


@lru_cache(maxsize=1 << 20)
def _mono_mul(a: PBWMonomial, b: PBWMonomial) -> tuple:
    ka, ca, xa, ha, ya = a
    kb, cb, xb, hb, yb = b
    f = _qpow(ka * 2 * (len(xb) - len(yb))) if ka else ONE
    out = []
    for (dk, dc, (xs, hs, ys)), c in _word_mul((xa, ha, ya), (xb, hb, yb)):
        out.append((PBWMonomial(ka + kb + dk, ca + cb + dc, xs, hs, ys), c * f))
    return tuple(out)


def mono_mul(a: PBWMonomial, b: PBWMonomial) -> "Element":
    """Product of two PBW monomials, in normal form."""
    return Element._raw(dict(_mono_mul(PBWMonomial(*a), PBWMonomial(*b))))


# -- Element ------------------------------------------------------------------------


class Element:
    """A finite Q(q)-linear combination of PBW monomials."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping | None = None):
        d: dict = {}
        if terms:
            for m, c in terms.items():
                m = PBWMonomial(*m)
                if not m.is_ordered():
                    raise ValueError(f"monomial {m} is not in PBW order; use word_element")
                _acc(d, m, as_scalar(c))
        self.terms = d
        self._hash = None

    @classmethod
    def _raw(cls, d: dict) -> "Element":
        e = object.__new__(cls)
        e.terms = d
        e._hash = None
        return e

    @classmethod
    def monomial(cls, mono: PBWMonomial, coeff=1) -> "Element":
        return cls({mono: coeff})

    @classmethod
    def scalar(cls, c) -> "Element":
        return cls({UNIT: c})

    @classmethod
    def zero(cls) -> "Element":
        return cls._raw({})

    @classmethod
    def one(cls) -> "Element":
        return cls._raw({UNIT: ONE})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def items(self):
        return self.terms.items()

    def sorted_items(self) -> list:
        return sorted(self.terms.items(), key=lambda t: t[0].sort_key())

    def coefficient(self, mono: PBWMonomial) -> ScalarQ:
        return self.terms.get(PBWMonomial(*mono), ZERO)

    def __eq__(self, other):
        if isinstance(other, Element):
            return self.terms == other.terms
        if isinstance(other, (int, ScalarQ, LaurentPoly)):
            return self == Element.scalar(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __neg__(self):
        return Element._raw({m: -c for m, c in self.terms.items()})

    def __add__(self, other):
        other = _coerce_el(other)
        if other is None:
            return NotImplemented
        d = dict(self.terms)
        for m, c in other.terms.items():
            _acc(d, m, c)
        return Element._raw(d)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce_el(other)
        if other is None:
            return NotImplemented
        d = dict(self.terms)
        for m, c in other.terms.items():
            _acc(d, m, -c)
        return Element._raw(d)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, s) -> "Element":
        s = as_scalar(s)
        if not s:
            return Element.zero()
        return Element._raw({m: c * s for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, ScalarQ, LaurentPoly)):
            return self.scale(other)
        if not isinstance(other, Element):
            return NotImplemented
        return mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, ScalarQ, LaurentPoly)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of an Element")
        result = Element.one()
        for _ in range(n):
            result = result * self
        return result

    def map_coefficients(self, f) -> "Element":
        d: dict = {}
        for m, c in self.terms.items():
            _acc(d, m, f(c))
        return Element._raw(d)

    def shift_central(self, c2: int) -> "Element":
        """Multiply by c^(c2/2)."""
        if not c2:
            return self
        return Element._raw({m._replace(c_half=m.c_half + c2): c for m, c in self.terms.items()})

    def to_json(self) -> dict:
        return {"terms": [dict(monomial_to_json(m), coeff=c.to_json()) for m, c in self.sorted_items()]}

    @classmethod
    def from_json(cls, data: Mapping) -> "Element":
        return cls({monomial_from_json(t): ScalarQ.from_json(t["coeff"]) for t in data["terms"]})

    def __repr__(self):
        return f"Element({element_text(self)})"

    def __str__(self):
        return element_text(self)


def _coerce_el(x) -> Optional[Element]:
    if isinstance(x, Element):
        return x
    if isinstance(x, (int, ScalarQ, LaurentPoly)):
        return Element.scalar(x)
    return None


def mul(a: Element, b: Element) -> Element:
    """Normal-ordered product of two Elements."""
    out: dict = {}
    for ma, ca in a.terms.items():
        for mb, cb in b.terms.items():
            cab = ca * cb
            for m, c in _mono_mul(ma, mb):
                _acc(out, m, cab * c)
    return Element._raw(out)


def commutator(a: Element, b: Element) -> Element:
    return mul(a, b) - mul(b, a)


def x(n: int) -> Element:
    return Element._raw({PBWMonomial(0, 0, (n,)): ONE})


def y(n: int) -> Element:
    return Element._raw({PBWMonomial(0, 0, (), (), (n,)): ONE})


def h(k: int) -> Element:
    if k == 0:
        raise ValueError("h-index must be nonzero")
    return Element._raw({PBWMonomial(0, 0, (), (k,)): ONE})


def K(power: int = 1) -> Element:
    return Element._raw({PBWMonomial(power): ONE})


def c_half(power: int = 1) -> Element:
    """c^(power/2)."""
    return Element._raw({PBWMonomial(0, power): ONE})


def psi_element(m: int) -> Element:
    """psi_m: coefficient of z^-m in K exp((q - q^-1) sum_k h_k z^-k)."""
    if m < 0:
        raise ValueError("psi_m needs m >= 0")
    return Element._raw({PBWMonomial(k, 0, (), lam): c for k, lam, c in _psi_terms(m)})


def phi_element(m: int) -> Element:
    """phi_m for m <= 0: coefficient of z^-m in K^-1 exp(-(q - q^-1) sum_k h_-k z^k)."""
    if m > 0:
        raise ValueError("phi_m needs m <= 0")
    return Element._raw({PBWMonomial(k, 0, (), lam): c for k, lam, c in _phi_terms(m)})


def word_element(letters: Iterable[tuple[str, int]], coeff=1) -> Element:
    """Normal form of an arbitrary word.

    Letters are ``("x", n)``, ``("y", n)``, ``("h", k)``, ``("K", e)`` for K^e and
    ``("c", b)`` for c^(b/2).
    """
    terms: dict = {(0, 0, ((), (), ())): ONE}
    for kind, idx in reversed(list(letters)):
        if kind == "K":
            terms = {(dk + idx, dc, w): c * _qpow(idx * _wt(w)) for (dk, dc, w), c in terms.items()}
        elif kind == "c":
            terms = {(dk, dc + idx, w): c for (dk, dc, w), c in terms.items()}
        elif kind in ("x", "y", "h"):
            if kind == "h" and idx == 0:
                raise ValueError("h-index must be nonzero")
            terms = _apply(kind, idx, terms)
        else:
            raise ValueError(f"unknown letter {kind!r}")
    s = as_scalar(coeff)
    out = {}
    for (dk, dc, (xs, hs, ys)), c in terms.items():
        _acc(out, PBWMonomial(dk, dc, xs, hs, ys), c * s)
    return Element._raw(out)


def bigrading(a: Element) -> Optional[tuple[int, int]]:
    """Common (degree, weight) of all monomials, or None if inhomogeneous.

    The zero element is reported as (0, 0).
    """
    grades = {(m.degree, m.weight) for m in a.terms}
    if not grades:
        return (0, 0)
    if len(grades) > 1:
        return None
    return grades.pop()


def monomial_to_json(m: PBWMonomial) -> dict:
    return {"K": m.k_exp, "c2": m.c_half, "x": list(m.x_block), "h": list(m.h_block), "y": list(m.y_block)}


def monomial_from_json(d: Mapping) -> PBWMonomial:
    m = PBWMonomial(int(d["K"]), int(d["c2"]), tuple(d["x"]), tuple(d["h"]), tuple(d["y"]))
    if not m.is_ordered():
        raise ValueError(f"monomial {m} is not in PBW order")
    return m


# -- text rendering (parseable by qaffine.cli.parser) --------------------------------


def monomial_text(m: PBWMonomial) -> str:
    parts = []
    if m.c_half:
        parts.append(f"c2[{m.c_half}]")
    parts += [f"x[{i}]" for i in m.x_block]
    parts += [f"h[{j}]" for j in m.h_block]
    parts += [f"y[{l}]" for l in m.y_block]
    if m.k_exp > 0:
        parts.append("K" if m.k_exp == 1 else f"K^{m.k_exp}")
    elif m.k_exp < 0:
        parts.append("Kinv" if m.k_exp == -1 else f"Kinv^{-m.k_exp}")
    return "*".join(parts) if parts else "1"


def term_text(m: PBWMonomial, c: ScalarQ) -> tuple[str, str]:
    """(sign, body) for one term."""
    mono = monomial_text(m)
    if c.is_polynomial() and c.num.is_monomial() and c.num.val == 0 and abs(c.num.coeffs[0]) == 1:
        return ("-" if c.num.coeffs[0] < 0 else "+", mono)
    coeff = str(c)
    return ("+", coeff if mono == "1" else f"{coeff}*{mono}")


def element_text(a: Element) -> str:
    if not a.terms:
        return "0"
    out = ""
    for i, (m, c) in enumerate(a.sorted_items()):
        sign, body = term_text(m, c)
        if i == 0:
            out = body if sign == "+" else f"-{body}"
        else:
            out += f" {sign} {body}"
    return out

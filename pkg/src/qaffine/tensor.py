"""Tensor products of two and three copies of the algebra.

Multiplication is factorwise, (a1 (x) a2)(b1 (x) b2) = a1 b1 (x) a2 b2, with
each factor normal-ordered by the PBW engine.  Only finite sums are
represented.
"""

from __future__ import annotations

from typing import Callable, Mapping, Optional

from .pbw import (
    UNIT,
    Element,
    PBWMonomial,
    _acc,
    _mono_mul,
    monomial_from_json,
    monomial_text,
    monomial_to_json,
    term_text,
)
from .scalar import ONE, ZERO, LaurentPoly, ScalarQ, as_scalar

__all__ = [
    "TensorElement",
    "Tensor3Element",
    "tensor_of",
    "tensor3_of",
    "tensor_mul",
    "tensor_commutator",
]

_SEP = " (x) "


class _TensorBase:
    ARITY = 2
    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping | None = None):
        d: dict = {}
        if terms:
            for key, c in terms.items():
                if len(key) != self.ARITY:
                    raise ValueError(f"expected {self.ARITY} tensor factors, got {len(key)}")
                key = tuple(PBWMonomial(*m) for m in key)
                for m in key:
                    if not m.is_ordered():
                        raise ValueError(f"monomial {m} is not in PBW order")
                _acc(d, key, as_scalar(c))
        self.terms = d
        self._hash = None

    @classmethod
    def _raw(cls, d: dict):
        t = object.__new__(cls)
        t.terms = d
        t._hash = None
        return t

    @classmethod
    def zero(cls):
        return cls._raw({})

    @classmethod
    def one(cls):
        return cls._raw({(UNIT,) * cls.ARITY: ONE})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def items(self):
        return self.terms.items()

    def sorted_items(self) -> list:
        return sorted(self.terms.items(), key=lambda t: tuple(m.sort_key() for m in t[0]))

    def coefficient(self, key) -> ScalarQ:
        return self.terms.get(tuple(PBWMonomial(*m) for m in key), ZERO)

    def _coerce(self, other):
        if isinstance(other, type(self)):
            return other
        if isinstance(other, (int, ScalarQ, LaurentPoly)):
            return type(self).one().scale(other)
        return None

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __neg__(self):
        return self._raw({k: -c for k, c in self.terms.items()})

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = dict(self.terms)
        for k, c in o.terms.items():
            _acc(d, k, c)
        return self._raw(d)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = dict(self.terms)
        for k, c in o.terms.items():
            _acc(d, k, -c)
        return self._raw(d)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, s):
        s = as_scalar(s)
        if not s:
            return self.zero()
        return self._raw({k: c * s for k, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, ScalarQ, LaurentPoly)):
            return self.scale(other)
        if not isinstance(other, type(self)):
            return NotImplemented
        return _tmul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, ScalarQ, LaurentPoly)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = self.one()
        for _ in range(n):
            result = result * self
        return result

    def map_coefficients(self, f):
        d: dict = {}
        for k, c in self.terms.items():
            _acc(d, k, f(c))
        return self._raw(d)

    def shift_central(self, *c2: int):
        """Multiply factor i by c^(c2[i]/2); central, so no reordering."""
        if len(c2) != self.ARITY:
            raise ValueError("one c-exponent per tensor factor")
        d: dict = {}
        for key, c in self.terms.items():
            d[tuple(m._replace(c_half=m.c_half + s) for m, s in zip(key, c2))] = c
        return self._raw(d)

    def factor_map(self, i: int, f: Callable[[PBWMonomial], "Element"]):
        """Apply a linear map on monomials to factor ``i`` (returns the same arity)."""
        d: dict = {}
        for key, c in self.terms.items():
            for m, cm in f(key[i]).terms.items():
                _acc(d, key[:i] + (m,) + key[i + 1 :], c * cm)
        return self._raw(d)

    def bigrading(self) -> Optional[tuple]:
        """Per-factor (degree, weight), if homogeneous."""
        grades = {tuple((m.degree, m.weight) for m in key) for key in self.terms}
        if not grades:
            return ((0, 0),) * self.ARITY
        if len(grades) > 1:
            return None
        return grades.pop()

    def to_json(self) -> dict:
        names = ("left", "right") if self.ARITY == 2 else ("first", "second", "third")
        out = []
        for key, c in self.sorted_items():
            t = {"coeff": c.to_json()}
            for name, m in zip(names, key):
                t[name] = monomial_to_json(m)
            out.append(t)
        return {"terms": out}

    @classmethod
    def from_json(cls, data: Mapping):
        names = ("left", "right") if cls.ARITY == 2 else ("first", "second", "third")
        return cls(
            {
                tuple(monomial_from_json(t[n]) for n in names): ScalarQ.from_json(t["coeff"])
                for t in data["terms"]
            }
        )

    def __str__(self):
        if not self.terms:
            return "0"
        out = ""
        for i, (key, c) in enumerate(self.sorted_items()):
            sign, coeff = term_text(UNIT, c)
            body = _SEP.join(monomial_text(m) for m in key)
            if coeff != "1":
                body = f"{coeff}*{body}"
            if i == 0:
                out = body if sign == "+" else f"-{body}"
            else:
                out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"{type(self).__name__}({self})"


class TensorElement(_TensorBase):
    """Finite combination of a (x) b with a, b PBW monomials."""

    ARITY = 2
    __slots__ = ()

    def flip(self) -> "TensorElement":
        """The flip map a (x) b -> b (x) a."""
        return TensorElement._raw({(b, a): c for (a, b), c in self.terms.items()})


class Tensor3Element(_TensorBase):
    """Finite combination of a (x) b (x) c."""

    ARITY = 3
    __slots__ = ()


def _tmul(a: _TensorBase, b: _TensorBase) -> _TensorBase:
    out: dict = {}
    if a.ARITY == 2:
        for (a1, a2), ca in a.terms.items():
            for (b1, b2), cb in b.terms.items():
                cab = ca * cb
                right = _mono_mul(a2, b2)
                for m1, c1 in _mono_mul(a1, b1):
                    c1ab = cab * c1
                    for m2, c2 in right:
                        _acc(out, (m1, m2), c1ab * c2)
        return type(a)._raw(out)
    for ka, ca in a.terms.items():
        for kb, cb in b.terms.items():
            partial = {(): ca * cb}
            for ma, mb in zip(ka, kb):
                nxt: dict = {}
                prods = _mono_mul(ma, mb)
                for key, c in partial.items():
                    for m, cm in prods:
                        _acc(nxt, key + (m,), c * cm)
                partial = nxt
            for key, c in partial.items():
                _acc(out, key, c)
    return type(a)._raw(out)


def tensor_of(a: Element, b: Element) -> TensorElement:
    """a (x) b, extended bilinearly."""
    d: dict = {}
    for ma, ca in a.terms.items():
        for mb, cb in b.terms.items():
            _acc(d, (ma, mb), ca * cb)
    return TensorElement._raw(d)


def tensor3_of(a: Element, b: Element, c: Element) -> Tensor3Element:
    d: dict = {}
    for ma, ca in a.terms.items():
        for mb, cb in b.terms.items():
            cab = ca * cb
            for mc, cc in c.terms.items():
                _acc(d, (ma, mb, mc), cab * cc)
    return Tensor3Element._raw(d)


def tensor_mul(a: _TensorBase, b: _TensorBase) -> _TensorBase:
    if type(a) is not type(b):
        raise TypeError("tensor factors of different arity")
    return _tmul(a, b)


def tensor_commutator(a: _TensorBase, b: _TensorBase) -> _TensorBase:
    return tensor_mul(a, b) - tensor_mul(b, a)

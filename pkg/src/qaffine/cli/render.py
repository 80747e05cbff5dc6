"""Text, LaTeX and JSON renderings of Elements, tensors and series."""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Union

from ..pbw import Element, PBWMonomial, element_text
from ..scalar import LaurentPoly, ScalarQ
from ..series import TruncatedSeries
from ..tensor import Tensor3Element, TensorElement

__all__ = ["render", "latex_scalar", "latex_monomial", "latex_element", "FORMATS"]

FORMATS = ("text", "latex", "json")

Value = Union[Element, TensorElement, Tensor3Element, TruncatedSeries, ScalarQ, LaurentPoly]


def _latex_laurent(p: LaurentPoly) -> str:
    if not p.coeffs:
        return "0"
    parts = []
    for e in range(p.degree, p.val - 1, -1):
        c = p.coeffs[e - p.val]
        if not c:
            continue
        a = abs(c)
        var = "" if e == 0 else ("q" if e == 1 else f"q^{{{e}}}")
        body = str(a) if not var else (var if a == 1 else f"{a}{var}")
        parts.append(("-" if c < 0 else "+", body))
    s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        s += f" {sign} {body}"
    return s


def latex_scalar(c: ScalarQ) -> str:
    if c.is_polynomial():
        return _latex_laurent(c.num)
    return f"\\frac{{{_latex_laurent(c.num)}}}{{{_latex_laurent(c.den)}}}"


def _cpow(b2: int) -> str:
    f = Fraction(b2, 2)
    if f == 1:
        return "c"
    e = str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"
    return f"c^{{{e}}}"


def latex_monomial(m: PBWMonomial) -> str:
    parts = []
    if m.c_half:
        parts.append(_cpow(m.c_half))
    parts += [f"x_{{{i}}}" for i in m.x_block]
    parts += [f"h_{{{j}}}" for j in m.h_block]
    parts += [f"y_{{{l}}}" for l in m.y_block]
    if m.k_exp:
        parts.append("K" if m.k_exp == 1 else f"K^{{{m.k_exp}}}")
    return " ".join(parts) if parts else "1"


def _latex_terms(items, mono) -> str:
    if not items:
        return "0"
    out = ""
    for i, (key, c) in enumerate(items):
        body = mono(key)
        unit = c.is_polynomial() and c.num.is_monomial() and c.num.val == 0 and abs(c.num.coeffs[0]) == 1
        if unit:
            sign = "-" if c.num.coeffs[0] < 0 else "+"
        else:
            sign = "+"
            body = f"\\left({latex_scalar(c)}\\right)" + ("" if body == "1" else f" {body}")
        if i == 0:
            out = body if sign == "+" else f"-{body}"
        else:
            out += f" {sign} {body}"
    return out


def latex_element(a: Element) -> str:
    return _latex_terms(a.sorted_items(), latex_monomial)


def _latex_tensor(t) -> str:
    return _latex_terms(t.sorted_items(), lambda key: " \\otimes ".join(latex_monomial(m) for m in key))


def _latex_series(s: TruncatedSeries) -> str:
    f = latex_element if s.ring is Element else _latex_tensor
    parts = [f"\\left({f(c)}\\right) z^{{{e}}}" for e, c in sorted(s.coeffs.items(), reverse=True)]
    return " + ".join(parts) if parts else "0"


def render(value: Value, fmt: str = "text") -> str:
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}")
    if fmt == "json":
        if isinstance(value, LaurentPoly):
            value = ScalarQ(value)
        return json.dumps(value.to_json(), sort_keys=True)
    if fmt == "latex":
        if isinstance(value, Element):
            return latex_element(value)
        if isinstance(value, (TensorElement, Tensor3Element)):
            return _latex_tensor(value)
        if isinstance(value, TruncatedSeries):
            return _latex_series(value)
        if isinstance(value, LaurentPoly):
            return _latex_laurent(value)
        return latex_scalar(value)
    if isinstance(value, Element):
        return element_text(value)
    if isinstance(value, ScalarQ) and value.is_polynomial():
        return str(value.num)
    return str(value)

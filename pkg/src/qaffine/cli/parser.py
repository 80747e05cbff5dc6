"""Expression language for Elements.

Grammar (whitespace-insensitive)::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor (['*'|'/'] factor)*        juxtaposition multiplies
    factor := primary ('^' uint)?
    primary:= atom | '(' expr ')' | '[' expr ',' expr ']'
    atom   := 'x[' int ']' | 'y[' int ']' | 'h[' int ']' | 'K' | 'Kinv'
            | 'c2[' int ']' | 'psi[' uint ']' | 'phi[' ['-'] uint ']'
            | 'q' | 'q^' int | uint

``c2[b]`` is c^(b/2).  Division is only allowed by nonzero scalars, which lets
rational coefficients such as ``(q)/(q^2 - 1)*K`` round-trip through the text
renderer.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from ..pbw import Element, PBWMonomial, UNIT, commutator, phi_element, psi_element, word_element
from ..scalar import LaurentPoly, ScalarQ

__all__ = ["ParseError", "parse", "evaluate", "parse_element"]


class ParseError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.message = message
        self.offset = offset


# -- AST ----------------------------------------------------------------------------


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class QPow:
    exp: int


@dataclass(frozen=True)
class Gen:
    kind: str  # x, y, h, K, Kinv, c2, psi, phi
    index: int = 0


@dataclass(frozen=True)
class Sum:
    terms: tuple  # ((sign, node), ...)


@dataclass(frozen=True)
class Product:
    factors: tuple  # ((op, node), ...) with op '*' or '/'


@dataclass(frozen=True)
class Power:
    base: object
    exp: int


@dataclass(frozen=True)
class Bracket:
    left: object
    right: object


Node = Union[Num, QPow, Gen, Sum, Product, Power, Bracket]


# -- tokenizer -------------------------------------------------------------------------

_PUNCT = "+-*/^()[],"


def _tokenize(src: str) -> list[tuple[str, str, int]]:
    toks = []
    i, n = 0, len(src)
    while i < n:
        ch = src[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < n and src[j].isdigit():
                j += 1
            toks.append(("int", src[i:j], i))
            i = j
        elif ch.isalpha():
            j = i
            while j < n and (src[j].isalnum() or src[j] == "_"):
                j += 1
            toks.append(("name", src[i:j], i))
            i = j
        elif ch in _PUNCT:
            toks.append((ch, ch, i))
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", i)
    toks.append(("end", "", n))
    return toks


_INDEXED = {"x", "y", "h", "c2", "psi", "phi"}


class _Parser:
    def __init__(self, src: str):
        self.toks = _tokenize(src)
        self.pos = 0

    def peek(self):
        return self.toks[self.pos]

    def next(self):
        t = self.toks[self.pos]
        self.pos += 1
        return t

    def expect(self, kind: str):
        t = self.next()
        if t[0] != kind:
            what = "end of input" if t[0] == "end" else repr(t[1])
            raise ParseError(f"expected {kind!r}, found {what}", t[2])
        return t

    def signed_int(self) -> int:
        sign = 1
        if self.peek()[0] in ("+", "-"):
            sign = -1 if self.next()[0] == "-" else 1
        return sign * int(self.expect("int")[1])

    def expr(self) -> Node:
        terms = []
        sign = 1
        if self.peek()[0] in ("+", "-"):
            sign = -1 if self.next()[0] == "-" else 1
        terms.append((sign, self.term()))
        while self.peek()[0] in ("+", "-"):
            sign = -1 if self.next()[0] == "-" else 1
            terms.append((sign, self.term()))
        if len(terms) == 1 and terms[0][0] == 1:
            return terms[0][1]
        return Sum(tuple(terms))

    def _starts_factor(self) -> bool:
        k = self.peek()[0]
        return k in ("int", "name", "(", "[")

    def term(self) -> Node:
        factors = [("*", self.factor())]
        while True:
            k = self.peek()[0]
            if k in ("*", "/"):
                self.next()
                factors.append((k, self.factor()))
            elif self._starts_factor():
                factors.append(("*", self.factor()))
            else:
                break
        if len(factors) == 1:
            return factors[0][1]
        return Product(tuple(factors))

    def factor(self) -> Node:
        node = self.primary()
        if self.peek()[0] == "^":
            self.next()
            if self.peek()[0] != "int":
                raise ParseError("exponent must be a nonnegative integer", self.peek()[2])
            node = Power(node, int(self.next()[1]))
        return node

    def primary(self) -> Node:
        t = self.next()
        kind, text, off = t
        if kind == "int":
            return Num(int(text))
        if kind == "(":
            e = self.expr()
            self.expect(")")
            return e
        if kind == "[":
            a = self.expr()
            self.expect(",")
            b = self.expr()
            self.expect("]")
            return Bracket(a, b)
        if kind == "name":
            if text == "q":
                if self.peek()[0] == "^":
                    self.next()
                    return QPow(self.signed_int())
                return QPow(1)
            if text in ("K", "Kinv"):
                return Gen(text)
            if text in _INDEXED:
                self.expect("[")
                ioff = self.peek()[2]
                idx = self.signed_int()
                self.expect("]")
                if text == "h" and idx == 0:
                    raise ParseError("h-index must be nonzero", ioff)
                if text == "psi" and idx < 0:
                    raise ParseError("psi index must be >= 0", ioff)
                if text == "phi" and idx > 0:
                    raise ParseError("phi index must be <= 0", ioff)
                return Gen(text, idx)
            raise ParseError(f"unknown symbol {text!r}", off)
        what = "end of input" if kind == "end" else repr(text)
        raise ParseError(f"unexpected {what}", off)


def parse(src: str) -> Node:
    p = _Parser(src)
    node = p.expr()
    t = p.peek()
    if t[0] != "end":
        raise ParseError(f"unexpected {t[1]!r}", t[2])
    return node


# -- evaluation -----------------------------------------------------------------------------


def _scalar_of(e: Element) -> ScalarQ | None:
    if not e.terms:
        return ScalarQ(0)
    if len(e.terms) == 1 and UNIT in e.terms:
        return e.terms[UNIT]
    return None


def evaluate(node: Node) -> Element:
    if isinstance(node, Num):
        return Element.scalar(node.value)
    if isinstance(node, QPow):
        return Element.scalar(LaurentPoly.monomial(node.exp))
    if isinstance(node, Gen):
        k, i = node.kind, node.index
        if k in ("x", "y", "h"):
            return word_element([(k, i)])
        if k == "K":
            return Element.monomial(PBWMonomial(1))
        if k == "Kinv":
            return Element.monomial(PBWMonomial(-1))
        if k == "c2":
            return Element.monomial(PBWMonomial(0, i))
        if k == "psi":
            return psi_element(i)
        return phi_element(i)
    if isinstance(node, Sum):
        out = Element.zero()
        for sign, t in node.terms:
            v = evaluate(t)
            out = out + v if sign > 0 else out - v
        return out
    if isinstance(node, Product):
        out = None
        for op, f in node.factors:
            v = evaluate(f)
            if out is None:
                out = v
            elif op == "*":
                out = out * v
            else:
                s = _scalar_of(v)
                if s is None or not s:
                    raise ValueError("division is only defined by nonzero scalars")
                out = out.scale(ScalarQ(1) / s)
        return out
    if isinstance(node, Power):
        return evaluate(node.base) ** node.exp
    if isinstance(node, Bracket):
        return commutator(evaluate(node.left), evaluate(node.right))
    raise TypeError(f"not an expression node: {node!r}")


def parse_element(src: str) -> Element:
    return evaluate(parse(src))

"""Rational expressions: parsing, printing and compilation to automata.

Grammar, loosest binding first::

    expr    := dual ('+' dual)*
    dual    := concat (LAW concat)*          LAW: sh | in | ha | dl(ε,q)
    concat  := unary ('.'? unary)*
    unary   := '[' scalar ']' unary | postfix
    postfix := atom ('*' | '[' scalar ']')*
    atom    := letter | '1' | '0' | '(' expr ')'

``1`` is the empty-word series and ``0`` the zero series.  A run of
letters is read as juxtaposed letters unless it spells one of the law
keywords, so ``s.h`` must be written with a dot when ``s`` and ``h`` are
letters.  A bracket directly after an operand is a right scalar:
``a[2]b`` is ``(a·2)·b``; write ``a.[2]b`` for ``a·(2b)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from .dual import DualLawParams, rep_dual_law, rep_hadamard, rep_infiltration, rep_shuffle
from .errors import InvalidWordError, MultAutomataError, NotProperError
from .rational import rep_cauchy, rep_scale_left, rep_scale_right, rep_star, rep_sum
from .semiring import Semiring
from .series import LinearRepresentation, constant_rep, is_proper, letter_rep, normalize_alphabet, zero_rep

__all__ = [
    "ExpressionSyntaxError",
    "Letter",
    "One",
    "Zero",
    "Scaled",
    "Sum",
    "Cauchy",
    "Star",
    "DualLaw",
    "expression_letters",
    "parse_expression",
    "format_expression",
    "compile_expression",
]


class ExpressionSyntaxError(MultAutomataError, ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


@dataclass(frozen=True)
class Letter:
    name: str
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class One:
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Zero:
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Scaled:
    scalar: object
    expr: "Expression"
    side: str  # "left" or "right"
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Sum:
    left: "Expression"
    right: "Expression"
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Cauchy:
    left: "Expression"
    right: "Expression"
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Star:
    expr: "Expression"
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class DualLaw:
    """``law`` is a law name or a :class:`DualLawParams`."""

    law: Union[str, DualLawParams]
    left: "Expression"
    right: "Expression"
    pos: int = field(default=0, compare=False)


Expression = Union[Letter, One, Zero, Scaled, Sum, Cauchy, Star, DualLaw]

_KEYWORDS = {"sh": "shuffle", "in": "infiltration", "ha": "hadamard"}
_SYMBOLS = {name: kw for kw, name in _KEYWORDS.items()}


@dataclass
class _Token:
    kind: str  # letter, one, zero, plus, dot, star, lpar, rpar, scalar, law, end
    pos: int
    text: str = ""
    extra: tuple = ()


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    i, n = 0, len(text)
    simple = {"+": "plus", ".": "dot", "*": "star", "(": "lpar", ")": "rpar", "1": "one", "0": "zero"}
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in simple:
            tokens.append(_Token(simple[ch], i, ch))
            i += 1
        elif ch == "[":
            end = text.find("]", i)
            if end == -1:
                raise ExpressionSyntaxError("unterminated scalar bracket", i)
            tokens.append(_Token("scalar", i, text[i + 1:end]))
            i = end + 1
        elif ch.isalpha():
            j = i
            while j < n and text[j].isalpha():
                j += 1
            run = text[i:j]
            if run in _KEYWORDS:
                tokens.append(_Token("law", i, _KEYWORDS[run]))
            elif run == "dl" and j < n and text[j] == "(":
                end = text.find(")", j)
                if end == -1:
                    raise ExpressionSyntaxError("unterminated dl(...)", i)
                parts = text[j + 1:end].split(",")
                if len(parts) != 2:
                    raise ExpressionSyntaxError("dl expects two scalars dl(epsilon,q)", i)
                tokens.append(_Token("law", i, "dl", tuple(p.strip() for p in parts)))
                j = end + 1
            else:
                tokens.extend(_Token("letter", i + k, c) for k, c in enumerate(run))
            i = j
        else:
            raise ExpressionSyntaxError(f"unexpected character {ch!r}", i)
    tokens.append(_Token("end", n))
    return tokens


class _Parser:
    def __init__(self, text: str, alphabet: tuple[str, ...], sr: Semiring):
        self.tokens = _tokenize(text)
        self.i = 0
        self.alphabet = alphabet
        self.sr = sr

    def peek(self) -> _Token:
        return self.tokens[self.i]

    def take(self, kind: str | None = None) -> _Token:
        tok = self.tokens[self.i]
        if kind is not None and tok.kind != kind:
            raise ExpressionSyntaxError(f"expected {kind}, found {tok.kind} {tok.text!r}", tok.pos)
        self.i += 1
        return tok

    def scalar(self, text: str, pos: int):
        try:
            return self.sr.parse(text)
        except ValueError as exc:
            raise ExpressionSyntaxError(f"malformed scalar {text!r} ({exc})", pos) from None

    def parse(self) -> Expression:
        expr = self.expr()
        tok = self.peek()
        if tok.kind != "end":
            raise ExpressionSyntaxError(f"unexpected {tok.kind} {tok.text!r}", tok.pos)
        return expr

    def expr(self):
        left = self.dual()
        while self.peek().kind == "plus":
            tok = self.take()
            left = Sum(left, self.dual(), pos=tok.pos)
        return left

    def dual(self):
        left = self.concat()
        while self.peek().kind == "law":
            tok = self.take()
            if tok.text == "dl":
                eps, q = (self.scalar(x, tok.pos) for x in tok.extra)
                law = DualLawParams(self.sr, eps, q)
            else:
                law = tok.text
            left = DualLaw(law, left, self.concat(), pos=tok.pos)
        return left

    _STARTS = ("letter", "one", "zero", "lpar", "scalar")

    def concat(self):
        left = self.unary()
        while True:
            tok = self.peek()
            if tok.kind == "dot":
                self.take()
                left = Cauchy(left, self.unary(), pos=tok.pos)
            elif tok.kind in self._STARTS:
                left = Cauchy(left, self.unary(), pos=tok.pos)
            else:
                return left

    def unary(self):
        tok = self.peek()
        if tok.kind == "scalar":
            self.take()
            return Scaled(self.scalar(tok.text, tok.pos), self.unary(), "left", pos=tok.pos)
        return self.postfix()

    def postfix(self):
        expr = self.atom()
        while True:
            tok = self.peek()
            if tok.kind == "star":
                self.take()
                expr = Star(expr, pos=tok.pos)
            elif tok.kind == "scalar":
                self.take()
                expr = Scaled(self.scalar(tok.text, tok.pos), expr, "right", pos=tok.pos)
            else:
                return expr

    def atom(self):
        tok = self.take()
        if tok.kind == "letter":
            if tok.text not in self.alphabet:
                raise InvalidWordError(f"unknown letter {tok.text!r} at position {tok.pos}")
            return Letter(tok.text, pos=tok.pos)
        if tok.kind == "one":
            return One(pos=tok.pos)
        if tok.kind == "zero":
            return Zero(pos=tok.pos)
        if tok.kind == "lpar":
            inner = self.expr()
            self.take("rpar")
            return inner
        raise ExpressionSyntaxError(f"unexpected {tok.kind} {tok.text!r}", tok.pos)


def expression_letters(text: str) -> str:
    """Letters used by an expression, in alphabetical order."""
    return "".join(sorted({tok.text for tok in _tokenize(text) if tok.kind == "letter"}))


def parse_expression(text: str, alphabet, semiring: Semiring) -> Expression:
    return _Parser(text, normalize_alphabet(alphabet), semiring).parse()


def format_expression(expr: Expression, semiring: Semiring) -> str:
    """Text that :func:`parse_expression` maps back to ``expr``."""
    fmt = semiring.format

    def wrap(e):
        text = go(e)
        return text if isinstance(e, (Letter, One, Zero)) else f"({text})"

    def go(e):
        if isinstance(e, Letter):
            return e.name
        if isinstance(e, One):
            return "1"
        if isinstance(e, Zero):
            return "0"
        if isinstance(e, Scaled):
            if e.side == "left":
                return f"[{fmt(e.scalar)}]{wrap(e.expr)}"
            return f"{wrap(e.expr)}[{fmt(e.scalar)}]"
        if isinstance(e, Star):
            return f"{wrap(e.expr)}*"
        if isinstance(e, Sum):
            return f"{wrap(e.left)} + {wrap(e.right)}"
        if isinstance(e, Cauchy):
            return f"{wrap(e.left)}.{wrap(e.right)}"
        if isinstance(e, DualLaw):
            if isinstance(e.law, DualLawParams):
                op = f"dl({fmt(e.law.epsilon)},{fmt(e.law.q)})"
            else:
                op = _SYMBOLS[e.law]
            return f"{wrap(e.left)} {op} {wrap(e.right)}"
        raise TypeError(f"not an expression node: {e!r}")

    return go(expr)


_NAMED_LAWS = {"shuffle": rep_shuffle, "infiltration": rep_infiltration, "hadamard": rep_hadamard}


def compile_expression(expr: Expression, alphabet, semiring: Semiring,
                       allow_improper_star: bool = False) -> LinearRepresentation:
    """Build a representation bottom-up with the literal block constructions."""
    alphabet = normalize_alphabet(alphabet)
    sr = semiring

    def go(e) -> LinearRepresentation:
        if isinstance(e, Letter):
            return letter_rep(sr, alphabet, e.name)
        if isinstance(e, One):
            return constant_rep(sr, alphabet, sr.one)
        if isinstance(e, Zero):
            return zero_rep(sr, alphabet)
        if isinstance(e, Scaled):
            inner = go(e.expr)
            return rep_scale_left(e.scalar, inner) if e.side == "left" else rep_scale_right(inner, e.scalar)
        if isinstance(e, Sum):
            return rep_sum(go(e.left), go(e.right))
        if isinstance(e, Cauchy):
            return rep_cauchy(go(e.left), go(e.right))
        if isinstance(e, Star):
            inner = go(e.expr)
            if not allow_improper_star and not is_proper(inner):
                raise NotProperError(
                    f"star at position {e.pos} applied to {format_expression(e.expr, sr)!r}, "
                    "which has a nonzero constant term"
                )
            return rep_star(inner, allow_improper=True)
        if isinstance(e, DualLaw):
            left, right = go(e.left), go(e.right)
            if isinstance(e.law, DualLawParams):
                return rep_dual_law(left, right, e.law)
            return _NAMED_LAWS[e.law](left, right)
        raise TypeError(f"not an expression node: {e!r}")

    return go(expr)

"""Text expressions for geometric numbers.

Grammar, loosest binding first::

    sum      := dot (('+' | '-') dot)*
    dot      := wedge ('|' wedge)*
    wedge    := product ('^' product)*
    product  := unary (('*' | '/') unary)*
    unary    := ('-' | '+') unary | postfix
    postfix  := atom '†'*
    atom     := number | 'i' | blade | call | '(' sum ')'
    call     := name '(' sum (',' sum)* ')'     name in rev inv conj grade mag sp
    blade    := 'e' index+ ('f' index+)? | 'f' index+
    index    := digit | '[' digits ']'

``/`` only divides by scalars, which is what lets rational coefficients such
as ``1/2*e1`` round-trip. A decimal point makes a literal a float; ``i`` is
the imaginary unit and is only accepted in complexified algebras.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .core import (
    Conjugation, Multivector, Signature, blade_mask, conjugate, format_multivector,
    grade_project, inner, magnitude, outer, scalar_product,
)
from .errors import GeonumError, ParseError, ValidationError
from .scalars import I as IMAG_UNIT


# --- AST -------------------------------------------------------------------

@dataclass(frozen=True)
class Scalar:
    value: Union[int, Fraction, float]
    pos: int = 0


@dataclass(frozen=True)
class Imag:
    pos: int = 0


@dataclass(frozen=True)
class BladeLit:
    e: tuple[int, ...]
    f: tuple[int, ...]
    pos: int = 0


@dataclass(frozen=True)
class Neg:
    operand: "Node"
    pos: int = 0


@dataclass(frozen=True)
class BinOp:
    left: "Node"
    right: "Node"
    pos: int = 0


class Add(BinOp):
    pass


class Sub(BinOp):
    pass


class Mul(BinOp):
    pass


class Div(BinOp):
    pass


class Wedge(BinOp):
    pass


class Dot(BinOp):
    pass


@dataclass(frozen=True)
class Call:
    name: str
    args: tuple["Node", ...]
    pos: int = 0


Node = Union[Scalar, Imag, BladeLit, Neg, BinOp, Call]

CALLS = {"rev": 1, "inv": 1, "conj": 1, "grade": 2, "mag": 1, "sp": 2}


# --- lexer -----------------------------------------------------------------

_INDEX = r"(?:\d|\[\d+\])"
_TOKEN = re.compile(
    rf"""
    (?P<ws>\s+)
  | (?P<blade>e{_INDEX}+(?:f{_INDEX}+)?|f{_INDEX}+)
  | (?P<float>\d+\.\d*(?:[eE][+-]?\d+)?|\.\d+(?:[eE][+-]?\d+)?)
  | (?P<int>\d+)
  | (?P<name>[A-Za-z_]+)
  | (?P<op>[-+*/^|(),]|†)
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    pos: int


def _line_col(text: str, pos: int) -> tuple[int, int]:
    line = text.count("\n", 0, pos) + 1
    col = pos - (text.rfind("\n", 0, pos) + 1) + 1
    return line, col


def tokenize(text: str) -> list[Token]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            line, col = _line_col(text, pos)
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        if kind != "ws":
            out.append(Token(kind, m.group(), pos))
        pos = m.end()
    out.append(Token("end", "", len(text)))
    return out


def _indices(group: str) -> list[int]:
    return [int(x.strip("[]")) for x in re.findall(_INDEX, group)]


# --- parser ----------------------------------------------------------------

class _Parser:
    def __init__(self, text: str, sig: Signature):
        self.text = text
        self.sig = sig
        self.toks = tokenize(text)
        self.i = 0

    def error(self, msg: str, pos: int, cls=ParseError):
        line, col = _line_col(self.text, pos)
        raise cls(msg, line, col)

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def take(self) -> Token:
        t = self.toks[self.i]
        self.i += 1
        return t

    def accept(self, text: str) -> Token | None:
        if self.tok.kind == "op" and self.tok.text == text:
            return self.take()
        return None

    def expect(self, text: str) -> Token:
        t = self.accept(text)
        if t is None:
            found = self.tok.text or "end of input"
            self.error(f"expected {text!r}, found {found!r}", self.tok.pos)
        return t

    def parse(self) -> Node:
        if self.tok.kind == "end":
            self.error("empty expression", 0)
        node = self.sum()
        if self.tok.kind != "end":
            self.error(f"unexpected {self.tok.text!r}", self.tok.pos)
        return node

    def _binary(self, sub, ops: dict):
        node = sub()
        while self.tok.kind == "op" and self.tok.text in ops:
            t = self.take()
            node = ops[t.text](node, sub(), t.pos)
        return node

    def sum(self):
        return self._binary(self.dot, {"+": Add, "-": Sub})

    def dot(self):
        return self._binary(self.wedge, {"|": Dot})

    def wedge(self):
        return self._binary(self.product, {"^": Wedge})

    def product(self):
        return self._binary(self.unary, {"*": Mul, "/": Div})

    def unary(self):
        t = self.accept("-")
        if t:
            return Neg(self.unary(), t.pos)
        if self.accept("+"):
            return self.unary()
        return self.postfix()

    def postfix(self):
        node = self.atom()
        while True:
            t = self.accept("†")
            if not t:
                return node
            node = Call("rev", (node,), t.pos)

    def atom(self):
        t = self.tok
        if t.kind == "int":
            self.take()
            return Scalar(int(t.text), t.pos)
        if t.kind == "float":
            self.take()
            return Scalar(float(t.text), t.pos)
        if t.kind == "blade":
            self.take()
            return self.blade(t)
        if t.kind == "name":
            self.take()
            if t.text == "i" and not (self.tok.kind == "op" and self.tok.text == "("):
                if not self.sig.is_complex:
                    self.error("imaginary unit 'i' needs a complex algebra", t.pos, ValidationError)
                return Imag(t.pos)
            if t.text not in CALLS:
                self.error(f"unknown name {t.text!r}", t.pos)
            return self.call(t)
        if self.accept("("):
            node = self.sum()
            self.expect(")")
            return node
        found = t.text or "end of input"
        self.error(f"unexpected {found!r}", t.pos)

    def blade(self, t: Token) -> BladeLit:
        text = t.text
        es, fs = [], []
        if text.startswith("e"):
            epart, _, fpart = text[1:].partition("f")
            es = _indices(epart)
            fs = _indices(fpart) if fpart else []
        else:
            fs = _indices(text[1:])
        for name, group, limit in (("e", es, self.sig.p), ("f", fs, self.sig.q)):
            if any(b <= a for a, b in zip(group, group[1:])):
                self.error(f"indices of {name} in {text!r} must strictly ascend", t.pos, ValidationError)
            for idx in group:
                if not 1 <= idx <= limit:
                    self.error(f"{name}{idx} is not a generator of {self.sig}", t.pos, ValidationError)
        return BladeLit(tuple(es), tuple(fs), t.pos)

    def call(self, t: Token) -> Call:
        self.expect("(")
        args = [self.sum()]
        while self.accept(","):
            args.append(self.sum())
        self.expect(")")
        want = CALLS[t.text]
        if len(args) != want:
            self.error(f"{t.text}() takes {want} argument(s), got {len(args)}", t.pos)
        if t.text == "grade" and not (isinstance(args[1], Scalar) and isinstance(args[1].value, int)):
            self.error("grade() needs an integer literal as its second argument", t.pos)
        return Call(t.text, tuple(args), t.pos)


def parse(text: str, sig: Signature) -> Node:
    if not isinstance(text, str):
        raise TypeError("expression must be a string")
    return _Parser(text, sig).parse()


# --- evaluation ------------------------------------------------------------

class EvalError(ValidationError):
    """Well-formed expression whose value is undefined, e.g. division by a vector."""


def _wrap(node, fn):
    try:
        return fn()
    except EvalError:
        raise
    except (GeonumError, ZeroDivisionError) as exc:
        raise EvalError(str(exc), 1, getattr(node, "pos", 0) + 1) from exc


def evaluate(node: Node, sig: Signature) -> Multivector:
    if isinstance(node, Scalar):
        return sig.scalar(node.value)
    if isinstance(node, Imag):
        return sig.scalar(IMAG_UNIT)
    if isinstance(node, BladeLit):
        return sig.blade(blade_mask(node.e, node.f, sig))
    if isinstance(node, Neg):
        return -evaluate(node.operand, sig)
    if isinstance(node, BinOp):
        a = evaluate(node.left, sig)
        b = evaluate(node.right, sig)
        if isinstance(node, Add):
            return a + b
        if isinstance(node, Sub):
            return a - b
        if isinstance(node, Mul):
            return a * b
        if isinstance(node, Div):
            return _wrap(node, lambda: a / b)
        if isinstance(node, Wedge):
            return _wrap(node, lambda: outer(a, b))
        return _wrap(node, lambda: inner(a, b))
    if isinstance(node, Call):
        name = node.name
        if name == "grade":
            g = evaluate(node.args[0], sig)
            return _wrap(node, lambda: grade_project(g, node.args[1].value))
        args = [evaluate(a, sig) for a in node.args]
        if name == "rev":
            return conjugate(args[0], Conjugation.REVERSE)
        if name == "inv":
            return conjugate(args[0], Conjugation.INVERSION)
        if name == "conj":
            return conjugate(args[0], Conjugation.MIXED)
        if name == "mag":
            return sig.scalar(magnitude(args[0]))
        if name == "sp":
            return sig.scalar(scalar_product(args[0], args[1]))
    raise TypeError(f"not an expression node: {node!r}")


def evaluate_text(text: str, sig: Signature) -> Multivector:
    return evaluate(parse(text, sig), sig)


def format(g: Multivector) -> str:  # noqa: A001 - mirrors the public operation name
    return format_multivector(g)


eval = evaluate  # noqa: A001

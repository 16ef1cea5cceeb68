"""Recursive-descent parser for the workbench's term grammar:

    expr   := sign? term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := atom ('^' sign? integer)?
    atom   := rational | ident | '(' expr ')'

Identifiers: s<k> radical generators, x<k> group/quantum generators, e the
group identity, z the root of unity, g the gamma series symbol.  g is
recognized by the grammar but has no finite representation, so every
evaluation context rejects it.  Parsing is context-gated (field, group,
twisted, quantum) so that diagnostics carry the offending position, and the
evaluators below turn accepted trees into the matching algebraic values.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .mqfield import MQElem, PrimeBasis
from .ordgroup import GroupElem
from .twistring import TwistedElem
from .qaffine import FreeWord, QAlgebra, QPoly

CONTEXTS = ("field", "group", "twisted", "quantum")

_ALLOWED_SYMBOLS = {
    "field": {"radical"},
    "group": {"xgen", "identity"},
    "twisted": {"radical", "xgen", "identity"},
    "quantum": {"cyclo", "xgen"},
}


class ParseError(ValueError):
    """Syntax or context violation, with a 1-based source position."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{line}:{column}: {message}")
        self.line = line
        self.column = column


# --- AST ----------------------------------------------------------------------


@dataclass(frozen=True)
class Lit:
    value: Fraction


@dataclass(frozen=True)
class Sym:
    kind: str  # "radical" | "xgen" | "cyclo" | "identity" | "gamma"
    index: Optional[int]


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int


@dataclass(frozen=True)
class Mul:
    factors: tuple


@dataclass(frozen=True)
class Sum:
    terms: tuple  # of (sign, node), sign in {1, -1}


# --- tokenizer -------------------------------------------------------------------


@dataclass(frozen=True)
class _Token:
    kind: str
    value: str
    line: int
    column: int


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    i, line, col = 0, 1, 1
    while i < len(text):
        ch = text[i]
        if ch == "\n":
            i += 1
            line += 1
            col = 1
            continue
        if ch.isspace():
            i += 1
            col += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(_Token("INT", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch.isalpha():
            j = i
            while j < len(text) and text[j].isalnum():
                j += 1
            tokens.append(_Token("IDENT", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch in "+-*^/()":
            tokens.append(_Token(ch, ch, line, col))
            i += 1
            col += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", line, col)
    tokens.append(_Token("EOF", "", line, col))
    return tokens


# --- parser ---------------------------------------------------------------------------


class _Parser:
    def __init__(self, tokens: list[_Token], context: str):
        self.tokens = tokens
        self.pos = 0
        self.context = context

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def error(self, message: str, tok: Optional[_Token] = None):
        tok = tok or self.peek()
        raise ParseError(message, tok.line, tok.column)

    def expect(self, kind: str) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            self.error(f"expected {kind!r}, found {tok.value!r}")
        return self.advance()

    # expr := sign? term (('+' | '-') term)*
    def expr(self):
        terms = []
        sign = 1
        tok = self.peek()
        if tok.kind in "+-":
            if self.context == "group":
                self.error("signs are not allowed in group context", tok)
            sign = -1 if tok.kind == "-" else 1
            self.advance()
        terms.append((sign, self.term()))
        while self.peek().kind in "+-":
            tok = self.advance()
            if self.context == "group":
                self.error("sums are not allowed in group context", tok)
            sign = -1 if tok.kind == "-" else 1
            terms.append((sign, self.term()))
        if len(terms) == 1 and terms[0][0] == 1:
            return terms[0][1]
        return Sum(tuple(terms))

    # term := factor ('*' factor)*
    def term(self):
        factors = [self.factor()]
        while self.peek().kind == "*":
            self.advance()
            factors.append(self.factor())
        if len(factors) == 1:
            return factors[0]
        return Mul(tuple(factors))

    # factor := atom ('^' sign? integer)?
    def factor(self):
        atom = self.atom()
        if self.peek().kind != "^":
            return atom
        self.advance()
        sign = 1
        tok = self.peek()
        if tok.kind in "+-":
            sign = -1 if tok.kind == "-" else 1
            self.advance()
        tok = self.expect("INT")
        exponent = sign * int(tok.value)
        if (
            exponent < 0
            and self.context == "quantum"
            and isinstance(atom, Sym)
            and atom.kind == "xgen"
        ):
            self.error("negative exponents are not allowed on quantum generators", tok)
        return Pow(atom, exponent)

    # atom := rational | ident | '(' expr ')'
    def atom(self):
        tok = self.peek()
        if tok.kind == "(":
            self.advance()
            inner = self.expr()
            self.expect(")")
            return inner
        if tok.kind == "INT":
            self.advance()
            value = Fraction(int(tok.value))
            if self.peek().kind == "/":
                self.advance()
                den = self.expect("INT")
                if int(den.value) == 0:
                    self.error("zero denominator", den)
                value = value / int(den.value)
            if self.context == "group":
                self.error("rational literals are not group elements", tok)
            return Lit(value)
        if tok.kind == "IDENT":
            self.advance()
            return self.ident(tok)
        self.error(f"expected an atom, found {tok.value!r}", tok)

    def ident(self, tok: _Token):
        name = tok.value
        if name == "g":
            self.error(
                "the gamma symbol has no finite representation in any "
                "evaluation context; use the gamma subcommands",
                tok,
            )
        if name == "z":
            sym = Sym("cyclo", None)
        elif name == "e":
            sym = Sym("identity", None)
        elif name[0] == "s" and name[1:].isdigit():
            sym = Sym("radical", int(name[1:]))
        elif name[0] == "x" and name[1:].isdigit():
            sym = Sym("xgen", int(name[1:]))
        else:
            self.error(f"unknown symbol {name!r}", tok)
        if sym.index is not None and sym.index < 1:
            self.error("generator indices start at 1", tok)
        if sym.kind not in _ALLOWED_SYMBOLS[self.context]:
            self.error(
                f"symbol {name!r} is not allowed in {self.context} context", tok
            )
        return sym


def parse(text: str, context: str):
    """Parse `text` in the given context; returns the AST or raises
    ParseError with the offending line and column."""
    if context not in CONTEXTS:
        raise ValueError(f"unknown context {context!r}; pick one of {CONTEXTS}")
    parser = _Parser(_tokenize(text), context)
    node = parser.expr()
    tok = parser.peek()
    if tok.kind != "EOF":
        parser.error(f"unexpected trailing input {tok.value!r}", tok)
    return node


# --- AST helpers ------------------------------------------------------------------------


def _walk(node):
    yield node
    if isinstance(node, Pow):
        yield from _walk(node.base)
    elif isinstance(node, Mul):
        for f in node.factors:
            yield from _walk(f)
    elif isinstance(node, Sum):
        for _, t in node.terms:
            yield from _walk(t)


def max_symbol_index(node, kind: str) -> int:
    """Largest index of the given symbol kind in the tree (0 if absent)."""
    return max(
        (n.index for n in _walk(node) if isinstance(n, Sym) and n.kind == kind),
        default=0,
    )


# --- evaluators -------------------------------------------------------------------------


def to_field(node, basis: PrimeBasis) -> MQElem:
    if isinstance(node, Lit):
        return basis.rational(node.value)
    if isinstance(node, Sym):
        if node.kind == "radical":
            return basis.radical(node.index)
        raise ValueError(f"symbol kind {node.kind!r} has no field value")
    if isinstance(node, Pow):
        return to_field(node.base, basis) ** node.exponent
    if isinstance(node, Mul):
        out = basis.one()
        for f in node.factors:
            out = out * to_field(f, basis)
        return out
    if isinstance(node, Sum):
        out = basis.zero()
        for sign, t in node.terms:
            val = to_field(t, basis)
            out = out + (val if sign > 0 else -val)
        return out
    raise TypeError(f"not a field expression: {node!r}")


def to_group(node) -> GroupElem:
    if isinstance(node, Sym):
        if node.kind == "identity":
            return GroupElem.identity()
        if node.kind == "xgen":
            return GroupElem.generator(node.index)
        raise ValueError(f"symbol kind {node.kind!r} has no group value")
    if isinstance(node, Pow):
        return to_group(node.base) ** node.exponent
    if isinstance(node, Mul):
        out = GroupElem.identity()
        for f in node.factors:
            out = out * to_group(f)
        return out
    raise TypeError(f"not a group expression: {node!r}")


def to_twisted(node, basis: PrimeBasis) -> TwistedElem:
    if isinstance(node, Lit):
        return TwistedElem.from_scalar(basis.rational(node.value))
    if isinstance(node, Sym):
        if node.kind == "radical":
            return TwistedElem.from_scalar(basis.radical(node.index))
        if node.kind == "identity":
            return TwistedElem.one(basis)
        if node.kind == "xgen":
            return TwistedElem.from_group(basis, GroupElem.generator(node.index))
        raise ValueError(f"symbol kind {node.kind!r} has no twisted value")
    if isinstance(node, Pow):
        return _twisted_pow(to_twisted(node.base, basis), node.exponent)
    if isinstance(node, Mul):
        out = TwistedElem.one(basis)
        for f in node.factors:
            out = out * to_twisted(f, basis)  # factor order matters here
        return out
    if isinstance(node, Sum):
        out = TwistedElem.zero(basis)
        for sign, t in node.terms:
            val = to_twisted(t, basis)
            out = out + (val if sign > 0 else -val)
        return out
    raise TypeError(f"not a twisted expression: {node!r}")


def _twisted_pow(value: TwistedElem, exponent: int) -> TwistedElem:
    if exponent < 0:
        value = _twisted_invert(value)
        exponent = -exponent
    out = TwistedElem.one(value.basis)
    for _ in range(exponent):
        out = out * value
    return out


def _twisted_invert(value: TwistedElem) -> TwistedElem:
    """Inverse of a single term a*x: twist_inv(x)(a^-1) * x^-1.  General
    twisted elements would need infinite series and are rejected."""
    if len(value.terms) != 1:
        raise ValueError(
            "only single-term twisted elements can be inverted; general "
            "inverses need infinite support"
        )
    ((g, coeff),) = value.terms.items()
    ginv = g.inv()
    return TwistedElem(value.basis, {ginv: ginv.twist(coeff.inv())})


def to_quantum(node, algebra: QAlgebra) -> QPoly:
    if isinstance(node, Lit):
        return algebra.scalar(algebra.field.rational(node.value))
    if isinstance(node, Sym):
        if node.kind == "cyclo":
            return algebra.scalar(algebra.field.zeta)
        if node.kind == "xgen":
            return algebra.generator(node.index)
        raise ValueError(f"symbol kind {node.kind!r} has no quantum value")
    if isinstance(node, Pow):
        base = to_quantum(node.base, algebra)
        if node.exponent >= 0:
            return base ** node.exponent
        scalar = _as_scalar(base)
        if scalar is None:
            raise ValueError("negative powers are only defined for scalars here")
        return algebra.scalar(scalar ** node.exponent)
    if isinstance(node, Mul):
        out = algebra.one()
        for f in node.factors:
            out = out * to_quantum(f, algebra)
        return out
    if isinstance(node, Sum):
        out = algebra.zero()
        for sign, t in node.terms:
            val = to_quantum(t, algebra)
            out = out + (val if sign > 0 else -val)
        return out
    raise TypeError(f"not a quantum expression: {node!r}")


def _as_scalar(poly: QPoly):
    constant = (0,) * poly.algebra.n
    if not poly.terms:
        return poly.algebra.field.zero()
    if set(poly.terms) == {constant}:
        return poly.terms[constant]
    return None


def to_free_word(node, algebra: QAlgebra) -> FreeWord:
    """Interpret a single product as an unreduced word with scalar prefactor."""
    scalar = algebra.field.one()
    indices: list[int] = []

    def walk(n):
        nonlocal scalar
        if isinstance(n, Lit):
            scalar = scalar * algebra.field.rational(n.value)
        elif isinstance(n, Sym) and n.kind == "cyclo":
            scalar = scalar * algebra.field.zeta
        elif isinstance(n, Sym) and n.kind == "xgen":
            indices.append(n.index)
        elif isinstance(n, Pow):
            if isinstance(n.base, Sym) and n.base.kind == "xgen":
                if n.exponent < 0:
                    raise ValueError("negative generator exponents in a word")
                indices.extend([n.base.index] * n.exponent)
            else:
                part = to_quantum(n, algebra)
                value = _as_scalar(part)
                if value is None:
                    raise ValueError("not a single word: non-scalar parenthesized part")
                scalar = scalar * value
        elif isinstance(n, Mul):
            for f in n.factors:
                walk(f)
        else:
            raise ValueError("not a single word: sums cannot appear in a word")

    walk(node)
    return FreeWord(algebra, tuple(indices), scalar)

"""Formula ASTs, parsers and printers for the three surface languages.

The package works with three languages over atoms ``NAME(x)`` where NAME
matches ``[A-Za-z_][A-Za-z0-9_+-]*``:

``lx`` (classical)
    ``!``/``~`` negation, ``&`` conjunction, ``|`` disjunction.
``ltq`` (quantum)
    ``~q`` quantum negation, ``&`` conjunction, plus two derived
    connectives that are expanded away while parsing:
    ``a |q b   ==  ~q (~q a & ~q b)`` and
    ``a ->q b  ==  (~q a) |q (a & b)`` (Sasaki arrow).
``prag`` (assertive)
    ``|-`` asserts a quantum formula, prefix ``N`` and infix ``K``/``A``
    combine assertions.  ``N``, ``K``, ``A`` are reserved words in this
    mode only.

Precedence, high to low: ``!``/``~q``, ``&``/``K``, ``|``/``|q``/``A``,
``->q``; binary connectives associate to the left and parentheses
override.  Quantum ASTs produced here contain only ``Atom``, ``And`` and
``QNot`` nodes; ``Atom`` and ``And`` are shared with the classical
language, so conjunctive trees can be fed to either semantics.

Printers emit a canonical, minimally parenthesised rendering and
``parse(format(f)) == f`` holds for every AST of the matching language.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from .errors import ClassicalConnectiveInTQ, ParseError, UnknownConnective

__all__ = [
    "Atom", "Not", "And", "Or", "QNot",
    "Assert", "N", "K", "A",
    "Formula", "TQFormula", "AssertiveFormula",
    "quantum_join", "sasaki_formula",
    "parse_lx", "parse_tq", "parse_prag",
    "format_lx", "format_tq", "format_prag",
    "atoms_of",
]


# ---------------------------------------------------------------------------
# AST nodes


@dataclass(frozen=True)
class Atom:
    """Application of a property name to the single variable ``x``."""

    prop: str


@dataclass(frozen=True)
class Not:
    inner: "Formula"


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class QNot:
    """Quantum negation; the only non-classical quantum node."""

    inner: "TQFormula"


Formula = Union[Atom, Not, And, Or]
TQFormula = Union[Atom, And, QNot]


@dataclass(frozen=True)
class Assert:
    """``|- f``: the assertion of a quantum formula."""

    inner: TQFormula


@dataclass(frozen=True)
class N:
    inner: "AssertiveFormula"


@dataclass(frozen=True)
class K:
    left: "AssertiveFormula"
    right: "AssertiveFormula"


@dataclass(frozen=True)
class A:
    left: "AssertiveFormula"
    right: "AssertiveFormula"


AssertiveFormula = Union[Assert, N, K, A]


def quantum_join(a: TQFormula, b: TQFormula) -> TQFormula:
    """The defining expansion of ``a |q b``."""
    return QNot(And(QNot(a), QNot(b)))


def sasaki_formula(a: TQFormula, b: TQFormula) -> TQFormula:
    """The defining expansion of the Sasaki arrow ``a ->q b``."""
    return quantum_join(QNot(a), And(a, b))


def atoms_of(f) -> frozenset[str]:
    """Property names occurring in a formula of any of the three languages."""
    if isinstance(f, Atom):
        return frozenset({f.prop})
    if isinstance(f, (Not, QNot, N)):
        return atoms_of(f.inner)
    if isinstance(f, Assert):
        return atoms_of(f.inner)
    if isinstance(f, (And, Or, K, A)):
        return atoms_of(f.left) | atoms_of(f.right)
    raise TypeError(f"not a formula node: {f!r}")


# ---------------------------------------------------------------------------
# Tokenizer

_IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_+\-]*")
_IDENT_CHAR_RE = re.compile(r"[A-Za-z0-9_+\-]")


def _is_ident_char(s: str) -> bool:
    return bool(s) and bool(_IDENT_CHAR_RE.match(s))


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    pos: int


def _tokenize(text: str, mode: str) -> list[_Token]:
    toks: list[_Token] = []
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c == "(":
            toks.append(_Token("LPAREN", "(", i))
            i += 1
            continue
        if c == ")":
            toks.append(_Token("RPAREN", ")", i))
            i += 1
            continue
        m = _IDENT_RE.match(text, i)
        if m:
            name = m.group()
            kind = "IDENT"
            if mode == "prag" and name in ("N", "K", "A"):
                kind = name
            toks.append(_Token(kind, name, i))
            i = m.end()
            continue
        if c == "&":
            toks.append(_Token("AND", "&", i))
            i += 1
            continue
        if c == "!":
            if mode == "lx":
                toks.append(_Token("NOT", "!", i))
                i += 1
                continue
            raise ClassicalConnectiveInTQ(
                "classical negation '!' is not part of the quantum language", i)
        if c == "~":
            if mode == "lx":
                toks.append(_Token("NOT", "~", i))
                i += 1
                continue
            if text[i + 1:i + 2] == "q" and not _is_ident_char(text[i + 2:i + 3]):
                toks.append(_Token("QNOT", "~q", i))
                i += 2
                continue
            raise ClassicalConnectiveInTQ(
                "classical negation '~' is not part of the quantum language "
                "(write '~q')", i)
        if c == "|":
            nxt = text[i + 1:i + 2]
            if mode == "prag" and nxt == "-":
                toks.append(_Token("ASSERT", "|-", i))
                i += 2
                continue
            if mode == "lx":
                toks.append(_Token("OR", "|", i))
                i += 1
                continue
            if nxt == "q" and not _is_ident_char(text[i + 2:i + 3]):
                toks.append(_Token("QOR", "|q", i))
                i += 2
                continue
            raise ClassicalConnectiveInTQ(
                "classical disjunction '|' is not part of the quantum "
                "language (write '|q')", i)
        if text[i:i + 3] == "->q" and not _is_ident_char(text[i + 3:i + 4]):
            if mode == "lx":
                raise UnknownConnective(
                    "quantum connective '->q' is not part of the classical "
                    "language", i)
            toks.append(_Token("SASAKI", "->q", i))
            i += 3
            continue
        raise ParseError(f"unexpected character {c!r}", i)
    toks.append(_Token("EOF", "", n))
    return toks


# ---------------------------------------------------------------------------
# Recursive-descent parser

class _Parser:
    def __init__(self, tokens: list[_Token], mode: str):
        self.tokens = tokens
        self.mode = mode
        self.i = 0

    @property
    def cur(self) -> _Token:
        return self.tokens[self.i]

    def advance(self) -> _Token:
        t = self.cur
        self.i += 1
        return t

    def expect(self, kind: str, what: str) -> _Token:
        if self.cur.kind != kind:
            raise ParseError(f"expected {what}", self.cur.pos, expected=what)
        return self.advance()

    def expect_eof(self):
        if self.cur.kind != "EOF":
            raise ParseError(f"unexpected {self.cur.text!r}", self.cur.pos)

    # atoms (shared by all modes)

    def atom(self):
        if self.cur.kind != "IDENT":
            raise ParseError("expected a formula", self.cur.pos,
                             expected="property name or '('")
        name = self.advance()
        if self.cur.kind != "LPAREN":
            # In classical mode an adjacent "~q"/"|q" that cannot be an
            # atom application is a quantum connective used in the wrong
            # language; report it as such.
            prev = self.tokens[self.i - 2] if self.i >= 2 else None
            if (self.mode == "lx" and name.text == "q" and prev is not None
                    and prev.kind in ("NOT", "OR")
                    and prev.pos + len(prev.text) == name.pos):
                raise UnknownConnective(
                    f"quantum connective {prev.text + 'q'!r} is not part of "
                    "the classical language", prev.pos)
            raise ParseError("expected '(' after property name",
                             self.cur.pos, expected="'('")
        self.advance()
        var = self.expect("IDENT", "variable 'x'")
        if var.text != "x":
            raise ParseError("the only variable is 'x'", var.pos, expected="'x'")
        self.expect("RPAREN", "')'")
        return Atom(name.text)

    # classical grammar

    def lx_or(self):
        f = self.lx_and()
        while self.cur.kind == "OR":
            self.advance()
            f = Or(f, self.lx_and())
        return f

    def lx_and(self):
        f = self.lx_not()
        while self.cur.kind == "AND":
            self.advance()
            f = And(f, self.lx_not())
        return f

    def lx_not(self):
        if self.cur.kind == "NOT":
            self.advance()
            return Not(self.lx_not())
        return self.lx_primary()

    def lx_primary(self):
        if self.cur.kind == "LPAREN":
            self.advance()
            f = self.lx_or()
            self.expect("RPAREN", "')'")
            return f
        return self.atom()

    # quantum grammar (|q and ->q are expanded on the fly)

    def tq_sasaki(self):
        f = self.tq_qor()
        while self.cur.kind == "SASAKI":
            self.advance()
            f = sasaki_formula(f, self.tq_qor())
        return f

    def tq_qor(self):
        f = self.tq_and()
        while self.cur.kind == "QOR":
            self.advance()
            f = quantum_join(f, self.tq_and())
        return f

    def tq_and(self):
        f = self.tq_qnot()
        while self.cur.kind == "AND":
            self.advance()
            f = And(f, self.tq_qnot())
        return f

    def tq_qnot(self):
        if self.cur.kind == "QNOT":
            self.advance()
            return QNot(self.tq_qnot())
        return self.tq_primary()

    def tq_primary(self):
        if self.cur.kind == "LPAREN":
            self.advance()
            f = self.tq_sasaki()
            self.expect("RPAREN", "')'")
            return f
        return self.atom()

    # assertive grammar

    def prag_a(self):
        f = self.prag_k()
        while self.cur.kind == "A":
            self.advance()
            f = A(f, self.prag_k())
        return f

    def prag_k(self):
        f = self.prag_n()
        while self.cur.kind == "K":
            self.advance()
            f = K(f, self.prag_n())
        return f

    def prag_n(self):
        if self.cur.kind == "N":
            self.advance()
            return N(self.prag_n())
        return self.prag_primary()

    def prag_primary(self):
        if self.cur.kind == "ASSERT":
            self.advance()
            return Assert(self.tq_sasaki())
        if self.cur.kind == "LPAREN":
            self.advance()
            f = self.prag_a()
            self.expect("RPAREN", "')'")
            return f
        raise ParseError("expected '|-', 'N' or '('", self.cur.pos,
                         expected="'|-'")


def _parse(text: str, mode: str):
    toks = _tokenize(text, mode)
    if toks[0].kind == "EOF":
        raise ParseError("empty input", 0, expected="a formula")
    p = _Parser(toks, mode)
    if mode == "lx":
        f = p.lx_or()
    elif mode == "ltq":
        f = p.tq_sasaki()
    else:
        f = p.prag_a()
    p.expect_eof()
    return f


def parse_lx(text: str) -> Formula:
    """Parse a classical formula."""
    return _parse(text, "lx")


def parse_tq(text: str) -> TQFormula:
    """Parse a quantum formula; ``|q`` and ``->q`` are expanded away."""
    return _parse(text, "ltq")


def parse_prag(text: str) -> AssertiveFormula:
    """Parse an assertive formula (``|-``, ``N``, ``K``, ``A``)."""
    return _parse(text, "prag")


# ---------------------------------------------------------------------------
# Printers.  Binary connectives are left associative, so a right child of
# equal precedence needs parentheses while a left child does not.

_LX_PREC = {Or: 1, And: 2, Not: 3, Atom: 4}


def format_lx(f: Formula) -> str:
    """Canonical minimally parenthesised rendering of a classical formula."""
    def wrap(g, floor: int, strict: bool) -> str:
        p = _LX_PREC[type(g)]
        s = go(g)
        if p < floor or (strict and p == floor):
            return f"({s})"
        return s

    def go(g) -> str:
        if isinstance(g, Atom):
            return f"{g.prop}(x)"
        if isinstance(g, Not):
            return "!" + wrap(g.inner, 3, False)
        if isinstance(g, And):
            return wrap(g.left, 2, False) + " & " + wrap(g.right, 2, True)
        if isinstance(g, Or):
            return wrap(g.left, 1, False) + " | " + wrap(g.right, 1, True)
        raise TypeError(f"not a classical formula node: {g!r}")

    return go(f)


_TQ_PREC = {And: 2, QNot: 3, Atom: 4}


def format_tq(f: TQFormula) -> str:
    """Canonical rendering of a quantum formula (core connectives only)."""
    def wrap(g, floor: int, strict: bool) -> str:
        p = _TQ_PREC[type(g)]
        s = go(g)
        if p < floor or (strict and p == floor):
            return f"({s})"
        return s

    def go(g) -> str:
        if isinstance(g, Atom):
            return f"{g.prop}(x)"
        if isinstance(g, QNot):
            return "~q " + wrap(g.inner, 3, False)
        if isinstance(g, And):
            return wrap(g.left, 2, False) + " & " + wrap(g.right, 2, True)
        raise TypeError(f"not a quantum formula node: {g!r}")

    return go(f)


_PRAG_PREC = {A: 1, K: 2, N: 3, Assert: 4}


def format_prag(f: AssertiveFormula) -> str:
    """Canonical rendering of an assertive formula."""
    def wrap(g, floor: int, strict: bool) -> str:
        p = _PRAG_PREC[type(g)]
        s = go(g)
        if p < floor or (strict and p == floor):
            return f"({s})"
        return s

    def go(g) -> str:
        if isinstance(g, Assert):
            # The quantum operand extends as far right as possible, so it
            # never needs parentheses of its own.
            return "|- " + format_tq(g.inner)
        if isinstance(g, N):
            return "N " + wrap(g.inner, 3, False)
        if isinstance(g, K):
            return wrap(g.left, 2, False) + " K " + wrap(g.right, 2, True)
        if isinstance(g, A):
            return wrap(g.left, 1, False) + " A " + wrap(g.right, 1, True)
        raise TypeError(f"not an assertive formula node: {g!r}")

    return go(f)

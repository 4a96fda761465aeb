"""Text syntax for formulas and sequents.

Grammar (loosest binding first)::

    sequent  := [formula {"," formula}] "|-" formula
    formula  := disj
    disj     := conj {"|" conj}
    conj     := unary {"&" unary}
    unary    := "~" unary | quant | primary
    quant    := ("forall" | "exists") IDENT ["."] formula
    primary  := IDENT ["(" IDENT {"," IDENT} ")"] | "(" formula ")"

A quantifier's scope extends as far right as possible. Unicode aliases
``¬ ∧ ∨ ∀ ∃ ⊢`` are accepted on input. Argument identifiers bound by an
enclosing quantifier, or starting with ``u``-``z``, are variables; all other
arguments are constants.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional

from .formula import (
    And,
    Atom,
    Const,
    Exists,
    Forall,
    Formula,
    Not,
    Or,
    Sequent,
    Signature,
    Var,
    is_variable_name,
    signature_of,
)


@dataclass(frozen=True)
class SourceSpan:
    start: int
    end: int

    def __post_init__(self):
        if self.start > self.end:
            raise ValueError("span start after end")


class ParseError(ValueError):
    def __init__(self, message: str, span: SourceSpan, text: str = ""):
        self.span = span
        self.text = text
        super().__init__(f"{message} at {span.start}:{span.end}")

    def caret(self) -> str:
        """The offending text with a marker line underneath."""
        width = max(self.span.end - self.span.start, 1)
        return f"{self.text}\n{' ' * self.span.start}{'^' * width}"


_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<turnstile>\|-|⊢)
  | (?P<not>~|¬)
  | (?P<and>&|∧)
  | (?P<or>\||∨)
  | (?P<forall>∀)
  | (?P<exists>∃)
  | (?P<lparen>\()
  | (?P<rparen>\))
  | (?P<comma>,)
  | (?P<dot>\.)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_']*)
    """,
    re.VERBOSE,
)

_KEYWORDS = {"forall": "forall", "exists": "exists"}


@dataclass(frozen=True)
class _Tok:
    kind: str
    text: str
    span: SourceSpan


def tokenize(text: str) -> list[_Tok]:
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(
                f"unexpected character {text[pos]!r}", SourceSpan(pos, pos + 1), text
            )
        kind = m.lastgroup
        if kind != "ws":
            word = m.group()
            if kind == "ident" and word in _KEYWORDS:
                kind = _KEYWORDS[word]
            toks.append(_Tok(kind, word, SourceSpan(m.start(), m.end())))
        pos = m.end()
    toks.append(_Tok("eof", "", SourceSpan(len(text), len(text))))
    return toks


_DESCR = {
    "eof": "end of input",
    "turnstile": "'|-'",
    "rparen": "')'",
    "lparen": "'('",
    "comma": "','",
}


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = tokenize(text)
        self.i = 0
        self.bound: list[str] = []

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def advance(self) -> _Tok:
        t = self.toks[self.i]
        self.i += 1
        return t

    def error(self, message: str, tok: Optional[_Tok] = None):
        tok = tok or self.tok
        return ParseError(message, tok.span, self.text)

    def expect(self, kind: str) -> _Tok:
        if self.tok.kind != kind:
            what = _DESCR.get(kind, kind)
            found = self.tok.text or _DESCR["eof"]
            raise self.error(f"expected {what}, found {found!r}")
        return self.advance()

    def formula(self) -> Formula:
        left = self.conj()
        while self.tok.kind == "or":
            self.advance()
            left = Or(left, self.conj())
        return left

    def conj(self) -> Formula:
        left = self.unary()
        while self.tok.kind == "and":
            self.advance()
            left = And(left, self.unary())
        return left

    def unary(self) -> Formula:
        kind = self.tok.kind
        if kind == "not":
            self.advance()
            return Not(self.unary())
        if kind in ("forall", "exists"):
            self.advance()
            var = self.expect("ident").text
            if self.tok.kind == "dot":
                self.advance()
            self.bound.append(var)
            try:
                body = self.formula()
            finally:
                self.bound.pop()
            return (Forall if kind == "forall" else Exists)(var, body)
        return self.primary()

    def primary(self) -> Formula:
        tok = self.tok
        if tok.kind == "lparen":
            self.advance()
            f = self.formula()
            self.expect("rparen")
            return f
        if tok.kind == "ident":
            self.advance()
            args = []
            if self.tok.kind == "lparen":
                self.advance()
                args.append(self.term())
                while self.tok.kind == "comma":
                    self.advance()
                    args.append(self.term())
                self.expect("rparen")
            return Atom(tok.text, tuple(args))
        found = tok.text or _DESCR["eof"]
        raise self.error(f"expected a formula, found {found!r}")

    def term(self):
        name = self.expect("ident").text
        if name in self.bound or is_variable_name(name):
            return Var(name)
        return Const(name)


def _validate(f: Formula, sig: Optional[Signature]) -> None:
    signature_of(f)
    if sig is not None:
        sig.check(f)


def parse_formula(text: str, sig: Optional[Signature] = None) -> Formula:
    """Parse a single formula; validate arities (against `sig` when given)."""
    p = _Parser(text)
    f = p.formula()
    if p.tok.kind != "eof":
        raise p.error(f"unexpected {p.tok.text!r}")
    _validate(f, sig)
    return f


def parse_sequent(text: str, sig: Optional[Signature] = None) -> Sequent:
    """Parse ``F1, ..., Fk |- G``; the premise list may be empty."""
    p = _Parser(text)
    premises = []
    if p.tok.kind != "turnstile":
        premises.append(p.formula())
        while p.tok.kind == "comma":
            p.advance()
            premises.append(p.formula())
        if p.tok.kind != "turnstile":
            if p.tok.kind == "eof":
                raise p.error("missing turnstile '|-'")
            raise p.error(f"unexpected {p.tok.text!r}")
    p.advance()
    if p.tok.kind == "eof":
        raise p.error("missing conclusion after '|-'")
    conclusion = p.formula()
    if p.tok.kind != "eof":
        raise p.error(f"unexpected {p.tok.text!r}")
    seq = Sequent(tuple(premises), conclusion)
    signature_of(*seq.formulas)
    for f in seq.formulas:
        _validate(f, sig)
    return seq


_OR, _AND, _UNARY = 1, 2, 3


def _fmt(f: Formula, prec: int, followed: bool) -> str:
    # `followed`: more input comes after this text at the same nesting level,
    # so an open-ended quantifier scope must be closed with parentheses
    if isinstance(f, Atom):
        if not f.args:
            return f.predicate
        return f"{f.predicate}({', '.join(str(t) for t in f.args)})"
    if isinstance(f, Not):
        return "~" + _fmt(f.body, _UNARY, followed)
    if isinstance(f, (And, Or)):
        p, op = (_AND, " & ") if isinstance(f, And) else (_OR, " | ")
        paren = prec > p
        inner = False if paren else followed
        s = _fmt(f.left, p, True) + op + _fmt(f.right, p + 1, inner)
        return f"({s})" if paren else s
    kw = "forall" if isinstance(f, Forall) else "exists"
    s = f"{kw} {f.var}. {_fmt(f.body, 0, False)}"
    return f"({s})" if followed else s


def format_formula(f: Formula) -> str:
    return _fmt(f, 0, False)


def format_sequent(s: Sequent) -> str:
    # quantifier scope stops at ',' and '|-', so premises need no wrapping
    prem = ", ".join(format_formula(f) for f in s.premises)
    concl = format_formula(s.conclusion)
    return f"{prem} |- {concl}" if prem else f"|- {concl}"

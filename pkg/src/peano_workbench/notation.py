"""Concrete text syntax for PA terms and formulas.

Grammar (ASCII input; binding strength decreases down the list)::

    formula  := disj ( "->" formula )?            right associative
    disj     := conj ( "|" conj )*
    conj     := unary ( "&" unary )*
    unary    := "~" unary | "(" ("A"|"E") var ")" unary | atom
    atom     := term ( "=" | "!=" ) term
              | Name "(" term ( "," term )* ")"
              | "(" formula ")"
    term     := prod ( "+" prod )*
    prod     := postfix ( "*" postfix )*
    postfix  := primary "'"*
    primary  := "0" | var | "(" term ")"
    var      := [xyzuvw] digits

``(Ex)F``, ``&``, ``|`` and ``!=`` are abbreviations and are expanded while
parsing, so every parsed formula is in primitive form.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .syntax import (
    Add, Eq, Formula, ForAll, Implies, Mul, Not, Rel, Succ, Term, Var, Zero,
    conj, disj, exists,
)


@dataclass(frozen=True)
class SourceSpan:
    start: int
    end: int


@dataclass
class ParseError(Exception):
    span: SourceSpan
    message: str
    expected: list = field(default_factory=list)

    def __str__(self):
        exp = f" (expected {', '.join(self.expected)})" if self.expected else ""
        return f"offset {self.span.start}: {self.message}{exp}"


_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<var>[xyzuvw][0-9]+)
  | (?P<quant>[AE](?=\s*[xyzuvw][0-9]))
  | (?P<name>[A-Z][A-Za-z0-9_]*)
  | (?P<op>->|!=|[0'+*=~&|(),])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class _Tok:
    kind: str   # var | quant | name | op | eof
    text: str
    start: int
    end: int


def _tokenize(text: str) -> list:
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(SourceSpan(pos, pos + 1), f"unexpected character {text[pos]!r}")
        kind = m.lastgroup
        if kind != "ws":
            toks.append(_Tok(kind, m.group(), m.start(), m.end()))
        pos = m.end()
    toks.append(_Tok("eof", "", len(text), len(text)))
    return toks


class _Fail(Exception):
    pass


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.pos = 0
        self.best = (-1, set(), "")

    # helpers

    def peek(self, k: int = 0) -> _Tok:
        return self.toks[min(self.pos + k, len(self.toks) - 1)]

    def fail(self, expected, message=None):
        tok = self.peek()
        off = tok.start
        msg = message or ("unexpected end of input" if tok.kind == "eof" else f"unexpected {tok.text!r}")
        best_off, best_exp, _ = self.best
        if off > best_off:
            self.best = (off, set(expected), msg)
        elif off == best_off:
            self.best = (off, best_exp | set(expected), self.best[2])
        raise _Fail

    def at(self, text: str) -> bool:
        tok = self.peek()
        return tok.kind == "op" and tok.text == text

    def eat(self, text: str):
        if not self.at(text):
            self.fail([repr(text)])
        self.pos += 1

    # formulas

    def formula(self) -> Formula:
        left = self.disj()
        if self.at("->"):
            self.pos += 1
            return Implies(left, self.formula())
        return left

    def disj(self) -> Formula:
        f = self.conj()
        while self.at("|"):
            self.pos += 1
            f = disj(f, self.conj())
        return f

    def conj(self) -> Formula:
        f = self.unary()
        while self.at("&"):
            self.pos += 1
            f = conj(f, self.unary())
        return f

    def _quantifier_ahead(self) -> bool:
        a, b, c, d = (self.peek(i) for i in range(4))
        return (a.kind == "op" and a.text == "(" and b.kind == "quant"
                and c.kind == "var" and d.kind == "op" and d.text == ")")

    def unary(self) -> Formula:
        if self.at("~"):
            self.pos += 1
            return Not(self.unary())
        if self.at("(") and self.peek(1).kind == "quant" and not self._quantifier_ahead():
            # "(Ax1" can only open a quantifier, so the closing bracket is missing
            self.pos += 3
            self.fail(["')'"])
        if self._quantifier_ahead():
            q = self.peek(1).text
            v = Var.named(self.peek(2).text)
            self.pos += 4
            body = self.unary()
            return ForAll(v, body) if q == "A" else exists(v, body)
        return self.atom()

    def atom(self) -> Formula:
        tok = self.peek()
        if tok.kind == "quant":
            self.fail(["formula"], "quantifier letter outside '(Ax1)' form")
        if tok.kind == "name":
            self.pos += 1
            self.eat("(")
            args = [self.term()]
            while self.at(","):
                self.pos += 1
                args.append(self.term())
            self.eat(")")
            return Rel(tok.text, tuple(args))
        start = self.pos
        try:
            left = self.term()
            if self.at("="):
                self.pos += 1
                return Eq(left, self.term())
            if self.at("!="):
                self.pos += 1
                return Not(Eq(left, self.term()))
            self.fail(["'='", "'!='"])
        except _Fail:
            if not self.at_index(start, "("):
                raise
        self.pos = start + 1
        f = self.formula()
        self.eat(")")
        return f

    def at_index(self, i: int, text: str) -> bool:
        tok = self.toks[i]
        return tok.kind == "op" and tok.text == text

    # terms

    def term(self) -> Term:
        t = self.prod()
        while self.at("+"):
            self.pos += 1
            t = Add(t, self.prod())
        return t

    def prod(self) -> Term:
        t = self.postfix()
        while self.at("*"):
            self.pos += 1
            t = Mul(t, self.postfix())
        return t

    def postfix(self) -> Term:
        t = self.primary()
        while self.at("'"):
            self.pos += 1
            t = Succ(t)
        return t

    def primary(self) -> Term:
        tok = self.peek()
        if tok.kind == "var":
            self.pos += 1
            return Var.named(tok.text)
        if self.at("0"):
            self.pos += 1
            return Zero()
        if self.at("("):
            self.pos += 1
            t = self.term()
            self.eat(")")
            return t
        self.fail(["term"])

    def finish(self, result):
        if self.peek().kind != "eof":
            self.fail(["end of input"])
        return result

    def run(self, entry):
        try:
            return self.finish(entry())
        except _Fail:
            off, expected, msg = self.best
            end = off + 1 if off < len(self.text) else off
            raise ParseError(SourceSpan(off, end), msg, sorted(expected)) from None


def parse_formula(text: str) -> Formula:
    """Parse ``text`` into a primitive formula, raising :class:`ParseError`."""
    p = _Parser(text)
    return p.run(p.formula)


def parse_term(text: str) -> Term:
    p = _Parser(text)
    return p.run(p.term)


# printing

_ASCII = {"all": "A", "ex": "E", "not": "~", "imp": "->", "and": "&", "or": "|",
          "prime": "'", "mul": "*"}
_UNICODE = {"all": "∀", "ex": "∃", "not": "¬", "imp": "→",
            "and": "∧", "or": "∨", "prime": "′", "mul": "⋆"}


def print_term(t: Term, unicode: bool = False) -> str:
    sym = _UNICODE if unicode else _ASCII
    return _term(t, sym)


def _term(t: Term, sym) -> str:
    if isinstance(t, Zero):
        return "0"
    if isinstance(t, Var):
        return t.name
    if isinstance(t, Succ):
        n = 0
        while isinstance(t, Succ):
            n += 1
            t = t.arg
        inner = _term(t, sym)
        if isinstance(t, (Add, Mul)):
            inner = f"({inner})"
        return inner + sym["prime"] * n
    if isinstance(t, Add):
        right = _term(t.right, sym)
        if isinstance(t.right, Add):
            right = f"({right})"
        return f"{_term(t.left, sym)} + {right}"
    if isinstance(t, Mul):
        left, right = _term(t.left, sym), _term(t.right, sym)
        if isinstance(t.left, Add):
            left = f"({left})"
        if isinstance(t.right, (Add, Mul)):
            right = f"({right})"
        return f"{left} {sym['mul']} {right}"
    raise TypeError(f"not a term: {t!r}")


def _view(f: Formula, sugared: bool):
    """Classify ``f`` for printing: returns (kind, parts)."""
    if sugared:
        if isinstance(f, Not) and isinstance(f.body, ForAll) and isinstance(f.body.body, Not):
            return "ex", (f.body.var, f.body.body.body)
        if (isinstance(f, Not) and isinstance(f.body, Implies)
                and isinstance(f.body.consequent, Not)):
            return "and", (f.body.antecedent, f.body.consequent.body)
        if isinstance(f, Implies) and isinstance(f.antecedent, Not):
            return "or", (f.antecedent.body, f.consequent)
    if isinstance(f, Eq):
        return "eq", (f.left, f.right)
    if isinstance(f, Rel):
        return "rel", (f.name, f.args)
    if isinstance(f, Not):
        return "not", (f.body,)
    if isinstance(f, Implies):
        return "imp", (f.antecedent, f.consequent)
    if isinstance(f, ForAll):
        return "all", (f.var, f.body)
    raise TypeError(f"not a formula: {f!r}")


_BINARY = ("imp", "and", "or")
_SELF_DELIMITED = ("not", "all", "ex", "rel")


def print_formula(f: Formula, mode: str = "primitive", unicode: bool = False) -> str:
    """Render ``f``; ``mode="sugared"`` re-introduces ``E``, ``&`` and ``|``."""
    if mode not in ("primitive", "sugared"):
        raise ValueError(f"unknown print mode {mode!r}")
    return _fmt(f, mode == "sugared", _UNICODE if unicode else _ASCII)


def _fmt(f: Formula, sugared: bool, sym) -> str:
    kind, parts = _view(f, sugared)
    if kind == "eq":
        return f"{_term(parts[0], sym)} = {_term(parts[1], sym)}"
    if kind == "rel":
        return f"{parts[0]}({', '.join(_term(a, sym) for a in parts[1])})"
    if kind == "not":
        return sym["not"] + _operand(parts[0], sugared, sym)
    if kind in ("all", "ex"):
        return f"({sym[kind]}{parts[0].name})" + _operand(parts[1], sugared, sym)
    left, right = parts
    return f"{_side(left, sugared, sym)} {sym[kind]} {_side(right, sugared, sym)}"


def _operand(f, sugared, sym) -> str:
    text = _fmt(f, sugared, sym)
    return text if _view(f, sugared)[0] in _SELF_DELIMITED else f"({text})"


def _side(f, sugared, sym) -> str:
    text = _fmt(f, sugared, sym)
    return f"({text})" if _view(f, sugared)[0] in _BINARY else text

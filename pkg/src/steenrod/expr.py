"""Expression syntax shared by the command line: parse, print, evaluate.

Grammar (whitespace is insignificant)::

    expr   := ['-'] term (('+' | '-') term)*
    term   := factor (['*'] factor)*
    factor := atom ['^' uint]
    atom   := uint | 't' | var | dvar | 'xi_' uint
            | ('P' | 'Sq') '^' uint | 'P(' [uint (',' uint)*] ')' | 'Q(' uint ')'
            | '(' expr ')'

``var`` is x, y, z or z<n>; ``dvar`` is dx, dy, dz or dz<n>.  ``t`` is the
generator of a proper extension field.  ``Sq`` is accepted only when the
operations have order 2.  Juxtaposition associates to the right, so
``P^1 P^2 f`` means P^1(P^2(f)).
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .algebra import SteenrodElement, delta
from .errors import ExprSyntaxError, ExprTypeError, FieldLiteralError
from .forms import DifferentialForm, total_power_on_forms
from .galois import FieldElement, FieldSpec
from .milnor import DualElement, MilnorElement, milnor_to_admissible
from .polynomials import ALIASES, Polynomial


# -- abstract syntax -------------------------------------------------------------

class Expr:
    pass


@dataclass(frozen=True)
class Num(Expr):
    value: int


@dataclass(frozen=True)
class Gen(Expr):
    pass


@dataclass(frozen=True)
class Var(Expr):
    index: int


@dataclass(frozen=True)
class Dz(Expr):
    index: int


@dataclass(frozen=True)
class Xi(Expr):
    k: int


@dataclass(frozen=True)
class Op(Expr):
    i: int


@dataclass(frozen=True)
class Milnor(Expr):
    entries: tuple[int, ...]


@dataclass(frozen=True)
class Neg(Expr):
    arg: Expr


@dataclass(frozen=True)
class Sum(Expr):
    terms: tuple[Expr, ...]


@dataclass(frozen=True)
class Product(Expr):
    factors: tuple[Expr, ...]


@dataclass(frozen=True)
class Power(Expr):
    base: Expr
    exp: int


# -- tokenizer and parser ----------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))")
_VAR = re.compile(r"^(d?)(?:([xyz])|z(\d+))$")


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m.group(1):
            tokens.append(("num", m.group(1), m.start(1)))
        elif m.group(2):
            tokens.append(("ident", m.group(2), m.start(2)))
        elif m.group(3):
            ch = m.group(3)
            if ch not in "+-*^(),":
                raise ExprSyntaxError(f"unexpected character {ch!r}", m.start(3))
            tokens.append(("sym", ch, m.start(3)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text, allow_sq):
        self.tokens = _tokenize(text)
        self.i = 0
        self.allow_sq = allow_sq

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, kind, value=None):
        tok = self.take()
        if tok[0] != kind or (value is not None and tok[1] != value):
            want = value or kind
            got = tok[1] or "end of input"
            raise ExprSyntaxError(f"expected {want!r}, found {got!r}", tok[2])
        return tok

    def at_sym(self, ch):
        tok = self.peek()
        return tok[0] == "sym" and tok[1] == ch

    def parse(self):
        if self.peek()[0] == "end":
            raise ExprSyntaxError("empty expression", 0)
        e = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ExprSyntaxError(f"unexpected {tok[1]!r}", tok[2])
        return e

    def expr(self):
        terms = []
        neg = False
        if self.at_sym("-"):
            self.take()
            neg = True
        while True:
            t = self.term()
            terms.append(Neg(t) if neg else t)
            if self.at_sym("+"):
                neg = False
            elif self.at_sym("-"):
                neg = True
            else:
                break
            self.take()
        return terms[0] if len(terms) == 1 else Sum(tuple(terms))

    def starts_factor(self):
        kind, val, _ = self.peek()
        return kind in ("num", "ident") or (kind == "sym" and val == "(")

    def term(self):
        factors = [self.factor()]
        while True:
            if self.at_sym("*"):
                self.take()
                factors.append(self.factor())
            elif self.starts_factor():
                factors.append(self.factor())
            else:
                break
        return factors[0] if len(factors) == 1 else Product(tuple(factors))

    def factor(self):
        base = self.atom()
        if self.at_sym("^"):
            self.take()
            base = Power(base, int(self.expect("num")[1]))
        return base

    def atom(self):
        kind, val, pos = self.take()
        if kind == "num":
            return Num(int(val))
        if kind == "sym" and val == "(":
            e = self.expr()
            self.expect("sym", ")")
            return e
        if kind != "ident":
            raise ExprSyntaxError(f"unexpected {val or 'end of input'!r}", pos)
        if val == "t":
            return Gen()
        if val in ("P", "Sq"):
            if val == "Sq" and not self.allow_sq:
                raise ExprSyntaxError("'Sq' is reserved for operations of order 2; use 'P'", pos)
            if self.at_sym("^"):
                self.take()
                return Op(int(self.expect("num")[1]))
            if val == "P" and self.at_sym("("):
                self.take()
                entries = []
                if not self.at_sym(")"):
                    entries.append(int(self.expect("num")[1]))
                    while self.at_sym(","):
                        self.take()
                        entries.append(int(self.expect("num")[1]))
                self.expect("sym", ")")
                return Milnor(tuple(entries))
            raise ExprSyntaxError(f"expected '^' after {val!r}", pos + len(val))
        if val == "Q":
            self.expect("sym", "(")
            k = int(self.expect("num")[1])
            self.expect("sym", ")")
            if k < 1:
                raise ExprSyntaxError("Q(k) needs k >= 1", pos)
            return Milnor(delta(k))
        if val.startswith("xi_") and val[3:].isdigit() and int(val[3:]) >= 1:
            return Xi(int(val[3:]))
        m = _VAR.match(val)
        if m:
            index = ALIASES.index(m.group(2)) if m.group(2) else int(m.group(3)) - 1
            if index < 0:
                raise ExprSyntaxError("variables are numbered from 1", pos)
            return Dz(index) if m.group(1) else Var(index)
        raise ExprSyntaxError(f"unknown name {val!r}", pos)


def parse(text: str, field: FieldSpec, order: int | None = None) -> Expr:
    """Parse text into an Expr; ``order`` is the order of the operations (default q)."""
    order = field.q if order is None else order
    e = _Parser(text, allow_sq=(order == 2)).parse()
    if field.nu == 1 and _contains(e, Gen):
        raise FieldLiteralError(f"'t' is undefined in the prime field F_{field.p}")
    return e


def _contains(e, cls):
    if isinstance(e, cls):
        return True
    for child in _children(e):
        if _contains(child, cls):
            return True
    return False


def _children(e):
    if isinstance(e, (Sum,)):
        return e.terms
    if isinstance(e, Product):
        return e.factors
    if isinstance(e, Neg):
        return (e.arg,)
    if isinstance(e, Power):
        return (e.base,)
    return ()


# -- printing ------------------------------------------------------------------------

def _max_var(e):
    own = e.index if isinstance(e, (Var, Dz)) else -1
    return max([own] + [_max_var(c) for c in _children(e)])


def format_expr(e: Expr, order: int = 0) -> str:
    """Canonical text for e; parse(format_expr(e)) == e."""
    alias = _max_var(e) < len(ALIASES)
    op_name = "Sq" if order == 2 else "P"

    def var(i, d=""):
        return d + (ALIASES[i] if alias else f"z{i + 1}")

    def atomic(x):
        return isinstance(x, (Num, Gen, Var, Dz, Xi, Milnor))

    def fmt(x):
        if isinstance(x, Num):
            return str(x.value)
        if isinstance(x, Gen):
            return "t"
        if isinstance(x, Var):
            return var(x.index)
        if isinstance(x, Dz):
            return var(x.index, "d")
        if isinstance(x, Xi):
            return f"xi_{x.k}"
        if isinstance(x, Op):
            return f"{op_name}^{x.i}"
        if isinstance(x, Milnor):
            return "P(" + ",".join(map(str, x.entries)) + ")"
        if isinstance(x, Power):
            b = fmt(x.base)
            return f"{b if atomic(x.base) else '(' + b + ')'}^{x.exp}"
        if isinstance(x, Product):
            out = fmt_factor(x.factors[0])
            for f in x.factors[1:]:
                out += (" " if isinstance(f, (Op, Milnor)) else "*") + fmt_factor(f)
            return out
        if isinstance(x, Neg):
            return "-" + fmt_term(x.arg)
        if isinstance(x, Sum):
            out = ""
            for n, t in enumerate(x.terms):
                if isinstance(t, Neg):
                    out += ("-" if n == 0 else " - ") + fmt_term(t.arg)
                else:
                    out += ("" if n == 0 else " + ") + fmt_term(t)
            return out
        raise TypeError(f"not an expression: {x!r}")

    def fmt_term(x):
        s = fmt(x)
        return f"({s})" if isinstance(x, (Sum, Neg)) else s

    def fmt_factor(x):
        s = fmt(x)
        return f"({s})" if isinstance(x, (Sum, Neg, Product)) else s

    return fmt(e)


# -- evaluation ------------------------------------------------------------------------

def evaluate(e: Expr, field: FieldSpec, order: int | None = None):
    """Value of e: a FieldElement, Polynomial, SteenrodElement, MilnorElement,
    DualElement or DifferentialForm."""
    order = field.q if order is None else order

    def ev(x):
        if isinstance(x, Num):
            return field.element(x.value)
        if isinstance(x, Gen):
            return field.gen
        if isinstance(x, Var):
            return Polynomial.variable(field, x.index)
        if isinstance(x, Dz):
            return DifferentialForm.dz(field, x.index)
        if isinstance(x, Xi):
            return DualElement.xi(field, x.k, order)
        if isinstance(x, Op):
            return SteenrodElement.generator(field, x.i, order)
        if isinstance(x, Milnor):
            return MilnorElement.basis_element(field, x.entries, q=order)
        if isinstance(x, Neg):
            return -ev(x.arg)
        if isinstance(x, Sum):
            total = ev(x.terms[0])
            for t in x.terms[1:]:
                total = _add(total, ev(t))
            return total
        if isinstance(x, Product):
            vals = [ev(f) for f in x.factors]
            value = vals[-1]
            for v in reversed(vals[:-1]):
                value = _mul(v, value)
            return value
        if isinstance(x, Power):
            base = ev(x.base)
            result = _unit_like(base)
            for _ in range(x.exp):
                result = _mul(base, result)
            return result
        raise TypeError(f"not an expression: {x!r}")

    return ev(e)


def _unit_like(v):
    if isinstance(v, FieldElement):
        return v.spec.one
    return v.scalar(1)


def _coerce_pair(a, b):
    if isinstance(a, FieldElement) and not isinstance(b, FieldElement):
        return b.scalar(a), b
    if isinstance(b, FieldElement) and not isinstance(a, FieldElement):
        return a, a.scalar(b)
    if isinstance(a, Polynomial) and isinstance(b, DifferentialForm):
        return DifferentialForm.from_polynomial(a), b
    if isinstance(b, Polynomial) and isinstance(a, DifferentialForm):
        return a, DifferentialForm.from_polynomial(b)
    if isinstance(a, MilnorElement) and isinstance(b, SteenrodElement):
        return milnor_to_admissible(a), b
    if isinstance(b, MilnorElement) and isinstance(a, SteenrodElement):
        return a, milnor_to_admissible(b)
    return a, b


def _add(a, b):
    a, b = _coerce_pair(a, b)
    if type(a) is not type(b):
        raise ExprTypeError(f"cannot add {_kind(a)} and {_kind(b)}")
    return a + b


def apply_operation(op, v):
    """op (Steenrod or Milnor element) acting on a polynomial or a form."""
    from .action import apply_element

    if isinstance(op, MilnorElement):
        op = milnor_to_admissible(op)
    if not isinstance(op, SteenrodElement):
        raise ExprTypeError(f"{_kind(op)} is not an operation")
    if isinstance(v, Polynomial):
        return apply_element(op, v)
    if isinstance(v, DifferentialForm):
        result = v._new({})
        for seq, c in op.terms.items():
            w = v
            for i in reversed(seq):
                w = total_power_on_forms(w, op.q)[i]
            result = result + w.scale(c)
        return result
    raise ExprTypeError(f"cannot apply an operation to {_kind(v)}")


def _mul(a, b):
    if isinstance(a, FieldElement) or isinstance(b, FieldElement):
        if isinstance(a, FieldElement) and isinstance(b, FieldElement):
            return a * b
        return b.scale(a) if isinstance(a, FieldElement) else a.scale(b)
    if isinstance(a, MilnorElement) and not isinstance(b, MilnorElement):
        a = milnor_to_admissible(a)
    if isinstance(a, SteenrodElement):
        if isinstance(b, MilnorElement):
            b = milnor_to_admissible(b)
        if isinstance(b, SteenrodElement):
            return a * b
        return apply_operation(a, b)
    a, b = _coerce_pair(a, b)
    if type(a) is not type(b) or isinstance(a, SteenrodElement):
        raise ExprTypeError(f"cannot multiply {_kind(a)} by {_kind(b)}")
    return a * b


def _kind(v) -> str:
    return {
        FieldElement: "a scalar",
        Polynomial: "a polynomial",
        SteenrodElement: "a Steenrod operation",
        MilnorElement: "a Milnor basis element",
        DualElement: "a dual element",
        DifferentialForm: "a differential form",
    }.get(type(v), type(v).__name__)


def parse_value(text: str, field: FieldSpec, order: int | None = None):
    return evaluate(parse(text, field, order), field, order)


def parse_scalar(text: str, field: FieldSpec) -> FieldElement:
    v = parse_value(text, field)
    if not isinstance(v, FieldElement):
        raise FieldLiteralError(f"{text!r} is not a field element")
    return v

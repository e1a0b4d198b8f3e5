"""Graded sparse polynomial functions F_q[V] and linear substitution.

Variables are z_1, ..., z_n (0-based index ``i`` is z_{i+1}).  A monomial is
a tuple of exponents with trailing zeros removed, so ``()`` is the constant 1.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import FieldMismatch, IndexOutOfRange, ShapeMismatch
from .galois import FieldElement, FieldSpec
from .linear import LinearCombination

ALIASES = ("x", "y", "z")


def trim(exps) -> tuple[int, ...]:
    exps = list(exps)
    while exps and exps[-1] == 0:
        exps.pop()
    return tuple(exps)


def mono_mul(a: tuple, b: tuple) -> tuple:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, e in enumerate(b):
        out[i] += e
    return tuple(out)


def var_name(i: int, use_aliases: bool) -> str:
    return ALIASES[i] if use_aliases else f"z{i + 1}"


def grlex_key(m: tuple):
    """Sort key; larger key means larger in graded lex order with z_1 > z_2 > ..."""
    return (sum(m), m)


def format_monomial(m: tuple, use_aliases: bool, sep: str = "*") -> str:
    parts = []
    for i, e in enumerate(m):
        if e == 1:
            parts.append(var_name(i, use_aliases))
        elif e > 1:
            parts.append(f"{var_name(i, use_aliases)}^{e}")
    return sep.join(parts)


def format_scaled(c: FieldElement, body: str, sep: str = "*") -> str:
    """Render ``c * body``; ``body == ''`` means the unit."""
    cs = str(c)
    if not body:
        return cs
    if c == 1:
        return body
    if "+" in cs:
        cs = f"({cs})"
    return f"{cs}{sep}{body}"


def join_terms(parts) -> str:
    parts = list(parts)
    return " + ".join(parts) if parts else "0"


class Polynomial(LinearCombination):
    """Element of F_q[z_1, ..., z_n]; keys are trimmed exponent tuples."""

    __slots__ = ()

    @staticmethod
    def _key(k):
        return trim(k)

    def _unit_key(self):
        return ()

    @classmethod
    def variable(cls, field: FieldSpec, i: int) -> Polynomial:
        return cls(field, {(0,) * i + (1,): 1})

    @classmethod
    def constant(cls, field: FieldSpec, c) -> Polynomial:
        return cls(field, {(): c})

    @classmethod
    def monomial(cls, field: FieldSpec, exps, c=1) -> Polynomial:
        return cls(field, {tuple(exps): c})

    @property
    def n_vars(self) -> int:
        return max((len(m) for m in self.terms), default=0)

    @property
    def degree(self) -> int:
        """Top degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self.terms), default=-1)

    def degrees(self) -> set[int]:
        return {sum(m) for m in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def homogeneous_components(self) -> dict[int, Polynomial]:
        parts: dict[int, dict] = {}
        for m, c in self.terms.items():
            parts.setdefault(sum(m), {})[m] = c
        return {d: self._new(t) for d, t in sorted(parts.items())}

    def __mul__(self, other):
        if isinstance(other, (int, FieldElement)):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check(other)
        out = []
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                out.append((mono_mul(m1, m2), c1 * c2))
        return self._new(out)

    def __rmul__(self, other):
        if isinstance(other, (int, FieldElement)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int) -> Polynomial:
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = self.scalar(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def sorted_terms(self):
        """Terms in canonical print order: descending graded lex."""
        return sorted(self.terms.items(), key=lambda kv: grlex_key(kv[0]), reverse=True)

    def __str__(self):
        alias = self.n_vars <= len(ALIASES)
        return join_terms(format_scaled(c, format_monomial(m, alias)) for m, c in self.sorted_terms())

    def to_json(self):
        return [{"coeff": str(c), "exps": list(m)} for m, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, field: FieldSpec, data) -> Polynomial:
        return cls(field, [(tuple(t["exps"]), _coeff_from_text(field, t["coeff"])) for t in data])


def _coeff_from_text(field: FieldSpec, text: str) -> FieldElement:
    from .expr import parse_scalar

    return parse_scalar(text, field)


def poly_add(f: Polynomial, g: Polynomial) -> Polynomial:
    return f + g


def poly_mul(f: Polynomial, g: Polynomial) -> Polynomial:
    return f * g


def poly_scale(f: Polynomial, c) -> Polynomial:
    return f.scale(c)


@dataclass(frozen=True)
class LinearMap:
    """An m x n matrix A acting on polynomials by z_j -> sum_i A[i][j] z_i."""

    field: FieldSpec
    matrix: tuple[tuple[FieldElement, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(self.field.element(x) for x in row) for row in self.matrix)
        if len({len(r) for r in rows}) > 1:
            raise ShapeMismatch("ragged matrix")
        object.__setattr__(self, "matrix", rows)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.matrix), (len(self.matrix[0]) if self.matrix else 0)

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> LinearMap:
        return cls(field, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    def image_of_variable(self, j: int) -> Polynomial:
        m, _ = self.shape
        return Polynomial(self.field, {(0,) * i + (1,): self.matrix[i][j] for i in range(m)})


def substitute(f: Polynomial, A: LinearMap) -> Polynomial:
    """Pull back f along A: each z_j becomes the linear form sum_i A[i][j] z_i."""
    if f.field != A.field:
        raise FieldMismatch("polynomial and matrix over different fields")
    _, n = A.shape
    if f.n_vars > n:
        raise ShapeMismatch(f"polynomial has {f.n_vars} variables but the map has {n} columns")
    powers: dict[tuple[int, int], Polynomial] = {}

    def power(j, e):
        if (j, e) not in powers:
            powers[(j, e)] = A.image_of_variable(j) ** e
        return powers[(j, e)]

    result = f._new({})
    for m, c in f.terms.items():
        term = Polynomial.constant(f.field, c)
        for j, e in enumerate(m):
            if e:
                term = term * power(j, e)
        result = result + term
    return result


def elementary_symmetric(i: int, n: int, field: FieldSpec) -> Polynomial:
    if not 0 <= i <= n:
        raise IndexOutOfRange(f"e_{i} in {n} variables")
    terms = []
    for idx in combinations(range(n), i):
        m = [0] * n
        for k in idx:
            m[k] = 1
        terms.append((tuple(m), 1))
    return Polynomial(field, terms)

"""Polynomial differential forms H(V) = F_q[V] (x) E[V] and the Bockstein.

A basis form is ``(monomial, dz)`` where ``dz`` is a strictly increasing tuple
of 0-based variable indices, standing for f * dz_{i1} dz_{i2} ... .  The
exterior generators anticommute; that sign matters for beta o beta = 0 at odd p.
"""
from __future__ import annotations

from .action import XiSeries, total_power
from .errors import ShapeMismatch
from .galois import FieldElement, FieldSpec
from .linear import LinearCombination
from .polynomials import (
    ALIASES,
    Polynomial,
    format_monomial,
    format_scaled,
    grlex_key,
    join_terms,
    mono_mul,
    trim,
    var_name,
)


def _sort_with_sign(indices):
    """(sorted tuple, sign) or (None, 0) if an index repeats."""
    idx = list(indices)
    if len(set(idx)) != len(idx):
        return None, 0
    sign = 1
    for i in range(len(idx)):
        for j in range(len(idx) - 1 - i):
            if idx[j] > idx[j + 1]:
                idx[j], idx[j + 1] = idx[j + 1], idx[j]
                sign = -sign
    return tuple(idx), sign


class DifferentialForm(LinearCombination):
    __slots__ = ()

    @staticmethod
    def _key(k):
        mono, dz = k
        dz = tuple(dz)
        if any(a >= b for a, b in zip(dz, dz[1:])):
            raise ValueError(f"exterior indices {dz} must be strictly increasing")
        return (trim(mono), dz)

    def _unit_key(self):
        return ((), ())

    @classmethod
    def term(cls, field: FieldSpec, mono, dz=(), c=1) -> DifferentialForm:
        """c * z^mono * dz_{dz[0]} dz_{dz[1]} ..., reordering dz with its sign."""
        dz_sorted, sign = _sort_with_sign(dz)
        if dz_sorted is None:
            return cls(field, {})
        return cls(field, {(tuple(mono), dz_sorted): field.element(c) * sign})

    @classmethod
    def variable(cls, field: FieldSpec, i: int) -> DifferentialForm:
        return cls.term(field, (0,) * i + (1,))

    @classmethod
    def dz(cls, field: FieldSpec, i: int) -> DifferentialForm:
        return cls.term(field, (), (i,))

    @classmethod
    def from_polynomial(cls, f: Polynomial) -> DifferentialForm:
        return cls(f.field, {(m, ()): c for m, c in f.terms.items()})

    @property
    def n_vars(self) -> int:
        n = 0
        for m, dz in self.terms:
            n = max(n, len(m), (dz[-1] + 1) if dz else 0)
        return n

    def exterior_degrees(self) -> set[int]:
        return {len(dz) for _, dz in self.terms}

    def degrees(self) -> set[int]:
        return {sum(m) + len(dz) for m, dz in self.terms}

    def polynomial_part(self) -> Polynomial:
        """The component of exterior degree zero."""
        return Polynomial(self.field, {m: c for (m, dz), c in self.terms.items() if not dz})

    def __mul__(self, other):
        if isinstance(other, (int, FieldElement)):
            return self.scale(other)
        if isinstance(other, Polynomial):
            other = DifferentialForm.from_polynomial(other)
        if not isinstance(other, DifferentialForm):
            return NotImplemented
        return form_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, FieldElement)):
            return self.scale(other)
        if isinstance(other, Polynomial):
            return form_mul(DifferentialForm.from_polynomial(other), self)
        return NotImplemented

    def __pow__(self, n: int) -> DifferentialForm:
        result = self.scalar(1)
        for _ in range(n):
            result = result * self
        return result

    def sorted_terms(self):
        return sorted(self.terms.items(),
                      key=lambda kv: (sum(kv[0][0]) + len(kv[0][1]), grlex_key(kv[0][0]),
                                      tuple(-i for i in kv[0][1])),
                      reverse=True)

    def __str__(self):
        alias = self.n_vars <= len(ALIASES)

        def body(m, dz):
            parts = [format_monomial(m, alias)] if any(m) else []
            parts += ["d" + var_name(i, alias) for i in dz]
            return "*".join(parts)

        return join_terms(format_scaled(c, body(m, dz)) for (m, dz), c in self.sorted_terms())

    def to_json(self):
        return [{"coeff": str(c), "exps": list(m), "dz": list(dz)} for (m, dz), c in self.sorted_terms()]


def form_mul(a: DifferentialForm, b: DifferentialForm) -> DifferentialForm:
    if a.field != b.field:
        raise ShapeMismatch("forms over different fields")
    out = []
    for (m1, d1), c1 in a.terms.items():
        for (m2, d2), c2 in b.terms.items():
            if set(d1) & set(d2):
                continue
            merged, sign = _sort_with_sign(d1 + d2)
            out.append(((mono_mul(m1, m2), merged), c1 * c2 * sign))
    return a._new(out)


def bockstein(a: DifferentialForm) -> DifferentialForm:
    """The derivation with beta(dz) = z and beta(z) = 0."""
    out = []
    for (m, dz), c in a.terms.items():
        for j, i in enumerate(dz):
            sign = -1 if j % 2 else 1
            mono = list(m) + [0] * (i + 1 - len(m))
            mono[i] += 1
            out.append(((tuple(mono), dz[:j] + dz[j + 1:]), c * sign))
    return a._new(out)


def total_power_on_forms(a: DifferentialForm, q: int | None = None) -> XiSeries:
    """P(xi) on H(V): z -> z + z^q xi on polynomial generators, dz -> dz."""
    zero = a._new({})
    by_dz: dict[tuple, dict] = {}
    for (m, dz), c in a.terms.items():
        by_dz.setdefault(dz, {})[m] = c
    result = XiSeries([], zero)
    for dz, poly_terms in by_dz.items():
        series = total_power(Polynomial(a.field, poly_terms), q)
        ext = DifferentialForm(a.field, {((), dz): 1})
        result = result + XiSeries([DifferentialForm.from_polynomial(f) * ext for f in series.coeffs], zero)
    return result

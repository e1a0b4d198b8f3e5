"""The dual Hopf algebra P_* = F_q[xi_1, xi_2, ...] and the Milnor basis.

The pairing <P^J | xi^K> between admissible monomials and dual monomials is
computed by peeling off one factor xi_l of xi^K (l = length of K) and using
the coproduct of P^J; it is unit triangular with respect to the bijection
I -> J(I), so the change of basis to the Milnor basis P(I) (dual to xi^I) is
an exact triangular solve, done once per degree and cached.
"""
from __future__ import annotations

import logging
from functools import lru_cache

from .action import compositions
from .algebra import (
    TENSOR,
    SteenrodElement,
    _check_order,
    _normal_form,
    delta,
    excess_sequence,
    is_admissible,
    right_lex_key,
    sequence_degree,
    strip_zeros,
    trim_sequence,
)
from .errors import NotAdmissible
from .galois import FieldElement, FieldSpec
from .linear import LinearCombination
from .polynomials import format_scaled, join_terms

log = logging.getLogger(__name__)


def milnor_degree(I, q: int) -> int:
    return sum(i * (q ** s - 1) for s, i in enumerate(I, start=1))


def profile(I, q: int) -> tuple[int, ...]:
    """J(I): j_k = sum_{s >= k} i_s q^(s-k).  Admissible and degree preserving."""
    I = trim_sequence(I)
    out = []
    for k in range(len(I)):
        out.append(sum(i * q ** (s - k) for s, i in enumerate(I[k:], start=k)))
    return tuple(out)


def milnor_index(J, q: int) -> tuple[int, ...]:
    """Inverse of ``profile``: i_k = j_k - q j_{k+1}."""
    J = tuple(J)
    if not is_admissible(J, q):
        raise NotAdmissible(f"{J} is not admissible for q={q}")
    padded = J + (0,)
    return trim_sequence(padded[k] - q * padded[k + 1] for k in range(len(J)))


def _monomials(d: int, top: int, q: int):
    """Index sequences of Milnor degree d using positions <= top."""
    if d == 0:
        yield ()
        return
    if top == 0:
        return
    w = q ** top - 1
    for c in range(d // w, -1, -1):
        for rest in _monomials(d - c * w, top - 1, q):
            seq = list(rest) + [0] * (top - 1 - len(rest)) + [c]
            yield trim_sequence(seq)


@lru_cache(maxsize=None)
def milnor_basis(degree: int, q: int) -> tuple[tuple[int, ...], ...]:
    """Index sequences I with deg xi^I == degree, in right-lex order."""
    if degree < 0:
        return ()
    top = 0
    while q ** (top + 1) - 1 <= degree:
        top += 1
    return tuple(sorted(set(_monomials(degree, top, q)), key=right_lex_key))


# -- pairing ------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _pair(q: int, p: int, J: tuple, K: tuple) -> int:
    """<P^J | xi^K> mod p for admissible J."""
    if sequence_degree(J, q) != milnor_degree(K, q):
        return 0
    if not K:
        return 1
    ell = len(K)
    rest = trim_sequence(K[:-1] + (K[-1] - 1,))
    target = excess_sequence(ell, q)
    total = 0
    # <P^J | xi^rest * xi_ell> = sum over J = J' + J'' of <P^J' | xi^rest><P^J'' | xi_ell>
    for right in compositions(sum(target), J):
        c_right = dict(_normal_form(q, p, strip_zeros(right))).get(target, 0)
        if not c_right:
            continue
        left = strip_zeros(j - r for j, r in zip(J, right))
        for A, cA in _normal_form(q, p, left):
            total += c_right * cA * _pair(q, p, A, rest)
    return total % p


def pairing(J, K, field: FieldSpec, q: int | None = None) -> FieldElement:
    """<P^J | xi^K> for an admissible sequence J and an index sequence K."""
    q = _check_order(field, q)
    J = strip_zeros(J)
    if not is_admissible(J, q):
        raise NotAdmissible(f"{J} is not admissible for q={q}")
    return field.element(_pair(q, field.p, J, trim_sequence(K)))


@lru_cache(maxsize=None)
def pairing_matrix(degree: int, q: int, p: int):
    """(basis, M) with M[a][b] = <P^J(basis[a]) | xi^basis[b]> mod p."""
    basis = milnor_basis(degree, q)
    M = tuple(tuple(_pair(q, p, profile(I, q), K) for K in basis) for I in basis)
    return basis, M


@lru_cache(maxsize=None)
def _inverse_matrix(degree: int, q: int, p: int):
    """Inverse of the unit lower-triangular pairing matrix (rows I, columns K)."""
    basis, M = pairing_matrix(degree, q, p)
    n = len(basis)
    for a in range(n):
        if M[a][a] != 1 or any(M[a][b] for b in range(a + 1, n)):
            raise ArithmeticError(f"pairing matrix in degree {degree} is not unit triangular")
    # solve N M = 1 column by column from the right
    N = [[0] * n for _ in range(n)]
    for a in range(n):
        N[a][a] = 1
        for b in range(a - 1, -1, -1):
            s = sum(N[a][c] * M[c][b] for c in range(b + 1, a + 1))
            N[a][b] = -s % p
    return basis, tuple(tuple(r) for r in N)


# -- element types ---------------------------------------------------------------------

def format_milnor(I) -> str:
    return "P(" + ",".join(str(i) for i in I) + ")" if I else "1"


class MilnorElement(LinearCombination):
    """Linear combination of Milnor basis elements P(I); ``*`` is the algebra product."""

    __slots__ = ("q",)

    def __init__(self, field: FieldSpec, terms=(), q: int | None = None):
        object.__setattr__(self, "q", _check_order(field, q))
        super().__init__(field, terms)

    @staticmethod
    def _key(k):
        return trim_sequence(k)

    def _ctx(self):
        return {"q": self.q}

    def _unit_key(self):
        return ()

    @classmethod
    def basis_element(cls, field: FieldSpec, I, c=1, q: int | None = None) -> MilnorElement:
        return cls(field, {tuple(I): c}, q)

    def degrees(self) -> set[int]:
        return {milnor_degree(I, self.q) for I in self.terms}

    def __mul__(self, other):
        if isinstance(other, (int, FieldElement)):
            return self.scale(other)
        if isinstance(other, MilnorElement):
            return milnor_product(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, FieldElement)):
            return self.scale(other)
        return NotImplemented

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (milnor_degree(kv[0], self.q), right_lex_key(kv[0])))

    def __str__(self):
        return join_terms(format_scaled(c, "" if not I else format_milnor(I), " ") for I, c in self.sorted_terms())

    def to_json(self):
        return [{"coeff": str(c), "entries": list(I)} for I, c in self.sorted_terms()]


def format_dual_monomial(I) -> str:
    parts = []
    for k, e in enumerate(I, start=1):
        if e == 1:
            parts.append(f"xi_{k}")
        elif e > 1:
            parts.append(f"xi_{k}^{e}")
    return "*".join(parts)


def _add_seq(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, e in enumerate(b):
        out[i] += e
    return tuple(out)


class DualElement(LinearCombination):
    """Polynomial in xi_1, xi_2, ...; keys are exponent sequences."""

    __slots__ = ("q",)

    def __init__(self, field: FieldSpec, terms=(), q: int | None = None):
        object.__setattr__(self, "q", _check_order(field, q))
        super().__init__(field, terms)

    @staticmethod
    def _key(k):
        return trim_sequence(k)

    def _ctx(self):
        return {"q": self.q}

    def _unit_key(self):
        return ()

    @classmethod
    def xi(cls, field: FieldSpec, k: int, q: int | None = None) -> DualElement:
        return cls(field, {delta(k) if k else (): 1}, q)

    @classmethod
    def monomial(cls, field: FieldSpec, I, c=1, q: int | None = None) -> DualElement:
        return cls(field, {tuple(I): c}, q)

    def degrees(self) -> set[int]:
        return {milnor_degree(I, self.q) for I in self.terms}

    def __mul__(self, other):
        if isinstance(other, (int, FieldElement)):
            return self.scale(other)
        if not isinstance(other, DualElement):
            return NotImplemented
        self._check(other)
        return self._new([(_add_seq(a, b), ca * cb) for a, ca in self.terms.items()
                          for b, cb in other.terms.items()])

    def __rmul__(self, other):
        if isinstance(other, (int, FieldElement)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int) -> DualElement:
        result = self.scalar(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (milnor_degree(kv[0], self.q), right_lex_key(kv[0])))

    def __str__(self):
        return join_terms(format_scaled(c, format_dual_monomial(I)) for I, c in self.sorted_terms())

    def to_json(self):
        return [{"coeff": str(c), "exponents": list(I)} for I, c in self.sorted_terms()]


class DualTensor(LinearCombination):
    """Element of P_* (x) P_*; keys are pairs of exponent sequences."""

    __slots__ = ("q",)

    def __init__(self, field: FieldSpec, terms=(), q: int | None = None):
        object.__setattr__(self, "q", _check_order(field, q))
        super().__init__(field, terms)

    @staticmethod
    def _key(k):
        return (trim_sequence(k[0]), trim_sequence(k[1]))

    def _ctx(self):
        return {"q": self.q}

    def _unit_key(self):
        return ((), ())

    def __mul__(self, other):
        if isinstance(other, (int, FieldElement)):
            return self.scale(other)
        self._check(other)
        return self._new([((_add_seq(a1, a2), _add_seq(b1, b2)), c1 * c2)
                          for (a1, b1), c1 in self.terms.items() for (a2, b2), c2 in other.terms.items()])

    def __pow__(self, n: int) -> DualTensor:
        result = self.scalar(1)
        for _ in range(n):
            result = result * self
        return result

    def sorted_terms(self):
        def key(kv):
            (a, b), _ = kv
            return (-milnor_degree(a, self.q), right_lex_key(a), right_lex_key(b))
        return sorted(self.terms.items(), key=key)

    def __str__(self):
        return join_terms(
            format_scaled(c, (format_dual_monomial(a) or "1") + TENSOR + (format_dual_monomial(b) or "1"))
            for (a, b), c in self.sorted_terms())

    def to_json(self):
        return [{"coeff": str(c), "left": list(a), "right": list(b)} for (a, b), c in self.sorted_terms()]


# -- basis conversion --------------------------------------------------------------------

def admissible_to_milnor(e: SteenrodElement) -> MilnorElement:
    q, p = e.q, e.field.p
    out = []
    for J, c in e.normalize().terms.items():
        I = milnor_index(J, q)
        basis, M = pairing_matrix(milnor_degree(I, q), q, p)
        row = M[basis.index(I)]
        out.extend((K, c * m) for K, m in zip(basis, row) if m)
    return MilnorElement(e.field, out, q)


def milnor_to_admissible(m: MilnorElement) -> SteenrodElement:
    q, p = m.q, m.field.p
    out = []
    for K, c in m.terms.items():
        basis, N = _inverse_matrix(milnor_degree(K, q), q, p)
        row = N[basis.index(K)]
        out.extend((profile(I, q), c * n) for I, n in zip(basis, row) if n)
    return SteenrodElement(m.field, out, q)


def milnor_product(m1: MilnorElement, m2: MilnorElement) -> MilnorElement:
    """Product in the Milnor basis, computed through the admissible basis."""
    m1._check(m2)
    return admissible_to_milnor(milnor_to_admissible(m1) * milnor_to_admissible(m2))


def pair(e, x: DualElement) -> FieldElement:
    """<e | x> for e a SteenrodElement or MilnorElement and x a DualElement."""
    m = e if isinstance(e, MilnorElement) else admissible_to_milnor(e)
    if m.q != x.q or m.field != x.field:
        raise ValueError("pairing elements over different algebras")
    total = x.field.zero
    for K, c in x.terms.items():
        total = total + c * m.coefficient(K)
    return total


def pair_tensor(t, x: DualTensor) -> FieldElement:
    """<a (x) b | y (x) z> = <a|y><b|z>, extended bilinearly; t is a TensorElement."""
    total = x.field.zero
    cache: dict = {}

    def milnor(seq):
        if seq not in cache:
            cache[seq] = admissible_to_milnor(SteenrodElement(t.field, {seq: 1}, t.q))
        return cache[seq]

    for (a, b), c in t.terms.items():
        ma, mb = milnor(a), milnor(b)
        for (y, z), d in x.terms.items():
            total = total + c * d * ma.coefficient(y) * mb.coefficient(z)
    return total


def milnor_primitive(k: int, field: FieldSpec, q: int | None = None) -> SteenrodElement:
    """P^{Delta_k} in the admissible basis.

    Built by the commutator recursion P^{Delta_k} = [P^{q^(k-1)}, P^{Delta_(k-1)}]
    and compared with the element dual to xi_k; the dual element is returned
    if the two ever differ.
    """
    q = _check_order(field, q)
    if k < 1:
        raise ValueError("Milnor primitives are indexed by k >= 1")
    current = SteenrodElement.generator(field, 1, q)
    for j in range(2, k + 1):
        g = SteenrodElement.generator(field, q ** (j - 1), q)
        current = g * current - current * g
    dual = milnor_to_admissible(MilnorElement.basis_element(field, delta(k), q=q))
    if current != dual:
        log.warning("commutator recursion disagrees with duality for k=%d, q=%d", k, q)
        return dual
    return current


def _xi_power_key(k: int, e: int) -> tuple:
    return tuple(e if s == k else 0 for s in range(1, k + 1)) if k else ()


def dual_coproduct(x: DualElement) -> DualTensor:
    """Algebra-map extension of xi_k -> sum_{i+j=k} xi_i^(q^j) (x) xi_j."""
    q, F = x.q, x.field
    gen_cache: dict[int, DualTensor] = {}

    def gen(k):
        if k not in gen_cache:
            gen_cache[k] = DualTensor(F, [((_xi_power_key(i, q ** (k - i)), _xi_power_key(k - i, 1)), 1)
                                          for i in range(k + 1)], q)
        return gen_cache[k]

    result = DualTensor(F, {}, q)
    for I, c in x.terms.items():
        term = DualTensor(F, {((), ()): c}, q)
        for k, e in enumerate(I, start=1):
            if e:
                term = term * gen(k) ** e
        result = result + term
    return result

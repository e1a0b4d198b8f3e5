"""The Steenrod algebra P*(F_q) in the basis of admissible monomials.

An index sequence is a plain tuple of positive integers; ``(a, b)`` stands
for the composite P^a P^b (P^b applied first).  P^0 is the identity and never
appears inside a stored sequence.  Rewriting to normal form uses the Adem-Wu
relations on the leftmost inadmissible adjacent pair; the moment
sum(s * i_s) drops with every rewrite, so the process terminates.
"""
from __future__ import annotations

import itertools
from functools import lru_cache

from .errors import FieldMismatch, NotAdmissible, NotInadmissible
from .galois import FieldElement, FieldSpec, binom_mod_p
from .linear import LinearCombination
from .polynomials import format_scaled, join_terms

TENSOR = " ⊗ "


# -- index sequences -----------------------------------------------------------

def strip_zeros(seq) -> tuple[int, ...]:
    return tuple(i for i in seq if i)


def trim_sequence(seq) -> tuple[int, ...]:
    seq = list(seq)
    while seq and seq[-1] == 0:
        seq.pop()
    return tuple(seq)


def is_admissible(seq, q: int) -> bool:
    return all(seq[s] >= q * seq[s + 1] for s in range(len(seq) - 1))


def moment(seq) -> int:
    return sum(s * i for s, i in enumerate(seq, start=1))


def sequence_degree(seq, q: int) -> int:
    return (q - 1) * sum(seq)


def excess_sequence(k: int, q: int) -> tuple[int, ...]:
    """M_k = (q^(k-1), ..., q, 1), the admissible sequence of excess zero."""
    return tuple(q ** (k - 1 - s) for s in range(k))


def delta(k: int) -> tuple[int, ...]:
    """Delta_k: a single 1 in position k."""
    return (0,) * (k - 1) + (1,)


def excess(J, q: int) -> int:
    J = tuple(J)
    if not is_admissible(J, q):
        raise NotAdmissible(f"{J} is not admissible for q={q}")
    padded = J + (0,)
    return sum(padded[s] - q * padded[s + 1] for s in range(len(J)))


def right_lex_key(seq):
    """Order sequences by comparing entries from the right."""
    seq = trim_sequence(seq)
    return (len(seq), tuple(reversed(seq)))


def _admissible_with_sum(n: int, first_max: int, q: int):
    if n == 0:
        yield ()
        return
    for i1 in range(min(n, first_max), 0, -1):
        for tail in _admissible_with_sum(n - i1, i1 // q, q):
            yield (i1,) + tail


@lru_cache(maxsize=None)
def admissible_of_degree(degree: int, q: int) -> tuple[tuple[int, ...], ...]:
    """Admissible sequences of the given degree, in right-lex order."""
    if degree < 0 or degree % (q - 1):
        return ()
    seqs = _admissible_with_sum(degree // (q - 1), degree, q)
    return tuple(sorted(seqs, key=right_lex_key))


def enumerate_admissible(degree_bound: int, q: int) -> list[tuple[int, ...]]:
    """All admissible sequences of degree <= degree_bound, by degree then right-lex."""
    out = []
    for d in range(0, degree_bound + 1, q - 1):
        out.extend(admissible_of_degree(d, q))
    return out


# -- Adem-Wu rewriting (coefficients live in the prime field, stored as ints) ---

@lru_cache(maxsize=None)
def _adem(q: int, p: int, a: int, b: int):
    """P^a P^b for 0 < a < q b as ((sequence, coeff mod p), ...)."""
    out = []
    for j in range(a // q + 1):
        c = binom_mod_p((b - j) * (q - 1) - 1, a - q * j, p)
        if not c:
            continue
        if (a - q * j) % 2:
            c = -c % p
        out.append(((a + b - j, j) if j else (a + b,), c))
    return tuple(out)


def _rewrite_at(seq, s, q, p):
    a, b = seq[s], seq[s + 1]
    for pair, c in _adem(q, p, a, b):
        yield seq[:s] + pair + seq[s + 2:], c


@lru_cache(maxsize=None)
def _normal_form(q: int, p: int, seq: tuple):
    """Admissible expansion of the basic monomial P^seq (prime-field coefficients)."""
    for s in range(len(seq) - 1):
        if seq[s] < q * seq[s + 1]:
            break
    else:
        return ((seq, 1),)
    acc: dict = {}
    for new, c in _rewrite_at(seq, s, q, p):
        for adm, c2 in _normal_form(q, p, new):
            acc[adm] = (acc.get(adm, 0) + c * c2) % p
    return tuple((k, v) for k, v in acc.items() if v)


def _check_order(field: FieldSpec, q):
    if q is None:
        return field.q
    if not field.contains_order(q):
        raise FieldMismatch(f"F_{q} is not a subfield of F_{field}")
    return q


def _op_name(q: int) -> str:
    return "Sq" if q == 2 else "P"


def format_sequence(seq, q: int) -> str:
    name = _op_name(q)
    return " ".join(f"{name}^{i}" for i in seq)


class SteenrodElement(LinearCombination):
    """Finite F_q-combination of basic monomials P^I.

    ``q`` is the order of the operations; it equals the field size unless the
    element lives in an extension of scalars such as P*(F_p) (x) F_q.
    Multiplication with ``*`` composes and returns the admissible normal form.
    """

    __slots__ = ("q",)

    def __init__(self, field: FieldSpec, terms=(), q: int | None = None):
        object.__setattr__(self, "q", _check_order(field, q))
        super().__init__(field, terms)

    @staticmethod
    def _key(k):
        return strip_zeros(k)

    def _ctx(self):
        return {"q": self.q}

    def _unit_key(self):
        return ()

    @classmethod
    def basic(cls, field: FieldSpec, seq, c=1, q: int | None = None) -> SteenrodElement:
        return cls(field, {tuple(seq): c}, q)

    @classmethod
    def generator(cls, field: FieldSpec, i: int, q: int | None = None) -> SteenrodElement:
        return cls(field, {(i,): 1}, q)

    @classmethod
    def unit(cls, field: FieldSpec, q: int | None = None) -> SteenrodElement:
        return cls(field, {(): 1}, q)

    def degrees(self) -> set[int]:
        return {sequence_degree(s, self.q) for s in self.terms}

    @property
    def degree(self) -> int:
        """Degree of a homogeneous element (-1 for zero)."""
        ds = self.degrees()
        if len(ds) > 1:
            raise ValueError(f"element is not homogeneous: degrees {sorted(ds)}")
        return ds.pop() if ds else -1

    def is_admissible(self) -> bool:
        return all(is_admissible(s, self.q) for s in self.terms)

    def normalize(self) -> SteenrodElement:
        return to_admissible(self)

    def __mul__(self, other):
        if isinstance(other, (int, FieldElement)):
            return self.scale(other)
        if isinstance(other, SteenrodElement):
            return product(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, FieldElement)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int) -> SteenrodElement:
        result = self.scalar(1)
        for _ in range(n):
            result = result * self
        return result

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), right_lex_key(kv[0])))

    def __str__(self):
        return join_terms(format_scaled(c, format_sequence(s, self.q), " ") for s, c in self.sorted_terms())

    def to_json(self):
        return [{"coeff": str(c), "entries": list(s)} for s, c in self.sorted_terms()]


def _from_int_terms(field, pairs, q):
    return SteenrodElement(field, [(s, field.element(c)) for s, c in pairs], q)


def adem_wu_expand(a: int, b: int, field: FieldSpec, q: int | None = None) -> SteenrodElement:
    """Right-hand side of the Adem-Wu relation for P^a P^b, 0 < a < q b."""
    q = _check_order(field, q)
    if a <= 0 or b <= 0:
        raise ValueError("Adem-Wu relations need positive indices")
    if a >= q * b:
        raise NotInadmissible(a, b, q)
    return _from_int_terms(field, _adem(q, field.p, a, b), q)


def to_admissible(e: SteenrodElement, choose=None) -> SteenrodElement:
    """Rewrite e into the admissible basis.

    By default the leftmost inadmissible pair is rewritten first (memoized).
    ``choose``, if given, is called with the list of inadmissible positions
    of a sequence and returns the one to rewrite; it is used to test that the
    result does not depend on the rewriting order.
    """
    q, p, F = e.q, e.field.p, e.field
    if choose is None:
        out = []
        for seq, c in e.terms.items():
            out.extend((adm, c * c2) for adm, c2 in _normal_form(q, p, seq))
        return e._new(out)
    pending = dict(e.terms)
    done: dict = {}
    while pending:
        seq, c = pending.popitem()
        bad = [s for s in range(len(seq) - 1) if seq[s] < q * seq[s + 1]]
        if not bad:
            done[seq] = done[seq] + c if seq in done else c
            continue
        for new, c2 in _rewrite_at(seq, choose(bad), q, p):
            term = c * F.element(c2)
            pending[new] = pending[new] + term if new in pending else term
    return e._new(done)


def product(e1: SteenrodElement, e2: SteenrodElement) -> SteenrodElement:
    e1._check(e2)
    q, p = e1.q, e1.field.p
    acc: dict = {}
    for s1, c1 in e1.terms.items():
        for s2, c2 in e2.terms.items():
            c = c1 * c2
            for adm, c3 in _normal_form(q, p, s1 + s2):
                acc[adm] = acc[adm] + c * c3 if adm in acc else c * c3
    return e1._new(acc)


# -- coproduct -------------------------------------------------------------------

class TensorElement(LinearCombination):
    """Element of P* (x) P*; keys are pairs of index sequences."""

    __slots__ = ("q",)

    def __init__(self, field: FieldSpec, terms=(), q: int | None = None):
        object.__setattr__(self, "q", _check_order(field, q))
        super().__init__(field, terms)

    @staticmethod
    def _key(k):
        return (strip_zeros(k[0]), strip_zeros(k[1]))

    def _ctx(self):
        return {"q": self.q}

    def _unit_key(self):
        return ((), ())

    @classmethod
    def from_pair(cls, left: SteenrodElement, right: SteenrodElement) -> TensorElement:
        left._check(right)
        return cls(left.field, [((a, b), ca * cb) for a, ca in left.terms.items()
                                for b, cb in right.terms.items()], left.q)

    def normalize(self) -> TensorElement:
        q, p = self.q, self.field.p
        out = []
        for (a, b), c in self.terms.items():
            for a2, ca in _normal_form(q, p, a):
                for b2, cb in _normal_form(q, p, b):
                    out.append(((a2, b2), c * (ca * cb)))
        return self._new(out)

    def __mul__(self, other):
        if isinstance(other, (int, FieldElement)):
            return self.scale(other)
        if not isinstance(other, TensorElement):
            return NotImplemented
        self._check(other)
        raw = [((a1 + a2, b1 + b2), c1 * c2) for (a1, b1), c1 in self.terms.items()
               for (a2, b2), c2 in other.terms.items()]
        return self._new(raw).normalize()

    def swap(self) -> TensorElement:
        return self._new({(b, a): c for (a, b), c in self.terms.items()})

    def sorted_terms(self):
        def key(kv):
            (a, b), _ = kv
            return (sum(a) + sum(b), sum(a) * -1, right_lex_key(a), right_lex_key(b))
        return sorted(self.terms.items(), key=key)

    def __str__(self):
        def side(s):
            return format_sequence(s, self.q) or "1"
        return join_terms(format_scaled(c, side(a) + TENSOR + side(b), " ")
                          for (a, b), c in self.sorted_terms())

    def to_json(self):
        return [{"coeff": str(c), "left": list(a), "right": list(b)} for (a, b), c in self.sorted_terms()]


def coproduct(e: SteenrodElement) -> TensorElement:
    """Algebra-map extension of P^k -> sum_{i+j=k} P^i (x) P^j, normalized."""
    q, p = e.q, e.field.p
    acc: dict = {}
    for seq, c in e.terms.items():
        for right in itertools.product(*(range(i + 1) for i in seq)):
            left = strip_zeros(i - j for i, j in zip(seq, right))
            right = strip_zeros(right)
            for a, ca in _normal_form(q, p, left):
                for b, cb in _normal_form(q, p, right):
                    k = (a, b)
                    v = c * (ca * cb)
                    acc[k] = acc[k] + v if k in acc else v
    return TensorElement(e.field, acc, q)


def counit(e: SteenrodElement) -> FieldElement:
    return e.coefficient(())

"""Sparse finite linear combinations over a FieldSpec, and exact linear algebra."""
from __future__ import annotations

from .errors import FieldMismatch
from .galois import FieldElement, FieldSpec


class LinearCombination:
    """Immutable map ``basis key -> nonzero FieldElement``.

    Subclasses fix the meaning of keys, canonicalize them in ``_key`` and
    carry extra context (e.g. the order q of the operations) via ``_ctx``.
    """

    __slots__ = ("field", "terms")

    def __init__(self, field: FieldSpec, terms=()):
        items = terms.items() if hasattr(terms, "items") else terms
        acc: dict = {}
        add = field.add_codes
        for k, c in items:
            if isinstance(c, FieldElement):
                if c.spec is not field and c.spec != field:
                    raise FieldMismatch(f"coefficient in F_{c.spec}, expected F_{field}")
                code = c.code
            else:
                code = field.element(c).code
            if not code:
                continue
            k = self._key(k)
            acc[k] = add(acc[k], code) if k in acc else code
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "terms", {k: FieldElement(field, v) for k, v in acc.items() if v})

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    # hooks ------------------------------------------------------------------

    @staticmethod
    def _key(k):
        return k

    def _ctx(self) -> dict:
        return {}

    def _new(self, terms):
        return type(self)(self.field, terms, **self._ctx())

    def _check(self, other):
        if type(other) is not type(self):
            raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")
        if other.field != self.field or other._ctx() != self._ctx():
            raise FieldMismatch(f"{type(self).__name__} over different fields")

    # vector space structure -------------------------------------------------

    @classmethod
    def zero_like(cls, other):
        return other._new({})

    def __iter__(self):
        return iter(self.terms.items())

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, key) -> FieldElement:
        return self.terms.get(self._key(key), self.field.zero)

    def __add__(self, other):
        if isinstance(other, (int, FieldElement)):
            return self + self.scalar(other)
        self._check(other)
        return self._new(list(self.terms.items()) + list(other.terms.items()))

    __radd__ = __add__

    def __neg__(self):
        return self._new({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, FieldElement)):
            return self + (-self.field.element(other))
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "LinearCombination":
        c = self.field.element(c)
        if not c:
            return self._new({})
        return self._new({k: v * c for k, v in self.terms.items()})

    def scalar(self, c):
        """The scalar c times the unit (subclasses with a unit override ``_unit_key``)."""
        return self._new({self._unit_key(): c})

    def _unit_key(self):
        raise TypeError(f"{type(self).__name__} has no unit")

    def __eq__(self, other):
        if isinstance(other, (int, FieldElement)):
            return self == self.scalar(other)
        if type(other) is not type(self):
            return NotImplemented
        return self.field == other.field and self._ctx() == other._ctx() and self.terms == other.terms

    def __hash__(self):
        return hash((type(self).__name__, self.field, frozenset(self.terms.items())))

    def __repr__(self):
        return f"{type(self).__name__}({self})"


def rank(rows, field: FieldSpec) -> int:
    """Rank of a matrix (list of rows of FieldElement or int) by Gaussian elimination."""
    m = [[field.element(x).code for x in row] for row in rows]
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = field.inv_code(m[r][c])
        m[r] = [field.mul_codes(inv, x) for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = field.neg_code(m[i][c])
                m[i] = [field.add_codes(x, field.mul_codes(f, y)) for x, y in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r

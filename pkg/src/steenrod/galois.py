"""Exact arithmetic in the Galois field F_q, q = p**nu.

Elements are stored in the polynomial basis over F_p, i.e. as residues of
F_p[t] modulo a monic irreducible ``modulus`` of degree ``nu``.  Internally an
element is an integer *code* whose base-p digits are its coefficients
(lowest degree first), so the prime subfield is exactly ``0 <= code < p``.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from functools import cached_property, lru_cache

from .errors import DivisionByZero, FieldLiteralError, FieldMismatch, NonPrime, Reducible

# fields up to this size get full addition/multiplication tables
_TABLE_LIMIT = 256


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


# -- polynomials over F_p as coefficient lists, low to high -----------------

def _trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def _polymod(a, m, p):
    """Remainder of a modulo the monic polynomial m over F_p."""
    a = _trim(x % p for x in a)
    dm = len(m) - 1
    while len(a) - 1 >= dm:
        lead = a[-1]
        shift = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - lead * mi) % p
        a = _trim(a)
    return a


def is_irreducible(modulus, p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    m = _trim(x % p for x in modulus)
    n = len(m) - 1
    if n < 1 or m[-1] != 1:
        return False
    for d in range(1, n // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not _polymod(m, list(low) + [1], p):
                return False
    return True


def default_modulus(p: int, nu: int) -> tuple[int, ...]:
    """Lexicographically least monic irreducible of degree nu (on c0, c1, ...)."""
    for low in itertools.product(range(p), repeat=nu):
        cand = list(low) + [1]
        if is_irreducible(cand, p):
            return tuple(cand)
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


@dataclass(frozen=True)
class FieldSpec:
    """The field F_q, q = p**nu, presented as F_p[t]/(modulus).

    For ``nu == 1`` the modulus is empty and arithmetic is plain residue
    arithmetic modulo p.
    """

    p: int
    nu: int = 1
    modulus: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if not is_prime(self.p):
            raise NonPrime(f"{self.p} is not prime")
        if self.nu < 1:
            raise ValueError("nu must be positive")
        if self.nu == 1:
            object.__setattr__(self, "modulus", ())
            return
        if not self.modulus:
            object.__setattr__(self, "modulus", default_modulus(self.p, self.nu))
            return
        m = tuple(int(c) % self.p for c in self.modulus)
        if len(m) != self.nu + 1 or m[-1] != 1:
            raise Reducible(f"modulus {list(self.modulus)} is not monic of degree {self.nu}")
        if not is_irreducible(m, self.p):
            raise Reducible(f"modulus {list(self.modulus)} is reducible over F_{self.p}")
        object.__setattr__(self, "modulus", m)

    @property
    def q(self) -> int:
        return self.p ** self.nu

    @property
    def is_prime_field(self) -> bool:
        return self.nu == 1

    def __str__(self):
        return str(self.p) if self.nu == 1 else f"{self.p}^{self.nu}"

    def contains_order(self, order: int) -> bool:
        """True iff F_order is a subfield of this field."""
        k = 0
        o = order
        while o > 1 and o % self.p == 0:
            o //= self.p
            k += 1
        return o == 1 and k >= 1 and self.nu % k == 0

    # -- construction of elements --------------------------------------------

    def __call__(self, value) -> FieldElement:
        return self.element(value)

    def element(self, value) -> FieldElement:
        if isinstance(value, FieldElement):
            if value.spec != self:
                raise FieldMismatch(f"element of F_{value.spec} used in F_{self}")
            return value
        if isinstance(value, int):
            return FieldElement(self, value % self.p)
        coeffs = list(value)
        if len(coeffs) > self.nu:
            coeffs = _polymod(coeffs, self.modulus, self.p) if self.nu > 1 else [sum(coeffs) % self.p]
        return FieldElement(self, self._encode(coeffs))

    def from_code(self, code: int) -> FieldElement:
        return FieldElement(self, code)

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    @property
    def gen(self) -> FieldElement:
        """The class of t; only meaningful for proper extensions."""
        if self.nu == 1:
            raise FieldLiteralError(f"F_{self.p} is a prime field; 't' is not defined")
        return FieldElement(self, self.p)

    def elements(self):
        return [FieldElement(self, c) for c in range(self.q)]

    # -- code arithmetic -----------------------------------------------------

    def _encode(self, coeffs) -> int:
        code = 0
        for c in reversed(list(coeffs)):
            code = code * self.p + (c % self.p)
        return code

    def _decode(self, code: int) -> list[int]:
        out = []
        for _ in range(self.nu):
            code, r = divmod(code, self.p)
            out.append(r)
        return out

    def _add_slow(self, a, b):
        return self._encode(x + y for x, y in zip(self._decode(a), self._decode(b)))

    def _mul_slow(self, a, b):
        x, y = self._decode(a), self._decode(b)
        prod = [0] * (2 * self.nu - 1)
        for i, xi in enumerate(x):
            if xi:
                for j, yj in enumerate(y):
                    prod[i + j] += xi * yj
        return self._encode(_polymod(prod, self.modulus, self.p))

    @cached_property
    def _tables(self):
        q = self.q
        add = [[self._add_slow(a, b) for b in range(q)] for a in range(q)]
        mul = [[0] * q for _ in range(q)]
        for a in range(1, q):
            for b in range(a, q):
                mul[a][b] = mul[b][a] = self._mul_slow(a, b)
        inv = [0] * q
        for a in range(1, q):
            inv[a] = mul[a].index(1)
        return add, mul, inv

    def add_codes(self, a: int, b: int) -> int:
        if self.nu == 1:
            return (a + b) % self.p
        if self.q <= _TABLE_LIMIT:
            return self._tables[0][a][b]
        return self._add_slow(a, b)

    def neg_code(self, a: int) -> int:
        if self.nu == 1:
            return -a % self.p
        return self._encode(-c for c in self._decode(a))

    def mul_codes(self, a: int, b: int) -> int:
        if self.nu == 1:
            return a * b % self.p
        if self.q <= _TABLE_LIMIT:
            return self._tables[1][a][b]
        return self._mul_slow(a, b)

    def inv_code(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        if self.nu == 1:
            return pow(a, -1, self.p)
        if self.q <= _TABLE_LIMIT:
            return self._tables[2][a]
        return self.pow_code(a, self.q - 2)

    def pow_code(self, a: int, n: int) -> int:
        if n < 0:
            a, n = self.inv_code(a), -n
        result = 1
        while n:
            if n & 1:
                result = self.mul_codes(result, a)
            a = self.mul_codes(a, a)
            n >>= 1
        return result


class FieldElement:
    """An element of F_q; immutable, compares equal to integers via the prime subfield."""

    __slots__ = ("spec", "code")

    def __init__(self, spec: FieldSpec, code: int):
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "code", code)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    def _other(self, other):
        if isinstance(other, FieldElement):
            if other.spec is not self.spec and other.spec != self.spec:
                raise FieldMismatch(f"F_{self.spec} and F_{other.spec}")
            return other.code
        if isinstance(other, int):
            return other % self.spec.p
        return None

    @property
    def coeffs(self) -> list[int]:
        return self.spec._decode(self.code)

    @property
    def in_prime_field(self) -> bool:
        return self.code < self.spec.p

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.spec, self.spec.add_codes(self.code, o))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.spec, self.spec.neg_code(self.code))

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.spec, self.spec.add_codes(self.code, self.spec.neg_code(o)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.spec, self.spec.mul_codes(self.code, o))

    __rmul__ = __mul__

    def inverse(self) -> FieldElement:
        return FieldElement(self.spec, self.spec.inv_code(self.code))

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.spec, self.spec.mul_codes(self.code, self.spec.inv_code(o)))

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int):
        if self.code == 0:
            if n < 0:
                raise DivisionByZero("zero to a negative power")
            return FieldElement(self.spec, 1 if n == 0 else 0)
        return FieldElement(self.spec, self.spec.pow_code(self.code, n))

    def frobenius(self, k: int = 1) -> FieldElement:
        """a ** (p ** k)."""
        k %= self.spec.nu
        return self ** (self.spec.p ** k)

    def __bool__(self):
        return self.code != 0

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.spec == other.spec and self.code == other.code
        if isinstance(other, int):
            return self.code == other % self.spec.p
        return NotImplemented

    def __hash__(self):
        return hash((self.spec, self.code))

    def __repr__(self):
        return f"FieldElement(F_{self.spec}, {self})"

    def __str__(self):
        return format_coefficient(self)


def format_coefficient(a: FieldElement) -> str:
    """Canonical text: least residue for F_p, ``a0+a1*t+...`` for extensions."""
    if a.spec.nu == 1:
        return str(a.code)
    parts = []
    for k, c in enumerate(a.coeffs):
        if not c:
            continue
        if k == 0:
            parts.append(str(c))
        else:
            mono = "t" if k == 1 else f"t^{k}"
            parts.append(mono if c == 1 else f"{c}*{mono}")
    return "+".join(parts) or "0"


def field_new(p: int, nu: int = 1, modulus=None) -> FieldSpec:
    return FieldSpec(p, nu, tuple(modulus) if modulus else ())


_FIELD_RE = re.compile(r"^\s*(\d+)\s*(?:\^\s*(\d+))?\s*$")


def parse_field(text: str, modulus: str | None = None) -> FieldSpec:
    """Parse ``"p^nu"`` (or a bare prime power such as ``"4"``)."""
    m = _FIELD_RE.match(text)
    if not m:
        raise FieldLiteralError(f"bad field specification {text!r}; expected p^nu")
    base, exp = int(m.group(1)), int(m.group(2) or 1)
    if exp < 1:
        raise FieldLiteralError("field exponent must be positive")
    if base < 2:
        raise NonPrime(f"{base} is not prime")
    if not is_prime(base):
        # accept a bare prime power like "9"
        for p in range(2, base + 1):
            if base % p == 0:
                break
        k, b = 0, base
        while b % p == 0 and b > 1:
            b //= p
            k += 1
        if b != 1 or m.group(2):
            raise NonPrime(f"{base} is not prime")
        base, exp = p, k
    mod = None
    if modulus:
        try:
            mod = [int(c) for c in modulus.split(",")]
        except ValueError:
            raise FieldLiteralError(f"bad modulus {modulus!r}") from None
    return field_new(base, exp, mod)


def frobenius(a: FieldElement, k: int) -> FieldElement:
    return a.frobenius(k)


@lru_cache(maxsize=None)
def binom_mod_p(n: int, k: int, p: int) -> int:
    """C(n, k) mod p by Lucas' theorem; zero outside 0 <= k <= n."""
    if k < 0 or n < 0 or k > n:
        return 0
    result = 1
    while n or k:
        n, ni = divmod(n, p)
        k, ki = divmod(k, p)
        if ki > ni:
            return 0
        # small digits: exact binomial then reduce
        num = den = 1
        for i in range(ki):
            num = num * (ni - i) % p
            den = den * (i + 1) % p
        result = result * num * pow(den, -1, p) % p
    return result

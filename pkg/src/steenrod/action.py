"""The total Steenrod operation on F_q[V] and its homogeneous components.

``P(xi)`` is the ring homomorphism with ``z -> z + z**q * xi`` on every linear
form; ``P^i(f)`` is the coefficient of ``xi**i``.  Everything here works
straight from that definition, which makes this module the oracle that every
relation in the algebra is checked against.

The *order* ``q`` of the operations defaults to the size of the coefficient
field, but any subfield order is allowed: P*(F_p) (x) F_q acts on F_q[V] with
``q = p``.
"""
from __future__ import annotations

from functools import lru_cache

from .errors import FieldMismatch
from .galois import FieldElement, FieldSpec, binom_mod_p
from .polynomials import Polynomial, elementary_symmetric, trim


def _order(field: FieldSpec, q):
    if q is None:
        return field.q
    if not field.contains_order(q):
        raise FieldMismatch(f"F_{q} is not a subfield of F_{field}")
    return q


def compositions(total, bounds):
    """Tuples k with sum k == total and 0 <= k_j <= bounds[j]."""
    if not bounds:
        if total == 0:
            yield ()
        return
    rest = sum(bounds[1:])
    for k in range(max(0, total - rest), min(bounds[0], total) + 1):
        for tail in compositions(total - k, bounds[1:]):
            yield (k,) + tail


@lru_cache(maxsize=200_000)
def _op_on_monomial(q: int, p: int, mono: tuple, i: int):
    """P^i(z^mono) as ((monomial, coefficient mod p), ...)."""
    out = []
    for ks in compositions(i, mono):
        c = 1
        for e, k in zip(mono, ks):
            c = c * binom_mod_p(e, k, p) % p
            if not c:
                break
        if c:
            out.append((tuple(e + (q - 1) * k for e, k in zip(mono, ks)), c))
    return tuple(out)


def steenrod_op(i: int, f: Polynomial, q: int | None = None) -> Polynomial:
    """P^i(f); zero when i exceeds the degree of f."""
    q = _order(f.field, q)
    if i == 0:
        return f
    p = f.field.p
    out = []
    for m, c in f.terms.items():
        if sum(m) < i:
            continue
        for m2, b in _op_on_monomial(q, p, m, i):
            out.append((m2, c * b))
    return f._new(out)


class XiSeries:
    """Polynomial in the formal variable xi; ``coeffs[i]`` multiplies xi**i.

    Trailing zero coefficients are dropped, so the zero series has no
    coefficients.  ``zero`` is the zero of the coefficient ring.
    """

    __slots__ = ("coeffs", "zero")

    def __init__(self, coeffs, zero):
        coeffs = list(coeffs)
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        self.coeffs = tuple(coeffs)
        self.zero = zero

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.zero

    def __add__(self, other):
        n = max(len(self), len(other))
        return XiSeries([self[i] + other[i] for i in range(n)], self.zero)

    def __mul__(self, other):
        if not self.coeffs or not other.coeffs:
            return XiSeries([], self.zero)
        out = [self.zero] * (len(self) + len(other) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = out[i + j] + a * b
        return XiSeries(out, self.zero)

    def __eq__(self, other):
        if not isinstance(other, XiSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    __hash__ = None

    def __repr__(self):
        return f"XiSeries([{', '.join(str(c) for c in self.coeffs)}])"


def total_power(f: Polynomial, q: int | None = None) -> XiSeries:
    """``P(xi)(f)`` as the list [P^0 f, P^1 f, ..., P^{deg f} f]."""
    q = _order(f.field, q)
    p = f.field.p
    zero = f._new({})
    top = max(f.degree, 0)
    buckets: list[list] = [[] for _ in range(top + 1)]
    for m, c in f.terms.items():
        # per-variable expansion of (z + z^q xi)^e, multiplied out
        partial_by_i = {0: [((), c)]}
        for e in m:
            nxt: dict[int, list] = {}
            for i0, lst in partial_by_i.items():
                for k in range(e + 1):
                    b = binom_mod_p(e, k, p)
                    if not b:
                        continue
                    for mono, coeff in lst:
                        nxt.setdefault(i0 + k, []).append((mono + (e + (q - 1) * k,), coeff * b))
            partial_by_i = nxt
        for i, lst in partial_by_i.items():
            buckets[i].extend((trim(mono), coeff) for mono, coeff in lst)
    return XiSeries([f._new(b) for b in buckets], zero)


def apply_basic_monomial(seq, f: Polynomial, q: int | None = None) -> Polynomial:
    """P^{i_1} P^{i_2} ... P^{i_k} (f), innermost operation applied first."""
    for i in reversed(tuple(seq)):
        if not f:
            break
        f = steenrod_op(i, f, q)
    return f


def apply_element(e, f: Polynomial) -> Polynomial:
    """Act on f by a SteenrodElement (any linear combination of basic monomials)."""
    if e.field != f.field:
        raise FieldMismatch("operation and polynomial over different fields")
    result = f._new({})
    for seq, c in e.terms.items():
        result = result + apply_basic_monomial(seq, f, e.q).scale(c)
    return result


def check_cartan(f: Polynomial, g: Polynomial, k: int, q: int | None = None) -> bool:
    lhs = steenrod_op(k, f * g, q)
    rhs = f._new({})
    for i in range(k + 1):
        rhs = rhs + steenrod_op(i, f, q) * steenrod_op(k - i, g, q)
    return lhs == rhs


def wu_elementary(i: int, n: int, field: FieldSpec, q: int | None = None) -> Polynomial:
    """e_n * e_i(x_1^(q-1), ..., x_n^(q-1)), checked against P^i(e_n)."""
    q = _order(field, q)
    en = elementary_symmetric(n, n, field)
    ei = elementary_symmetric(i, n, field)
    ei_powered = Polynomial(field, {tuple((q - 1) * e for e in m): c for m, c in ei.terms.items()})
    formula = en * ei_powered
    if formula != steenrod_op(i, en, q):
        raise ArithmeticError(f"Wu formula failed for i={i}, n={n}, q={q}")
    return formula


# -- Bullett-Macdonald identity ------------------------------------------------

class TruncatedSeries:
    """Power series in t over F_q modulo t**order."""

    __slots__ = ("field", "order", "coeffs")

    def __init__(self, field: FieldSpec, order: int, coeffs=()):
        cs = [field.element(c) for c in list(coeffs)[:order]]
        cs += [field.zero] * (order - len(cs))
        self.field, self.order, self.coeffs = field, order, tuple(cs)

    @classmethod
    def monomial(cls, field, order, k, c=1):
        return cls(field, order, [0] * k + [c]) if k < order else cls(field, order)

    def __add__(self, other):
        return TruncatedSeries(self.field, self.order, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return TruncatedSeries(self.field, self.order, [-a for a in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, FieldElement)):
            return TruncatedSeries(self.field, self.order, [a * other for a in self.coeffs])
        out = [self.field.zero] * self.order
        for i, a in enumerate(self.coeffs):
            if a:
                for j in range(self.order - i):
                    b = other.coeffs[j]
                    if b:
                        out[i + j] = out[i + j] + a * b
        return TruncatedSeries(self.field, self.order, out)

    def __pow__(self, n: int):
        result = TruncatedSeries.monomial(self.field, self.order, 0)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, TruncatedSeries) and self.coeffs == other.coeffs

    __hash__ = None


def _total_power_over_series(g: dict, lam: TruncatedSeries, q: int, p: int) -> dict:
    """Apply P(lam) to a polynomial whose coefficients are truncated series."""
    powers = [TruncatedSeries.monomial(lam.field, lam.order, 0)]
    out: dict = {}
    for m, c in g.items():
        bounds = list(m)
        for total in range(sum(m) + 1):
            while len(powers) <= total:
                powers.append(powers[-1] * lam)
            for ks in compositions(total, bounds):
                b = 1
                for e, k in zip(m, ks):
                    b = b * binom_mod_p(e, k, p) % p
                if not b:
                    continue
                nm = tuple(e + (q - 1) * k for e, k in zip(m, ks))
                term = c * powers[total] * b
                out[nm] = out[nm] + term if nm in out else term
    return {m: c for m, c in out.items() if c}


def check_bullett_macdonald(n_vars: int, truncation_order: int, field: FieldSpec,
                            q: int | None = None, polys=()) -> bool:
    """Check P(s) o P(1) == P(u) o P(t^q) with u = (1-t)^(q-1), s = t*u.

    Checked on every variable z_1..z_n, which suffices by multiplicativity;
    extra Polynomials in ``polys`` are checked as well.
    """
    q = _order(field, q)
    N = truncation_order
    if N <= 0:
        return True
    one = TruncatedSeries.monomial(field, N, 0)
    t = TruncatedSeries.monomial(field, N, 1)
    u = (one - t) ** (q - 1)
    s = t * u
    tq = t ** q
    inputs = [{(0,) * i + (1,): one} for i in range(n_vars)]
    for f in polys:
        inputs.append({m: one * c for m, c in f.terms.items()})
    p = field.p
    for g in inputs:
        lhs = _total_power_over_series(_total_power_over_series(g, one, q, p), s, q, p)
        rhs = _total_power_over_series(_total_power_over_series(g, tq, q, p), u, q, p)
        if lhs != rhs:
            return False
    return True

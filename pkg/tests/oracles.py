"""Independent reference computations used by the test-suite.

Each oracle recomputes a quantity from first principles, avoiding the code
path it is used to check.
"""
from __future__ import annotations

import itertools
import math

from steenrod.galois import FieldSpec
from steenrod.polynomials import Polynomial


def naive_total_power(f: Polynomial, q: int) -> list[Polynomial]:
    """[P^0 f, P^1 f, ...] by substituting z -> z + z^q * xi with xi an extra variable."""
    F = f.field
    n = max(f.n_vars, 1)
    xi = Polynomial.variable(F, n)
    images = [Polynomial.variable(F, i) + Polynomial.variable(F, i) ** q * xi for i in range(n)]
    total = Polynomial(F, {})
    for mono, c in f.terms.items():
        term = Polynomial.constant(F, c)
        for i, e in enumerate(mono):
            term = term * images[i] ** e
        total = total + term
    top = max((m[n] if len(m) > n else 0 for m in total.terms), default=0)
    out = []
    for k in range(top + 1):
        out.append(Polynomial(F, {m[:n]: c for m, c in total.terms.items()
                                  if (m[n] if len(m) > n else 0) == k}))
    return out


def naive_op(i: int, f: Polynomial, q: int) -> Polynomial:
    coeffs = naive_total_power(f, q)
    return coeffs[i] if i < len(coeffs) else Polynomial(f.field, {})


def naive_apply(seq, f: Polynomial, q: int) -> Polynomial:
    for i in reversed(seq):
        f = naive_op(i, f, q)
    return f


def all_monomials(n_vars: int, max_degree: int):
    for d in range(max_degree + 1):
        for m in itertools.product(range(d + 1), repeat=n_vars):
            if sum(m) == d:
                yield m


def brute_admissible(degree: int, q: int):
    """Admissible sequences of degree (q-1)*sum, by exhaustive search."""
    if degree % (q - 1):
        return set()
    total = degree // (q - 1)
    out = set()

    def grow(prefix, left):
        if left == 0:
            out.add(tuple(prefix))
            return
        for i in range(1, left + 1):
            if not prefix or prefix[-1] >= q * i:
                grow(prefix + [i], left - i)

    grow([], total)
    return out


def pairing_oracle(seq, K, field: FieldSpec, q: int):
    """<P^seq | xi^K> as a coefficient of P^seq(u_1 ... u_n).

    n = sum K; the exponent on u_i is q^(a_i) where k_s of the a_i equal s.
    """
    a = [s for s, k in enumerate(K, start=1) for _ in range(k)]
    n = len(a)
    if n == 0:
        return field.one if not seq else field.zero
    u = Polynomial.monomial(field, (1,) * n)
    image = naive_apply(seq, u, q)
    return image.coefficient(tuple(q ** s for s in a))


def lucas_free_binom(n: int, k: int, p: int) -> int:
    return math.comb(n, k) % p if 0 <= k <= n else 0

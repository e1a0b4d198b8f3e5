"""The embedding theta: P*(F_q) -> P*(F_p) (x) F_q and its dual theta_*.

theta_* is the algebra map on P_*(F_p) (x) F_q with xi_k(p) -> xi_m(q) when
k = m * nu and xi_k(p) -> 0 otherwise.  theta is its transpose: in Milnor
bases, theta(P_q(I)) = sum_K <theta_*(xi^K(p)) : xi^I(q)> P_p(K).

Elements of P_*(F_p) (x) F_q and P*(F_p) (x) F_q are the ordinary DualElement,
MilnorElement and SteenrodElement types with coefficient field F_q and
operation order ``q = p``.
"""
from __future__ import annotations

from functools import lru_cache

from .algebra import SteenrodElement, admissible_of_degree
from .galois import FieldSpec
from .linear import rank
from .milnor import (
    DualElement,
    MilnorElement,
    admissible_to_milnor,
    milnor_basis,
    milnor_to_admissible,
)


def extended_dual(field: FieldSpec, terms) -> DualElement:
    """An element of P_*(F_p) (x) F_q: xi-monomials over p, coefficients in F_q."""
    return DualElement(field, terms, q=field.p)


def theta_star(x: DualElement) -> DualElement:
    F = x.field
    if x.q != F.p:
        raise ValueError("theta_* acts on P_*(F_p) (x) F_q (operation order must be p)")
    nu = F.nu
    images = {}

    def image(k):
        if k not in images:
            images[k] = DualElement.xi(F, k // nu) if k % nu == 0 else DualElement(F, {})
        return images[k]

    result = DualElement(F, {})
    for K, c in x.terms.items():
        term = DualElement(F, {(): c})
        for k, e in enumerate(K, start=1):
            if e:
                term = term * image(k) ** e
        result = result + term
    return result


@lru_cache(maxsize=None)
def theta_star_matrix(degree: int, field: FieldSpec):
    """(source basis over p, target basis over q, matrix) of theta_* in one degree."""
    src = milnor_basis(degree, field.p)
    tgt = milnor_basis(degree, field.q)
    rows = []
    for K in src:
        img = theta_star(extended_dual(field, {K: 1}))
        rows.append(tuple(img.coefficient(I) for I in tgt))
    return src, tgt, tuple(rows)


def theta_milnor(m: MilnorElement) -> MilnorElement:
    """theta on Milnor-basis input; the image is in the Milnor basis over p."""
    F = m.field
    if m.q != F.q:
        raise ValueError("theta is defined on P*(F_q) itself")
    out = []
    for I, c in m.terms.items():
        src, tgt, rows = theta_star_matrix(sum(i * (F.q ** s - 1) for s, i in enumerate(I, 1)), F)
        col = tgt.index(I)
        out.extend((K, c * row[col]) for K, row in zip(src, rows) if row[col])
    return MilnorElement(F, out, q=F.p)


def theta(e) -> MilnorElement:
    """Image of a SteenrodElement (or MilnorElement) of P*(F_q) in P*(F_p) (x) F_q."""
    m = e if isinstance(e, MilnorElement) else admissible_to_milnor(e)
    return theta_milnor(m)


def theta_admissible(e) -> SteenrodElement:
    """theta(e) written in the admissible basis of P*(F_p) (x) F_q."""
    return milnor_to_admissible(theta(e))


def theta_matrix(degree: int, field: FieldSpec):
    """Rows: theta of each admissible basis element of P*(F_q) in the given degree,
    written in the admissible basis of P*(F_p) (x) F_q."""
    src = admissible_of_degree(degree, field.q)
    tgt = admissible_of_degree(degree, field.p)
    rows = []
    for J in src:
        img = theta_admissible(SteenrodElement.basic(field, J))
        rows.append([img.coefficient(K) for K in tgt])
    return src, tgt, rows


def theta_rank(degree: int, field: FieldSpec) -> tuple[int, int]:
    """(rank of theta in this degree, dimension of the source)."""
    src, _, rows = theta_matrix(degree, field)
    return rank(rows, field), len(src)

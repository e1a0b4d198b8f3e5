import random

import pytest

from steenrod.algebra import SteenrodElement, admissible_of_degree, coproduct, delta
from steenrod.algebra import TensorElement
from steenrod.galois import field_new
from steenrod.milnor import (
    DualElement,
    MilnorElement,
    admissible_to_milnor,
    dual_coproduct,
    milnor_basis,
    milnor_degree,
    milnor_index,
    milnor_primitive,
    milnor_product,
    milnor_to_admissible,
    pair,
    pair_tensor,
    pairing,
    pairing_matrix,
    profile,
)

from oracles import pairing_oracle

F2, F3, F4 = field_new(2), field_new(3), field_new(2, 2)


def test_profile_round_trip():
    assert profile((0, 1), 2) == (2, 1)
    assert profile((1, 1), 3) == (4, 1)
    for q in (2, 3):
        for d in range(0, 20):
            for I in milnor_basis(d, q):
                J = profile(I, q)
                assert milnor_index(J, q) == I
                assert (q - 1) * sum(J) == milnor_degree(I, q) == d
            assert sorted(profile(I, q) for I in milnor_basis(d, q)) == \
                sorted(admissible_of_degree(d, q))


@pytest.mark.parametrize("F,top", [(F2, 9), (F3, 12), (F4, 9)], ids=str)
def test_pairing_against_product_oracle(F, top):
    q = F.q
    for d in range(top + 1):
        for J in admissible_of_degree(d, q):
            for K in milnor_basis(d, q):
                assert pairing(J, K, F) == pairing_oracle(J, K, F, q), (J, K)


@pytest.mark.parametrize("q,top", [(2, 12), (3, 16)])
def test_pairing_matrix_unit_triangular(q, top):
    for d in range(top + 1):
        basis, M = pairing_matrix(d, q, q)
        n = len(basis)
        for a in range(n):
            assert M[a][a] == 1
            assert all(M[a][b] == 0 for b in range(a + 1, n))


@pytest.mark.parametrize("F,top", [(F2, 8), (F3, 12)], ids=str)
def test_milnor_basis_is_dual(F, top):
    # <P(I) | xi^K> = delta_{I,K}, checked against the product oracle
    for d in range(top + 1):
        for I in milnor_basis(d, F.q):
            e = milnor_to_admissible(MilnorElement.basis_element(F, I))
            for K in milnor_basis(d, F.q):
                value = sum((c * pairing_oracle(J, K, F, F.q) for J, c in e.terms.items()), F.zero)
                assert value == (F.one if I == K else F.zero)


@pytest.mark.parametrize("F", [F2, F3, F4], ids=str)
def test_basis_change_round_trip(F):
    for d in range(0, 13):
        for J in admissible_of_degree(d, F.q):
            e = SteenrodElement.basic(F, J)
            assert milnor_to_admissible(admissible_to_milnor(e)) == e


def random_element(F, degree, rng):
    seqs = admissible_of_degree(degree, F.q)
    return SteenrodElement(F, {J: F.from_code(rng.randrange(F.q)) for J in seqs})


@pytest.mark.parametrize("F", [F2, F3, F4], ids=str)
def test_hopf_duality(F):
    rng = random.Random(F.q)
    q = F.q
    step = q - 1
    for _ in range(200):
        d1 = step * rng.randint(0, 8 // step + 1)
        d2 = step * rng.randint(0, 8 // step + 1)
        e1, e2 = random_element(F, d1, rng), random_element(F, d2, rng)
        K = rng.choice(milnor_basis(d1 + d2, q))
        x = DualElement.monomial(F, K)
        assert pair(e1 * e2, x) == pair_tensor(TensorElement.from_pair(e1, e2), dual_coproduct(x))


@pytest.mark.parametrize("F", [F2, F3], ids=str)
def test_coproduct_dual_to_product(F):
    # <nabla(e) | xi^A (x) xi^B> = <e | xi^A xi^B>
    rng = random.Random(7)
    for _ in range(60):
        d = (F.q - 1) * rng.randint(0, 6)
        e = random_element(F, d, rng)
        t = coproduct(e)
        for da in range(0, d + 1, F.q - 1):
            for A in milnor_basis(da, F.q):
                for B in milnor_basis(d - da, F.q):
                    lhs = pair_tensor(t, _dual_pair(F, A, B))
                    assert lhs == pair(e, DualElement.monomial(F, A) * DualElement.monomial(F, B))


def _dual_pair(F, A, B):
    from steenrod.milnor import DualTensor
    return DualTensor(F, {(A, B): 1})


def test_dual_coproduct_printing():
    assert str(dual_coproduct(DualElement.xi(F2, 2))) == "xi_2 ⊗ 1 + xi_1^2 ⊗ xi_1 + 1 ⊗ xi_2"
    assert str(DualElement.monomial(F3, (2, 1))) == "xi_1^2*xi_2"


@pytest.mark.parametrize("q", [2, 3])
@pytest.mark.parametrize("k", [1, 2, 3])
def test_primitives(q, k):
    F = field_new(q)
    prim = milnor_primitive(k, F)
    # commutator recursion, recomputed here
    current = SteenrodElement.generator(F, 1)
    for j in range(2, k + 1):
        g = SteenrodElement.generator(F, q ** (j - 1))
        current = g * current - current * g
    assert prim == current
    one = SteenrodElement.unit(F)
    assert coproduct(prim) == TensorElement.from_pair(prim, one) + TensorElement.from_pair(one, prim)
    assert pair(prim, DualElement.xi(F, k)) == F.one
    assert admissible_to_milnor(prim) == MilnorElement.basis_element(F, delta(k))


def test_primitive_examples():
    assert str(milnor_primitive(2, F2)) == "Sq^3 + Sq^2 Sq^1"
    assert str(milnor_primitive(2, F3)) == "2 P^4 + P^3 P^1"


@pytest.mark.parametrize("F", [F2, F3], ids=str)
def test_milnor_product(F):
    rng = random.Random(11)
    for _ in range(30):
        a = random_element(F, (F.q - 1) * rng.randint(0, 5), rng)
        b = random_element(F, (F.q - 1) * rng.randint(0, 5), rng)
        ma, mb = admissible_to_milnor(a), admissible_to_milnor(b)
        assert milnor_product(ma, mb) == admissible_to_milnor(a * b)
    assert str(MilnorElement.basis_element(F2, (0, 1))) == "P(0,1)"

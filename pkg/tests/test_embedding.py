import random

import pytest

from steenrod.action import apply_element
from steenrod.algebra import SteenrodElement, TensorElement, admissible_of_degree, coproduct
from steenrod.embedding import extended_dual, theta, theta_admissible, theta_rank, theta_star
from steenrod.galois import field_new
from steenrod.milnor import DualElement, DualTensor, MilnorElement, dual_coproduct, milnor_basis
from steenrod.polynomials import Polynomial

from oracles import all_monomials

EXTENSIONS = [field_new(2, 2), field_new(3, 2), field_new(2, 3)]


@pytest.mark.parametrize("F", EXTENSIONS[:2], ids=str)
def test_theta_is_injective(F):
    for d in range(0, 25):
        r, n = theta_rank(d, F)
        assert r == n


@pytest.mark.parametrize("F", EXTENSIONS, ids=str)
def test_generator_rule(F):
    for k in range(1, 5):
        image = theta_star(extended_dual(F, {(0,) * (k - 1) + (1,): 1}))
        if k % F.nu == 0:
            assert image == DualElement.xi(F, k // F.nu)
        else:
            assert image.is_zero()


def test_first_generator():
    F = field_new(2, 2)
    assert str(theta(SteenrodElement.generator(F, 1))) == "P(0,1)"
    assert str(theta_admissible(SteenrodElement.generator(F, 1))) == "Sq^3 + Sq^2 Sq^1"


def _random(F, degree, rng):
    return SteenrodElement(F, {J: F.from_code(rng.randrange(F.q)) for J in admissible_of_degree(degree, F.q)})


@pytest.mark.parametrize("F", EXTENSIONS[:2], ids=str)
def test_action_oracle(F):
    # theta(e) acting through the operations of order p equals e acting with order q
    rng = random.Random(F.q)
    monos = [Polynomial.monomial(F, m) for m in all_monomials(2, 3)]
    coeff = F.gen
    for _ in range(12):
        e = _random(F, (F.q - 1) * rng.randint(0, 3), rng)
        image = theta_admissible(e)
        assert image.q == F.p
        for m in monos:
            f = m * coeff + Polynomial.variable(F, 0)
            assert apply_element(image, f) == apply_element(e, f)


@pytest.mark.parametrize("F", EXTENSIONS[:2], ids=str)
def test_theta_is_an_algebra_and_coalgebra_map(F):
    rng = random.Random(3)
    step = F.q - 1
    for _ in range(15):
        a = _random(F, step * rng.randint(0, 3), rng)
        b = _random(F, step * rng.randint(0, 3), rng)
        assert theta_admissible(a * b) == theta_admissible(a) * theta_admissible(b)
        left = TensorElement(F, {}, q=F.p)
        for (x, y), c in coproduct(a).terms.items():
            tx = theta_admissible(SteenrodElement.basic(F, x))
            ty = theta_admissible(SteenrodElement.basic(F, y))
            left = left + TensorElement.from_pair(tx, ty).scale(c)
        assert coproduct(theta_admissible(a)) == left


def _theta_tensor(t: DualTensor) -> DualTensor:
    F = t.field
    out = DualTensor(F, {}, q=F.q)
    for (a, b), c in t.terms.items():
        ta = theta_star(extended_dual(F, {a: 1}))
        tb = theta_star(extended_dual(F, {b: 1}))
        for ka, ca in ta.terms.items():
            for kb, cb in tb.terms.items():
                out = out + DualTensor(F, {(ka, kb): c * ca * cb}, q=F.q)
    return out


@pytest.mark.parametrize("F", EXTENSIONS[:2], ids=str)
def test_theta_star_is_a_hopf_map(F):
    p = F.p
    for d in range(0, 13):
        for K in milnor_basis(d, p):
            x = extended_dual(F, {K: 1})
            assert dual_coproduct(theta_star(x)) == _theta_tensor(dual_coproduct(x))
            for L in milnor_basis(max(d - (p - 1), 0), p):
                y = extended_dual(F, {L: 1})
                assert theta_star(x * y) == theta_star(x) * theta_star(y)


def test_theta_rejects_wrong_orders():
    F = field_new(2, 2)
    with pytest.raises(ValueError):
        theta_star(DualElement.xi(F, 1))
    with pytest.raises(ValueError):
        theta(MilnorElement.basis_element(F, (1,), q=2))

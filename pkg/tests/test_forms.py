import itertools
import random

import pytest

from steenrod.forms import DifferentialForm, bockstein, form_mul, total_power_on_forms
from steenrod.galois import field_new
from steenrod.polynomials import Polynomial

from oracles import all_monomials

F2, F3, F5 = field_new(2), field_new(3), field_new(5)


def basis_forms(F, n_vars, max_degree):
    for k in range(n_vars + 1):
        for dz in itertools.combinations(range(n_vars), k):
            for m in all_monomials(n_vars, max_degree - k):
                yield DifferentialForm.term(F, m, dz)


def test_generators():
    for F in (F2, F3):
        for i in range(3):
            assert bockstein(DifferentialForm.dz(F, i)) == DifferentialForm.variable(F, i)
            assert bockstein(DifferentialForm.variable(F, i)).is_zero()


def test_exterior_rules_and_printing():
    dx, dy = DifferentialForm.dz(F3, 0), DifferentialForm.dz(F3, 1)
    assert (dx * dx).is_zero()
    assert dx * dy == -(dy * dx)
    x = DifferentialForm.variable(F3, 0)
    assert str(x * dx * dy) == "x*dx*dy"
    assert str(dy * dx) == "2*dx*dy"
    assert str(bockstein(x * DifferentialForm.dz(F3, 1) * DifferentialForm.dz(F3, 2))) == "x*y*dz + 2*x*z*dy"


@pytest.mark.parametrize("F", [F2, F3, F5], ids=str)
def test_beta_squared_is_zero(F):
    for a in basis_forms(F, 3, 3):
        assert bockstein(bockstein(a)).is_zero()
        assert a.degrees() == bockstein(a).degrees() or bockstein(a).is_zero()


@pytest.mark.parametrize("F", [F2, F3], ids=str)
def test_beta_is_an_odd_derivation(F):
    forms = list(basis_forms(F, 3, 2))
    rng = random.Random(5)
    for _ in range(300):
        a, b = rng.choice(forms), rng.choice(forms)
        (ext,) = a.exterior_degrees()
        sign = -1 if ext % 2 else 1
        assert bockstein(form_mul(a, b)) == bockstein(a) * b + a * bockstein(b) * sign


@pytest.mark.parametrize("F", [F2, F3], ids=str)
def test_total_power_on_forms(F):
    dz = DifferentialForm.dz(F, 2)
    assert total_power_on_forms(dz).coeffs == (dz,)
    x = Polynomial.variable(F, 0)
    series = total_power_on_forms(DifferentialForm.from_polynomial(x) * dz)
    assert series[1] == DifferentialForm.from_polynomial(x ** F.q) * dz
    forms = list(basis_forms(F, 2, 2))
    rng = random.Random(9)
    for _ in range(60):
        a, b = rng.choice(forms), rng.choice(forms)
        assert total_power_on_forms(a * b) == total_power_on_forms(a) * total_power_on_forms(b)


def test_json():
    a = DifferentialForm.term(F3, (1,), (1,), 2)
    assert a.to_json() == [{"coeff": "2", "exps": [1], "dz": [1]}]

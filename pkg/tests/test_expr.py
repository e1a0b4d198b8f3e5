import random

import pytest

from steenrod.errors import ExprSyntaxError, ExprTypeError, FieldLiteralError
from steenrod.expr import (
    Dz,
    Gen,
    Milnor,
    Neg,
    Num,
    Op,
    Power,
    Product,
    Sum,
    Var,
    Xi,
    format_expr,
    parse,
    parse_scalar,
    parse_value,
)
from steenrod.galois import field_new

F2, F3, F4 = field_new(2), field_new(3), field_new(2, 2)


def random_expr(rng, depth, allow_gen, max_var):
    if depth == 0 or rng.random() < 0.3:
        kind = rng.randrange(8 if allow_gen else 7)
        return [
            lambda: Num(rng.randint(0, 12)),
            lambda: Var(rng.randint(0, max_var)),
            lambda: Dz(rng.randint(0, max_var)),
            lambda: Xi(rng.randint(1, 4)),
            lambda: Op(rng.randint(0, 9)),
            lambda: Milnor(tuple(rng.randint(0, 3) for _ in range(rng.randint(0, 3)))),
            lambda: Op(rng.randint(1, 3)),
            lambda: Gen(),
        ][kind]()
    kind = rng.randrange(4)
    sub = lambda: random_expr(rng, depth - 1, allow_gen, max_var)  # noqa: E731
    if kind == 0:
        return Neg(sub())
    if kind == 1:
        return Sum(tuple(sub() for _ in range(rng.randint(2, 3))))
    if kind == 2:
        return Product(tuple(sub() for _ in range(rng.randint(2, 3))))
    return Power(sub(), rng.randint(0, 4))


@pytest.mark.parametrize("field,seed", [(F2, 1), (F3, 2), (F4, 3), (field_new(3, 2), 4)], ids=str)
def test_print_parse_round_trip(field, seed):
    rng = random.Random(seed)
    for _ in range(250):
        e = random_expr(rng, 4, field.nu > 1, rng.choice([2, 5]))
        text = format_expr(e, field.q)
        assert parse(text, field) == e, text


def test_examples():
    assert parse("Sq^2 Sq^1", F2) == Product((Op(2), Op(1)))
    assert parse("P^1 (x*z - y^2)", F3) == Product((Op(1), Sum((Product((Var(0), Var(2))),
                                                                 Neg(Power(Var(1), 2))))))
    assert str(parse_value("P^1 (x*z - y^2)", F3)) == "x^3*z + x*z^3 + y^4"
    assert str(parse_value("Sq^2 Sq^3", F2)) == "Sq^5 + Sq^4 Sq^1"
    assert str(parse_value("P(0,1)", F2)) == "P(0,1)"
    assert str(parse_value("Q(2) + P(3)", F2)) == "P(3) + P(0,1)"
    assert str(parse_value("xi_1^2 * xi_2 + xi_1", F3)) == "xi_1 + xi_1^2*xi_2"
    assert str(parse_value("(1 + t)^2 * z5", F4)) == "t*z5"
    assert parse_scalar("t^2", F4) == F4.gen + 1
    assert parse_value("P^1 P^1 x", F3).is_zero()
    assert str(parse_value("P^2 (x*y)", F3)) == "x^3*y^3"


def test_juxtaposition_applies_right_to_left():
    # Sq^1 Sq^2 applied to x*y equals Sq^1 applied to Sq^2(x*y) = Sq^1(x^2 y^2) = 0
    assert parse_value("Sq^1 Sq^2 (x*y)", F2).is_zero()
    assert str(parse_value("Sq^2 Sq^1 (x*y)", F2)) == "x^4*y + x*y^4"


def test_errors():
    with pytest.raises(ExprSyntaxError) as err:
        parse("Sq^1", F3)
    assert err.value.position == 0
    with pytest.raises(ExprSyntaxError) as err:
        parse("x + * y", F3)
    assert err.value.position == 4
    with pytest.raises(ExprSyntaxError):
        parse("", F3)
    with pytest.raises(ExprSyntaxError):
        parse("x ? y", F3)
    with pytest.raises(ExprSyntaxError):
        parse("P^", F3)
    with pytest.raises(FieldLiteralError):
        parse("t*x", F3)
    with pytest.raises(ExprTypeError):
        parse_value("x + xi_1", F3)
    with pytest.raises(ExprTypeError):
        parse_value("P^1 xi_1", F3)

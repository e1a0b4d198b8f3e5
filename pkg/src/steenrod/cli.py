"""Command line front end.

Every command prints one deterministic line of text (``basis`` prints one
sequence per line), or a JSON object with ``--json``.  Exit status is 0 on
success, 2 when the input does not parse and 3 when it parses but the
requested computation is undefined.
"""
from __future__ import annotations

import argparse
import json
import sys

from .algebra import SteenrodElement, admissible_of_degree, coproduct, format_sequence
from .embedding import extended_dual, theta, theta_admissible, theta_star
from .errors import ExprSyntaxError, ExprTypeError, FieldLiteralError, SteenrodError
from .expr import Xi, _contains, apply_operation, evaluate, parse
from .forms import DifferentialForm, bockstein
from .galois import FieldElement, parse_field
from .milnor import (
    DualElement,
    MilnorElement,
    admissible_to_milnor,
    dual_coproduct,
    milnor_primitive,
    milnor_to_admissible,
    pair,
)
from .polynomials import Polynomial

EXIT_OK, EXIT_PARSE, EXIT_DOMAIN = 0, 2, 3


class DomainError(SteenrodError):
    pass


def _text(arg: str) -> str:
    return sys.stdin.read().strip() if arg == "-" else arg


def _value(args, text, order=None):
    return evaluate(parse(_text(text), args.field, order), args.field, order)


def _operation(v) -> SteenrodElement:
    if isinstance(v, MilnorElement):
        return milnor_to_admissible(v)
    if isinstance(v, SteenrodElement):
        return v
    if isinstance(v, FieldElement):
        return SteenrodElement(v.spec, {(): v})
    raise DomainError("expected a Steenrod operation")


def _dual(v) -> DualElement:
    if isinstance(v, DualElement):
        return v
    raise DomainError("expected an element of the dual algebra (xi_k monomials)")


def cmd_normalize(args):
    v = _value(args, args.expr)
    if isinstance(v, (SteenrodElement, MilnorElement)):
        return _operation(v).normalize()
    return v


def cmd_act(args):
    op = _operation(_value(args, args.op))
    target = _value(args, args.target)
    if isinstance(target, FieldElement):
        target = Polynomial.constant(args.field, target)
    if not isinstance(target, (Polynomial, DifferentialForm)):
        raise DomainError("operations act on polynomials and differential forms")
    return apply_operation(op, target)


def cmd_pair(args):
    e = _value(args, args.op)
    if not isinstance(e, MilnorElement):
        e = _operation(e)
    return pair(e, _dual(_value(args, args.dual)))


def cmd_convert(args):
    v = _value(args, args.expr)
    if not isinstance(v, MilnorElement):
        v = _operation(v)
    if args.to == "milnor":
        return v if isinstance(v, MilnorElement) else admissible_to_milnor(v)
    return v if isinstance(v, SteenrodElement) else milnor_to_admissible(v)


def cmd_primitive(args):
    if args.k < 1:
        raise DomainError("k must be positive")
    return milnor_primitive(args.k, args.field)


def cmd_coproduct(args):
    v = _value(args, args.expr)
    if isinstance(v, DualElement):
        return dual_coproduct(v)
    return coproduct(_operation(v))


def cmd_embed(args):
    F = args.field
    text = _text(args.expr)
    e = parse(text, F)
    if _contains(e, Xi):
        x = evaluate(e, F, F.p)
        return theta_star(extended_dual(F, _dual(x).terms))
    v = evaluate(e, F)
    if not isinstance(v, MilnorElement):
        v = _operation(v)
    return theta_admissible(v) if args.to == "admissible" else theta(v)


def cmd_bockstein(args):
    v = _value(args, args.form)
    if isinstance(v, FieldElement):
        v = Polynomial.constant(args.field, v)
    if isinstance(v, Polynomial):
        v = DifferentialForm.from_polynomial(v)
    if not isinstance(v, DifferentialForm):
        raise DomainError("the Bockstein acts on differential forms")
    return bockstein(v)


def cmd_basis(args):
    if args.degree is None or args.degree < 0:
        raise DomainError("basis needs --degree d with d >= 0")
    return list(admissible_of_degree(args.degree, args.field.q))


COMMANDS = {
    "normalize": cmd_normalize,
    "act": cmd_act,
    "pair": cmd_pair,
    "convert": cmd_convert,
    "primitive": cmd_primitive,
    "coproduct": cmd_coproduct,
    "embed": cmd_embed,
    "bockstein": cmd_bockstein,
    "basis": cmd_basis,
}


def _render(args, result) -> str:
    q = args.field.q
    if args.command == "basis":
        lines = [format_sequence(s, q) if s else "1" for s in result]
        if args.json:
            return json.dumps({"command": "basis", "field": str(args.field), "degree": args.degree,
                               "result": [list(s) for s in result]})
        return "\n".join(lines)
    text = str(result)
    if not args.json:
        return text
    terms = result.to_json() if hasattr(result, "to_json") else text
    return json.dumps({"command": args.command, "field": str(args.field), "text": text, "terms": terms})


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", default="2", help="p, p^nu or a prime power such as 9 (default 2)")
    common.add_argument("--modulus", help="coefficients c0,c1,...,1 of the defining polynomial")
    common.add_argument("--json", action="store_true", help="machine-readable output")

    parser = argparse.ArgumentParser(prog="steenrod", description="Steenrod algebra computations over F_q.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text):
        return sub.add_parser(name, parents=[common], help=help_text)

    add("normalize", "rewrite into the admissible basis").add_argument("expr")
    p = add("act", "apply an operation to a polynomial or form")
    p.add_argument("op")
    p.add_argument("target")
    p = add("pair", "evaluate <operation | dual element>")
    p.add_argument("op")
    p.add_argument("dual")
    p = add("convert", "change between admissible and Milnor bases")
    p.add_argument("expr")
    p.add_argument("--to", choices=("milnor", "admissible"), required=True)
    add("primitive", "the Milnor primitive P^{Delta_k}").add_argument("k", type=int)
    add("coproduct", "coproduct of an operation or of a dual element").add_argument("expr")
    p = add("embed", "theta (operations) or theta_* (xi monomials) for F_p inside F_q")
    p.add_argument("expr")
    p.add_argument("--to", choices=("milnor", "admissible"), default="milnor")
    add("bockstein", "apply the Bockstein to a differential form").add_argument("form")
    add("basis", "admissible basis in one degree").add_argument("--degree", type=int)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.field = parse_field(args.field, args.modulus)
    except FieldLiteralError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except SteenrodError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    try:
        result = COMMANDS[args.command](args)
    except (ExprSyntaxError, FieldLiteralError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (SteenrodError, ExprTypeError, ArithmeticError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    print(_render(args, result))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

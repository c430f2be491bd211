"""Expression front end: tokens, grammar, variant inference, evaluation, and
the print/parse round trip that ties the parser to the normal-form printer.
"""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from uqson.coeffring import HALF, LaurentPoly
from uqson.errors import ExpressionSyntaxError, IndexOutOfRange, VariantMismatch
from uqson.expr import (
    Gen,
    Mul,
    Scalar,
    Sub,
    evaluate_expression,
    infer_variant,
    parse_expression,
    tokenize,
)
from uqson.pbw import MINUS, PLUS, AlgebraElement, bracket_generator
from uqson.pbw.fuzz import random_monomial


def gen(n, k, l, variant=PLUS):
    return AlgebraElement.generator(n, k, l, variant)


def test_tokenizer_layout():
    toks = tokenize("q^(1/2)*I21 - 3")
    kinds = ["q", "op", "op", "num", "op", "num", "op", "op", "gen", "op", "num"]
    assert [t.kind for t in toks] == kinds
    assert toks[0].column == 1
    assert toks[-1].column == 15


def test_tokenizer_rejects_junk_with_column():
    with pytest.raises(ExpressionSyntaxError) as err:
        tokenize("I21 $ I32")
    assert err.value.column == 5


def test_parse_product_structure():
    node = parse_expression("I32*I21", n=3)
    assert isinstance(node, Mul)
    assert node.left == Gen(3, 2, "", 1)
    assert node.right == Gen(2, 1, "", 5)


def test_parse_precedence_binds_product_tighter():
    node = parse_expression("1/2 - I21*I21")
    assert isinstance(node, Sub)
    assert isinstance(node.left, Scalar)
    assert node.left.value == LaurentPoly.const(Fraction(1, 2))
    assert isinstance(node.right, Mul)


def test_parse_q_power_forms():
    assert parse_expression("q").value == LaurentPoly.q(1)
    assert parse_expression("q^2").value == LaurentPoly.q(2)
    assert parse_expression("q^(1/2)").value == LaurentPoly.q(HALF)
    assert parse_expression("q^(-3/2)").value == LaurentPoly.q(Fraction(-3, 2))
    assert parse_expression("q^(-2)").value == LaurentPoly.q(-2)


def test_syntax_error_columns():
    # an unclosed parenthesis points back at the opener, not at EOF
    for src, col in [("I43*(", 5), ("I43*I21@", 8), ("", 1), ("(I21", 1), ("3/", 2), ("q^", 2)]:
        with pytest.raises(ExpressionSyntaxError) as err:
            parse_expression(src, n=4)
        assert err.value.column == col, src


def test_generator_validation():
    with pytest.raises(ExpressionSyntaxError):
        parse_expression("I12", n=3)  # row must exceed column
    with pytest.raises(IndexOutOfRange):
        parse_expression("I43", n=3)
    parse_expression("I43", n=4)
    parse_expression("I43")  # no rank bound without n


def test_variant_inference_and_mixing():
    assert infer_variant(parse_expression("I21*I32")) == PLUS
    assert infer_variant(parse_expression("Ip31")) == PLUS
    assert infer_variant(parse_expression("Im31")) == MINUS
    with pytest.raises(VariantMismatch):
        infer_variant(parse_expression("Ip31*Im21"))


def test_evaluate_golden_product():
    out = evaluate_expression("I32*I21", 3)
    assert str(out) == "q*I21*I32 - q^(1/2)*I31"
    assert out == gen(3, 3, 2) * gen(3, 2, 1)


def test_evaluate_bracket_recursion_example():
    out = evaluate_expression("q^(1/2)*I21*I32 - q^(-1/2)*I32*I21", 3)
    assert out == bracket_generator(3, 3, 1)
    assert str(out) == "I31"


def test_evaluate_minus_variant_marker():
    out = evaluate_expression("q^(-1/2)*I21*I32 - q^(1/2)*I32*I21", 3, variant=MINUS)
    assert out == bracket_generator(3, 3, 1, MINUS)
    assert str(out) == "Im31"


def test_evaluate_scalar_only_expression():
    out = evaluate_expression("3/2 - q^2", 3)
    assert out == AlgebraElement.scalar(3, LaurentPoly.const(Fraction(3, 2)) - LaurentPoly.q(2))


def test_unary_minus_and_parentheses():
    assert evaluate_expression("-I21*I21", 3) == -(gen(3, 2, 1) * gen(3, 2, 1))
    assert evaluate_expression("-(I21 - I32)", 3) == gen(3, 3, 2) - gen(3, 2, 1)
    assert evaluate_expression("2*(I21 + I32)", 3) == 2 * gen(3, 2, 1) + 2 * gen(3, 3, 2)


def test_division_only_for_numeric_literals():
    assert parse_expression("3/4").value == LaurentPoly.const(Fraction(3, 4))
    with pytest.raises(ExpressionSyntaxError):
        parse_expression("I21/2")
    with pytest.raises(ExpressionSyntaxError):
        parse_expression("3/0")


def test_print_parse_round_trip_on_random_elements():
    rng = random.Random(2718)
    for _ in range(50):
        e = random_monomial(rng, 4, 3) * random_monomial(rng, 4, 2) - random_monomial(rng, 4, 2)
        if e.is_zero():
            continue
        assert evaluate_expression(str(e), 4) == e


def test_print_parse_round_trip_minus_variant():
    rng = random.Random(577)
    for _ in range(20):
        e = random_monomial(rng, 4, 2, MINUS) * random_monomial(rng, 4, 2, MINUS)
        if e.is_zero():
            continue
        assert evaluate_expression(str(e), 4, variant=MINUS) == e

import random
from itertools import product

import pytest

from src.cycloweight.errors import (
    DimensionMismatchError,
    InvalidArgumentError,
    ParseError,
    RemainderNonzeroError,
)
from src.cycloweight.gfield import BaseField
from src.cycloweight.polyring import (
    Poly,
    check_to_generator,
    codeword,
    coefficient_key,
    hamming_weight,
    parse_poly,
    poly_div_exact,
    poly_divmod,
    poly_mul,
    poly_scale,
    render_poly,
    x_n_minus_one,
)

F3 = BaseField(3)
F31 = BaseField(31)


def test_render_omits_unit_coefficients():
    assert render_poly(Poly(F31, {2: 1, 1: 8, 0: 1})) == "x^2 + 8x + 1"
    assert render_poly(Poly(F31, {6: 1, 3: 1, 0: 5})) == "x^6 + x^3 + 5"
    assert render_poly(Poly(F3, {1: 1, 0: 2})) == "x + 2"
    assert render_poly(Poly(F3)) == "0"


def test_parse_accepts_rendered_text():
    for text in ("x^2 + 8x + 1", "x^6 + 9x^3 + 25", "x + 30", "x^3 + 5"):
        assert render_poly(parse_poly(text, F31)) == text


def test_parse_reduces_and_negates():
    assert parse_poly("x - 1", F31) == Poly(F31, {1: 1, 0: 30})
    assert parse_poly("x^2+33", F31) == Poly(F31, {2: 1, 0: 2})
    assert parse_poly("2*x^2 + x^2", F3) == Poly(F3)


@pytest.mark.parametrize("text", ["", "x^^2", "y + 1", "x^2 ++"])
def test_parse_rejects_garbage(text):
    with pytest.raises(ParseError):
        parse_poly(text, F31)


def test_parse_rejects_coefficient_outside_extension_field():
    with pytest.raises(ParseError):
        parse_poly("x + 9", BaseField(3, 2))


def test_exact_division():
    h = Poly(F3, {2: 1, 0: 1})
    g = poly_div_exact(x_n_minus_one(8, F3), h)
    assert render_poly(g) == "x^6 + 2x^4 + x^2 + 2"
    assert poly_mul(g, h) == x_n_minus_one(8, F3)


def test_division_with_remainder():
    quot, rem = poly_divmod(Poly(F3, {3: 1, 0: 1}), Poly(F3, {1: 1, 0: 1}))
    assert render_poly(quot) == "x^2 + 2x + 1"
    assert rem.is_zero()
    with pytest.raises(RemainderNonzeroError):
        poly_div_exact(x_n_minus_one(8, F3), Poly(F3, {2: 1, 1: 1, 0: 1}))


def test_check_to_generator_bounds():
    with pytest.raises(InvalidArgumentError):
        check_to_generator(8, Poly(F3, {0: 1}))
    with pytest.raises(InvalidArgumentError):
        check_to_generator(8, x_n_minus_one(8, F3))
    with pytest.raises(InvalidArgumentError):
        check_to_generator(8, poly_mul(x_n_minus_one(8, F3), Poly(F3, {1: 1, 0: 1})))


def test_length_one_code_is_the_whole_field():
    g = check_to_generator(1, parse_poly("x + 30", F31))
    assert g == Poly(F31, {0: 1})
    assert codeword([7], g, 1) == Poly(F31, {0: 7})


def test_codeword_wraps_modulo_x_n_minus_one():
    g = check_to_generator(8, Poly(F3, {2: 1, 0: 1}))
    word = codeword([1, 1], g, 8)
    assert hamming_weight(word) == 8
    shifted = codeword([0, 1], g, 8)
    assert shifted.degree == 7
    with pytest.raises(DimensionMismatchError):
        codeword([1, 0, 0], g, 8)


def test_coefficient_key_orders_by_degree_then_coefficients():
    polys = [parse_poly(t, F31) for t in ("x^2 + 5", "x + 30", "x^2 + 1", "x + 1")]
    ordered = sorted(polys, key=coefficient_key)
    assert [render_poly(p) for p in ordered] == ["x + 1", "x + 30", "x^2 + 1", "x^2 + 5"]


def _random_poly(rng, F, max_degree, nonzero=False):
    while True:
        size = rng.randint(0, max_degree) + 1
        f = Poly(F, {d: rng.randrange(F.q) for d in range(size)})
        if not nonzero or not f.is_zero():
            return f


def test_exact_division_undoes_multiplication():
    rng = random.Random(20)
    fields = [F3, F31, BaseField(3, 2), BaseField(2, 3)]
    for i in range(1000):
        F = fields[i % len(fields)]
        f = _random_poly(rng, F, 8)
        g = _random_poly(rng, F, 5, nonzero=True)
        assert poly_div_exact(poly_mul(f, g), g) == f


def test_weight_is_invariant_under_nonzero_scaling():
    rng = random.Random(21)
    F9 = BaseField(3, 2)
    for _ in range(200):
        f = _random_poly(rng, F9, 12)
        for c in range(1, 9):
            assert hamming_weight(poly_scale(f, c)) == hamming_weight(f)


@pytest.mark.parametrize(
    "q, n, h_text", [(3, 8, "x^2 + 1"), (5, 8, "x^2 + 3"), (31, 288, "x^2 + 1")]
)
def test_binomial_codewords_split_into_disjoint_shifts(q, n, h_text):
    F = BaseField(q)
    h = parse_poly(h_text, F)
    s = h.degree
    g = check_to_generator(n, h)
    for message in product(range(q), repeat=s):
        nonzero = sum(1 for m in message if m)
        assert hamming_weight(codeword(list(message), g, n)) == n // s * nonzero

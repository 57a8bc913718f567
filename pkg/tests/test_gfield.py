import random

import pytest

from src.cycloweight.errors import (
    DivisionByZeroError,
    InputRangeError,
    InvalidArgumentError,
    NotInBaseFieldError,
)
from src.cycloweight.gfield import (
    BaseField,
    ExtElement,
    build_tower,
    canonical_base_modulus,
    descend,
    element_order,
    frobenius,
)


def test_prime_field_arithmetic():
    F = BaseField(31)
    assert F.add(30, 5) == 4
    assert F.neg(1) == 30
    assert F.mul(5, 25) == 1
    assert F.inv(5) == 25
    assert F.order(5) == 3
    assert F.order(3) == 30


def test_canonical_base_moduli():
    assert canonical_base_modulus(2, 2) == (1, 1, 1)
    assert canonical_base_modulus(3, 2) == (1, 0, 1)


def test_char_two_extension_field():
    F = BaseField(2, 2)
    assert F.add(2, 3) == 1
    assert F.mul(2, 2) == 3
    assert F.mul(2, 3) == 1
    assert F.inv(2) == 3
    assert F.neg(2) == 2


def test_odd_extension_field():
    F = BaseField(3, 2)
    # 3 encodes y, and y^2 = -1 in F_3[y]/(y^2 + 1)
    assert F.mul(3, 3) == 2
    assert F.add(3, 3) == 6
    assert F.neg(3) == 6
    assert F.sub(3, 3) == 0
    assert F.coeffs(7) == (1, 2)
    assert F.from_coeffs((1, 2)) == 7
    for a in range(1, 9):
        assert F.mul(a, F.inv(a)) == 1


def test_log_tables_only_for_proper_extensions():
    exp, log = BaseField(3, 2).log_tables()
    assert len(exp) == 8
    assert all(log[exp[i]] == i for i in range(8))
    with pytest.raises(InvalidArgumentError):
        BaseField(3).log_tables()


def test_field_construction_errors():
    with pytest.raises(InvalidArgumentError):
        BaseField(6)
    with pytest.raises(InputRangeError):
        BaseField(2, 20)
    with pytest.raises(DivisionByZeroError):
        BaseField(7).inv(0)


def test_tower_over_f3_is_canonical(tower3):
    assert tower3.ext_modulus == (1, 0)
    assert tower3.alpha == ExtElement(1, 1)
    assert tower3.theta == 2
    assert element_order(tower3.alpha, tower3) == 8
    assert element_order(tower3.theta, tower3) == 2


def test_frobenius_and_descent(tower3):
    E = tower3.ext
    assert frobenius(tower3.alpha, tower3) == ExtElement(1, 2)
    assert E.trace(tower3.alpha) == 2
    assert E.norm(tower3.alpha) == 2
    assert descend(ExtElement(2, 0), tower3) == 2
    with pytest.raises(NotInBaseFieldError):
        descend(E.beta, tower3)


def test_norm_is_multiplicative(tower3):
    E = tower3.ext
    F = tower3.base
    for x in E.elements():
        for y in E.elements():
            assert E.norm(E.mul(x, y)) == F.mul(E.norm(x), E.norm(y))


def test_tower_over_f31(tower31):
    assert element_order(tower31.alpha, tower31) == 960
    assert element_order(tower31.theta, tower31) == 30
    assert tower31.theta == tower31.ext.descend(tower31.ext.pow(tower31.alpha, 32))


def test_tower_over_f4():
    tower = build_tower(2, 2)
    assert tower.q == 4
    assert element_order(tower.alpha, tower) == 15
    assert element_order(tower.theta, tower) == 3


def test_explicit_alpha_must_generate(tower3):
    with pytest.raises(InvalidArgumentError):
        build_tower(3, alpha=ExtElement(0, 1))
    other = build_tower(3, alpha=ExtElement(1, 2))
    assert other.alpha == ExtElement(1, 2)
    assert element_order(other.alpha, other) == 8


def test_embed_round_trips_through_descend(tower31):
    E = tower31.ext
    for a in tower31.base.elements():
        assert descend(E.embed(a), tower31) == a
        assert E.decode(E.encode(E.embed(a))) == E.embed(a)


PRIME_POWERS = [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (11, 1), (13, 1),
                (2, 4), (17, 1), (19, 1), (23, 1), (5, 2), (3, 3), (29, 1), (31, 1), (2, 5),
                (37, 1), (41, 1), (43, 1), (47, 1), (7, 2)]


def _check_axioms(K, sample, rng):
    for _ in range(1000):
        a, b, c = sample(rng), sample(rng), sample(rng)
        assert K.add(a, b) == K.add(b, a)
        assert K.mul(a, b) == K.mul(b, a)
        assert K.add(K.add(a, b), c) == K.add(a, K.add(b, c))
        assert K.mul(K.mul(a, b), c) == K.mul(a, K.mul(b, c))
        assert K.mul(a, K.add(b, c)) == K.add(K.mul(a, b), K.mul(a, c))
        assert K.add(a, K.neg(a)) == K.zero
        if a != K.zero:
            assert K.mul(a, K.inv(a)) == K.one


@pytest.mark.parametrize("p, e", [(31, 1), (2, 2), (3, 2), (5, 2), (3, 3), (7, 2)])
def test_field_axioms_at_both_levels(p, e):
    rng = random.Random(p * 100 + e)
    tower = build_tower(p, e)
    _check_axioms(tower.base, lambda r: r.randrange(tower.q), rng)
    E = tower.ext
    _check_axioms(E, lambda r: E.decode(r.randrange(E.size)), rng)


@pytest.mark.parametrize("p, e", PRIME_POWERS)
def test_alpha_powers_cover_the_multiplicative_group(p, e):
    tower = build_tower(p, e)
    E = tower.ext
    seen = set()
    x = E.one
    for _ in range(E.size - 1):
        seen.add(x)
        x = E.mul(x, tower.alpha)
    assert x == E.one
    assert len(seen) == E.size - 1
    assert E.zero not in seen


@pytest.mark.parametrize("p, e", [(3, 1), (31, 1), (3, 2), (2, 3), (7, 2)])
def test_frobenius_is_an_involution(p, e):
    rng = random.Random(p + e)
    tower = build_tower(p, e)
    E = tower.ext
    for _ in range(100):
        x = E.decode(rng.randrange(E.size))
        assert frobenius(frobenius(x, tower), tower) == x
        assert frobenius(x, tower) == E.pow(x, tower.q)
        assert E.embed(E.norm(x)) == E.mul(x, frobenius(x, tower))
        assert E.embed(E.trace(x)) == E.add(x, frobenius(x, tower))

from dataclasses import replace

import pytest

from src.cycloweight.errors import (
    ChannelError,
    InconsistentParametersError,
    InvalidArgumentError,
)
from src.cycloweight.factorizer import case_parameters
from src.cycloweight.wdist import (
    WeightEnumerator,
    build_code_record,
    channel_label,
    enumerator_binomial,
    enumerator_trinomial,
    expand,
    lambda_set,
    pair_weight_count,
    trinomial_min_distance,
    undetected_error_probability,
    weight_distribution_terms,
)
from tests.conftest import record_for


def test_binomial_enumerators():
    assert enumerator_binomial(31, 288, 1).render() == "1+30z^288"
    assert enumerator_binomial(31, 288, 6).render() == "(1+30z^48)^6"
    assert expand(enumerator_binomial(3, 8, 2)) == {0: 1, 4: 4, 8: 4}
    with pytest.raises(InvalidArgumentError):
        enumerator_binomial(31, 288, 7)


@pytest.mark.parametrize(
    "t, nu2u, d",
    [(1, 2, 216), (1, 1, 252), (1, 0, 270), (3, 2, 72), (3, 1, 84), (3, 0, 90)],
)
def test_trinomial_min_distance(t, nu2u, d):
    assert trinomial_min_distance(288, t, 4, nu2u) == d


def test_trinomial_min_distance_rejects_bad_valuation():
    with pytest.raises(InconsistentParametersError):
        trinomial_min_distance(288, 1, 4, 3)


def test_trinomial_enumerators():
    assert enumerator_trinomial(31, 288, 1, 4, 2).render() == "1+120z^216+840z^288"
    assert enumerator_trinomial(31, 288, 1, 4, 1).render() == "1+240z^252+720z^288"
    assert enumerator_trinomial(31, 288, 3, 4, 0).render() == "(1+480z^90+480z^96)^3"
    assert enumerator_trinomial(7, 16, 1, 3, 1).render() == "1+24z^12+24z^16"


def test_trinomial_enumerator_drops_vanishing_top_term():
    # 2^(r - nu) = q + 1: every nonzero word has weight d
    enumerator = enumerator_trinomial(3, 8, 1, 2, 0)
    assert enumerator.render() == "1+8z^6"
    assert enumerator.base_terms == ((0, 1), (6, 8))


def test_expansion_is_exact_and_cached():
    e = enumerator_trinomial(31, 288, 3, 4, 2)
    assert e.expanded is None
    dist = e.expand()
    assert e.expanded is dist
    assert sum(dist.values()) == 31**6 == e.mass
    assert min(w for w in dist if w) == 72
    assert dist[72] == 3 * 120
    assert dist[216] == 120**3
    assert dist[288] == 840**3


def test_enumerator_validation():
    with pytest.raises(InconsistentParametersError):
        WeightEnumerator(((4, 1),), 1)
    with pytest.raises(InconsistentParametersError):
        WeightEnumerator(((0, 1), (8, 2), (4, 2)), 1)
    with pytest.raises(InconsistentParametersError):
        WeightEnumerator(((0, 1), (8, 2)), 0)


def test_enumerator_equality_ignores_cache():
    a = enumerator_binomial(3, 8, 2)
    b = enumerator_binomial(3, 8, 2)
    a.expand()
    assert a == b


def test_weight_distribution_terms():
    e = enumerator_binomial(3, 8, 2)
    assert weight_distribution_terms(e.expand(), 8) == [(0, 1), (4, 4), (8, 4)]
    assert weight_distribution_terms({8: 4, 0: 1, 3: 0}, 8) == [(0, 1), (8, 4)]
    with pytest.raises(InconsistentParametersError):
        weight_distribution_terms({9: 1}, 8)


def test_lambda_set_sizes(catalog_3_8, catalog_7_16):
    _, tower, records = catalog_3_8
    rec = record_for(records, "x^2 + x + 2")
    assert lambda_set(rec.factor.kind.a, 2, 0, tower) == {0, 1, 2}

    _, tower, records = catalog_7_16
    rec = record_for(records, "x^2 + 3x + 1")
    lam = lambda_set(rec.factor.kind.a, 3, 1, tower)
    assert len(lam) == 3
    assert 0 in lam


def test_lambda_set_rejects_binomial_root(tower3):
    with pytest.raises(InvalidArgumentError):
        lambda_set(tower3.ext.beta, 2, 0, tower3)


def test_pair_weight_count():
    assert pair_weight_count(31, 4, 0) == 480
    assert pair_weight_count(3, 2, 0) == 8


def test_pue_qary_closed_form():
    dist = {0: 1, 4: 4, 8: 4}
    value = undetected_error_probability(dist, 3, 8, 0.3)
    assert value == pytest.approx(4 * 0.15**4 * 0.7**4 + 4 * 0.15**8, rel=1e-12)
    assert value == pytest.approx(4.8723e-4, rel=1e-4)


def test_pue_edges():
    dist = {0: 1, 4: 4, 8: 4}
    assert undetected_error_probability(dist, 3, 8, 0.0) == 0.0
    assert undetected_error_probability({0: 1, 3: 7, 4: 7, 7: 1}, 2, 7, 1.0, "binary") == 1.0


def test_pue_binary_symmetric():
    value = undetected_error_probability({0: 1, 4: 7}, 2, 7, 0.1, "binary")
    assert value == pytest.approx(7 * 0.1**4 * 0.9**3)


@pytest.mark.parametrize(
    "q, p, channel",
    [(3, -0.1, "qary"), (3, 1.5, "qary"), (3, 0.1, "binary"), (3, 0.1, "erasure")],
)
def test_pue_rejects_bad_channel(q, p, channel):
    with pytest.raises(ChannelError):
        undetected_error_probability({0: 1}, q, 8, p, channel)


def test_channel_labels():
    assert channel_label("binary") == "binary symmetric"
    with pytest.raises(ChannelError):
        channel_label("erasure")


def test_code_records_3_8(catalog_3_8):
    _, _, records = catalog_3_8
    labels = {rec.label: rec.family for rec in records}
    assert labels == {"[3;8,1,8]": "binomial", "[3;8,2,4]": "binomial", "[3;8,2,6]": "trinomial"}
    trinomial = record_for(records, "x^2 + 2x + 2")
    assert trinomial.nu2u == 0
    assert trinomial.weight_divisor == 2
    assert record_for(records, "x^2 + 1").nu2u is None


def test_code_record_rejects_inconsistent_factor(catalog_3_8):
    params, tower, records = catalog_3_8
    rec = record_for(records, "x^2 + x + 2")
    skewed = replace(rec.factor, nu2u=1)
    with pytest.raises(InconsistentParametersError):
        build_code_record(skewed, params, tower)


def test_code_record_for_31_288(catalog_31_288):
    _, _, records = catalog_31_288
    rec = record_for(records, "x^2 + 8x + 1")
    assert rec.label == "[31;288,2,216]"
    assert rec.enumerator.render() == "1+120z^216+840z^288"
    rec = record_for(records, "x^6 + x^3 + 5")
    assert rec.label == "[31;288,6,84]"
    assert case_parameters(288, 31).r == rec.r

import json

import pytest

from src.cycloweight.catalog import (
    CatalogDocument,
    build_catalog,
    build_factor_listing,
    build_records,
    code_distribution,
)
from src.cycloweight.errors import OutOfRegimeError, ParseError, RemainderNonzeroError
from src.cycloweight.polyring import render_poly


def test_groups_follow_table_order(catalog_31_288):
    params, _, records = catalog_31_288
    doc = build_catalog(params, records)
    assert doc.code_count == 85
    assert [g.label(31, 288) for g in doc.groups] == [
        "[31;288,1,288]",
        "[31;288,2,144]",
        "[31;288,3,96]",
        "[31;288,6,48]",
        "[31;288,2,216]",
        "[31;288,2,252]",
        "[31;288,2,270]",
        "[31;288,6,72]",
        "[31;288,6,84]",
        "[31;288,6,90]",
    ]
    assert [len(g.rows) for g in doc.groups] == [6, 3, 4, 2, 6, 12, 24, 4, 8, 16]


def test_summary_classes(catalog_7_16):
    params, _, records = catalog_7_16
    summary = build_catalog(params, records).summary
    assert summary[0] == {"code": "[7;16,1,16]", "class": "binomial", "count": 2}
    assert summary[-1] == {"code": "[7;16,2,14]", "class": "trinomial nu2=0", "count": 4}


def _table(records):
    return sorted((render_poly(r.check_poly), r.d, r.enumerator.render()) for r in records)


def test_catalog_independent_of_alpha(catalog_31_288):
    _, tower, records = catalog_31_288
    alpha = tower.ext.pow(tower.alpha, 7)
    _, other_tower, other = build_records(31, 288, alpha)
    assert other_tower.alpha == alpha
    assert _table(other) == _table(records)


@pytest.mark.parametrize("power", [3, 5, 7])
def test_small_catalog_independent_of_alpha(catalog_3_8, power):
    _, tower, records = catalog_3_8
    alpha = tower.ext.pow(tower.alpha, power)
    _, other_tower, other = build_records(3, 8, alpha)
    assert other_tower.theta == tower.base.pow(tower.theta, power)
    assert _table(other) == _table(records)


def test_json_document_round_trips(catalog_3_8):
    params, _, records = catalog_3_8
    doc = build_catalog(params, records, expand=True)
    data = json.loads(json.dumps(doc.to_dict()))
    assert data["schema"] == "cycloweight/1"
    assert data["summary"]["codes"] == 5
    assert CatalogDocument.from_dict(data) == doc


def test_expanded_groups_carry_distribution(catalog_3_8):
    params, _, records = catalog_3_8
    doc = build_catalog(params, records, expand=True)
    assert doc.groups[1].expanded == [(0, 1), (4, 4), (8, 4)]
    assert build_catalog(params, records).groups[1].expanded is None


def test_from_dict_checks_schema():
    with pytest.raises(ParseError):
        CatalogDocument.from_dict({"schema": "other/9"})


def test_binomial_only_parameters():
    params, _, records = build_records(5, 4)
    doc = build_catalog(params, records)
    assert doc.case == "binomial-only"
    assert doc.parameters == {"m": 1, "l": 1}


def test_factor_listing_with_oracle():
    listing = build_factor_listing(7, 16, use_oracle=True)
    assert listing.case == "mixed"
    assert listing.agree is True
    assert len(listing.factors) == 9


def test_factor_listing_outside_regime():
    listing = build_factor_listing(2, 7, use_oracle=True)
    assert listing.factors is None
    assert listing.oracle == ["x + 1", "x^3 + x + 1", "x^3 + x^2 + 1"]
    assert listing.agree is None
    with pytest.raises(OutOfRegimeError):
        build_factor_listing(2, 7)


def test_code_distribution_prefers_closed_form():
    dist, source = code_distribution(3, 8, "x^2 + 1")
    assert source == "closed-form"
    assert dist == {0: 1, 4: 4, 8: 4}


def test_code_distribution_normalizes_leading_coefficient():
    dist, source = code_distribution(3, 8, "2x^2 + 2")
    assert (dist, source) == ({0: 1, 4: 4, 8: 4}, "closed-form")


def test_code_distribution_brute_force_fallback():
    dist, source = code_distribution(2, 7, "x^3 + x + 1")
    assert source == "brute-force"
    assert dist == {0: 1, 4: 7}
    # reducible check polynomial inside the regime
    dist, source = code_distribution(3, 8, "x^2 + 2")
    assert source == "brute-force"
    assert sum(dist.values()) == 9


def test_code_distribution_rejects_non_divisor():
    with pytest.raises(RemainderNonzeroError):
        code_distribution(3, 8, "x^2 + x + 1")
    with pytest.raises(ParseError):
        code_distribution(3, 8, "0")

"""Shared fixtures: field towers and catalogs for the small worked lengths."""

from pathlib import Path

import pytest

from src.cycloweight import build_records
from src.cycloweight.gfield import build_tower
from src.cycloweight.polyring import render_poly

GOLDEN = Path(__file__).parent / "golden"


def normalize(text: str) -> list[str]:
    """Whitespace-collapsed non-blank lines."""
    return [" ".join(line.split()) for line in text.splitlines() if line.strip()]


@pytest.fixture(scope="session")
def tower3():
    return build_tower(3)


@pytest.fixture(scope="session")
def tower31():
    return build_tower(31)


@pytest.fixture(scope="session")
def catalog_3_8():
    return build_records(3, 8)


@pytest.fixture(scope="session")
def catalog_7_16():
    return build_records(7, 16)


@pytest.fixture(scope="session")
def catalog_31_288():
    return build_records(31, 288)


def record_for(records, h_text):
    return next(rec for rec in records if render_poly(rec.check_poly) == h_text)

from .catalog import (
    CatalogDocument,
    FactorListing,
    build_catalog,
    build_factor_listing,
    build_records,
    code_distribution,
)
from .config import Config
from .errors import CycloweightError
from .factorizer import CaseParameters, IrreducibleFactor, case_parameters, factor
from .gfield import FieldTower, build_tower
from .oracle import VerificationReport, verify_catalog, verify_code
from .wdist import CodeRecord, WeightEnumerator, undetected_error_probability

__all__ = [
    "CaseParameters",
    "CatalogDocument",
    "CodeRecord",
    "Config",
    "CycloweightError",
    "FactorListing",
    "FieldTower",
    "IrreducibleFactor",
    "VerificationReport",
    "WeightEnumerator",
    "build_catalog",
    "build_factor_listing",
    "build_records",
    "build_tower",
    "case_parameters",
    "code_distribution",
    "factor",
    "undetected_error_probability",
    "verify_catalog",
    "verify_code",
]

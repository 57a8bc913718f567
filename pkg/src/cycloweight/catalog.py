"""Catalog assembly: every irreducible cyclic code of one (q, n), grouped for display."""

from dataclasses import dataclass, field

from .errors import OutOfRegimeError, ParseError
from .factorizer import Case, CaseParameters, case_parameters, coset_oracle, factor
from .gfield import BaseField, ExtElement, FieldTower, build_tower
from .numth import prime_power
from .oracle import generator_distribution
from .polyring import check_to_generator, coefficient_key, parse_poly, poly_scale, render_poly
from .wdist import CodeRecord, build_code_record, weight_distribution_terms

SCHEMA = "cycloweight/1"


def build_records(
    q: int, n: int, alpha: ExtElement | None = None
) -> tuple[CaseParameters, FieldTower, list[CodeRecord]]:
    """Factor x^n - 1 over F_q and build one CodeRecord per irreducible factor."""
    params = case_parameters(n, q)
    p, e = prime_power(q)
    tower = build_tower(p, e, alpha)
    records = [build_code_record(f, params, tower) for f in factor(params, tower)]
    return params, tower, records


@dataclass
class CatalogGroup:
    """Codes sharing family, dimension, nu_2(u) and minimum distance."""

    family: str
    k: int
    d: int
    nu2u: int | None
    t: int
    enumerator: str
    rows: list[str] = field(default_factory=list)
    """Rendered check polynomials, in coefficient order."""
    expanded: list[tuple[int, int]] | None = None

    @property
    def sort_key(self) -> tuple:
        nu = -1 if self.nu2u is None else self.nu2u
        return (self.family != "binomial", self.k, -nu, self.d)

    def label(self, q: int, n: int) -> str:
        return f"[{q};{n},{self.k},{self.d}]"

    @property
    def klass(self) -> str:
        if self.family == "binomial":
            return "binomial"
        return f"trinomial nu2={self.nu2u}"

    def to_dict(self) -> dict:
        out = {
            "family": self.family,
            "k": self.k,
            "d": self.d,
            "nu2u": self.nu2u,
            "t": self.t,
            "enumerator": self.enumerator,
            "rows": [{"h": h, "enumerator": self.enumerator} for h in self.rows],
        }
        if self.expanded is not None:
            out["expanded"] = [[w, c] for w, c in self.expanded]
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "CatalogGroup":
        expanded = data.get("expanded")
        return cls(
            family=data["family"],
            k=data["k"],
            d=data["d"],
            nu2u=data["nu2u"],
            t=data["t"],
            enumerator=data["enumerator"],
            rows=[row["h"] for row in data["rows"]],
            expanded=None if expanded is None else [(w, c) for w, c in expanded],
        )


@dataclass
class CatalogDocument:
    q: int
    n: int
    case: str
    parameters: dict[str, int]
    groups: list[CatalogGroup]

    @property
    def code_count(self) -> int:
        return sum(len(g.rows) for g in self.groups)

    @property
    def summary(self) -> list[dict]:
        return [
            {"code": g.label(self.q, self.n), "class": g.klass, "count": len(g.rows)}
            for g in self.groups
        ]

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA,
            "q": self.q,
            "n": self.n,
            "case": self.case,
            "parameters": dict(self.parameters),
            "groups": [g.to_dict() for g in self.groups],
            "summary": {"codes": self.code_count, "groups": self.summary},
        }

    @classmethod
    def from_dict(cls, data: dict) -> "CatalogDocument":
        if data.get("schema") != SCHEMA:
            raise ParseError(f"expected schema '{SCHEMA}', got {data.get('schema')!r}")
        return cls(
            q=data["q"],
            n=data["n"],
            case=data["case"],
            parameters=dict(data["parameters"]),
            groups=[CatalogGroup.from_dict(g) for g in data["groups"]],
        )


def _parameters(params: CaseParameters) -> dict[str, int]:
    if params.case is Case.MIXED:
        return {"m_prime": params.m_prime, "l_prime": params.l_prime, "r": params.r}
    return {"m": params.m, "l": params.l}


def build_catalog(
    params: CaseParameters, records: list[CodeRecord], expand: bool = False
) -> CatalogDocument:
    """Group records by (family, k, nu_2(u), d) in table order."""
    groups: dict[tuple, CatalogGroup] = {}
    members: dict[tuple, list[CodeRecord]] = {}
    for rec in records:
        key = (rec.family, rec.k, rec.nu2u, rec.d)
        if key not in groups:
            groups[key] = CatalogGroup(
                family=rec.family,
                k=rec.k,
                d=rec.d,
                nu2u=rec.nu2u,
                t=rec.factor.t,
                enumerator=rec.enumerator.render(),
                expanded=(
                    weight_distribution_terms(rec.enumerator.expand(), rec.n) if expand else None
                ),
            )
            members[key] = []
        members[key].append(rec)
    for key, group in groups.items():
        ordered = sorted(members[key], key=lambda rec: coefficient_key(rec.check_poly))
        group.rows = [render_poly(rec.check_poly) for rec in ordered]
    return CatalogDocument(
        q=params.q,
        n=params.n,
        case=params.case.value,
        parameters=_parameters(params),
        groups=sorted(groups.values(), key=lambda g: g.sort_key),
    )


@dataclass
class FactorListing:
    """Factors of x^n - 1, from the closed form, the coset oracle, or both."""

    q: int
    n: int
    case: str | None
    factors: list[str] | None
    oracle: list[str] | None = None

    @property
    def agree(self) -> bool | None:
        if self.factors is None or self.oracle is None:
            return None
        return sorted(self.factors) == sorted(self.oracle)

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA,
            "q": self.q,
            "n": self.n,
            "case": self.case,
            "factors": self.factors,
            "oracle": self.oracle,
            "agree": self.agree,
        }


def build_factor_listing(
    q: int, n: int, use_oracle: bool = False, degree_cap: int = 12
) -> FactorListing:
    """Closed-form factor list; with use_oracle also the coset factorization.

    Outside the closed-form regime only the oracle list is produced, and only
    when use_oracle is set; otherwise the regime error propagates.
    """
    oracle = None
    if use_oracle:
        oracle = [render_poly(f) for f in coset_oracle(n, q, degree_cap)]
    try:
        params = case_parameters(n, q)
    except OutOfRegimeError:
        if oracle is None:
            raise
        return FactorListing(q, n, None, None, oracle)
    p, e = prime_power(q)
    tower = build_tower(p, e)
    factors = [render_poly(f.poly) for f in factor(params, tower)]
    return FactorListing(q, n, params.case.value, factors, oracle)


def code_distribution(
    q: int, n: int, h_text: str, cap: int = 10**6, chunks: int = 1
) -> tuple[dict[int, int], str]:
    """Weight distribution of the code with check polynomial h_text.

    Uses the closed-form enumerator when h is an irreducible factor covered by
    the catalog, and brute force over the code otherwise (any divisor of
    x^n - 1, any n coprime to q). Returns the distribution and its source.
    """
    p, e = prime_power(q)
    F = BaseField(p, e)
    h = parse_poly(h_text, F)
    if h.is_zero():
        raise ParseError("check polynomial is zero")
    h = poly_scale(h, F.inv(h.leading))
    g = check_to_generator(n, h)
    try:
        _, _, records = build_records(q, n)
    except OutOfRegimeError:
        records = []
    for rec in records:
        if rec.check_poly == h:
            return rec.enumerator.expand(), "closed-form"
    return generator_distribution(g, n, cap, chunks), "brute-force"

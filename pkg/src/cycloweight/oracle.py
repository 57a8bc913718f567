"""Brute-force ground truth for the closed forms.

brute_force_distribution walks every message of a code and counts codeword
weights; verify_code compares that (and a handful of structural claims)
against a CodeRecord. Failed comparisons are report entries, never
exceptions.

The rows x^j * g of a generator matrix usually fall into classes with
pairwise disjoint supports (x^s - c spreads into s classes, a quadratic in
x^t into t classes of two rows). Weights add across disjoint supports, so
each class is enumerated exhaustively on its own columns and the class
distributions are convolved.
"""

from collections import Counter, defaultdict
from collections.abc import Callable
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from .config import Config
from .errors import CapExceededError
from .factorizer import CaseParameters, IrreducibleFactor, measured_counts, predicted_counts
from .gfield import BaseField, FieldTower, build_tower
from .numth import prime_power
from .polyring import (
    Poly,
    hamming_weight,
    poly_add,
    poly_mul,
    poly_scale,
    poly_shift,
    poly_sub,
    render_poly,
    x_n_minus_one,
)
from .wdist import CodeRecord, lambda_set, pair_weight_count

# codeword cells materialized per numpy batch
_BATCH_CELLS = 1 << 22


class _VectorField:
    """Elementwise F_q arithmetic on int64 arrays of canonical encodings.

    Operands broadcast like ordinary numpy arithmetic.
    """

    def __init__(self, F: BaseField):
        self.F = F
        self.q = F.q
        if F.e > 1:
            exp, log = F.log_tables()
            self._exp = np.asarray(exp, dtype=np.int64)
            self._log = np.asarray(log, dtype=np.int64)

    def add(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        F = self.F
        if F.e == 1:
            return (a + b) % F.p
        if F.p == 2:
            return a ^ b
        out = np.zeros(np.broadcast_shapes(a.shape, b.shape), dtype=np.int64)
        place = 1
        for _ in range(F.e):
            out += ((a // place + b // place) % F.p) * place
            place *= F.p
        return out

    def scale(self, a: np.ndarray, c: int) -> np.ndarray:
        F = self.F
        if F.e == 1:
            return a * c % F.p
        if c == 0:
            return np.zeros_like(a)
        shifted = self._exp[(self._log[a] + self._log[c]) % (F.q - 1)]
        return np.where(a == 0, 0, shifted)

    def multiples(self, row: np.ndarray) -> np.ndarray:
        """(q, width) array whose line c is c * row."""
        F = self.F
        coeffs = np.arange(F.q, dtype=np.int64)
        if F.e == 1:
            return np.multiply.outer(coeffs, row) % F.p
        logs = self._log[coeffs][:, None] + self._log[row][None, :]
        out = self._exp[logs % (F.q - 1)]
        return np.where((coeffs[:, None] == 0) | (row[None, :] == 0), 0, out)

    def span(self, rows: np.ndarray) -> np.ndarray:
        """Every combination of rows; line m uses digit j of m in base q for rows[j]."""
        width = rows.shape[1]
        table = np.zeros((1, width), dtype=np.int64)
        for row in rows:
            table = self.add(self.multiples(row)[:, None, :], table[None, :, :])
            table = table.reshape(-1, width)
        return table

    def combine(self, rows: np.ndarray, index: int) -> np.ndarray:
        """The single combination of rows selected by index in base q."""
        vec = np.zeros(rows.shape[1], dtype=np.int64)
        for row in rows:
            index, digit = divmod(index, self.q)
            if digit:
                vec = self.add(vec, self.scale(row, digit))
        return vec


def generator_rows(g: Poly, n: int) -> np.ndarray:
    """(k, n) generator matrix; row j holds the coefficients of x^j * g."""
    k = n - g.degree
    rows = np.zeros((k, n), dtype=np.int64)
    index = np.arange(k)
    for d, c in g.terms.items():
        rows[index, index + d] = c
    return rows


def support_classes(g: Poly, n: int) -> list[list[int]]:
    """Partition the rows x^j * g into classes with pairwise disjoint supports.

    Classes come out ordered by their smallest row, rows ascending inside
    each class.
    """
    k = n - g.degree
    parent = list(range(k))

    def find(j: int) -> int:
        while parent[j] != j:
            parent[j] = parent[parent[j]]
            j = parent[j]
        return j

    owner: dict[int, int] = {}
    for j in range(k):
        for d in g.terms:
            col = j + d
            if col not in owner:
                owner[col] = j
                continue
            a, b = find(owner[col]), find(j)
            if a != b:
                parent[max(a, b)] = min(a, b)
    classes: dict[int, list[int]] = defaultdict(list)
    for j in range(k):
        classes[find(j)].append(j)
    return list(classes.values())


def _range_distribution(rows: np.ndarray, vf: _VectorField, start: int, stop: int) -> Counter:
    """Weights of the combinations of rows for messages start .. stop-1 in base-q counter order."""
    q = vf.q
    k, width = rows.shape
    low = k
    while low and q**low * width > _BATCH_CELLS:
        low -= 1
    table = vf.span(rows[:low])
    block = q**low
    hist = np.zeros(width + 1, dtype=np.int64)
    for high in range(start // block, (stop - 1) // block + 1):
        base = high * block
        words = table[max(start - base, 0) : min(stop - base, block)]
        if low < k:
            words = vf.add(words, vf.combine(rows[low:], high))
        hist += np.bincount(np.count_nonzero(words, axis=1), minlength=width + 1)
    return Counter({w: int(c) for w, c in enumerate(hist) if c})


def _ranges(total: int, chunks: int) -> list[tuple[int, int]]:
    chunks = max(1, min(chunks, total))
    bounds = [total * i // chunks for i in range(chunks + 1)]
    return list(zip(bounds, bounds[1:]))


def _convolve(a: dict[int, int], b: dict[int, int]) -> dict[int, int]:
    out: Counter = Counter()
    for wa, ca in a.items():
        for wb, cb in b.items():
            out[wa + wb] += ca * cb
    return out


def generator_distribution(g: Poly, n: int, cap: int, chunks: int = 1) -> dict[int, int]:
    """Exact weight distribution of the length-n cyclic code generated by g.

    Each support class is enumerated over all of its messages. Its message
    space is split into `chunks` contiguous ranges whose counts are merged;
    the result does not depend on the split.

    Raises:
        CapExceededError: the code has more than `cap` codewords.
    """
    F = g.field
    total = F.q ** (n - g.degree)
    if total > cap:
        raise CapExceededError(
            f"code generated by {render_poly(g)} has {total} codewords, cap is {cap}"
        )
    vf = _VectorField(F)
    rows = generator_rows(g, n)
    blocks = []
    for members in support_classes(g, n):
        sub = rows[members]
        blocks.append(sub[:, np.flatnonzero(sub.any(axis=0))])
    jobs = [
        (i, lo, hi)
        for i, sub in enumerate(blocks)
        for lo, hi in _ranges(F.q ** sub.shape[0], chunks)
    ]

    def run(job):
        i, lo, hi = job
        return i, _range_distribution(blocks[i], vf, lo, hi)

    if chunks == 1:
        results = [run(job) for job in jobs]
    else:
        with ThreadPoolExecutor(max_workers=chunks) as pool:
            results = list(pool.map(run, jobs))
    parts: list[Counter] = [Counter() for _ in blocks]
    for i, counts in results:
        parts[i] += counts
    merged: dict[int, int] = {0: 1}
    for part in parts:
        merged = _convolve(merged, part)
    return dict(sorted(merged.items()))


def brute_force_distribution(code: CodeRecord, cap: int, chunks: int = 1) -> dict[int, int]:
    """Exact weight distribution over all q^k codewords of one catalog code."""
    return generator_distribution(code.generator_poly, code.n, cap, chunks)


# --- reports --------------------------------------------------------------------


@dataclass(frozen=True)
class Check:
    name: str
    predicted: Any
    measured: Any

    @property
    def passed(self) -> bool:
        return self.predicted == self.measured


@dataclass(frozen=True)
class Skip:
    name: str
    reason: str


@dataclass
class VerificationReport:
    """Outcome of every claim checked for one code."""

    code_id: tuple[int, int, str]
    """(q, n, rendered check polynomial)."""

    label: str = ""
    checks: list[Check] = field(default_factory=list)
    skipped: list[Skip] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> dict:
        q, n, h = self.code_id
        return {
            "q": q,
            "n": n,
            "h": h,
            "label": self.label,
            "ok": self.ok,
            "checks": [
                {
                    "name": c.name,
                    "predicted": _jsonable(c.predicted),
                    "measured": _jsonable(c.measured),
                    "pass": c.passed,
                }
                for c in self.checks
            ],
            "skipped": [{"name": s.name, "reason": s.reason} for s in self.skipped],
        }


def _jsonable(value):
    if isinstance(value, dict):
        return {str(k): v for k, v in value.items()}
    if isinstance(value, tuple):
        return list(value)
    return value


def _weight_lemma_checks(code: CodeRecord, tower: FieldTower) -> list[Check]:
    F = code.generator_poly.field
    g = code.generator_poly
    t, r, nu2u = code.factor.t, code.r, code.nu2u
    shifted = poly_shift(g, t)
    lam = lambda_set(code.factor.kind.a, r, nu2u, tower)
    expected = [code.d if x in lam else code.n // t for x in F.elements()]
    measured = [hamming_weight(poly_sub(g, poly_scale(shifted, x))) for x in F.elements()]
    pairs = sum(
        1
        for mu in F.elements()
        for x in F.elements()
        if hamming_weight(poly_add(poly_scale(g, mu), poly_scale(shifted, x))) == code.d
    )
    return [
        Check("weight_lemma", expected, measured),
        Check("pair_count", pair_weight_count(code.q, r, nu2u), pairs),
    ]


def verify_code(
    code: CodeRecord, config: Config | None = None, tower: FieldTower | None = None
) -> VerificationReport:
    """Check one code's closed forms against brute force and its structural claims."""
    config = config or Config()
    report = VerificationReport((code.q, code.n, render_poly(code.check_poly)), code.label)
    checks, skipped = report.checks, report.skipped
    expanded = code.enumerator.expand()
    size = code.q**code.k

    brute = None
    try:
        brute = brute_force_distribution(code, config.cap, config.chunks)
    except CapExceededError:
        skipped.append(Skip("distribution", "cap"))
        skipped.append(Skip("min_distance", "cap"))
    if brute is not None:
        checks.append(Check("enumerated", size, sum(brute.values())))
        checks.append(Check("distribution", expanded, brute))
        checks.append(Check("min_distance", code.d, min(w for w in brute if w > 0)))

    checks.append(Check("mass", size, sum(expanded.values())))
    divisor = code.weight_divisor
    checks.append(
        Check("divisibility", 0, sum(1 for w, c in expanded.items() if c and w % divisor))
    )
    product = poly_mul(code.generator_poly, code.check_poly)
    checks.append(
        Check(
            "generator_product",
            render_poly(x_n_minus_one(code.n, product.field)),
            render_poly(product),
        )
    )

    if code.family != "trinomial":
        for name in ("weight_lemma", "pair_count", "lambda_size"):
            skipped.append(Skip(name, "not-trinomial"))
        return report

    if tower is None:
        tower = build_tower(*prime_power(code.q))
    lam = lambda_set(code.factor.kind.a, code.r, code.nu2u, tower)
    checks.append(Check("lambda_size", 2 ** (code.r - code.nu2u) - 1, len(lam)))
    if code.q > config.lemma_q_bound:
        skipped.append(Skip("weight_lemma", "q-bound"))
        skipped.append(Skip("pair_count", "q-bound"))
    else:
        checks.extend(_weight_lemma_checks(code, tower))
    return report


# --- catalog-level checks ---------------------------------------------------------


@dataclass(frozen=True)
class CountAudit:
    """Predicted versus measured number of factors of one (degree, class).

    `passed` compares the conjugate-pair count; `flagged` marks rows whose
    printed formula value differs from what the factorization produced.
    """

    degree: int
    klass: str
    source: str
    formula: int
    expected: int
    measured: int

    @property
    def passed(self) -> bool:
        return self.expected == self.measured

    @property
    def flagged(self) -> bool:
        return self.formula != self.measured

    def to_dict(self) -> dict:
        return {
            "degree": self.degree,
            "class": self.klass,
            "source": self.source,
            "formula": self.formula,
            "expected": self.expected,
            "measured": self.measured,
            "pass": self.passed,
            "flagged": self.flagged,
        }


def audit_counts(params: CaseParameters, factors: list[IrreducibleFactor]) -> list[CountAudit]:
    """Compare predicted_counts with the factors actually produced.

    Args:
        params: Case parameters of (n, q).
        factors: Every factor of the catalog.

    Returns:
        One row per predicted (degree, class), then rows for measured classes
        no formula predicts.
    """
    measured = measured_counts(factors)
    rows = []
    seen = set()
    for pred in predicted_counts(params):
        key = (pred.degree, pred.klass)
        seen.add(key)
        rows.append(
            CountAudit(
                pred.degree, pred.klass, pred.source, pred.formula, pred.expected, measured[key]
            )
        )
    for (degree, klass), count in sorted(measured.items()):
        if (degree, klass) not in seen:
            rows.append(CountAudit(degree, klass, "unpredicted", 0, 0, count))
    return rows


@dataclass
class CatalogVerification:
    reports: list[VerificationReport]
    audit: list[CountAudit]

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.reports) and all(a.passed for a in self.audit)

    @property
    def failed_checks(self) -> int:
        return sum(len(r.failures) for r in self.reports) + sum(
            1 for a in self.audit if not a.passed
        )

    @property
    def skipped_checks(self) -> int:
        return sum(len(r.skipped) for r in self.reports)

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "reports": [r.to_dict() for r in self.reports],
            "audit": [a.to_dict() for a in self.audit],
        }


def verify_catalog(
    records: list[CodeRecord],
    params: CaseParameters,
    tower: FieldTower,
    config: Config | None = None,
    on_report: Callable[[VerificationReport], None] | None = None,
) -> CatalogVerification:
    """verify_code over every record on config.workers threads; reports keep record order."""
    config = config or Config()
    with ThreadPoolExecutor(max_workers=config.workers) as pool:
        reports = []
        for report in pool.map(lambda rec: verify_code(rec, config, tower), records):
            reports.append(report)
            if on_report is not None:
                on_report(report)
    audit = audit_counts(params, [rec.factor for rec in records])
    return CatalogVerification(reports, audit)

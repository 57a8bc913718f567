"""JSON and CSV renderers."""

import csv
import io
import json

from ..cycloweight.catalog import SCHEMA, CatalogDocument, FactorListing
from ..cycloweight.oracle import CatalogVerification
from .base import BaseRenderer


class JsonRenderer(BaseRenderer):
    """Versioned JSON documents; catalogs round-trip through CatalogDocument.from_dict."""

    def _dump(self, data: dict) -> str:
        return json.dumps(data, indent=2) + "\n"

    def render_catalog(self, doc: CatalogDocument) -> str:
        return self._dump(doc.to_dict())

    def render_factors(self, listing: FactorListing) -> str:
        return self._dump(listing.to_dict())

    def render_verification(self, doc: CatalogDocument, result: CatalogVerification) -> str:
        return self._dump({"schema": SCHEMA, "q": doc.q, "n": doc.n, **result.to_dict()})


def _cell(value) -> str:
    if isinstance(value, dict):
        return json.dumps({str(k): v for k, v in value.items()})
    if isinstance(value, (list, tuple)):
        return json.dumps(list(value))
    return "" if value is None else str(value)


class CsvRenderer(BaseRenderer):
    """One row per code; with expand, one weight,count block per group."""

    def _write(self, rows) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerows(rows)
        return buf.getvalue()

    def render_catalog(self, doc: CatalogDocument) -> str:
        if not any(g.expanded is not None for g in doc.groups):
            rows = [("family", "k", "d", "nu2u", "h", "enumerator")]
            for g in doc.groups:
                rows += [(g.family, g.k, g.d, _cell(g.nu2u), h, g.enumerator) for h in g.rows]
            return self._write(rows)
        blocks = []
        for g in doc.groups:
            header = f"# {g.label(doc.q, doc.n)} {g.klass} {'; '.join(g.rows)}\n"
            blocks.append(header + self._write([("weight", "count"), *g.expanded]))
        return "\n".join(blocks)

    def render_factors(self, listing: FactorListing) -> str:
        rows = [("source", "h")]
        rows += [("closed-form", h) for h in listing.factors or []]
        rows += [("coset-oracle", h) for h in listing.oracle or []]
        return self._write(rows)

    def render_verification(self, doc: CatalogDocument, result: CatalogVerification) -> str:
        rows = [("code", "h", "check", "status", "predicted", "measured")]
        for report in result.reports:
            h = report.code_id[2]
            for c in report.checks:
                status = "pass" if c.passed else "fail"
                rows.append(
                    (report.label, h, c.name, status, _cell(c.predicted), _cell(c.measured))
                )
            for s in report.skipped:
                rows.append((report.label, h, s.name, "skip", s.reason, ""))
        for a in result.audit:
            status = "pass" if a.passed else "fail"
            name = f"count:{a.degree}:{a.klass}"
            rows.append(("", "", name, status, a.expected, a.measured))
        return self._write(rows)

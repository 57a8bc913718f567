"""Plain-text renderer laid out like published code tables."""

from ..cycloweight.catalog import CatalogDocument, CatalogGroup, FactorListing
from ..cycloweight.oracle import CatalogVerification
from .base import BaseRenderer


def _power(t: int) -> str:
    return "x" if t == 1 else f"x^{t}"


def section_title(group: CatalogGroup) -> str:
    if group.family == "binomial":
        return "Codes generated by binomials"
    return f"Codes generated by trinomials of the form {_power(2 * group.t)}+a{_power(group.t)}+b"


class TextRenderer(BaseRenderer):
    """Human-readable tables."""

    def render_catalog(self, doc: CatalogDocument) -> str:
        params = " ".join(f"{k}={v}" for k, v in doc.parameters.items())
        lines = [
            f"cycloweight catalog q={doc.q} n={doc.n}",
            f"case: {doc.case} {params}",
            f"codes: {doc.code_count}  groups: {len(doc.groups)}",
        ]
        title = None
        for group in doc.groups:
            if section_title(group) != title:
                title = section_title(group)
                lines += ["", title]
            head = f"{group.label(doc.q, doc.n)}  "
            if group.nu2u is not None:
                head += f"nu2(u)={group.nu2u}  "
            lines.append(f"{head}A(z)={group.enumerator}  count={len(group.rows)}")
            lines += [f"  {h}" for h in group.rows]
            if group.expanded is not None:
                terms = " ".join(f"{w}:{c}" for w, c in group.expanded)
                lines.append(f"  distribution: {terms}")
        return "\n".join(lines) + "\n"

    def render_factors(self, listing: FactorListing) -> str:
        lines = [f"factors of x^{listing.n} - 1 over F_{listing.q}"]
        if listing.factors is None:
            lines.append("closed form: out of regime")
        else:
            lines.append(f"closed form ({listing.case}): {len(listing.factors)} factors")
            lines += [f"  {h}" for h in listing.factors]
        if listing.oracle is not None:
            lines.append(f"coset oracle: {len(listing.oracle)} factors")
            lines += [f"  {h}" for h in listing.oracle]
        if listing.agree is not None:
            lines.append(f"agreement: {'yes' if listing.agree else 'NO'}")
        return "\n".join(lines) + "\n"

    def render_verification(self, doc: CatalogDocument, result: CatalogVerification) -> str:
        lines = [
            f"verify q={doc.q} n={doc.n}: {len(result.reports)} codes, "
            f"{result.failed_checks} failed checks, {result.skipped_checks} skipped"
        ]
        for report in result.reports:
            status = "ok" if report.ok else "FAILED"
            lines.append(f"{report.label}  {report.code_id[2]}  {status}")
            for check in report.failures:
                lines.append(
                    f"  fail {check.name}: predicted={check.predicted} measured={check.measured}"
                )
            for skip in report.skipped:
                lines.append(f"  skip {skip.name}: {skip.reason}")
        lines.append("count audit")
        for row in result.audit:
            note = "" if row.passed else "  FAIL"
            if row.flagged:
                note += "  (formula differs)"
            lines.append(
                f"  degree {row.degree} {row.klass} [{row.source}]: formula={row.formula} "
                f"expected={row.expected} measured={row.measured}{note}"
            )
        lines.append(f"result: {'PASS' if result.ok else 'FAIL'}")
        return "\n".join(lines) + "\n"

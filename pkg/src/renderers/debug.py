"""Progress output on stderr."""

import sys
from typing import TextIO

from ..cycloweight.config import Config
from ..cycloweight.oracle import VerificationReport


class ProgressRenderer:
    """Carriage-return status line updated once per verified code."""

    def __init__(self, config: Config, total: int | None = None, stream: TextIO | None = None):
        """Initialize progress renderer.

        Args:
            config: Configuration object.
            total: Number of codes expected (for percentage display).
            stream: Where to write; stderr by default so stdout stays a clean document.
        """
        self.config = config
        self.total = total
        self.stream = stream or sys.stderr
        self.count = 0

    def render_state(self, report: VerificationReport) -> None:
        self.count += 1
        status = "ok" if report.ok else "FAILED"
        if self.total:
            pct = self.count / self.total * 100
            line = f"\rVerifying: {self.count}/{self.total} ({pct:.1f}%) | {report.label} {status}"
        else:
            line = f"\rVerifying: {self.count} codes | {report.label} {status}"
        self.stream.write(f"{line:<72}")
        self.stream.flush()

    def finalize(self) -> None:
        self.stream.write(f"\nComplete! Verified {self.count} codes.\n")
        self.stream.flush()

"""Base renderer abstract class."""

import sys
from abc import ABC, abstractmethod
from typing import TextIO

from ..cycloweight.catalog import CatalogDocument, FactorListing
from ..cycloweight.config import Config
from ..cycloweight.oracle import CatalogVerification


class BaseRenderer(ABC):
    """Abstract base class for cycloweight output formats.

    Renderers turn catalog, factor and verification documents into text and
    write it to a stream (stdout unless told otherwise).
    """

    def __init__(self, config: Config, stream: TextIO | None = None):
        """Initialize renderer with configuration.

        Args:
            config: Configuration object with output settings.
            stream: Destination for rendered documents.
        """
        self.config = config
        self.stream = stream or sys.stdout

    @abstractmethod
    def render_catalog(self, doc: CatalogDocument) -> str:
        """Render every code of one (q, n).

        Args:
            doc: Grouped catalog.

        Returns:
            The rendered document.
        """

    @abstractmethod
    def render_factors(self, listing: FactorListing) -> str:
        """Render a factor list of x^n - 1."""

    @abstractmethod
    def render_verification(self, doc: CatalogDocument, result: CatalogVerification) -> str:
        """Render per-code verification reports and the count audit."""

    def emit(self, text: str) -> None:
        """Write one rendered document."""
        self.stream.write(text if text.endswith("\n") else text + "\n")

    def finalize(self) -> None:
        """Flush the output stream."""
        self.stream.flush()

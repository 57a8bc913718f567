"""Configuration dataclass for cycloweight."""

from dataclasses import dataclass

OUTPUT_FORMATS = ("text", "json", "csv")
CHANNELS = ("binary", "qary")


@dataclass
class Config:
    """Configuration for catalog building, verification and rendering.

    Every option is set explicitly (from CLI flags or programmatically);
    nothing is read from the environment.
    """

    # === Verification Options ===
    cap: int = 10**6
    """Largest number of codewords (q^k) the brute-force oracle will enumerate."""

    lemma_q_bound: int = 9
    """Largest q for the exhaustive weight-lemma and pair-count checks."""

    workers: int = 1
    """Number of threads used to verify codes of one catalog."""

    chunks: int = 1
    """Number of disjoint message-space chunks per brute-force run."""

    # === Factorization Options ===
    coset_degree_cap: int = 12
    """Largest splitting-field degree the coset oracle will construct."""

    # === Output Options ===
    output_format: str = "text"
    """Document format: 'text', 'json' or 'csv'."""

    expand: bool = False
    """Include expanded weight distributions in catalog output."""

    channel: str = "qary"
    """Channel model for undetected-error probability: 'binary' or 'qary'."""

    verbose: bool = False
    """Report per-code progress on stderr."""

    def __post_init__(self):
        """Validate option values."""
        if self.output_format not in OUTPUT_FORMATS:
            raise ValueError(
                f"output_format must be one of {OUTPUT_FORMATS}, got '{self.output_format}'"
            )
        if self.channel not in CHANNELS:
            raise ValueError(f"channel must be 'binary' or 'qary', got '{self.channel}'")
        for name in ("cap", "lemma_q_bound", "workers", "chunks", "coset_degree_cap"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive, got {getattr(self, name)}")

"""Run configuration shared by the library entry points and the CLI."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .algebra import EXACT, ApproxField


@dataclass(frozen=True)
class RunConfig:
    mode: str = "exact"
    precision_bits: int = 128
    tolerance: float = 1e-30
    budget: int = 64
    exponent_cap: int = 128
    extra_terms: int = 3
    # oracle sampling grid: y = y0 * ratio**k, k < samples
    y0: float = 1e-2
    ratio: float = 0.8
    samples: int = 40
    probes: int = 20
    seed: int = 0
    side: str = "both"
    output: str = "text"

    def __post_init__(self):
        if self.mode not in ("exact", "approx"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.mode == "approx" and self.precision_bits < 64:
            raise ValueError("approx mode needs precision >= 64 bits")
        if self.budget <= 0 or self.exponent_cap <= 0:
            raise ValueError("budgets must be positive")
        if self.side not in ("plus", "minus", "both"):
            raise ValueError(f"unknown side {self.side!r}")

    @cached_property
    def field(self):
        if self.mode == "exact":
            return EXACT
        return ApproxField(self.precision_bits, self.tolerance)

    def budgets(self) -> dict:
        return {"tree_levels": self.budget, "exponent_cap": self.exponent_cap,
                "extra_terms": self.extra_terms}

"""Inequality-check reports shared by the concurrence and coherence modules."""

from __future__ import annotations

from dataclasses import dataclass

from .tolerances import INEQ_SLACK


@dataclass(frozen=True)
class InequalityReport:
    """Record of one lower <= middle <= upper check.

    ``passed`` is true when both margins clear ``-INEQ_SLACK`` (the upper
    margin is skipped when ``upper`` is absent) and any extra chain condition
    supplied by the producing check holds.
    """

    lower: float
    middle: float
    upper: float | None
    lower_margin: float
    upper_margin: float | None
    passed: bool
    context: str = ""

    @classmethod
    def from_bounds(
        cls,
        lower: float,
        middle: float,
        upper: float | None = None,
        *,
        context: str = "",
        slack: float = INEQ_SLACK,
        extra_ok: bool = True,
    ) -> "InequalityReport":
        lower_margin = middle - lower
        upper_margin = None if upper is None else upper - middle
        passed = (
            lower_margin >= -slack
            and (upper_margin is None or upper_margin >= -slack)
            and extra_ok
        )
        return cls(lower, middle, upper, lower_margin, upper_margin, passed, context)

    def as_dict(self) -> dict:
        return {
            "lower": self.lower,
            "middle": self.middle,
            "upper": self.upper,
            "lower_margin": self.lower_margin,
            "upper_margin": self.upper_margin,
            "pass": self.passed,
            "context": self.context,
        }

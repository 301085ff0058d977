"""
Solve request schema: one skyline query as given on the command line
"""
from pydantic import BaseModel, Field, field_validator, model_validator
from typing import List, Optional

from irts.schemas.bench import SolverName


class BudgetSpec(BaseModel):
    """Absolute budget ('21') or a factor of the preferred-path cost ('1.25x')."""

    value: float = Field(ge=0)
    relative: bool = False

    @classmethod
    def parse(cls, text: str) -> "BudgetSpec":
        raw = text.strip().lower()
        relative = raw.endswith("x")
        number = raw[:-1] if relative else raw
        try:
            value = float(number)
        except ValueError:
            raise ValueError(f"invalid budget '{text}' (use e.g. 21 or 1.25x)") from None
        return cls(value=value, relative=relative)

    def resolve(self, pref_cost: float) -> float:
        return self.value * pref_cost if self.relative else self.value


class SolveRequest(BaseModel):
    network: str
    tasks: Optional[str] = None
    source: int
    destination: int
    budget: BudgetSpec
    solver: SolverName = "exact"
    k: Optional[int] = Field(default=None, ge=1)
    trace: bool = False
    preferred: Optional[List[int]] = None
    force: bool = False

    @field_validator("budget", mode="before")
    @classmethod
    def _parse_budget(cls, value):
        if isinstance(value, (int, float)):
            return BudgetSpec(value=float(value))
        if isinstance(value, str):
            return BudgetSpec.parse(value)
        return value

    @field_validator("preferred", mode="before")
    @classmethod
    def _parse_preferred(cls, value):
        if isinstance(value, str):
            return [int(v) for v in value.replace(",", " ").split()]
        return value

    @model_validator(mode="after")
    def _check(self) -> "SolveRequest":
        if self.k is not None and self.solver != "kgh":
            raise ValueError("k applies only to the kgh solver")
        if self.preferred is not None:
            if not self.preferred or self.preferred[0] != self.source or self.preferred[-1] != self.destination:
                raise ValueError("preferred path must start at source and end at destination")
        return self

"""
Benchmark schemas: scenario parameters, sweep specification, evaluation records
"""
from enum import Enum
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator
from typing import Any, List, Literal, Optional

from irts.core.config import settings


class RewardDistribution(str, Enum):
    EQUAL = "equal"
    UNIFORM = "uniform"  # integers 1..20
    EXPONENTIAL = "exponential"  # lambda = 1


class ScenarioConfig(BaseModel):
    pref_cost_target: float = Field(default=2500.0, gt=0)  # meters
    budget_factor: float = Field(default=1.25, ge=1.0)
    num_tasks: int = Field(default=20, ge=1)
    reward_dist: RewardDistribution = RewardDistribution.UNIFORM
    clusters: Optional[int] = Field(default=None, ge=1)
    seed: int = Field(default=0, ge=0, lt=2**64)


SweepParameter = Literal["pref_cost", "budget_factor", "num_tasks", "reward_dist", "clusters", "k"]
SolverName = Literal["exact", "doh", "kgh", "mdh", "mrh", "oracle"]


class SweepSpec(BaseModel):
    """One varying parameter, every other parameter at its default."""

    model_config = ConfigDict(extra="forbid")

    parameter: SweepParameter
    values: List[str]
    repetitions: int = Field(default=50, ge=1)
    seed: int = Field(default=0, ge=0)
    solvers: List[SolverName] = ["doh", "kgh", "mdh", "mrh"]
    baseline: Optional[SolverName] = "doh"
    k: int = Field(default=settings.DEFAULT_K, ge=1)

    # defaults of the non-varying parameters
    pref_cost: float = Field(default=2500.0, gt=0)
    budget_factor: float = Field(default=1.25, ge=1.0)
    num_tasks: int = Field(default=20, ge=1)
    reward_dist: RewardDistribution = RewardDistribution.UNIFORM
    clusters: Optional[int] = Field(default=None, ge=1)

    # network: a file, or a synthetic grid
    network: Optional[str] = None
    grid_rows: int = Field(default=settings.GRID_ROWS, ge=1)
    grid_cols: int = Field(default=settings.GRID_COLS, ge=1)
    grid_cell_size: float = Field(default=settings.GRID_CELL_SIZE, gt=0)
    grid_tasks: int = Field(default=settings.GRID_TASKS, ge=0)
    grid_seed: int = Field(default=0, ge=0)

    @field_validator("values", "solvers", mode="before")
    @classmethod
    def _split_list(cls, value: Any) -> Any:
        if isinstance(value, str):
            return [item.strip() for item in value.split(",") if item.strip()]
        return value

    @field_validator("baseline", "clusters", "network", mode="before")
    @classmethod
    def _blank_is_none(cls, value: Any) -> Any:
        if isinstance(value, str) and value.strip().lower() in ("", "none"):
            return None
        return value

    @model_validator(mode="after")
    def _check_values(self) -> "SweepSpec":
        if not self.values:
            raise ValueError("sweep needs at least one value")
        for raw in self.values:
            self.scenario_config(raw, seed=0)
            self.k_for(raw)
        return self

    def k_for(self, raw: str) -> int:
        if self.parameter != "k":
            return self.k
        k = int(raw)
        if k < 1:
            raise ValueError(f"k must be >= 1, got {k}")
        return k

    def scenario_config(self, raw: str, seed: int) -> ScenarioConfig:
        fields = {
            "pref_cost_target": self.pref_cost,
            "budget_factor": self.budget_factor,
            "num_tasks": self.num_tasks,
            "reward_dist": self.reward_dist,
            "clusters": self.clusters,
            "seed": seed,
        }
        if self.parameter == "pref_cost":
            fields["pref_cost_target"] = float(raw)
        elif self.parameter == "budget_factor":
            fields["budget_factor"] = float(raw)
        elif self.parameter == "num_tasks":
            fields["num_tasks"] = int(raw)
        elif self.parameter == "reward_dist":
            fields["reward_dist"] = RewardDistribution(raw.lower())
        elif self.parameter == "clusters":
            fields["clusters"] = None if raw.lower() == "none" else int(raw)
        return ScenarioConfig(**fields)


RECORD_COLUMNS = [
    "solver", "seed", "pref_cost", "budget_factor", "num_tasks", "reward_dist",
    "clusters", "runtime_ms", "size", "precision", "recall",
]


class EvalRecord(BaseModel):
    solver: str
    seed: int
    pref_cost: float
    budget_factor: float
    num_tasks: int
    reward_dist: RewardDistribution
    clusters: Optional[int] = None
    runtime_ms: Optional[float] = None
    size: int
    # absent unless a baseline was computed and the sets are non-empty
    precision: Optional[float] = Field(default=None, ge=0, le=1)
    recall: Optional[float] = Field(default=None, ge=0, le=1)
    optimistic: bool = False
    parameter_value: Optional[str] = None

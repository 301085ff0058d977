"""
Schemas package
All Pydantic models for records that cross a file or process boundary
"""
from irts.schemas.skyline import SkylineDocument, SkylinePointSchema
from irts.schemas.bench import (
    RECORD_COLUMNS,
    EvalRecord,
    RewardDistribution,
    ScenarioConfig,
    SweepSpec,
)
from irts.schemas.request import BudgetSpec, SolveRequest

__all__ = [
    "SkylineDocument",
    "SkylinePointSchema",
    "RECORD_COLUMNS",
    "EvalRecord",
    "RewardDistribution",
    "ScenarioConfig",
    "SweepSpec",
    "BudgetSpec",
    "SolveRequest",
]

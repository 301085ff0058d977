"""
Skyline schemas: the machine-readable result document
"""
from pydantic import BaseModel
from typing import List, Optional


class SkylinePointSchema(BaseModel):
    detour: float
    travel: float
    reward: float
    path: List[int]  # network vertex ids, source first


class SkylineDocument(BaseModel):
    solver: Optional[str] = None
    source: Optional[int] = None
    destination: Optional[int] = None
    budget: Optional[float] = None
    points: List[SkylinePointSchema]

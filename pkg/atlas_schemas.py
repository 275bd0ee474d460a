# atlas_schemas.py
from typing import List, Optional

from pydantic import BaseModel, validator

import config
from affine import validate_type_filter
from errors import UnknownType

OUTPUT_FORMATS = ("json", "dot", "text")


class SweepConfig(BaseModel):
    """Options shared by every involution sweep"""
    max_rank: int = config.MAX_RANK
    types: Optional[List[str]] = None
    level_bound: int = config.LEVEL_BOUND
    jobs: int = config.SWEEP_JOBS
    output: Optional[str] = None
    format: str = "json"

    @validator('max_rank')
    def validate_max_rank(cls, v):
        if v < 1:
            raise ValueError('max_rank must be at least 1')
        return v

    @validator('level_bound', 'jobs')
    def validate_positive(cls, v):
        if v < 1:
            raise ValueError('must be at least 1')
        return v

    @validator('types')
    def validate_types(cls, v):
        try:
            return validate_type_filter(v)
        except UnknownType as e:
            raise ValueError(e.detail)

    @validator('format')
    def validate_format(cls, v):
        if v not in OUTPUT_FORMATS:
            raise ValueError(f'format must be one of {", ".join(OUTPUT_FORMATS)}')
        return v


class CartanMatrixIn(BaseModel):
    entries: List[List[int]]

    @validator('entries')
    def validate_square(cls, v):
        if not v or any(len(row) != len(v) for row in v):
            raise ValueError('Cartan matrix must be square and non-empty')
        return v


class DiagramResponse(BaseModel):
    verdict: str
    label: Optional[str] = None
    labels: Optional[List[int]] = None
    twist: Optional[int] = None
    dot: Optional[str] = None

    class Config:
        from_attributes = True


class GradingIn(BaseModel):
    """Kac marks on the affine diagram of (type, twist)"""
    type: str
    twist: int = 1
    marks: List[int]
    level_bound: Optional[int] = None

    @validator('twist')
    def validate_twist(cls, v):
        if v not in (1, 2, 3):
            raise ValueError('twist must be 1, 2 or 3')
        return v


class SubalgebraVerdict(BaseModel):
    grading: Optional[dict] = None
    subalgebra: str
    dim: int
    heights: List[int]
    spherical: bool
    abar_contained: bool
    witness: Optional[List[int]] = None


class HermitianResponse(BaseModel):
    label: str
    rank: int
    expected_rank: Optional[int] = None
    tube_type: bool
    cascade: List[List[int]]
    unique_antichain: Optional[List[List[int]]] = None


class SuiteResponse(BaseModel):
    suite: str
    ok: bool
    checked: int
    failures: List[dict]

    class Config:
        from_attributes = True

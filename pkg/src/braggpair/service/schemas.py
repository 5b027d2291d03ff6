"""Pydantic request/response models for the HTTP service."""
from __future__ import annotations

import math
from typing import Literal, Optional

from pydantic import BaseModel, Field

from ..selfcheck import DEFAULT_SAMPLES, DEFAULT_SEED
from ..single_mode import Scenario, Statistics
from ..sweeps import SweepSpec

StatCode = Literal["dis", "bos", "fer"]
ScenarioCode = Literal["same", "opposite"]


class HealthResponse(BaseModel):
    status: str
    service: str
    version: str


class SweepRequest(BaseModel):
    """Either a named preset or a full sweep parameterization."""

    preset: Optional[str] = None
    scenario: ScenarioCode = "opposite"
    statistics: list[StatCode] = ["dis", "bos", "fer"]
    w_start: float = 0.0
    w_stop: float = math.pi
    w_count: int = Field(default=401, ge=2)
    mode: Literal["single", "multi"] = "single"
    n_t: float = Field(default=0.0, ge=0.0, le=1.0)
    m_t: float = Field(default=0.0, ge=0.0, le=1.0)
    k0: float = 0.0
    k0_prime: float = 0.0
    mu: float = Field(default=1.0, gt=0.0)

    def to_spec(self) -> SweepSpec:
        return SweepSpec(
            scenario=Scenario(self.scenario),
            statistics=tuple(Statistics(code) for code in self.statistics),
            w_start=self.w_start,
            w_stop=self.w_stop,
            w_count=self.w_count,
            multi_mode=self.mode == "multi",
            n_t=self.n_t,
            m_t=self.m_t,
            k0=self.k0,
            k0_prime=self.k0_prime,
            mu=self.mu,
        )


class SweepResponse(BaseModel):
    csv: str
    rows: int
    columns: list[str]


class DipFindRequest(BaseModel):
    scenario: ScenarioCode = "opposite"
    w_start: float = 0.0
    w_stop: float = math.pi
    w_count: int = Field(default=401, ge=2)
    mode: Literal["single", "multi"] = "single"
    n_t: float = Field(default=0.0, ge=0.0, le=1.0)
    m_t: float = Field(default=0.0, ge=0.0, le=1.0)
    k0: float = 0.0
    k0_prime: float = 0.0
    mu: float = Field(default=1.0, gt=0.0)
    tolerance: float = Field(default=1e-9, gt=0.0)

    def to_spec(self) -> SweepSpec:
        return SweepSpec(
            scenario=Scenario(self.scenario),
            statistics=(Statistics.BOSON,),
            w_start=self.w_start,
            w_stop=self.w_stop,
            w_count=self.w_count,
            multi_mode=self.mode == "multi",
            n_t=self.n_t,
            m_t=self.m_t,
            k0=self.k0,
            k0_prime=self.k0_prime,
            mu=self.mu,
        )


class DipFindResponse(BaseModel):
    w_values: list[float]


class OverlapEstimateRequest(BaseModel):
    measured_mixed: float = Field(ge=0.0, le=1.0)
    w: float
    n_t: float = Field(default=0.0, ge=0.0, le=1.0)


class OverlapEstimateResponse(BaseModel):
    overlap: float
    raw: float
    clamped: bool


class CheckRequest(BaseModel):
    seed: int = Field(default=DEFAULT_SEED, ge=0, lt=2**64)
    samples: int = Field(default=DEFAULT_SAMPLES, ge=1)


class CheckOutcome(BaseModel):
    name: str
    passed: bool
    detail: str


class CheckResponse(BaseModel):
    passed: bool
    results: list[CheckOutcome]
    report: str

"""Pydantic request/response models for the web service."""

from __future__ import annotations

from typing import Any, Optional

from pydantic import BaseModel, Field


class TableRequest(BaseModel):
    table: str = Field(description="Cayley table in the text format ('n' line, then n rows)")


class RelationsRequest(TableRequest):
    eggbox: bool = False


class CheckOrderRequest(TableRequest):
    sub: Optional[list[int]] = Field(default=None, description="subset indices; whole semigroup when omitted")
    notion: str = "straight-left"
    prop31: bool = False


class CheckStarPairRequest(TableRequest):
    sub: Optional[list[int]] = None
    pair: str = Field(default="induced", description="induced | starred | equality")


class HarnessRequest(BaseModel):
    max_order: Optional[int] = Field(default=None, ge=1, le=3)
    fixtures: bool = False
    suites: Optional[list[str]] = None
    threads: Optional[int] = Field(default=None, ge=1)


class ExampleRequest(BaseModel):
    which: str = Field(description="brandt-z | brandt-mod | bicyclic-z")
    window: int = Field(default=5, ge=4)
    modulus: int = Field(default=3, gt=2)
    verify: bool = False


class EnumerateRequest(BaseModel):
    order: int = Field(ge=1, le=4)
    up_to_iso: bool = False
    limit: int = Field(default=0, ge=0)


class Report(BaseModel):
    model_config = {"extra": "allow"}

    schema_version: int = Field(alias="schema")
    tool: dict[str, str]
    input: dict[str, Any]
    checks: list[dict[str, Any]]
    summary: dict[str, int]


class EggboxResponse(BaseModel):
    digest: str
    eggbox: str


class HealthResponse(BaseModel):
    status: str
    version: str

"""Request and response models shared by the HTTP service and the CLI."""
from __future__ import annotations

from typing import Any, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .checks import SUITES


class RunConfig(BaseModel):
    model_config = ConfigDict(extra="forbid")

    n: int = Field(2, ge=1, le=6)
    mode: Literal["generic", "cyclotomic"] = "generic"
    t: Optional[int] = None
    bicharacter: Optional[dict[str, Any]] = None
    degree_bound: int = Field(8, ge=1)

    @model_validator(mode="after")
    def _check_mode(self) -> "RunConfig":
        if self.mode == "cyclotomic":
            if self.t is None:
                raise ValueError("cyclotomic mode needs t")
            if self.t <= 4:
                raise ValueError("t must exceed 4")
        elif self.t is not None:
            raise ValueError("t is only meaningful in cyclotomic mode")
        if self.bicharacter is not None and int(self.bicharacter.get("n", -1)) != self.n:
            raise ValueError("bicharacter rank does not match n")
        return self


class PhiRequest(BaseModel):
    config: RunConfig = Field(default_factory=RunConfig)
    S: list[int] = Field(default_factory=list)
    k: int
    m: int


class IntervalRequest(BaseModel):
    config: RunConfig = Field(default_factory=RunConfig)
    k: int
    m: int


class DecomposeRequest(BaseModel):
    """Either a Phi^S(k,m) (S, k, m) or an explicit element."""

    config: RunConfig = Field(default_factory=RunConfig)
    S: list[int] = Field(default_factory=list)
    k: Optional[int] = None
    m: Optional[int] = None
    element: Optional[dict[str, Any]] = None

    @model_validator(mode="after")
    def _one_source(self) -> "DecomposeRequest":
        has_km = self.k is not None and self.m is not None
        if has_km == (self.element is not None):
            raise ValueError("give either k and m or an element")
        return self


class ThetaRequest(BaseModel):
    config: RunConfig = Field(default_factory=RunConfig)
    theta: list[int]


class VerifyRequest(BaseModel):
    config: RunConfig = Field(default_factory=RunConfig)
    suite: str

    @model_validator(mode="after")
    def _known_suite(self) -> "VerifyRequest":
        if self.suite not in SUITES:
            raise ValueError(f"unknown suite {self.suite!r}; choose from {', '.join(SUITES)}")
        return self


# --- responses -----------------------------------------------------------------

class TermModel(BaseModel):
    word: list[int]
    coeff: str


class ElementModel(BaseModel):
    degree: Optional[list[int]]
    terms: list[TermModel]


class PBWTerm(BaseModel):
    monomial: list[tuple[str, int]]
    coeff: str


class SchemeModel(BaseModel):
    k: int
    m: int
    black: list[int]
    plain: str
    shifted: Optional[str] = None


class PhiResponse(BaseModel):
    S: list[int]
    k: int
    m: int
    value: ElementModel
    text: str
    decomposition: list[PBWTerm]
    leading_term: Optional[PBWTerm]
    white_regular: bool
    black_regular: bool
    flags: list[str]
    scheme: SchemeModel


class DecomposeResponse(BaseModel):
    degree: Optional[list[int]]
    decomposition: list[PBWTerm]
    leading_term: Optional[PBWTerm]


class CoproductTerm(BaseModel):
    group: list[int]
    left: list[int]
    right: list[int]
    coeff: str


class CoproductResponse(BaseModel):
    k: int
    m: int
    matches: bool
    computed: list[CoproductTerm]
    expected: list[CoproductTerm]
    mismatched: list[CoproductTerm]


class GeneratorModel(BaseModel):
    S: list[int]
    k: int
    m: int


class SubalgebraResponse(BaseModel):
    theta: list[int]
    R: dict[str, list[int]]
    T: dict[str, list[int]]
    generators: list[GeneratorModel]
    roots: list[str]
    simple_roots: list[str]


class EnumerateResponse(BaseModel):
    n: int
    count: int
    subalgebras: list[SubalgebraResponse]


class LatticeResponse(BaseModel):
    n: int
    nodes: list[str]
    edges: dict[str, list[str]]


class CheckModel(BaseModel):
    name: str
    ok: bool
    checked: int
    failures: list[str]


class VerifyResponse(BaseModel):
    suite: str
    ok: bool
    results: list[CheckModel]

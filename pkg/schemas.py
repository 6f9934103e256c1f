from fractions import Fraction
from typing import Any, Dict, List, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from config import DEFAULT_JOBS, DEFAULT_MAX_DEGREE, DEFAULT_N, DEFAULT_MU, DEFAULT_REPORT_PATH


# === Input Validation Constants ===
MIN_N = 3
MAX_N = 5
MAX_DEGREE = 6
MAX_JOBS = 64
SUITES = (
    "hopf",
    "relations",
    "commutation",
    "casimir",
    "tridiagonal",
    "appendix",
    "aw",
    "model",
    "monogenics",
)


def parse_rational(text: Union[str, int, Fraction]) -> Fraction:
    """Parse "p/d" (or an int) into a Fraction."""
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    text = text.strip()
    if not text:
        raise ValueError("empty rational")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational: {text!r}") from exc


def format_rational(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


# === Run Configuration ===

class RunConfig(BaseModel):
    n: int = Field(DEFAULT_N, ge=MIN_N, le=MAX_N)
    mu: List[str] = Field(default_factory=lambda: DEFAULT_MU.split(","))
    max_degree: int = Field(DEFAULT_MAX_DEGREE, ge=1, le=MAX_DEGREE)
    suites: List[str] = Field(default_factory=lambda: ["all"])
    report_path: str = Field(DEFAULT_REPORT_PATH, max_length=1000)
    jobs: int = Field(DEFAULT_JOBS, ge=1, le=MAX_JOBS)

    @field_validator("mu", mode="before")
    @classmethod
    def split_mu(cls, value: Any) -> Any:
        if isinstance(value, str):
            return [part for part in value.split(",") if part.strip()]
        if isinstance(value, (list, tuple)):
            return [str(v) for v in value]
        return value

    @field_validator("mu")
    @classmethod
    def canonical_mu(cls, value: List[str]) -> List[str]:
        out = []
        for item in value:
            r = parse_rational(item)
            if r <= 0:
                raise ValueError(f"mu entries must be positive, got {item!r}")
            out.append(format_rational(r))
        return out

    @field_validator("suites", mode="before")
    @classmethod
    def split_suites(cls, value: Any) -> Any:
        if isinstance(value, str):
            return [part.strip() for part in value.split(",") if part.strip()]
        return value

    @field_validator("suites")
    @classmethod
    def expand_suites(cls, value: List[str]) -> List[str]:
        unknown = [s for s in value if s != "all" and s not in SUITES]
        if unknown:
            raise ValueError(f"unknown suites: {', '.join(unknown)}")
        if "all" in value:
            return list(SUITES)
        return [s for s in SUITES if s in value]

    @model_validator(mode="after")
    def mu_matches_n(self) -> "RunConfig":
        if len(self.mu) != self.n:
            raise ValueError(f"expected {self.n} mu values, got {len(self.mu)}")
        return self

    def mu_values(self) -> List[Fraction]:
        return [parse_rational(m) for m in self.mu]


# === Check Reports ===

class Witness(BaseModel):
    term: str
    left: str
    right: str


class CheckReport(BaseModel):
    name: str
    module: str
    paper_anchor: str
    params: Dict[str, Any] = {}
    status: str = Field(..., pattern="^(pass|fail|skipped)$")
    witness: Optional[Witness] = None
    reason: Optional[str] = None
    elapsed_ms: int = 0

    @model_validator(mode="after")
    def fail_has_witness(self) -> "CheckReport":
        if self.status == "fail" and self.witness is None:
            raise ValueError("a failing check must carry a witness")
        return self

    @property
    def passed(self) -> bool:
        return self.status == "pass"


class WalkStep(BaseModel):
    m: int
    direction: int = Field(..., ge=-1, le=1)
    source: List[int]
    target: List[int]
    scalar: str


class WalkReport(BaseModel):
    start: List[int]
    end: List[int]
    steps: List[WalkStep] = []
    scalar: str
    nonzero: bool


# === Run Report ===

class LatticeInfo(BaseModel):
    L: int
    mu: List[str]
    gamma: List[str]


class Summary(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    passed: int = Field(0, serialization_alias="pass")
    fail: int = 0
    skipped: int = 0
    total: int = 0


class Report(BaseModel):
    version: str
    config: RunConfig
    lattice: LatticeInfo
    checks: List[CheckReport] = []
    summary: Summary

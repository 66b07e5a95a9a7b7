"""
📋 HARNESS MODELS
Check ids, corpus bounds and the JSON/CSV/text report.
"""

import csv
import io
import json
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, Field, field_validator, model_validator

SCHEMA_VERSION = 1


class CheckId(str, Enum):
    OBSERVATION1 = "observation1"
    THEOREM1 = "theorem1"
    THEOREM2 = "theorem2"
    COROLLARY1 = "corollary1"
    COROLLARY2 = "corollary2"
    LEMMA1 = "lemma1"
    LEMMA2 = "lemma2"
    LEMMA3 = "lemma3"
    LEMMA4 = "lemma4"
    LEMMA5 = "lemma5"
    LEMMA6 = "lemma6"
    LEMMA7 = "lemma7"
    LEMMA8 = "lemma8"
    LEMMA9 = "lemma9"
    LEMMA10 = "lemma10"
    LEMMA11 = "lemma11"
    EXAMPLE1 = "example1"
    REMARK1 = "remark1"
    REMARK2 = "remark2"


class CorpusBounds(BaseModel):
    """Sizes of every corpus the battery draws from."""
    max_n_graphs: int = Field(6, ge=2, le=7)
    max_n_trees: int = Field(10, ge=2, le=12)
    path_max_edges: int = Field(10, ge=1, le=20)
    hq_exact_max_k: int = Field(5, ge=3)
    hq_verify_max_k: int = Field(8, ge=3, le=30)
    example1_n: int = Field(8, ge=5, le=8)
    lemma9_max_n: int = Field(9, ge=3, le=12)
    lemma9_samples: int = Field(5, ge=1, le=50)
    random_trees: int = Field(100, ge=0, le=1000)
    random_tree_max_n: int = Field(40, ge=3, le=60)
    remark1_ks: List[int] = Field(default_factory=lambda: [3, 4])
    remark2_ks: List[int] = Field(default_factory=lambda: [3])
    edge_limit: int = Field(20, ge=1)

    @field_validator("remark1_ks", "remark2_ks")
    @classmethod
    def _ks_at_least_three(cls, value: List[int]) -> List[int]:
        if any(k < 3 for k in value):
            raise ValueError("remark parameters need k >= 3")
        return sorted(set(value))

    @model_validator(mode="after")
    def _within_edge_limit(self) -> "CorpusBounds":
        n = self.max_n_graphs
        if n * (n - 1) // 2 > self.edge_limit:
            raise ValueError(f"graphs on {n} vertices can exceed the edge limit {self.edge_limit}")
        if 3 * self.hq_exact_max_k - 2 > self.edge_limit:
            raise ValueError("Q_k for the largest exact k exceeds the edge limit")
        if self.max_n_trees - 1 > self.edge_limit or self.lemma9_max_n - 1 > self.edge_limit:
            raise ValueError("tree corpus exceeds the edge limit")
        return self


class CheckSpec(BaseModel):
    check_id: CheckId
    bounds: CorpusBounds = Field(default_factory=CorpusBounds)
    seed: int = 0


class Counterexample(BaseModel):
    n: int
    edges: List[Tuple[int, int]]
    edge_list: str
    canonical: str
    params: Dict[str, int] = Field(default_factory=dict)
    values: Dict[str, Any] = Field(default_factory=dict)


class CheckReport(BaseModel):
    check_id: CheckId
    statement: str
    instances: int
    failures: int
    passed: bool
    counterexample: Optional[Counterexample] = None
    notes: Dict[str, Any] = Field(default_factory=dict)
    wall_time: float = 0.0


class Report(BaseModel):
    schema_version: int = SCHEMA_VERSION
    seed: int
    bounds: CorpusBounds
    checks: List[CheckReport]
    passed: bool
    wall_time: float = 0.0

    def check(self, check_id: CheckId) -> CheckReport:
        return next(c for c in self.checks if c.check_id == CheckId(check_id))

    def to_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["check", "instances", "failures", "passed", "wall_time", "counterexample"])
        for c in self.checks:
            example = c.counterexample.edge_list.replace("\n", ";").strip(";") if c.counterexample else ""
            writer.writerow([c.check_id.value, c.instances, c.failures, c.passed,
                             f"{c.wall_time:.3f}", example])
        return buffer.getvalue()

    def to_text(self) -> str:
        lines = []
        for c in self.checks:
            verdict = "PASS" if c.passed else "FAIL"
            lines.append(f"{verdict} {c.check_id.value}: {c.instances} instances, "
                         f"{c.failures} failures ({c.wall_time:.2f}s)")
            if c.counterexample is not None:
                lines.append(f"    counterexample: {json.dumps(c.counterexample.values, sort_keys=True)}")
                lines.extend("    " + row for row in c.counterexample.edge_list.splitlines())
        lines.append("all checks passed" if self.passed else "some checks failed")
        return "\n".join(lines) + "\n"

    def render(self, fmt: str = "json") -> str:
        if fmt == "csv":
            return self.to_csv()
        if fmt == "text":
            return self.to_text()
        return self.model_dump_json(indent=2) + "\n"

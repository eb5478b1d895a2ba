"""Suite reports: an ordered list of checks, each naming the mathematical
statement it verified, with JSON and plain-text renderers.  Reports are
deterministic byte for byte for identical inputs."""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field

from .exactlin import Matrix, Subspace
from .fields import FieldSpec

PASS = "pass"
FAIL = "fail"
SKIP = "skip"


@dataclass(frozen=True)
class CheckEntry:
    check_id: str
    statement: str
    status: str
    detail: dict | None = None


@dataclass
class SuiteReport:
    suite: str
    entries: list[CheckEntry] = dc_field(default_factory=list)

    def add(self, check_id: str, statement: str, ok: bool, detail: dict | None = None):
        self.entries.append(CheckEntry(check_id, statement, PASS if ok else FAIL, detail))

    def skip(self, check_id: str, statement: str, note: str):
        self.entries.append(CheckEntry(check_id, statement, SKIP, {"note": note}))

    def extend(self, other: "SuiteReport"):
        self.entries.extend(other.entries)

    @property
    def verdict(self) -> str:
        return FAIL if any(e.status == FAIL for e in self.entries) else PASS

    @property
    def ok(self) -> bool:
        return self.verdict == PASS

    def to_obj(self) -> dict:
        return {
            "suite": self.suite,
            "verdict": self.verdict,
            "checks": [
                {
                    "id": e.check_id,
                    "statement": e.statement,
                    "status": e.status,
                    **({"detail": e.detail} if e.detail else {}),
                }
                for e in self.entries
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_obj(), sort_keys=True, indent=2, ensure_ascii=False) + "\n"

    def render_text(self) -> str:
        lines = [f"suite: {self.suite}"]
        width = max((len(e.check_id) for e in self.entries), default=0)
        for e in self.entries:
            lines.append(f"  [{e.status.upper():4s}] {e.check_id:<{width}}  {e.statement}")
            if e.detail and e.status != PASS:
                for key, value in sorted(e.detail.items()):
                    lines.append(f"          {key}: {_compact(value)}")
        lines.append(f"verdict: {self.verdict}")
        return "\n".join(lines) + "\n"


def _compact(value) -> str:
    text = json.dumps(value, sort_keys=True) if not isinstance(value, str) else value
    return text if len(text) <= 200 else text[:197] + "..."


def matrix_detail(field: FieldSpec, m: Matrix) -> dict:
    return {
        "rows": m.rows,
        "cols": m.cols,
        "entries": [[field.format(x) for x in row] for row in m.entries],
    }


def subspace_detail(field: FieldSpec, s: Subspace) -> dict:
    return {
        "ambient_dim": s.ambient_dim,
        "dim": s.dim,
        "basis": [[field.format(x) for x in row] for row in s.basis],
    }


def vector_detail(field: FieldSpec, v) -> list:
    return [field.format(x) for x in v]

"""Verification outcomes shared by the checking routines."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

PASS = "pass"
FAIL = "fail"
NOT_APPLICABLE = "not-applicable"
MATCH = "match"
COUNTEREXAMPLE = "counterexample-candidate"


class NotApplicable(ValueError):
    """The instance does not satisfy the preconditions of the identity."""


@dataclass
class Report:
    kind: str
    params: dict
    status: str
    lhs: Any = None
    rhs: Any = None
    mismatch: Any = None
    extra: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.status in (PASS, MATCH)

    @classmethod
    def compare(cls, kind: str, params: dict, lhs, rhs, extra: dict | None = None) -> Report:
        """Equality check; on failure ``mismatch`` names the first differing e-coefficient."""
        if lhs == rhs:
            return cls(kind, params, PASS, extra=extra or {})
        where = lhs.first_difference(rhs) if hasattr(lhs, "first_difference") else None
        return cls(kind, params, FAIL, lhs, rhs, where, extra or {})

    def to_json(self) -> dict:
        out = {"kind": self.kind, "params": self.params, "status": self.status}
        if self.extra:
            out["extra"] = self.extra
        if self.status not in (PASS, NOT_APPLICABLE):
            out["lhs"] = _jsonable(self.lhs)
            out["rhs"] = _jsonable(self.rhs)
            if self.mismatch is not None:
                out["mismatch"] = _jsonable(self.mismatch)
        return out

    def line(self) -> str:
        params = " ".join(f"{k}={_short(v)}" for k, v in self.params.items())
        text = f"{self.status.upper():<8} {self.kind} {params}"
        if self.status == FAIL and self.mismatch is not None:
            text += f"  first mismatch at {_short(self.mismatch)}"
        return text


def _short(v) -> str:
    if isinstance(v, (list, tuple)):
        return ",".join(map(str, v)) if v else "0"
    if hasattr(v, "parts"):
        return str(v)
    return str(v)


def _jsonable(x):
    if x is None or isinstance(x, (int, str, bool, float)):
        return x
    if hasattr(x, "to_json"):
        return x.to_json()
    if hasattr(x, "to_list"):
        return x.to_list()
    if hasattr(x, "parts"):
        return list(x.parts)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return str(x)

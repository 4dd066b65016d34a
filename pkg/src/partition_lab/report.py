"""Verification reports shared by the bijection and verify modules."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Optional


@dataclass(frozen=True)
class Failure:
    params: tuple
    label: str
    lhs: Any
    rhs: Any
    witness: Optional[str] = None

    def to_dict(self) -> dict:
        out = {"params": list(self.params), "label": self.label,
               "lhs": self.lhs, "rhs": self.rhs}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class VerificationReport:
    """Outcome of one named check over a parameter grid.

    ``grid`` holds every parameter tuple that was checked; ``bounds`` holds
    the compact description that produced it and is what gets serialized.
    """

    check_name: str
    grid: list[tuple]
    failures: list[Failure] = field(default_factory=list)
    elapsed: float = 0.0
    bounds: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        self.grid = sorted(self.grid)
        self.failures = sorted(self.failures, key=lambda f: (f.params, f.label))

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self, timing: bool = True) -> dict:
        out = {
            "check": self.check_name,
            "grid": {**self.bounds, "cells": len(self.grid)},
            "failures": [f.to_dict() for f in self.failures],
            "pass": self.passed,
        }
        if timing:
            out["elapsed_ms"] = round(self.elapsed * 1000)
        return out

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing), sort_keys=True)

    def summary(self) -> str:
        status = "PASS" if self.passed else f"FAIL ({len(self.failures)} failures)"
        return f"{self.check_name}: {status} over {len(self.grid)} cells in {self.elapsed:.2f}s"

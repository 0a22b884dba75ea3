"""Axiom reports, comparison helpers, and the package's exception types."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

import numpy as np

__all__ = [
    "Report",
    "ShapeError",
    "VerificationError",
    "compare",
    "first_failure",
]


class ShapeError(ValueError):
    """Structure-constant tensors do not have the shapes their dimensions require."""


class VerificationError(RuntimeError):
    """A construction failed one of the checks it performs on its own output."""

    def __init__(self, message: str, report: "Report | None" = None):
        super().__init__(message)
        self.report = report


@dataclass(frozen=True)
class Report:
    """Outcome of an axiom check.

    On failure ``axiom`` names the first violated identity and ``witness`` holds
    the basis indices of the inputs that violate it.
    """

    ok: bool
    axiom: str | None = None
    witness: tuple[int, ...] | None = None
    detail: str = ""

    def __bool__(self):
        return self.ok

    @classmethod
    def passed(cls, detail: str = "") -> "Report":
        return cls(True, detail=detail)

    def as_dict(self) -> dict:
        return {
            "ok": self.ok,
            "axiom": self.axiom,
            "witness": None if self.witness is None else list(self.witness),
            "detail": self.detail,
        }

    def __str__(self):
        if self.ok:
            return f"pass{': ' + self.detail if self.detail else ''}"
        return f"fail: {self.axiom} at witness {self.witness}{' (' + self.detail + ')' if self.detail else ''}"

    def raise_if_failed(self, context: str) -> "Report":
        if not self.ok:
            raise VerificationError(f"{context}: {self}", self)
        return self


def compare(axiom: str, lhs, rhs, n_inputs: int) -> Report:
    """Compare two tensors whose leading ``n_inputs`` axes index basis inputs.

    The first differing entry in lexicographic order supplies the witness.
    """
    lhs = np.asarray(lhs, dtype=object)
    rhs = np.asarray(rhs, dtype=object)
    if lhs.shape != rhs.shape:
        raise ValueError(f"{axiom}: cannot compare shapes {lhs.shape} and {rhs.shape}")
    diff = np.argwhere(lhs != rhs)
    if len(diff) == 0:
        return Report.passed()
    idx = tuple(int(i) for i in diff[0])
    return Report(
        False,
        axiom,
        idx[:n_inputs],
        f"entry {idx}: {lhs[idx]} != {rhs[idx]}",
    )


def first_failure(checks: Iterable[Callable[[], Report]]) -> Report:
    """Run lazily supplied checks in order and stop at the first failure."""
    for check in checks:
        r = check()
        if not r.ok:
            return r
    return Report.passed()

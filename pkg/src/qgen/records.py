"""Verification records: one theorem instance, both sides, and a verdict.

Statuses separate regression gating from domain exploration: PASS/FAIL
mark parameter points inside an identity's asserted domain, while
BOUNDARY-PASS/BOUNDARY-FAIL mark probes outside it (recorded, never
gated on).  The variant field distinguishes an identity as printed from
a registered corrected form; nothing is ever substituted silently.
"""

from __future__ import annotations

from dataclasses import dataclass

from qgen.qcore import RatFuncQ

PASS = "PASS"
FAIL = "FAIL"
BOUNDARY_PASS = "BOUNDARY-PASS"
BOUNDARY_FAIL = "BOUNDARY-FAIL"

AS_STATED = "as-stated"
CORRECTED = "corrected"

Params = tuple[tuple[str, object], ...]


@dataclass(frozen=True)
class VerificationRecord:
    theorem: str
    params: Params
    lhs: RatFuncQ
    rhs: RatFuncQ
    status: str
    variant: str = AS_STATED

    @property
    def passed(self) -> bool:
        return self.status in (PASS, BOUNDARY_PASS)

    @property
    def boundary(self) -> bool:
        return self.status in (BOUNDARY_PASS, BOUNDARY_FAIL)

    def params_dict(self) -> dict[str, object]:
        return dict(self.params)

    def params_text(self) -> str:
        return " ".join(f"{k}={v}" for k, v in self.params)


def compare(theorem: str, params: Params, lhs: RatFuncQ, rhs: RatFuncQ,
            *, boundary: bool = False, variant: str = AS_STATED) -> VerificationRecord:
    """Build a record; the verdict is structural equality of both sides."""
    equal = lhs == rhs
    if boundary:
        status = BOUNDARY_PASS if equal else BOUNDARY_FAIL
    else:
        status = PASS if equal else FAIL
    return VerificationRecord(theorem, params, lhs, rhs, status, variant)

"""Suite runners: hard symbolic checks (which gate the exit code) and
descriptive printed-claim checks (which never do).

Hard checks: the general recurrence (a1) and difference equation (a2)
for all four families, the lowering chains, the Hermite three-term
recurrence (h1), difference equation (h2), generator ratio, and the
cross-construction equality of the two Hermite builds.

Descriptive checks: the specialized theorems exactly as printed (b1, b2,
e1 in both symbol readings, e2, g1, g2), the explicit-sum normalization
claim, and the Euler number relation.  Their outcomes are recorded in a
deterministic discrepancy report.
"""

from __future__ import annotations

from . import hermite
from .appell import (VerificationReport, make_report,
                     verify_difference_range, verify_lowering_range,
                     verify_recurrence_range)
from .families import (DiscrepancyReport, FamilyKind, make_family,
                       verify_euler_number_relation,
                       verify_printed_theorem_range)
from .render import xpoly_to_json

ALL_FAMILIES = (FamilyKind.BERNOULLI, FamilyKind.EULER,
                FamilyKind.GENOCCHI, FamilyKind.HERMITE)

HARD_SCOPES = ("a1", "a2", "lowering", "h0", "h1", "h2")
DESCRIPTIVE_SCOPES = ("b1", "b2", "e1", "e2", "g1", "g2", "h0", "euler-relation")
SCOPES = ("all", "a1", "a2", "b1", "b2", "e1", "e2", "g1", "g2",
          "h0", "h1", "h2", "lowering", "euler-relation")


def _families(order: int):
    return [make_family(kind, order) for kind in ALL_FAMILIES]


def hard_reports(scope: str, max_n: int, order: int) -> list[VerificationReport]:
    reports: list[VerificationReport] = []
    if scope in ("all", "a1"):
        for fam in _families(order):
            reports.append(verify_recurrence_range(fam, 1, max_n))
    if scope in ("all", "a2"):
        for fam in _families(order):
            reports.append(verify_difference_range(fam, 1, max_n))
    if scope in ("all", "lowering"):
        for fam in _families(order):
            reports.append(verify_lowering_range(fam, max_n))
    if scope in ("all", "h1"):
        fam = hermite.hermite_family(order)
        reports.append(make_report(
            "h1", "hermite", (2, max_n),
            [hermite.recurrence_residual(n, fam) for n in range(2, max_n + 1)]))
    if scope in ("all", "h2"):
        fam = hermite.hermite_family(order)
        reports.append(make_report(
            "h2", "hermite", (1, max_n),
            [hermite.difference_residual(n, fam) for n in range(1, max_n + 1)]))
    if scope in ("all", "h0"):
        reports.append(hermite.verify_cross_construction(max_n, order))
        reports.append(hermite.verify_hermite_generator_ratio(order))
    return reports


def descriptive_reports(scope: str, max_n: int,
                        euler_max_n: int | None = None) -> list[DiscrepancyReport]:
    if euler_max_n is None:
        euler_max_n = max_n
    out: list[DiscrepancyReport] = []
    if scope in ("all", "b1"):
        out.append(verify_printed_theorem_range(FamilyKind.BERNOULLI, "b1", max_n))
    if scope in ("all", "b2"):
        out.append(verify_printed_theorem_range(FamilyKind.BERNOULLI, "b2", max_n))
    if scope in ("all", "e1"):
        out.append(verify_printed_theorem_range(FamilyKind.EULER, "e1", max_n,
                                                e1_reading="numbers"))
        out.append(verify_printed_theorem_range(FamilyKind.EULER, "e1", max_n,
                                                e1_reading="values"))
    if scope in ("all", "e2"):
        out.append(verify_printed_theorem_range(FamilyKind.EULER, "e2", max_n))
    if scope in ("all", "g1"):
        out.append(verify_printed_theorem_range(FamilyKind.GENOCCHI, "g1", max_n))
    if scope in ("all", "g2"):
        out.append(verify_printed_theorem_range(FamilyKind.GENOCCHI, "g2", max_n))
    if scope in ("all", "h0"):
        out.append(hermite.verify_printed_series_form(max_n))
    if scope in ("all", "euler-relation"):
        out.append(verify_euler_number_relation(euler_max_n))
    return out


def verification_to_json(report: VerificationReport) -> dict:
    return {
        "theorem": report.theorem_id,
        "family": report.family,
        "max_n": report.n_range[1],
        "passed": report.passed,
        "first_failure": report.first_failure,
    }


def discrepancy_to_json(report: DiscrepancyReport) -> dict:
    return {
        "claim": report.claim_id,
        "status": report.status,
        "counterexample_n": report.counterexample_n,
        "residual": None if report.residual is None
                    else xpoly_to_json(report.residual),
    }


def run_scope(scope: str, max_n: int, order: int,
              euler_max_n: int | None = None) -> dict:
    """Run one verification scope; the payload is JSON-ready and the
    ``passed`` flag reflects hard checks only."""
    hard = hard_reports(scope, max_n, order) if scope in ("all",) + HARD_SCOPES else []
    descriptive = (descriptive_reports(scope, max_n, euler_max_n)
                   if scope in ("all",) + DESCRIPTIVE_SCOPES else [])
    return {
        "scope": scope,
        "max_n": max_n,
        "order": order,
        "passed": all(r.passed for r in hard),
        "hard": [verification_to_json(r) for r in hard],
        "descriptive": [discrepancy_to_json(r) for r in descriptive],
    }


def discrepancy_report(printed_max_n: int = 10,
                       euler_max_n: int = 8) -> list[dict]:
    """The canonical descriptive report (the golden file content)."""
    reports = descriptive_reports("all", printed_max_n, euler_max_n)
    return [discrepancy_to_json(r) for r in reports]

"""
Report value types shared by the checkers and the theorem harness.

A Finding is one named verdict with an optional witness; a CheckReport
is the result of one predicate checker. Witnesses are always tuples of
point indices; report_format translates them back to point ids.

File:       reports.py
Author:     Lorn B Kerr
Copyright:  (c) 2026 Lorn B Kerr
License:    MIT, see file LICENSE
Version:    1.0.0
"""

from dataclasses import dataclass, field
from typing import Any

file_version = "1.0.0"
changes = {
    "1.0.0": "Initial release",
}

HOLDS = "holds"
"""The property was decided and holds."""
FAILS = "fails"
"""The property was decided and fails."""
UNESTABLISHED = "unestablished"
"""Only heuristic evidence was available and it was not conclusive."""
TRIVIAL = "trivially-satisfied (finite carrier)"
"""A limit property that every finite carrier satisfies."""
NOT_EVALUATED = "not-evaluated"
"""A conclusion skipped because its premises do not hold."""

SATISFIED = (HOLDS, TRIVIAL)
"""Statuses that count as an established premise."""


@dataclass(frozen=True)
class Finding:
    """
    One named verdict.

    Attributes:
        name (str): what was checked.
        status (str): one of HOLDS, FAILS, UNESTABLISHED, TRIVIAL.
        witness (tuple): point indices showing a failure, or None.
        note (str): free text, such as the evidence for a trivial verdict.
    """

    name: str
    status: str
    witness: Any = None
    note: str = ""

    @property
    def satisfied(self) -> bool:
        """(bool) True if the status counts as established."""
        return self.status in SATISFIED


def finding(name: str, verdict: bool, witness: Any = None, note: str = "") -> Finding:
    """
    Build a decided Finding from a boolean verdict.

    Parameters:
        name (str): what was checked.
        verdict (bool): the decided verdict.
        witness (Any): the first failing witness, if any.
        note (str): free text.

    Returns:
        (Finding) HOLDS when verdict is True, FAILS otherwise.
    """
    status = HOLDS if verdict else FAILS
    return Finding(name, status, None if verdict else witness, note)


@dataclass(frozen=True)
class CheckReport:
    """
    The result of a predicate checker.

    Attributes:
        name (str): the property checked.
        verdict (bool): True iff the property holds.
        witnesses (tuple): every violating tuple of point indices.
        notes (tuple[str, ...]): remarks, such as interpretation notes.
        details (dict): checker specific extra values.
    """

    name: str
    verdict: bool
    witnesses: tuple = ()
    notes: tuple = ()
    details: dict = field(default_factory=dict)

    def as_finding(self) -> Finding:
        """
        Condense the report into a Finding.

        Returns:
            (Finding) the verdict with the first witness.
        """
        witness = self.witnesses[0] if self.witnesses else None
        return finding(self.name, self.verdict, witness, "; ".join(self.notes))

"""
Render reports as text or JSON.

Each report is first turned into plain data: dicts, lists, strings and
finite numbers. Point indices are replaced by point ids, exact values
are written with number_text() and infinite floats as 'inf'. JSON
output sorts its keys so reports can be compared with diff.

File:       report_format.py
Author:     Lorn B Kerr
Copyright:  (c) 2026 Lorn B Kerr
License:    MIT, see file LICENSE
Version:    1.0.0
"""

import json
import math
from fractions import Fraction
from typing import Any, Sequence

import numpy as np

from .comparison import Admissibility, ComparisonFn
from .datafile import number_text
from .metric import ValidationReport
from .picard import NumericTrace, PicardTrace
from .reports import CheckReport, Finding
from .soundness import SuiteSummary
from .theorems import ReducedInstance, TheoremReport

file_version = "1.0.0"
changes = {
    "1.0.0": "Initial release",
}

TEXT = "text"
JSON = "json"
FORMATS = (TEXT, JSON)


def plain(value: Any, ids: Sequence[str] = None) -> Any:
    """
    Turn a value into JSON ready data.

    Parameters:
        value (Any): numbers, strings, containers, numpy arrays.
        ids (Sequence[str]): when given, ints are point indices and are
            replaced by ids.

    Returns:
        (Any) the plain value.
    """
    if value is None or isinstance(value, (bool, str)):
        return value
    if isinstance(value, (int, np.integer)):
        return ids[int(value)] if ids is not None else int(value)
    if isinstance(value, Fraction):
        return number_text(value)
    if isinstance(value, (float, np.floating)):
        number = float(value)
        if math.isinf(number):
            return "inf" if number > 0 else "-inf"
        if math.isnan(number):
            return "nan"
        return number
    if isinstance(value, np.ndarray):
        return [plain(item) for item in value.tolist()]
    if isinstance(value, dict):
        return {str(key): plain(item, ids) for key, item in value.items()}
    if isinstance(value, (frozenset, set)):
        return [plain(item, ids) for item in sorted(value)]
    if isinstance(value, (list, tuple)):
        return [plain(item, ids) for item in value]
    return str(value)


def finding_data(item: Finding, ids: Sequence[str]) -> dict[str, Any]:
    """Plain data of a Finding."""
    data = {"name": item.name, "status": item.status}
    if item.witness is not None:
        data["witness"] = plain(item.witness, ids)
    if item.note:
        data["note"] = item.note
    return data


def check_data(report: CheckReport, ids: Sequence[str]) -> dict[str, Any]:
    """Plain data of a CheckReport; details are left as they are."""
    return {
        "name": report.name,
        "verdict": report.verdict,
        "witnesses": plain(report.witnesses, ids),
        "notes": list(report.notes),
    }


def theorem_data(report: TheoremReport, ids: Sequence[str]) -> dict[str, Any]:
    """
    Plain data of a TheoremReport.

    Parameters:
        report (TheoremReport): the report.
        ids (Sequence[str]): the point ids of the instance.

    Returns:
        (dict) theorem, premises, conclusion, soundness and the rest.
    """
    data = {
        "theorem": report.theorem_id,
        "premises": [finding_data(item, ids) for item in report.premises],
        "premises_hold": report.premises_hold,
        "conclusion": report.conclusion,
        "soundness": report.soundness,
        "observations": [finding_data(item, ids) for item in report.observations],
        "notes": list(report.notes),
    }
    if report.conclusion_witness is not None:
        data["conclusion_witness"] = plain(report.conclusion_witness, ids)
    if report.seed is not None:
        data["seed"] = report.seed
    return data


def picard_data(trace: PicardTrace, ids: Sequence[str]) -> dict[str, Any]:
    """Plain data of a finite orbit."""
    data = {
        "start": ids[trace.start],
        "orbit": plain(trace.orbit, ids),
        "outcome": trace.outcome,
        "steps": trace.steps,
    }
    if trace.fixed_point is not None:
        data["fixed_point"] = ids[trace.fixed_point]
    if trace.period is not None:
        data["period"] = trace.period
    return data


def reduction_data(reduced: ReducedInstance, ids: Sequence[str]) -> dict[str, Any]:
    """Plain data of a reduction to a Banach instance."""
    class_ids = [ids[x] for x in reduced.class_points]
    size = len(class_ids)
    return {
        "class": class_ids,
        "modulus": number_text(reduced.modulus),
        "chain_metric": [
            [plain(reduced.reduced_space.d(i, j)) for j in range(size)]
            for i in range(size)
        ],
        "restricted_map": [
            [class_ids[i], class_ids[reduced.restricted_map(i)]] for i in range(size)
        ],
        "lemma_checks": [finding_data(item, ids) for item in reduced.lemma_checks],
        "banach": theorem_data(reduced.banach_report, class_ids),
        "reduced_limit": plain(reduced.reduced_limit, ids),
        "original_limit": plain(reduced.original_limit, ids),
        "round_trip_holds": reduced.round_trip_holds,
    }


def admissibility_data(phi: ComparisonFn, verdict: Admissibility) -> dict[str, Any]:
    """Plain data of a classify_phi verdict."""
    return {
        "phi": phi.spec,
        "matkowski": verdict.matkowski,
        "browder": verdict.browder,
        "heuristic": verdict.heuristic,
        "evidence": plain(verdict.evidence),
    }


def numeric_data(trace: NumericTrace) -> dict[str, Any]:
    """Plain data of a numeric Picard run; iterates are not listed."""
    data = {
        "status": trace.status,
        "steps": trace.steps,
        "fixed_point": plain(trace.fixed_point),
        "last_step": plain(trace.step_norms[-1]) if trace.step_norms else None,
    }
    if trace.bounds:
        data["a_posteriori_bound"] = plain(trace.a_posteriori_bound)
    return data


def suite_data(summary: SuiteSummary) -> dict[str, Any]:
    """Plain data of a soundness suite run."""
    return {
        "theorem": summary.theorem_id,
        "seed": summary.seed,
        "instances": summary.instances,
        "premises_held": summary.premises_held,
        "conclusions_held": summary.conclusions_held,
        "violations": list(summary.violations),
        "sound": summary.sound,
    }


def metric_data(report: ValidationReport, ids: Sequence[str]) -> dict[str, Any]:
    """Plain data of a metric axiom check."""
    return {
        "valid": report.valid,
        "violations": [
            {
                "axiom": violation.axiom,
                "witness": plain(violation.witness, ids),
                "message": violation.message,
            }
            for violation in report.violations
        ],
    }


def render(data: dict[str, Any], output_format: str = TEXT) -> str:
    """
    Render plain data.

    Parameters:
        data (dict): the report from one of the *_data functions.
        output_format (str): TEXT or JSON.

    Returns:
        (str) the report, newline terminated.
    """
    if output_format == JSON:
        return json.dumps(data, indent=2, sort_keys=True, allow_nan=False) + "\n"
    lines: list[str] = []
    _text_lines(data, 0, lines)
    return "\n".join(lines) + "\n"


def _text_lines(value: Any, depth: int, lines: list[str]) -> None:
    """Indented 'key: value' lines, lists as '- item' lines."""
    indent = "  " * depth
    if isinstance(value, dict):
        for key, item in value.items():
            if isinstance(item, (dict, list)) and item and not _is_flat(item):
                lines.append(indent + key + ":")
                _text_lines(item, depth + 1, lines)
            else:
                lines.append(indent + key + ": " + _scalar_text(item))
    elif isinstance(value, list):
        for item in value:
            if isinstance(item, dict):
                nested: list[str] = []
                _text_lines(item, depth + 1, nested)
                lines.append(indent + "- " + nested[0].strip())
                lines.extend(nested[1:])
            else:
                lines.append(indent + "- " + _scalar_text(item))
    else:
        lines.append(indent + _scalar_text(value))


def _is_flat(value: Any) -> bool:
    """True for a list of scalars, written on one line."""
    return isinstance(value, list) and not any(
        isinstance(item, (dict, list)) for item in value
    )


def _scalar_text(value: Any) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, list):
        return "[" + ", ".join(_scalar_text(item) for item in value) + "]"
    if isinstance(value, dict):
        return "{}"
    return str(value)

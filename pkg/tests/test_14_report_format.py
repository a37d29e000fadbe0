"""
Test the plain data builders and the text and JSON rendering.

File:       test_14_report_format.py
Author:     Lorn B Kerr
Copyright:  (c) 2026 Lorn B Kerr
License:    MIT, see file LICENSE
"""

import json
import math
import os
import sys
from fractions import Fraction

import numpy as np

src_path = os.path.join(os.path.realpath("."), "src")
if src_path not in sys.path:
    sys.path.append(src_path)

from relfix import ComparisonFn, FiniteMetricSpace, SelfMap, classify_phi
from relfix.metric import validate_metric
from relfix.picard import half, numeric_picard, orbit
from relfix.report_format import (
    JSON,
    TEXT,
    admissibility_data,
    metric_data,
    numeric_data,
    picard_data,
    plain,
    reduction_data,
    render,
    suite_data,
    theorem_data,
)
from relfix.soundness import SuiteSummary
from relfix.testing_support.core_setup import i1_map, i1_relation, i1_space
from relfix.theorems import reduce_to_banach, verify_banach

IDS = ("a", "b", "c")


def test_14_01_plain_numbers():
    assert plain(Fraction(1, 2)) == "0.5"
    assert plain(Fraction(1, 3)) == "1/3"
    assert plain(np.int64(4)) == 4
    assert plain(np.float64(0.25)) == 0.25
    assert plain(math.inf) == "inf"
    assert plain(-math.inf) == "-inf"
    assert plain(math.nan) == "nan"
    assert plain(True) is True
    assert plain(None) is None
    # end test_14_01_plain_numbers()


def test_14_02_plain_containers():
    assert plain((0, 2), IDS) == ["a", "c"]
    assert plain(frozenset({2, 0}), IDS) == ["a", "c"]
    assert plain({1: (1, 2)}, IDS) == {"1": ["b", "c"]}
    assert plain(np.array([0.5, 1.5])) == [0.5, 1.5]
    assert plain([Fraction(3, 2), "x"]) == ["1.5", "x"]
    # end test_14_02_plain_containers()


def test_14_03_render_text():
    data = {
        "a": True,
        "b": None,
        "c": [1, 2],
        "d": {"e": "x"},
        "f": [{"g": 1, "h": False}],
        "i": [],
    }
    assert render(data, TEXT) == (
        "a: yes\n"
        "b: -\n"
        "c: [1, 2]\n"
        "d:\n"
        "  e: x\n"
        "f:\n"
        "  - g: 1\n"
        "    h: no\n"
        "i: []\n"
    )
    # end test_14_03_render_text()


def test_14_04_render_json():
    data = {"b": [1, "inf"], "a": {"c": None}}
    text = render(data, JSON)
    assert json.loads(text) == data
    assert text.index('"a"') < text.index('"b"')
    assert text.endswith("}\n")
    # end test_14_04_render_json()


def test_14_05_theorem_data():
    report = verify_banach(i1_space(), i1_map(), "1/2")
    data = theorem_data(report, IDS)
    assert data["theorem"] == "B-cp-ms"
    assert data["premises_hold"] is True
    assert data["conclusion"] == "holds"
    assert data["soundness"] == "consistent"
    assert data["premises"][0] == {"name": "d is a metric", "status": "holds"}
    assert "conclusion_witness" not in data
    assert "seed" not in data
    assert json.loads(render(data, JSON)) == data
    # end test_14_05_theorem_data()


def test_14_06_picard_data():
    data = picard_data(orbit(i1_map(), 2), IDS)
    assert data == {
        "start": "c",
        "orbit": ["c", "b"],
        "outcome": "converged",
        "steps": 1,
        "fixed_point": "b",
    }
    cycle = picard_data(orbit(SelfMap((1, 0, 0)), 0), IDS)
    assert cycle["period"] == 2
    assert "fixed_point" not in cycle
    # end test_14_06_picard_data()


def test_14_07_reduction_data():
    reduced = reduce_to_banach(i1_space(), i1_map(), i1_relation(), "1/2", 0)
    data = reduction_data(reduced, IDS)
    assert data["class"] == ["a", "b", "c"]
    assert data["modulus"] == "0.5"
    assert data["chain_metric"] == [[0, 1, 2], [1, 0, 1], [2, 1, 0]]
    assert data["restricted_map"] == [["a", "b"], ["b", "b"], ["c", "b"]]
    assert data["reduced_limit"] == "b"
    assert data["original_limit"] == "b"
    assert data["round_trip_holds"] is True
    assert data["banach"]["conclusion"] == "holds"
    # end test_14_07_reduction_data()


def test_14_08_admissibility_data():
    phi = ComparisonFn.linear("1/2")
    data = admissibility_data(phi, classify_phi(phi))
    assert data["phi"] == "linear:1/2"
    assert data["matkowski"] == "yes"
    assert data["browder"] == "yes"
    assert data["heuristic"] is True
    assert set(data["evidence"]) == {"0.1", "1.0", "10.0", "1000.0"}
    json.loads(render(data, JSON))
    # end test_14_08_admissibility_data()


def test_14_09_numeric_data():
    data = numeric_data(numeric_picard(half, [1.0], tol=1e-6))
    assert data["status"] == "converged"
    assert data["fixed_point"][0] < 1e-6
    assert "a_posteriori_bound" not in data
    bounded = numeric_data(numeric_picard(half, [1.0], tol=1e-6, lam=0.5))
    assert bounded["a_posteriori_bound"] == bounded["last_step"]
    # end test_14_09_numeric_data()


def test_14_10_suite_data():
    summary = SuiteSummary("K-asy-rms", 5, 10, 4, 4, (7,))
    assert suite_data(summary) == {
        "theorem": "K-asy-rms",
        "seed": 5,
        "instances": 10,
        "premises_held": 4,
        "conclusions_held": 4,
        "violations": [7],
        "sound": False,
    }
    # end test_14_10_suite_data()


def test_14_11_metric_data():
    lopsided = FiniteMetricSpace(("a", "b"), [[0, 1], [2, 0]])
    data = metric_data(validate_metric(lopsided), lopsided.points)
    assert data == {
        "valid": False,
        "violations": [
            {
                "axiom": "symmetric",
                "witness": ["a", "b"],
                "message": "d(a, b) differs from d(b, a)",
            }
        ],
    }
    assert metric_data(validate_metric(i1_space()), IDS) == {
        "valid": True,
        "violations": [],
    }
    # end test_14_11_metric_data()

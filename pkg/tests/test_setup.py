"""
Test setup for the relfix functionality.

Values Available:
    CORPUS_DIR - the committed instance files.
    INVALID_DIR - instance files that must be refused.
    i1_path, swap_path, ordered_path - the corpus files.
    sample_config - settings for the ini file tests.
    report_json() - a theorem report as JSON data, instantiation removed.

File:       test_setup.py
Author:     Lorn B Kerr
Copyright:  (c) 2022, 2023, 2026 Lorn B Kerr
License:    MIT, see file LICENSE
"""

import json
import os
import sys

src_path = os.path.join(os.path.realpath("."), "src")
if src_path not in sys.path:
    sys.path.append(src_path)

from relfix.report_format import JSON, render, theorem_data

CORPUS_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "corpus")
INVALID_DIR = os.path.join(CORPUS_DIR, "invalid")

i1_path = os.path.join(CORPUS_DIR, "i1.json")
swap_path = os.path.join(CORPUS_DIR, "swap.json")
ordered_path = os.path.join(CORPUS_DIR, "ordered.json")
asymmetric_path = os.path.join(INVALID_DIR, "asymmetric.json")
unknown_id_path = os.path.join(INVALID_DIR, "unknown_id.json")
malformed_path = os.path.join(INVALID_DIR, "malformed.json")

corpus_files = [i1_path, swap_path, ordered_path]

sample_config = {
    "relfix": {
        "arithmetic": "float",
        "horizon": "2000",
        "tail_tolerance": "1e-9",
        "sample_points": "0.5, 2",
        "tol": "1e-10",
        "max_iter": "500",
        "seed": "17",
        "suite_count": "40",
        "workers": "1",
    },
}


def report_json(report, ids, observations=None):
    """
    Render a theorem report as JSON and read it back for comparison.

    The theorem id and the 'instantiated with' notes are removed. When
    'observations' is given only that many leading observations are
    kept, so a specialised report compares with its general form.
    """
    data = json.loads(render(theorem_data(report, ids), JSON))
    del data["theorem"]
    data["notes"] = [
        note for note in data["notes"] if not note.startswith("instantiated with")
    ]
    if observations is not None:
        data["observations"] = data["observations"][:observations]
    return data

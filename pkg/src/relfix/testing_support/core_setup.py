"""
Test setup for relfix.

This module provides values, fixtures and hypothesis strategies shared
by the test modules.

Values Available:
    I1_DOCUMENT - the three point path instance as a file document.
    i1_space(), i1_relation(), i1_map() - the same instance as values.

Filesystem, Directories and associated files:
    directories (list): List of directories for the filesystem.
    filesystem(tmp_path): Pytest fixture to generate a temporary
        filesystem.
    write_document(path, document): write an instance file.

Strategies:
    rational_spaces(max_size) - metric spaces of points on the line.
    relations(size) - reflexive relations on range(size).
    selfmaps(size) - maps of range(size) into itself.
    space_instances(max_size) - (space, relation, map) triples.

File:       core_setup.py
Author:     Lorn B Kerr
Copyright:  (c) 2024, 2026 Lorn B Kerr
License:    MIT, see file License
Version:    2.0.0
"""

import json
from fractions import Fraction
from typing import Any

import pytest
from hypothesis import strategies as st

from relfix.metric import FiniteMetricSpace, SelfMap
from relfix.relation import Relation

file_version = "2.0.0"
changes = {
    "1.0.0": "Initial release",
    "1.0.1": "Added version info.",
    "2.0.0": "Instance fixtures and strategies replace the datafile helpers.",
}

directories = [
    ".config",
    "corpus",
]

I1_DOCUMENT: dict[str, Any] = {
    "points": ["a", "b", "c"],
    "distance": [["0", "1", "2"], ["1", "0", "1"], ["2", "1", "0"]],
    "relation": [
        ["a", "a"],
        ["a", "b"],
        ["b", "a"],
        ["b", "b"],
        ["b", "c"],
        ["c", "b"],
        ["c", "c"],
    ],
    "map": [["a", "b"], ["b", "b"], ["c", "b"]],
    "modulus": {"kind": "linear", "lambda": "0.5"},
}


def i1_space() -> FiniteMetricSpace:
    """The points a, b, c at 0, 1, 2 on the line."""
    return FiniteMetricSpace.on_line([0, 1, 2], ["a", "b", "c"])


def i1_relation() -> Relation:
    """The reflexive symmetric path a - b - c."""
    return Relation.from_pairs(
        3, [(0, 1), (1, 0), (1, 2), (2, 1)], with_identity=True
    )


def i1_map() -> SelfMap:
    """Every point goes to b."""
    return SelfMap.constant(3, 1)


@pytest.fixture
def filesystem(tmp_path):
    """
    Setup a temporary filesystem which will be discarded after the test
    sequence is run.

    Parameters:
        tmp_path: pytest fixture to setup a path to a temperary location

    Returns:
        (str) The temporary test base directory.
    """
    base_dir = tmp_path / "base_dir"
    base_dir.mkdir()
    for directory in directories:
        (base_dir / directory).mkdir()
    return str(base_dir)


def write_document(path: str, document: Any) -> str:
    """
    Write a document as JSON.

    Parameters:
        path (str): the file to write.
        document (Any): the document.

    Returns:
        (str) the path.
    """
    with open(path, "w", encoding="utf-8") as target:
        json.dump(document, target, indent=2)
    return path


@st.composite
def rational_spaces(draw, min_size: int = 1, max_size: int = 6) -> FiniteMetricSpace:
    """Distinct rationals on the line; every draw is a metric."""
    denominator = draw(st.sampled_from((1, 2, 3, 4)))
    numerators = draw(
        st.lists(
            st.integers(0, 40),
            min_size=min_size,
            max_size=max_size,
            unique=True,
        )
    )
    return FiniteMetricSpace.on_line([Fraction(n, denominator) for n in numerators])


@st.composite
def relations(draw, size: int) -> Relation:
    """A reflexive relation on range(size)."""
    pairs = draw(
        st.sets(st.tuples(st.integers(0, size - 1), st.integers(0, size - 1)))
    )
    return Relation.from_pairs(size, pairs, with_identity=True)


@st.composite
def selfmaps(draw, size: int) -> SelfMap:
    """Any map of range(size) into itself."""
    table = draw(
        st.lists(st.integers(0, size - 1), min_size=size, max_size=size)
    )
    return SelfMap(tuple(table))


@st.composite
def space_instances(draw, max_size: int = 6) -> tuple:
    """A space with a reflexive relation and a map on it."""
    space = draw(rational_spaces(1, max_size))
    return space, draw(relations(space.size)), draw(selfmaps(space.size))

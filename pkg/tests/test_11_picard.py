"""
Test the finite orbits and the numeric Picard iteration.

File:       test_11_picard.py
Author:     Lorn B Kerr
Copyright:  (c) 2026 Lorn B Kerr
License:    MIT, see file LICENSE
"""

import math
import os
import sys

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

src_path = os.path.join(os.path.realpath("."), "src")
if src_path not in sys.path:
    sys.path.append(src_path)

from relfix import ComparisonFn, Relation, SelfMap
from relfix.contraction import check_contractive
from relfix.errors import NonFiniteValue, PreconditionError
from relfix.generators import generate_instance
from relfix.metric import fixed_points
from relfix.picard import (
    CONVERGED,
    CYCLE,
    EUCLIDEAN,
    MAX_ITER_REACHED,
    NUMERIC_MAPS,
    cosine,
    half,
    is_picard,
    is_strongly_picard,
    numeric_picard,
    orbit,
    rotate_half,
    shift,
)
from relfix.testing_support.core_setup import i1_map, i1_relation, i1_space, selfmaps

COS_LAMBDA = 0.8415


def cos_root() -> float:
    """Bisect cos(x) - x on [0, 1] until the interval stops shrinking."""
    low, high = 0.0, 1.0
    while True:
        middle = (low + high) / 2
        if middle in (low, high):
            return middle
        if math.cos(middle) - middle > 0:
            low = middle
        else:
            high = middle


def test_11_01_orbit_converges():
    trace = orbit(i1_map(), 2)
    assert trace.orbit == (2, 1)
    assert trace.outcome == CONVERGED
    assert trace.converged
    assert trace.fixed_point == 1
    assert trace.period is None
    assert trace.steps == 1
    start = orbit(i1_map(), 1)
    assert start.orbit == (1,)
    assert start.steps == 0
    # end test_11_01_orbit_converges()


def test_11_02_orbit_cycles():
    trace = orbit(SelfMap((1, 0)), 0)
    assert trace.orbit == (0, 1)
    assert trace.outcome == CYCLE
    assert trace.period == 2
    assert trace.fixed_point is None
    tail = orbit(SelfMap((1, 2, 1)), 0)
    assert tail.orbit == (0, 1, 2)
    assert tail.period == 2
    # end test_11_02_orbit_cycles()


@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=1, max_value=8).flatmap(selfmaps), st.data())
def test_11_03_orbit_properties(t, data):
    x = data.draw(st.integers(min_value=0, max_value=t.size - 1))
    trace = orbit(t, x)
    assert len(set(trace.orbit)) == len(trace.orbit) <= t.size
    for k in range(trace.steps):
        assert trace.orbit[k + 1] == t(trace.orbit[k])
    if trace.converged:
        assert trace.fixed_point in fixed_points(t)
        assert trace.fixed_point == trace.orbit[-1]
    else:
        assert trace.period >= 2
        assert not fixed_points(t) & set(trace.orbit)
    # end test_11_03_orbit_properties()


def test_11_04_strongly_picard():
    report = is_strongly_picard(i1_space(), i1_map(), i1_relation())
    assert report.verdict
    assert report.details["semi_progressive"] == (0, 1, 2)
    assert report.details["limits"] == {0: 1, 1: 1, 2: 1}
    swap = SelfMap((1, 0))
    report = is_strongly_picard(i1_space().subspace([0, 1]), swap, Relation.full(2))
    assert not report.verdict
    assert report.witnesses == ((0,), (1,))
    # end test_11_04_strongly_picard()


def test_11_05_picard_vacuous():
    report = is_strongly_picard(i1_space(), SelfMap((1, 2, 0)), Relation(3))
    assert report.verdict
    assert report.details["semi_progressive"] == ()
    assert "vacuously" in report.notes[0]
    picard = is_picard(i1_space(), SelfMap((1, 2, 0)), Relation(3))
    assert picard.verdict
    assert picard.name == "Picard (modulo (d, R))"
    assert len(picard.notes) == 2
    # end test_11_05_picard_vacuous()


def test_11_06_numeric_cos():
    trace = numeric_picard(cosine, 1.0, tol=1e-12)
    assert trace.status == CONVERGED
    assert trace.steps <= 100
    assert abs(trace.fixed_point[0] - cos_root()) < 1e-9
    assert trace.a_posteriori_bound is None
    # end test_11_06_numeric_cos()


def test_11_07_numeric_cos_bound_dominates_error():
    root = cos_root()
    trace = numeric_picard(cosine, [1.0], tol=1e-12, lam=COS_LAMBDA)
    assert len(trace.bounds) == trace.steps
    for iterate, bound in zip(trace.iterates[1:], trace.bounds):
        assert abs(iterate[0] - root) <= bound + 1e-15
    assert trace.a_posteriori_bound == trace.bounds[-1]
    # end test_11_07_numeric_cos_bound_dominates_error()


def test_11_08_numeric_half_and_rotation():
    trace = numeric_picard(half, [4.0, -2.0], tol=1e-10)
    assert trace.status == CONVERGED
    assert np.allclose(trace.fixed_point, [0.0, 0.0], atol=1e-9)
    trace = numeric_picard(rotate_half, [1.0, 0.0], metric=EUCLIDEAN, tol=1e-10)
    assert trace.status == CONVERGED
    assert np.linalg.norm(trace.fixed_point) < 1e-9
    assert trace.step_norms[0] == pytest.approx(math.sqrt(1.25))
    # end test_11_08_numeric_half_and_rotation()


def test_11_09_numeric_shift_hits_max_iter():
    trace = numeric_picard(shift, [0.0], max_iter=50)
    assert trace.status == MAX_ITER_REACHED
    assert trace.steps == 50
    assert set(trace.step_norms) == {1.0}
    assert trace.fixed_point[0] == 50.0
    # end test_11_09_numeric_shift_hits_max_iter()


def test_11_10_numeric_errors():
    with pytest.raises(NonFiniteValue):
        numeric_picard(lambda x: np.array([np.nan]), [1.0])
    with pytest.raises(NonFiniteValue):
        numeric_picard(half, [math.inf])
    with pytest.raises(PreconditionError):
        numeric_picard(half, [1.0], tol=0.0)
    with pytest.raises(PreconditionError):
        numeric_picard(half, [1.0], max_iter=0)
    with pytest.raises(PreconditionError):
        numeric_picard(half, [1.0], lam=1.0)
    with pytest.raises(PreconditionError):
        numeric_picard(half, [1.0], metric="taxicab")
    with pytest.raises(PreconditionError):
        numeric_picard(rotate_half, [1.0])
    # end test_11_10_numeric_errors()


def test_11_11_named_maps():
    assert set(NUMERIC_MAPS) == {"cos", "half", "shift", "rotate-half"}
    assert NUMERIC_MAPS["cos"] is cosine
    # end test_11_11_named_maps()


def test_11_12_contraction_on_all_pairs_has_one_limit():
    contractions = 0
    for seed in range(500):
        instance = generate_instance(seed)
        space, t = instance.space, instance.t
        phi = ComparisonFn.linear(instance.lam)
        if not check_contractive(space, t, Relation.full(space.size), phi).verdict:
            continue
        contractions += 1
        traces = [orbit(t, x) for x in range(space.size)]
        assert all(trace.converged for trace in traces), seed
        assert len({trace.fixed_point for trace in traces}) == 1, seed
        assert len(fixed_points(t)) == 1, seed
    assert contractions >= 50
    # end test_11_12_contraction_on_all_pairs_has_one_limit()

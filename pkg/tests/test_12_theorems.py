"""
Test the theorem verifiers and the reduction to a Banach instance.

File:       test_12_theorems.py
Author:     Lorn B Kerr
Copyright:  (c) 2026 Lorn B Kerr
License:    MIT, see file LICENSE
"""

import os
import sys
from dataclasses import replace
from fractions import Fraction

import pytest

src_path = os.path.join(os.path.realpath("."), "src")
if src_path not in sys.path:
    sys.path.append(src_path)

from test_setup import report_json

from relfix import ComparisonFn, FiniteMetricSpace, Relation, SelfMap
from relfix.comparison import T_OVER_1_PLUS_T
from relfix.errors import (
    NotInClass,
    NotQuasiOrder,
    NotSymmetric,
    PreconditionError,
    PremiseFailure,
)
from relfix.generators import generate_instance
from relfix.reports import FAILS, HOLDS, NOT_EVALUATED, TRIVIAL, UNESTABLISHED
from relfix.testing_support.core_setup import i1_map, i1_relation, i1_space
from relfix.theorems import (
    AI_FCT_RMS,
    AI_LIN_RSMS,
    B_CP_BDMS,
    B_CP_MS,
    CONSISTENT,
    E_CP_MS,
    K_ASY_RMS,
    NL_LIN_QOMS,
    THEOREM_IDS,
    VIOLATION,
    TheoremReport,
    comparability_relation,
    edelstein_chainable,
    edelstein_relation,
    order_monotonicity,
    reduce_to_banach,
    strongly_order_connected,
    verify_ai_functional,
    verify_ai_linear_rs,
    verify_banach,
    verify_banach_bounded,
    verify_edelstein,
    verify_kirk,
    verify_nieto_lopez,
)


def two_islands():
    """Two far apart pairs, each collapsed onto its own fixed point."""
    space = FiniteMetricSpace.on_line([0, 1, 10, 11])
    s = Relation.from_pairs(4, [(0, 1), (1, 0), (2, 3), (3, 2)], with_identity=True)
    return space, SelfMap((0, 0, 2, 2)), s


def total_order():
    """p <= q <= r with d(p, q) = 1, d(q, r) = 2."""
    space = FiniteMetricSpace.on_line([0, 1, 3], ["p", "q", "r"])
    order = Relation.from_pairs(3, [(0, 1), (0, 2), (1, 2)], with_identity=True)
    return space, order


def test_12_01_theorem_ids():
    assert THEOREM_IDS == (
        "B-cp-ms",
        "B-cp-bdms",
        "K-asy-rms",
        "AI-fct-rms",
        "AI-lin-rsms",
        "E-cp-ms",
        "NL-lin-qoms",
    )
    # end test_12_01_theorem_ids()


def test_12_02_report_soundness():
    held = TheoremReport("B-cp-ms", (), FAILS)
    assert held.premises_hold
    assert held.soundness == VIOLATION
    premise = verify_banach(i1_space(), i1_map(), "1/2").premises[0]
    failed = replace(premise, status=FAILS)
    report = TheoremReport("B-cp-ms", (premise, failed), NOT_EVALUATED)
    assert not report.premises_hold
    assert report.soundness == CONSISTENT
    assert report.failed_premises() == (failed,)
    # end test_12_02_report_soundness()


def test_12_03_banach():
    report = verify_banach(i1_space(), i1_map(), "1/2")
    assert report.theorem_id == B_CP_MS
    assert [item.name for item in report.premises] == [
        "d is a metric",
        "(d, R; linear:1/2)-contractive",
    ]
    assert report.premises_hold
    assert report.conclusion == HOLDS
    assert report.conclusion_witness is None
    assert report.soundness == CONSISTENT
    assert verify_banach(i1_space(), i1_map(), 0).conclusion == HOLDS
    # end test_12_03_banach()


def test_12_04_banach_premise_fails():
    space, t, _ = two_islands()
    report = verify_banach(space, t, Fraction(1, 2))
    assert not report.premises_hold
    assert report.premises[1].status == FAILS
    assert report.premises[1].witness == (0, 2)
    assert report.conclusion == NOT_EVALUATED
    assert report.soundness == CONSISTENT
    with pytest.raises(PreconditionError):
        verify_banach(space, t, 1)
    with pytest.raises(PreconditionError):
        verify_banach(space, t, "-1/2")
    # end test_12_04_banach_premise_fails()


def test_12_05_banach_bounded():
    report = verify_banach_bounded(i1_space(), i1_map(), "1/2")
    assert report.theorem_id == B_CP_BDMS
    assert report.premises[0].name == "X is bounded"
    assert report.premises[0].note == "diameter 2"
    assert report.conclusion == HOLDS
    assert report.observations[-1].status == HOLDS
    assert report.observations[-1].note == "epsilon 3"
    # end test_12_05_banach_bounded()


def test_12_06_kirk():
    report = verify_kirk(i1_space(), i1_map(), i1_relation())
    assert report.theorem_id == K_ASY_RMS
    assert len(report.premises) == 7
    assert report.premises[2].status == TRIVIAL
    assert report.premises_hold
    assert report.conclusion == HOLDS
    swap = verify_kirk(
        i1_space().subspace([0, 1]), SelfMap((1, 0)), Relation.full(2)
    )
    assert swap.premises[1].status == FAILS
    assert swap.conclusion == NOT_EVALUATED
    with pytest.raises(PreconditionError):
        verify_kirk(i1_space(), i1_map(), Relation(3, [(0, 1)]))
    # end test_12_06_kirk()


def test_12_07_ai_functional():
    phi = ComparisonFn.linear("1/2")
    report = verify_ai_functional(i1_space(), i1_map(), i1_relation(), phi)
    assert report.theorem_id == AI_FCT_RMS
    assert report.premises[1].status == HOLDS
    assert report.conclusion == HOLDS
    slow = ComparisonFn.catalog(T_OVER_1_PLUS_T)
    report = verify_ai_functional(i1_space(), i1_map(), i1_relation(), slow)
    assert report.premises[1].status == UNESTABLISHED
    assert report.premises[1].note.endswith("(heuristic)")
    assert report.conclusion == NOT_EVALUATED
    with pytest.raises(PreconditionError):
        verify_ai_functional(i1_space(), i1_map(), Relation(3), phi)
    # end test_12_07_ai_functional()


def test_12_08_ai_linear_rs():
    report = verify_ai_linear_rs(i1_space(), i1_map(), i1_relation(), "1/2")
    assert report.theorem_id == AI_LIN_RSMS
    assert report.premises[-1].name == "(S^w)-semi-progressive"
    assert report.notes == ("conclusion evaluated modulo (d, S^w)",)
    assert report.conclusion == HOLDS
    with pytest.raises(NotSymmetric):
        verify_ai_linear_rs(
            i1_space(),
            i1_map(),
            Relation.from_pairs(3, [(0, 1)], with_identity=True),
            "1/2",
        )
    with pytest.raises(PreconditionError):
        verify_ai_linear_rs(i1_space(), i1_map(), Relation(3, [(0, 1), (1, 0)]), 1)
    with pytest.raises(PreconditionError):
        verify_ai_linear_rs(i1_space(), i1_map(), i1_relation(), 0)
    # end test_12_08_ai_linear_rs()


def test_12_09_ai_linear_rs_two_fixed_points():
    space, t, s = two_islands()
    report = verify_ai_linear_rs(space, t, s, "1/2")
    assert report.premises_hold
    assert report.conclusion == HOLDS
    assert not verify_banach(space, t, "1/2").premises_hold
    # end test_12_09_ai_linear_rs_two_fixed_points()


def test_12_10_reduce_to_banach():
    reduced = reduce_to_banach(i1_space(), i1_map(), i1_relation(), "1/2", 0)
    assert reduced.class_points == (0, 1, 2)
    assert reduced.modulus == Fraction(1, 2)
    assert reduced.restricted_map.table == (1, 1, 1)
    assert reduced.reduced_space.d(0, 2) == 2
    assert all(check.satisfied for check in reduced.lemma_checks)
    assert reduced.banach_report.conclusion == HOLDS
    assert reduced.reduced_limit == 1
    assert reduced.original_limit == 1
    assert reduced.round_trip_holds
    # end test_12_10_reduce_to_banach()


def test_12_11_reduce_on_one_island():
    space, t, s = two_islands()
    reduced = reduce_to_banach(space, t, s, "1/2", 3)
    assert reduced.class_points == (2, 3)
    assert reduced.reduced_limit == 2
    assert reduced.round_trip_holds
    # end test_12_11_reduce_on_one_island()


def test_12_12_reduce_errors():
    space = i1_space().subspace([0, 1])
    with pytest.raises(PremiseFailure):
        reduce_to_banach(space, SelfMap((1, 0)), Relation.full(2), "1/2", 0)
    with pytest.raises(NotInClass):
        reduce_to_banach(
            i1_space(), SelfMap((0, 2, 1)), Relation.identity(3), "1/2", 1
        )
    # end test_12_12_reduce_errors()


def test_12_13_edelstein_relation():
    assert edelstein_relation(i1_space(), Fraction(3, 2)) == i1_relation()
    assert edelstein_relation(i1_space(), 1) == Relation.identity(3)
    assert edelstein_relation(i1_space(), 3) == Relation.full(3)
    with pytest.raises(PreconditionError):
        edelstein_relation(i1_space(), 0)
    lopsided = FiniteMetricSpace(("a", "b"), [[0, 1], [2, 0]])
    with pytest.raises(NotSymmetric):
        edelstein_relation(lopsided, Fraction(3, 2))
    # end test_12_13_edelstein_relation()


def test_12_14_edelstein():
    assert edelstein_chainable(i1_space(), Fraction(3, 2)).status == HOLDS
    apart = edelstein_chainable(i1_space(), 1)
    assert apart.status == FAILS
    assert apart.witness == (0, 1)
    report = verify_edelstein(i1_space(), i1_map(), Fraction(3, 2), "1/2")
    assert report.theorem_id == E_CP_MS
    assert report.conclusion == HOLDS
    assert report.notes[-1] == "instantiated with S = [d < 3/2]"
    assert [item.status for item in report.observations] == [HOLDS, HOLDS]
    # end test_12_14_edelstein()


def test_12_15_order_helpers():
    space, order = total_order()
    assert comparability_relation(order) == Relation.full(3)
    with pytest.raises(NotQuasiOrder):
        comparability_relation(Relation(3, [(0, 1)]))
    item = order_monotonicity(SelfMap((0, 0, 1)), order)
    assert item.status == HOLDS
    assert item.note == "T is (<=)-increasing"
    assert order_monotonicity(SelfMap((2, 1, 0)), order).note == (
        "T is (<=)-decreasing"
    )
    assert order_monotonicity(SelfMap((1, 0, 1)), order).note == (
        "T is not (<=)-monotone"
    )
    connected = strongly_order_connected(order)
    assert connected.status == HOLDS
    assert connected.note == "<>^w is X x X: yes"
    loose = strongly_order_connected(Relation.identity(2))
    assert loose.status == FAILS
    assert loose.witness == (0, 1)
    # end test_12_15_order_helpers()


def test_12_16_nieto_lopez():
    space, order = total_order()
    report = verify_nieto_lopez(space, SelfMap((0, 0, 1)), order, "1/2")
    assert report.theorem_id == NL_LIN_QOMS
    assert report.premises_hold
    assert report.conclusion == HOLDS
    assert report.notes[-1] == "instantiated with S = <> of the order"
    # end test_12_16_nieto_lopez()


def test_12_17_specialisations_agree():
    for seed in range(100):
        instance = generate_instance(seed, max_size=8)
        space, t, lam = instance.space, instance.t, instance.lam
        ids = space.points
        edelstein = verify_edelstein(space, t, instance.epsilon, lam)
        general = verify_ai_linear_rs(
            space, t, edelstein_relation(space, instance.epsilon), lam
        )
        size = len(general.observations)
        assert report_json(edelstein, ids, size) == report_json(general, ids), seed
        assert edelstein.observations[0].status == HOLDS, seed

        ordered = verify_nieto_lopez(space, t, instance.order, lam)
        general = verify_ai_linear_rs(
            space, t, comparability_relation(instance.order), lam
        )
        size = len(general.observations)
        assert report_json(ordered, ids, size) == report_json(general, ids), seed
        assert ordered.observations[0].status == HOLDS, seed
    # end test_12_17_specialisations_agree()


def test_12_18_banach_is_functional_with_full_relation():
    for seed in range(100):
        instance = generate_instance(seed, max_size=8)
        space, t, lam = instance.space, instance.t, instance.lam
        banach = verify_banach(space, t, lam)
        functional = verify_ai_functional(
            space, t, Relation.full(space.size), ComparisonFn.linear(lam)
        )
        if banach.premises_hold:
            assert functional.premises_hold, seed
            assert banach.conclusion == functional.conclusion == HOLDS, seed
    # end test_12_18_banach_is_functional_with_full_relation()


def test_12_19_functional_premises_give_kirk_premises():
    for seed in range(200):
        instance = generate_instance(seed, max_size=8)
        space, t, r = instance.space, instance.t, instance.relation
        phi = ComparisonFn.linear(instance.lam)
        if verify_ai_functional(space, t, r, phi).premises_hold:
            assert verify_kirk(space, t, r).premises_hold, seed
    # end test_12_19_functional_premises_give_kirk_premises()

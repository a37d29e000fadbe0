"""
Test comparison functions and their admissibility classification.

File:       test_09_comparison.py
Author:     Lorn B Kerr
Copyright:  (c) 2026 Lorn B Kerr
License:    MIT, see file LICENSE
"""

import os
import sys
from fractions import Fraction

import pytest

src_path = os.path.join(os.path.realpath("."), "src")
if src_path not in sys.path:
    sys.path.append(src_path)

from relfix import ComparisonFn, NotRegressive, PreconditionError, classify_phi
from relfix.comparison import IDENTITY, NO_EVIDENCE, T_OVER_1_PLUS_T, YES


def test_09_01_linear():
    phi = ComparisonFn.linear("1/2")
    assert phi.lam == Fraction(1, 2)
    assert phi(Fraction(3)) == Fraction(3, 2)
    assert phi(3.0) == 1.5
    assert phi.in_re
    assert phi.spec == "linear:1/2"
    assert ComparisonFn.linear(0.25).lam == Fraction(1, 4)
    assert not ComparisonFn.linear(1).in_re
    with pytest.raises(PreconditionError):
        ComparisonFn.linear("-1")
    with pytest.raises(PreconditionError):
        ComparisonFn.linear("half")
    # end test_09_01_linear()


def test_09_02_catalog():
    phi = ComparisonFn.catalog(T_OVER_1_PLUS_T)
    assert phi(Fraction(1)) == Fraction(1, 2)
    assert phi.in_re
    assert phi.spec == T_OVER_1_PLUS_T
    identity = ComparisonFn.catalog(IDENTITY)
    assert identity(Fraction(5)) == 5
    assert not identity.in_re
    with pytest.raises(PreconditionError):
        ComparisonFn.catalog("sqrt")
    with pytest.raises(PreconditionError):
        ComparisonFn("power")
    # end test_09_02_catalog()


def test_09_03_parse():
    assert ComparisonFn.parse("linear:0.5") == ComparisonFn.linear("1/2")
    assert ComparisonFn.parse("linear(1/2)") == ComparisonFn.linear("1/2")
    assert ComparisonFn.parse(" t_over_1_plus_t ").name == T_OVER_1_PLUS_T
    phi = ComparisonFn.linear("3/4")
    assert ComparisonFn.parse(phi.spec) == phi
    with pytest.raises(PreconditionError):
        ComparisonFn.parse("cubic")
    # end test_09_03_parse()


def test_09_04_check_regressive():
    ComparisonFn.linear("0.9").check_regressive((0.1, 1.0))
    with pytest.raises(NotRegressive):
        ComparisonFn.linear(1).check_regressive((0.1,))
    with pytest.raises(NotRegressive):
        ComparisonFn.catalog(IDENTITY).check_regressive((1.0,))
    with pytest.raises(PreconditionError):
        ComparisonFn.linear("0.5").check_regressive((0.0,))
    # end test_09_04_check_regressive()


def test_09_05_classify_linear():
    verdict = classify_phi(ComparisonFn.linear("0.9"))
    assert verdict.matkowski == YES
    assert verdict.browder == YES
    assert verdict.heuristic
    assert verdict.describe() == "matkowski: yes, browder: yes"
    assert set(verdict.evidence) == {0.1, 1.0, 10.0, 1000.0}
    # end test_09_05_classify_linear()


def test_09_06_classify_t_over_1_plus_t(caplog):
    verdict = classify_phi(ComparisonFn.catalog(T_OVER_1_PLUS_T))
    assert verdict.matkowski == YES
    assert verdict.browder == NO_EVIDENCE
    evidence = verdict.evidence[1.0]
    assert evidence["steps"] == 10000
    assert 0.9 < evidence["decay_exponent"] < 1.1
    # end test_09_06_classify_t_over_1_plus_t()


def test_09_07_partial_sums_agree():
    # independent check: partial sums of the extremal sequences
    def partial_sums(step, start, count):
        total, value, sums = 0.0, start, []
        for _ in range(count):
            total += value
            value = step(value)
            sums.append(total)
        return sums

    geometric = partial_sums(lambda t: 0.9 * t, 1.0, 4000)
    assert geometric[-1] - geometric[1999] < 1e-12
    harmonic = partial_sums(lambda t: t / (1 + t), 1.0, 4000)
    assert harmonic[-1] - harmonic[1999] > 0.5
    # end test_09_07_partial_sums_agree()


def test_09_08_classify_preconditions():
    phi = ComparisonFn.linear("0.5")
    with pytest.raises(PreconditionError):
        classify_phi(phi, horizon=3)
    with pytest.raises(PreconditionError):
        classify_phi(phi, tail_tolerance=0)
    with pytest.raises(NotRegressive):
        classify_phi(ComparisonFn.catalog(IDENTITY))
    # end test_09_08_classify_preconditions()


def test_09_09_short_horizon_loses_evidence():
    verdict = classify_phi(ComparisonFn.linear("0.999"), horizon=100)
    assert verdict.browder == NO_EVIDENCE
    # end test_09_09_short_horizon_loses_evidence()


@pytest.mark.parametrize("lam", ["0." + str(digit) for digit in range(1, 10)])
def test_09_10_linear_moduli_are_browder(lam):
    verdict = classify_phi(ComparisonFn.linear(lam))
    assert verdict.matkowski == YES
    assert verdict.browder == YES
    # end test_09_10_linear_moduli_are_browder()

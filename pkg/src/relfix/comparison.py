"""
Comparison functions and their admissibility classification.

A ComparisonFn is either linear, phi(t) = lambda * t, or a named entry
of a small catalog. Evaluation is exact on Fractions, so contractivity
checks under the rational backend need no tolerance.

Matkowski and Browder admissibility quantify over all sequences; only
the extremal sequence t(n+1) = phi(t(n)) is examined, which dominates
every other one because phi is increasing. The verdicts are heuristic
evidence and are labelled as such.

File:       comparison.py
Author:     Lorn B Kerr
Copyright:  (c) 2026 Lorn B Kerr
License:    MIT, see file LICENSE
Version:    1.0.0
"""

import logging
import math
import re
from collections.abc import Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Any

from .errors import NotRegressive, PreconditionError
from .metric import Distance
from .validate import Validate

file_version = "1.0.0"
changes = {
    "1.0.0": "Initial release",
}

logger = logging.getLogger(__name__)

LINEAR = "linear"
CATALOG = "catalog"

T_OVER_1_PLUS_T = "t_over_1_plus_t"
IDENTITY = "identity"
CATALOG_NAMES = (T_OVER_1_PLUS_T, IDENTITY)

YES = "yes"
NO_EVIDENCE = "no-evidence"

DEFAULT_SAMPLE_POINTS = (0.1, 1.0, 10.0, 1000.0)
DEFAULT_HORIZON = 10000
DEFAULT_TAIL_TOLERANCE = 1e-12

RATIO_SLACK = 1e-3
"""A tail is geometric when every ratio is at most 1 - RATIO_SLACK."""
MATKOWSKI_DECAY_EXPONENT = 0.25
"""Least log-log decay rate read as convergence to 0."""
BROWDER_DECAY_EXPONENT = 1.1
"""Least log-log decay rate read as a summable tail."""


@dataclass(frozen=True)
class ComparisonFn:
    """
    A comparison function phi on the non-negative reals.

    Attributes:
        kind (str): LINEAR or CATALOG.
        lam (Fraction): the factor of a linear function, else None.
        name (str): the catalog name, else None.

    Raises:
        PreconditionError: for a negative factor or an unknown name.
    """

    kind: str
    lam: Fraction = None
    name: str = None

    def __post_init__(self) -> None:
        if self.kind == LINEAR:
            if self.lam is None or self.lam < 0:
                raise PreconditionError("a linear comparison needs lambda >= 0")
            object.__setattr__(self, "lam", Fraction(self.lam))
        elif self.kind == CATALOG:
            if self.name not in CATALOG_NAMES:
                raise PreconditionError(
                    "'" + str(self.name) + "' is not one of " + ", ".join(CATALOG_NAMES)
                )
        else:
            raise PreconditionError("unknown comparison kind " + str(self.kind))

    @classmethod
    def linear(cls, lam: Any) -> "ComparisonFn":
        """
        phi(t) = lam * t.

        Parameters:
            lam (Fraction | int | str): the factor, at least 0.

        Returns:
            (ComparisonFn) the linear function.
        """
        result = Validate().rational_field(
            lam if not isinstance(lam, float) else str(lam), Validate.REQUIRED
        )
        if not result["valid"]:
            raise PreconditionError("lambda: " + result["msg"])
        return cls(LINEAR, lam=result["entry"])

    @classmethod
    def catalog(cls, name: str) -> "ComparisonFn":
        """(ComparisonFn) the catalog entry 'name'."""
        return cls(CATALOG, name=name)

    @classmethod
    def parse(cls, text: str) -> "ComparisonFn":
        """
        Read a comparison function from its text form.

        Accepted forms are 'linear:0.5', 'linear(1/2)' and the catalog
        names.

        Parameters:
            text (str): the text form.

        Returns:
            (ComparisonFn) the function.

        Raises:
            PreconditionError: if the text is not recognised.
        """
        text = text.strip()
        match = re.match(r"^linear\s*[:(]\s*([^)\s]+)\s*\)?$", text)
        if match:
            return cls.linear(match.group(1))
        if text in CATALOG_NAMES:
            return cls.catalog(text)
        raise PreconditionError("'" + text + "' is not a comparison function")

    @property
    def spec(self) -> str:
        """(str) the text form accepted by parse()."""
        if self.kind == LINEAR:
            return "linear:" + str(self.lam)
        return self.name

    @property
    def in_re(self) -> bool:
        """(bool) True for increasing and regressive functions."""
        if self.kind == LINEAR:
            return self.lam < 1
        return self.name == T_OVER_1_PLUS_T

    def __call__(self, t: Distance) -> Distance:
        """
        Evaluate phi, exactly for Fraction arguments.

        Parameters:
            t (Distance): a non-negative number.

        Returns:
            (Distance) phi(t), same arithmetic as t.
        """
        if self.kind == LINEAR:
            return self.lam * t if not isinstance(t, float) else float(self.lam) * t
        if self.name == T_OVER_1_PLUS_T:
            return t / (1 + t)
        return t

    def check_regressive(self, sample_points: Sequence[float]) -> None:
        """
        Check phi(0) = 0 and phi(t) < t at every sample.

        Parameters:
            sample_points (Sequence[float]): positive samples.

        Raises:
            NotRegressive: naming the first failing sample.
            PreconditionError: if a sample is not positive.
        """
        if self(Fraction(0)) != 0:
            raise NotRegressive(self.spec + ": phi(0) is not 0")
        for t in sample_points:
            if not t > 0:
                raise PreconditionError("sample points must be positive")
            if not self(float(t)) < t:
                raise NotRegressive(
                    self.spec + ": phi(" + str(t) + ") is not less than " + str(t)
                )


@dataclass(frozen=True)
class Admissibility:
    """
    Heuristic admissibility verdicts for one comparison function.

    Attributes:
        matkowski (str): YES or NO_EVIDENCE.
        browder (str): YES or NO_EVIDENCE.
        evidence (dict): per sample, the iterate count, last iterate,
            decay exponent and largest tail ratio.
        heuristic (bool): always True; the verdicts rest on a finite
            horizon.
    """

    matkowski: str
    browder: str
    evidence: dict = field(default_factory=dict, compare=False)
    heuristic: bool = True

    def describe(self) -> str:
        """(str) 'matkowski: yes, browder: no-evidence' style summary."""
        return "matkowski: " + self.matkowski + ", browder: " + self.browder


def classify_phi(
    phi: ComparisonFn,
    sample_points: Sequence[float] = DEFAULT_SAMPLE_POINTS,
    horizon: int = DEFAULT_HORIZON,
    tail_tolerance: float = DEFAULT_TAIL_TOLERANCE,
) -> Admissibility:
    """
    Classify phi as Matkowski and Browder admissible, heuristically.

    For each sample the extremal sequence is iterated in floating
    point until it falls below 'tail_tolerance' or 'horizon' steps
    have been made.

    Matkowski is YES when every sequence fell below the tolerance, or
    its log-log decay exponent over the last quarter of the terms is
    at least MATKOWSKI_DECAY_EXPONENT. Browder is YES when every
    sequence has a geometric tail (all ratios over the last quarter at
    most 1 - RATIO_SLACK) or decays faster than n ** -1.1.

    Parameters:
        phi (ComparisonFn): an increasing regressive function.
        sample_points (Sequence[float]): positive start values.
        horizon (int): the largest number of iterations, at least 4.
        tail_tolerance (float): below this a term counts as zero.

    Returns:
        (Admissibility) the verdicts with their evidence.

    Raises:
        NotRegressive: if phi(t) >= t at some sample.
        PreconditionError: for a horizon below 4 or a non-positive
            tolerance.
    """
    if horizon < 4:
        raise PreconditionError("horizon must be at least 4")
    if not tail_tolerance > 0:
        raise PreconditionError("tail tolerance must be positive")
    samples = tuple(float(t) for t in sample_points)
    phi.check_regressive(samples)
    return _classify(phi, samples, int(horizon), float(tail_tolerance))


@lru_cache(maxsize=256)
def _classify(
    phi: ComparisonFn, samples: tuple, horizon: int, tail_tolerance: float
) -> Admissibility:
    matkowski = YES
    browder = YES
    evidence = {}
    for start in samples:
        terms = _extremal_sequence(phi, start, horizon, tail_tolerance)
        vanished = terms[-1] < tail_tolerance
        exponent = _decay_exponent(terms)
        ratio = _max_tail_ratio(terms)
        evidence[start] = {
            "steps": len(terms) - 1,
            "last": terms[-1],
            "decay_exponent": exponent,
            "max_ratio": ratio,
        }
        if not (vanished or exponent >= MATKOWSKI_DECAY_EXPONENT):
            matkowski = NO_EVIDENCE
        geometric = vanished and ratio <= 1 - RATIO_SLACK
        if not (geometric or exponent > BROWDER_DECAY_EXPONENT):
            browder = NO_EVIDENCE
    if browder == NO_EVIDENCE or matkowski == NO_EVIDENCE:
        logger.warning("%s: %s", phi.spec, "no evidence of admissibility")
    logger.debug("classified %s over %d samples", phi.spec, len(samples))
    return Admissibility(matkowski, browder, evidence)


def _extremal_sequence(
    phi: ComparisonFn, start: float, horizon: int, tail_tolerance: float
) -> list[float]:
    terms = [start]
    while len(terms) <= horizon and terms[-1] >= tail_tolerance:
        terms.append(phi(terms[-1]))
    return terms


def _decay_exponent(terms: list[float]) -> float:
    """
    The rate p in t(n) ~ n ** -p over the last quarter of the terms.

    Sequences that reached zero decay infinitely fast.
    """
    last = len(terms) - 1
    first = max(1, (3 * last) // 4)
    if last <= first or terms[last] <= 0:
        return math.inf
    if terms[first] <= 0:
        return math.inf
    return -(math.log(terms[last]) - math.log(terms[first])) / (
        math.log(last) - math.log(first)
    )


def _max_tail_ratio(terms: list[float]) -> float:
    """The largest t(n+1) / t(n) over the last quarter of the terms."""
    positive = [value for value in terms if value > 0]
    tail = positive[(3 * len(positive)) // 4 :]
    ratios = [tail[k + 1] / tail[k] for k in range(len(tail) - 1)]
    return max(ratios, default=0.0)

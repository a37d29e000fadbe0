"""
Predicate checkers on an instance (X, d, R, T).

Each checker decides one property exactly and returns a CheckReport
with every violating witness. Limit properties that every finite
carrier satisfies are reported as trivially satisfied together with
the evidence for it.

File:       contraction.py
Author:     Lorn B Kerr
Copyright:  (c) 2026 Lorn B Kerr
License:    MIT, see file LICENSE
Version:    1.0.1
"""

import logging
from dataclasses import dataclass
from itertools import combinations

from .chain_geometry import FINITE_CARRIER_NOTE
from .comparison import ComparisonFn
from .metric import (
    Distance,
    FiniteMetricSpace,
    SelfMap,
    fixed_points,
    min_positive_distance,
)
from .relation import Relation, rs_cover
from .reports import TRIVIAL, CheckReport, Finding, finding

file_version = "1.0.1"
changes = {
    "1.0.0": "Initial release",
    "1.0.1": "Fix(T) asingleton check reads related pairs both ways",
}

logger = logging.getLogger(__name__)


def check_contractive(
    space: FiniteMetricSpace, t: SelfMap, r: Relation, phi: ComparisonFn
) -> CheckReport:
    """
    Check d(Tx, Ty) <= phi(d(x, y)) for every r-related pair.

    The same inequality is re-checked over rs_cover(r); with a
    symmetric d the two verdicts agree, which is recorded in details.

    Parameters:
        space (FiniteMetricSpace): a valid metric space.
        t (SelfMap): the map.
        r (Relation): the relation.
        phi (ComparisonFn): the comparison function; linear(1) checks
            nonexpansiveness.

    Returns:
        (CheckReport) witnesses are all violating pairs (x, y).
    """
    witnesses = _contraction_failures(space, t, r, phi)
    covered = _contraction_failures(space, t, rs_cover(r), phi)
    return CheckReport(
        "(d, R; " + phi.spec + ")-contractive",
        not witnesses,
        tuple(witnesses),
        details={
            "rs_cover_verdict": not covered,
            "rs_cover_agrees": (not witnesses) == (not covered),
        },
    )


def _contraction_failures(
    space: FiniteMetricSpace, t: SelfMap, r: Relation, phi: ComparisonFn
) -> list:
    return [
        (x, y)
        for x, y in sorted(r.edges)
        if space.d(t(x), t(y)) > phi(space.d(x, y))
    ]


def check_increasing(t: SelfMap, r: Relation) -> CheckReport:
    """
    Check that x r y implies Tx r Ty.

    Parameters:
        t (SelfMap): the map.
        r (Relation): the relation.

    Returns:
        (CheckReport) witnesses are the pairs whose images are unrelated.
    """
    witnesses = [(x, y) for x, y in sorted(r.edges) if (t(x), t(y)) not in r]
    return CheckReport("(R)-increasing", not witnesses, tuple(witnesses))


def semi_progressive_points(t: SelfMap, r: Relation) -> frozenset:
    """
    X(T, R) = {x : x r Tx}, the admissible Picard starts.

    Parameters:
        t (SelfMap): the map.
        r (Relation): the relation.

    Returns:
        (frozenset[int]) exactly the points related to their image.
    """
    return frozenset(x for x in range(t.size) if (x, t(x)) in r)


def semi_progressive_finding(t: SelfMap, r: Relation, name: str) -> Finding:
    """
    Report whether X(T, R) is nonempty.

    Parameters:
        t (SelfMap): the map.
        r (Relation): the relation.
        name (str): the finding's name.

    Returns:
        (Finding) holds when some point is related to its image.
    """
    points = semi_progressive_points(t, r)
    return finding(name, bool(points), note="X(T, R) = " + str(sorted(points)))


@dataclass(frozen=True)
class PairAsymptotics:
    """
    Orbit behaviour of one related pair.

    Attributes:
        x (int): first point.
        y (int): second point.
        merge_step (int): the first n with T^n x = T^n y, or None.
        telescopic_sum (Distance): the sum of d(T^n x, T^n y) over all
            n, None when it diverges.
    """

    x: int
    y: int
    merge_step: int = None
    telescopic_sum: Distance = None

    @property
    def merges(self) -> bool:
        """(bool) True iff the orbits meet."""
        return self.merge_step is not None


@dataclass(frozen=True)
class AsymptoticReport:
    """
    Asymptotic behaviour of every pair of a relation.

    Attributes:
        pairs (tuple[PairAsymptotics, ...]): one entry per related pair,
            sorted.
    """

    pairs: tuple

    @property
    def strongly_asymptotic(self) -> bool:
        """(bool) True iff every pair's telescopic sum is finite."""
        return all(pair.merges for pair in self.pairs)

    @property
    def witnesses(self) -> tuple:
        """(tuple) the pairs whose orbits never meet."""
        return tuple((pair.x, pair.y) for pair in self.pairs if not pair.merges)

    def as_report(self) -> CheckReport:
        """(CheckReport) the strong asymptoticity verdict."""
        return CheckReport(
            "strongly (d, R)-asymptotic", self.strongly_asymptotic, self.witnesses
        )


def pair_asymptotics(
    space: FiniteMetricSpace, t: SelfMap, x: int, y: int
) -> PairAsymptotics:
    """
    Iterate both orbits together until they meet or a pair repeats.

    A repeated pair of distinct points means the orbits stay apart
    forever with a positive periodic distance, so the sum diverges.
    At most carrier_size ** 2 steps are made.

    Parameters:
        space (FiniteMetricSpace): the space.
        t (SelfMap): the map.
        x (int): first start.
        y (int): second start.

    Returns:
        (PairAsymptotics) the merge step and the exact telescopic sum.
    """
    u, v = x, y
    total = space.d(x, x)
    seen = set()
    step = 0
    while (u, v) not in seen:
        if u == v:
            return PairAsymptotics(x, y, step, total)
        seen.add((u, v))
        total += space.d(u, v)
        u, v = t(u), t(v)
        step += 1
    return PairAsymptotics(x, y)


def asymptotic_report(
    space: FiniteMetricSpace, t: SelfMap, b: Relation
) -> AsymptoticReport:
    """
    Decide strong (d, B)-asymptoticity, B a subset of [[d; T]].

    Parameters:
        space (FiniteMetricSpace): the space.
        t (SelfMap): the map.
        b (Relation): the relation.

    Returns:
        (AsymptoticReport) one entry per b-pair.
    """
    pairs = tuple(pair_asymptotics(space, t, x, y) for x, y in sorted(b.edges))
    logger.debug(
        "%d pairs, %d never merge",
        len(pairs),
        sum(1 for pair in pairs if not pair.merges),
    )
    return AsymptoticReport(pairs)


def _merge_relation(space: FiniteMetricSpace, t: SelfMap) -> Relation:
    size = space.size
    return Relation(
        size,
        frozenset(
            (x, y)
            for x in range(size)
            for y in range(size)
            if pair_asymptotics(space, t, x, y).merges
        ),
        True,
    )


def asymptotic_relation(space: FiniteMetricSpace, t: SelfMap) -> Relation:
    """
    [d; T]: the pairs with d(T^n x, T^n y) tending to 0.

    On a finite carrier the distances tend to 0 only if the orbits
    meet, so this is the orbit merge relation, an equivalence.

    Parameters:
        space (FiniteMetricSpace): the space.
        t (SelfMap): the map.

    Returns:
        (Relation) the asymptotic relation.
    """
    return _merge_relation(space, t)


def telescopic_relation(space: FiniteMetricSpace, t: SelfMap) -> Relation:
    """
    [[d; T]]: the pairs whose telescopic sum converges.

    Always a subset of asymptotic_relation(); on a finite carrier the
    two coincide.

    Parameters:
        space (FiniteMetricSpace): the space.
        t (SelfMap): the map.

    Returns:
        (Relation) the telescopic asymptotic relation.
    """
    return _merge_relation(space, t)


def fix_asingleton_check(t: SelfMap, b: Relation) -> CheckReport:
    """
    Check that b-related fixed points are equal.

    Parameters:
        t (SelfMap): the map.
        b (Relation): the relation.

    Returns:
        (CheckReport) witnesses are the related pairs of distinct
            fixed points; details carry the fixed points and whether
            Fix(T) is a b-singleton (asingleton and nonempty).
    """
    fixed = sorted(fixed_points(t))
    witnesses = []
    for p, q in combinations(fixed, 2):
        if (p, q) in b:
            witnesses.append((p, q))
        elif (q, p) in b:
            witnesses.append((q, p))
    return CheckReport(
        "Fix(T) is (B)-asingleton",
        not witnesses,
        tuple(witnesses),
        details={
            "fixed_points": tuple(fixed),
            "singleton": not witnesses and bool(fixed),
        },
    )


@dataclass(frozen=True)
class RegularityReport:
    """
    Regularity of a relation over a finite metric space.

    Attributes:
        complete (Finding): (d, R)-completeness, trivially satisfied.
        almost_selfclosed (Finding): d-almost-selfclosedness, trivially
            satisfied.
        selfclosed (Finding): d-selfclosedness, decided.
        almost_closed (Finding): d-almost-closedness, decided.
        evidence (Distance): the minimum positive distance, math.inf on
            a singleton carrier.
    """

    complete: Finding
    almost_selfclosed: Finding
    selfclosed: Finding
    almost_closed: Finding
    evidence: Distance

    @property
    def findings(self) -> tuple:
        """(tuple[Finding, ...]) every finding, in field order."""
        return (
            self.complete,
            self.almost_selfclosed,
            self.selfclosed,
            self.almost_closed,
        )


def regularity_report(space: FiniteMetricSpace, r: Relation) -> RegularityReport:
    """
    Report the regularity conditions of r.

    A convergent sequence on a finite carrier is eventually equal to
    its limit, so completeness and almost-selfclosedness always hold.
    The constant tail also decides the two stronger variants:
    selfclosedness (every ascending term is related to the limit)
    holds iff r is transitive, almost-closedness iff r is reflexive.

    Parameters:
        space (FiniteMetricSpace): a valid metric space.
        r (Relation): the relation.

    Returns:
        (RegularityReport) the findings with their evidence.
    """
    evidence = min_positive_distance(space)
    note = FINITE_CARRIER_NOTE + "; minimum positive distance " + str(evidence)
    return RegularityReport(
        Finding("(d, R)-complete", TRIVIAL, note=note),
        Finding("d-almost-selfclosed", TRIVIAL, note=note),
        finding("d-selfclosed", r.is_transitive() and r.is_reflexive(), note=note),
        finding("d-almost-closed", r.is_reflexive(), note=note),
        evidence,
    )


def check_left_continuity(
    space: FiniteMetricSpace, t: SelfMap, r: Relation
) -> Finding:
    """
    Report left (d, R)-continuity of T.

    Trivially satisfied on a finite carrier; whether T is
    (d, R)-nonexpansive, which also implies it, is noted as evidence.

    Parameters:
        space (FiniteMetricSpace): the space.
        t (SelfMap): the map.
        r (Relation): the relation.

    Returns:
        (Finding) a TRIVIAL finding.
    """
    nonexpansive = check_contractive(space, t, r, ComparisonFn.linear(1)).verdict
    return Finding(
        "left (d, R)-continuous",
        TRIVIAL,
        note=FINITE_CARRIER_NOTE
        + "; (d, R)-nonexpansive: "
        + ("yes" if nonexpansive else "no"),
    )

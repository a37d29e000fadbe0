"""
Instance level verification of the fixed point theorems.

Every verify_* function evaluates the premises of one theorem on a
concrete instance and, when they all hold, its conclusion. A report
whose premises hold while its conclusion fails is a soundness
violation; it must never occur.

Theorem ids:
    B-cp-ms       Banach contraction principle on metric spaces.
    B-cp-bdms     the same on bounded metric spaces.
    K-asy-rms     strongly asymptotic maps on relational metric spaces.
    AI-fct-rms    functional contractions on relational metric spaces.
    AI-lin-rsms   linear contractions on reflexive symmetric relations.
    E-cp-ms       Edelstein's epsilon-chainable contraction principle.
    NL-lin-qoms   linear contractions on quasi-ordered metric spaces.

File:       theorems.py
Author:     Lorn B Kerr
Copyright:  (c) 2026 Lorn B Kerr
License:    MIT, see file LICENSE
Version:    1.0.1
"""

import logging
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Any

from .chain_geometry import (
    ChainMetric,
    chain_metric,
    check_chain_metric,
    check_class_closure,
)
from .comparison import (
    DEFAULT_HORIZON,
    DEFAULT_SAMPLE_POINTS,
    DEFAULT_TAIL_TOLERANCE,
    YES,
    ComparisonFn,
    classify_phi,
)
from .contraction import (
    asymptotic_report,
    check_contractive,
    check_increasing,
    check_left_continuity,
    fix_asingleton_check,
    regularity_report,
    semi_progressive_finding,
)
from .errors import (
    NotInClass,
    NotQuasiOrder,
    NotSymmetric,
    PreconditionError,
    PremiseFailure,
)
from .metric import (
    FiniteMetricSpace,
    SelfMap,
    diameter,
    fixed_points,
    validate_metric,
)
from .picard import is_strongly_picard, orbit
from .relation import Relation, equivalence_class, s_omega
from .reports import (
    FAILS,
    HOLDS,
    NOT_EVALUATED,
    UNESTABLISHED,
    Finding,
    finding,
)
from .validate import Validate

file_version = "1.0.1"
changes = {
    "1.0.0": "Initial release",
    "1.0.1": "lambda is validated before use",
}

logger = logging.getLogger(__name__)

B_CP_MS = "B-cp-ms"
B_CP_BDMS = "B-cp-bdms"
K_ASY_RMS = "K-asy-rms"
AI_FCT_RMS = "AI-fct-rms"
AI_LIN_RSMS = "AI-lin-rsms"
E_CP_MS = "E-cp-ms"
NL_LIN_QOMS = "NL-lin-qoms"
THEOREM_IDS = (
    B_CP_MS,
    B_CP_BDMS,
    K_ASY_RMS,
    AI_FCT_RMS,
    AI_LIN_RSMS,
    E_CP_MS,
    NL_LIN_QOMS,
)

CONSISTENT = "consistent"
VIOLATION = "VIOLATION"


@dataclass(frozen=True)
class TheoremReport:
    """
    The verdicts of one theorem on one instance.

    Attributes:
        theorem_id (str): one of THEOREM_IDS.
        premises (tuple[Finding, ...]): the premises in stated order.
        conclusion (str): HOLDS, FAILS or NOT_EVALUATED.
        conclusion_witness (Any): point indices showing the failure.
        observations (tuple[Finding, ...]): side results that are
            neither premises nor conclusion.
        notes (tuple[str, ...]): interpretation remarks.
        seed (int): the generator seed of the instance, if generated.
    """

    theorem_id: str
    premises: tuple
    conclusion: str
    conclusion_witness: Any = None
    observations: tuple = ()
    notes: tuple = ()
    seed: int = None

    @property
    def premises_hold(self) -> bool:
        """(bool) True iff every premise is established."""
        return all(premise.satisfied for premise in self.premises)

    @property
    def soundness(self) -> str:
        """(str) VIOLATION when the premises hold and the conclusion fails."""
        if self.premises_hold and self.conclusion == FAILS:
            return VIOLATION
        return CONSISTENT

    def failed_premises(self) -> tuple:
        """(tuple[Finding, ...]) the premises that are not established."""
        return tuple(premise for premise in self.premises if not premise.satisfied)


def _conclude(
    theorem_id: str,
    premises: list,
    evaluate: Callable[[], tuple],
    notes: Sequence[str] = (),
    observations: Sequence[Finding] = (),
) -> TheoremReport:
    """
    Evaluate the conclusion only when every premise is established.

    Parameters:
        theorem_id (str): the theorem.
        premises (list[Finding]): the evaluated premises.
        evaluate (Callable): returns (verdict, witness).
        notes (Sequence[str]): interpretation remarks.
        observations (Sequence[Finding]): side results.

    Returns:
        (TheoremReport) the report.
    """
    conclusion = NOT_EVALUATED
    witness = None
    if all(premise.satisfied for premise in premises):
        verdict, witness = evaluate()
        conclusion = HOLDS if verdict else FAILS
        if verdict:
            witness = None
        else:
            logger.error("%s: premises hold but the conclusion fails", theorem_id)
    return TheoremReport(
        theorem_id,
        tuple(premises),
        conclusion,
        witness,
        tuple(observations),
        tuple(notes),
    )


def _metric_premise(space: FiniteMetricSpace) -> Finding:
    report = validate_metric(space)
    witness = report.violations[0].witness if report.violations else None
    return finding("d is a metric", report.valid, witness)


def _check_modulus(lam: Any, allow_zero: bool) -> Fraction:
    result = Validate().rational_field(
        lam if not isinstance(lam, float) else str(lam),
        Validate.REQUIRED,
        min_value=0,
        max_value=1,
        min_exclusive=not allow_zero,
        max_exclusive=True,
    )
    if not result["valid"]:
        raise PreconditionError(
            "lambda must lie in "
            + ("[0, 1)" if allow_zero else "(0, 1)")
            + ": "
            + result["msg"]
        )
    return result["entry"]


def _strongly_picard_conclusion(
    space: FiniteMetricSpace, t: SelfMap, starts: Relation, classes: Relation
) -> tuple:
    """
    Orbits from X(T, starts) converge and Fix(T) is a classes-asingleton.

    Returns:
        (tuple) (verdict, witness).
    """
    picard = is_strongly_picard(space, t, starts)
    if not picard.verdict:
        return False, picard.witnesses[0]
    unique = fix_asingleton_check(t, classes)
    if not unique.verdict:
        return False, unique.witnesses[0]
    return True, None


def verify_banach(space: FiniteMetricSpace, t: SelfMap, lam: Any) -> TheoremReport:
    """
    Banach: a (d; lambda)-contraction is global strongly Picard.

    Parameters:
        space (FiniteMetricSpace): the space.
        t (SelfMap): the map.
        lam (Fraction | int | str): the modulus in [0, 1).

    Returns:
        (TheoremReport) premises: metric, contractive over X x X;
            conclusion: Fix(T) is a singleton every orbit converges to.

    Raises:
        PreconditionError: if lambda is outside [0, 1).
    """
    lam = _check_modulus(lam, allow_zero=True)
    full = Relation.full(space.size)
    premises = [
        _metric_premise(space),
        check_contractive(space, t, full, ComparisonFn.linear(lam)).as_finding(),
    ]

    def evaluate() -> tuple:
        fixed = sorted(fixed_points(t))
        if len(fixed) != 1:
            return False, tuple(fixed)
        for x in range(space.size):
            trace = orbit(t, x)
            if trace.fixed_point != fixed[0]:
                return False, (x,)
        return True, None

    return _conclude(B_CP_MS, premises, evaluate)


def verify_banach_bounded(
    space: FiniteMetricSpace, t: SelfMap, lam: Any
) -> TheoremReport:
    """
    Banach on a bounded space, with the Edelstein relation replayed.

    Parameters:
        space (FiniteMetricSpace): the space.
        t (SelfMap): the map.
        lam (Fraction | int | str): the modulus in [0, 1).

    Returns:
        (TheoremReport) the Banach report with a boundedness premise
            and an observation that [d < diameter + 1] is X x X.
    """
    base = verify_banach(space, t, lam)
    bound = diameter(space)
    bounded = Finding("X is bounded", HOLDS, note="diameter " + str(bound))
    epsilon = bound + 1
    replay = finding(
        "[d < diameter + 1] is X x X",
        edelstein_relation(space, epsilon) == Relation.full(space.size),
        note="epsilon " + str(epsilon),
    )
    return replace(
        base,
        theorem_id=B_CP_BDMS,
        premises=(bounded,) + base.premises,
        observations=base.observations + (replay,),
    )


def verify_kirk(space: FiniteMetricSpace, t: SelfMap, r: Relation) -> TheoremReport:
    """
    Strongly (d, R)-asymptotic increasing maps are strongly Picard.

    Parameters:
        space (FiniteMetricSpace): the space.
        t (SelfMap): the map.
        r (Relation): a reflexive relation.

    Returns:
        (TheoremReport) conclusion: orbits from X(T, R) converge and
            Fix(T) is an s_omega(r)-asingleton.

    Raises:
        PreconditionError: if r is not reflexive.
    """
    if not r.is_reflexive():
        raise PreconditionError("the relation must be reflexive")
    regularity = regularity_report(space, r)
    premises = [
        _metric_premise(space),
        asymptotic_report(space, t, r).as_report().as_finding(),
        check_left_continuity(space, t, r),
        regularity.complete,
        regularity.almost_selfclosed,
        check_increasing(t, r).as_finding(),
        semi_progressive_finding(t, r, "(R)-semi-progressive"),
    ]
    return _conclude(
        K_ASY_RMS,
        premises,
        lambda: _strongly_picard_conclusion(space, t, r, s_omega(r)),
    )


def verify_ai_functional(
    space: FiniteMetricSpace,
    t: SelfMap,
    r: Relation,
    phi: ComparisonFn,
    sample_points: Sequence[float] = DEFAULT_SAMPLE_POINTS,
    horizon: int = DEFAULT_HORIZON,
    tail_tolerance: float = DEFAULT_TAIL_TOLERANCE,
) -> TheoremReport:
    """
    (d, R; phi)-contractions with Browder admissible phi.

    Parameters:
        space (FiniteMetricSpace): the space.
        t (SelfMap): the map.
        r (Relation): a reflexive relation.
        phi (ComparisonFn): an increasing regressive function.
        sample_points, horizon, tail_tolerance: classify_phi knobs.

    Returns:
        (TheoremReport) a Browder verdict other than YES leaves its
            premise unestablished.

    Raises:
        NotRegressive: from classify_phi.
        PreconditionError: if r is not reflexive.
    """
    if not r.is_reflexive():
        raise PreconditionError("the relation must be reflexive")
    admissibility = classify_phi(phi, sample_points, horizon, tail_tolerance)
    browder = Finding(
        "phi is Browder admissible",
        HOLDS if admissibility.browder == YES else UNESTABLISHED,
        note=admissibility.describe() + " (heuristic)",
    )
    regularity = regularity_report(space, r)
    premises = [
        _metric_premise(space),
        browder,
        check_contractive(space, t, r, phi).as_finding(),
        regularity.complete,
        regularity.almost_selfclosed,
        check_increasing(t, r).as_finding(),
        semi_progressive_finding(t, r, "(R)-semi-progressive"),
    ]
    return _conclude(
        AI_FCT_RMS,
        premises,
        lambda: _strongly_picard_conclusion(space, t, r, s_omega(r)),
    )


def verify_ai_linear_rs(
    space: FiniteMetricSpace, t: SelfMap, s: Relation, lam: Any
) -> TheoremReport:
    """
    (d, S; lambda)-contractions on a reflexive symmetric relation.

    The semi-progressiveness premise and the conclusion are taken
    modulo s_omega(s), unlike the functional theorem which uses R.

    Parameters:
        space (FiniteMetricSpace): the space.
        t (SelfMap): the map.
        s (Relation): a reflexive symmetric relation.
        lam (Fraction | int | str): the modulus in (0, 1).

    Returns:
        (TheoremReport) conclusion: orbits from X(T, S^w) converge and
            Fix(T) is an S^w-asingleton.

    Raises:
        NotSymmetric: if s is not symmetric.
        PreconditionError: if s is not reflexive or lambda is outside
            (0, 1).
    """
    if not s.is_symmetric():
        raise NotSymmetric("the relation must be symmetric")
    if not s.is_reflexive():
        raise PreconditionError("the relation must be reflexive")
    lam = _check_modulus(lam, allow_zero=False)
    e = s_omega(s)
    regularity = regularity_report(space, s)
    premises = [
        _metric_premise(space),
        check_contractive(space, t, s, ComparisonFn.linear(lam)).as_finding(),
        regularity.complete,
        regularity.almost_selfclosed,
        check_increasing(t, s).as_finding(),
        semi_progressive_finding(t, e, "(S^w)-semi-progressive"),
    ]
    return _conclude(
        AI_LIN_RSMS,
        premises,
        lambda: _strongly_picard_conclusion(space, t, e, e),
        notes=("conclusion evaluated modulo (d, S^w)",),
    )


@dataclass(frozen=True)
class ReducedInstance:
    """
    An instance reduced to a Banach instance on one class.

    Attributes:
        class_points (tuple[int, ...]): X0, ambient indices.
        chain_metric (ChainMetric): the chain metric e on X0.
        restricted_map (SelfMap): T on X0, indexed by position.
        modulus (Fraction): lambda.
        reduced_space (FiniteMetricSpace): (X0, e).
        lemma_checks (tuple[Finding, ...]): the verified construction
            properties.
        banach_report (TheoremReport): verify_banach on the reduction.
        reduced_limit (int): ambient index of the Picard limit of the
            restricted map from x0, None if it does not converge.
        original_limit (int): the orbit limit of x0 under T.
    """

    class_points: tuple
    chain_metric: ChainMetric
    restricted_map: SelfMap
    modulus: Fraction
    reduced_space: FiniteMetricSpace
    lemma_checks: tuple = field(default=())
    banach_report: TheoremReport = None
    reduced_limit: int = None
    original_limit: int = None

    @property
    def round_trip_holds(self) -> bool:
        """(bool) every check passed and both limits agree."""
        return (
            all(check.satisfied for check in self.lemma_checks)
            and self.banach_report.premises_hold
            and self.banach_report.conclusion == HOLDS
            and self.reduced_limit is not None
            and self.reduced_limit == self.original_limit
        )


def reduce_to_banach(
    space: FiniteMetricSpace, t: SelfMap, s: Relation, lam: Any, x0: int
) -> ReducedInstance:
    """
    Reduce a linear rs-contraction instance to a Banach instance.

    X0 is the s_omega(s) class of x0, e the chain metric on it and the
    map is restricted to X0. The construction properties are verified
    exactly and recorded in lemma_checks.

    Parameters:
        space (FiniteMetricSpace): the space.
        t (SelfMap): the map.
        s (Relation): a reflexive symmetric relation.
        lam (Fraction | int | str): the modulus in (0, 1).
        x0 (int): a start with (x0, T x0) in s_omega(s).

    Returns:
        (ReducedInstance) the reduction and its verification.

    Raises:
        PremiseFailure: naming the first premise that does not hold.
        NotInClass: if x0 is not related to its image.
    """
    base = verify_ai_linear_rs(space, t, s, lam)
    failed = base.failed_premises()
    if failed:
        raise PremiseFailure(failed[0].name)
    lam = _check_modulus(lam, allow_zero=False)
    e = s_omega(s)
    if (x0, t(x0)) not in e:
        raise NotInClass(
            "point " + space.points[x0] + " is not related to its image"
        )

    members = tuple(sorted(equivalence_class(e, x0)))
    metric = chain_metric(space, s, members)
    closure = check_class_closure(space, s, t, e, x0)
    invariant = finding(
        "X0 is T-invariant",
        closure.details["t_invariant"],
        next((x,) for x in members if t(x) not in members)
        if not closure.details["t_invariant"]
        else None,
    )
    if not invariant.satisfied:
        raise PremiseFailure(invariant.name)
    restricted = t.restrict(members)
    reduced_space = metric.as_space(space)
    contractive = check_contractive(
        reduced_space,
        restricted,
        Relation.full(len(members)),
        ComparisonFn.linear(lam),
    )
    outside = [(members[a], members[b]) for a, b in contractive.witnesses]
    lemma_checks = (
        check_chain_metric(space, s, metric)
        + closure.findings
        + (
            finding("T is (E)-increasing", check_increasing(t, e).verdict),
            invariant,
            finding(
                "T is (e; lambda)-contractive on X0",
                contractive.verdict,
                outside[0] if outside else None,
            ),
        )
    )
    banach = verify_banach(reduced_space, restricted, lam)
    reduced = orbit(restricted, members.index(x0))
    reduced_limit = members[reduced.fixed_point] if reduced.converged else None
    logger.debug(
        "reduced class of %d points, limit %s", len(members), reduced_limit
    )
    return ReducedInstance(
        members,
        metric,
        restricted,
        lam,
        reduced_space,
        lemma_checks,
        banach,
        reduced_limit,
        orbit(t, x0).fixed_point,
    )


def edelstein_relation(space: FiniteMetricSpace, epsilon: Any) -> Relation:
    """
    [d < epsilon]: the pairs closer than epsilon.

    Parameters:
        space (FiniteMetricSpace): a valid metric space.
        epsilon (Distance): positive.

    Returns:
        (Relation) reflexive and symmetric.

    Raises:
        PreconditionError: if epsilon is not positive.
        NotSymmetric: if the distance matrix is not symmetric.
    """
    if not epsilon > 0:
        raise PreconditionError("epsilon must be positive")
    size = space.size
    relation = Relation(
        size,
        frozenset(
            (x, y) for x in range(size) for y in range(size) if space.d(x, y) < epsilon
        ),
    )
    if not relation.is_symmetric():
        raise NotSymmetric("[d < epsilon] is not symmetric")
    return Relation(size, relation.edges, True)


def edelstein_monotonicity(
    space: FiniteMetricSpace, t: SelfMap, epsilon: Any, lam: Any
) -> Finding:
    """
    (d, [d < epsilon]; lambda)-contractive implies [d < epsilon]-increasing.

    Parameters:
        space (FiniteMetricSpace): the space.
        t (SelfMap): the map.
        epsilon (Distance): positive.
        lam (Fraction | int | str): the modulus in (0, 1).

    Returns:
        (Finding) holds when the implication holds on this instance.
    """
    lam = _check_modulus(lam, allow_zero=False)
    relation = edelstein_relation(space, epsilon)
    contractive = check_contractive(space, t, relation, ComparisonFn.linear(lam))
    increasing = check_increasing(t, relation)
    return finding(
        "[d < epsilon]-contractive implies [d < epsilon]-increasing",
        not contractive.verdict or increasing.verdict,
        increasing.witnesses[0] if increasing.witnesses else None,
    )


def edelstein_chainable(space: FiniteMetricSpace, epsilon: Any) -> Finding:
    """
    Report whether X is epsilon-chainable, [d < epsilon]^w = X x X.

    Parameters:
        space (FiniteMetricSpace): the space.
        epsilon (Distance): positive.

    Returns:
        (Finding) holds for an epsilon-chainable space.
    """
    closure = s_omega(edelstein_relation(space, epsilon))
    missing = sorted(Relation.full(space.size).edges - closure.edges)
    return finding(
        "X is epsilon-chainable", not missing, missing[0] if missing else None
    )


def verify_edelstein(
    space: FiniteMetricSpace, t: SelfMap, epsilon: Any, lam: Any
) -> TheoremReport:
    """
    Edelstein: the linear rs theorem with S = [d < epsilon].

    Parameters:
        space (FiniteMetricSpace): the space.
        t (SelfMap): the map.
        epsilon (Distance): positive.
        lam (Fraction | int | str): the modulus in (0, 1).

    Returns:
        (TheoremReport) the AI-lin-rsms report under the E-cp-ms id,
            with monotonicity and chainability observations.
    """
    base = verify_ai_linear_rs(space, t, edelstein_relation(space, epsilon), lam)
    return replace(
        base,
        theorem_id=E_CP_MS,
        notes=base.notes + ("instantiated with S = [d < " + str(epsilon) + "]",),
        observations=base.observations
        + (
            edelstein_monotonicity(space, t, epsilon, lam),
            edelstein_chainable(space, epsilon),
        ),
    )


def comparability_relation(order: Relation) -> Relation:
    """
    <> : x <> y iff x <= y or y <= x.

    The result is reflexive and symmetric but in general not
    transitive.

    Parameters:
        order (Relation): a quasi-order.

    Returns:
        (Relation) order united with its inverse.

    Raises:
        NotQuasiOrder: if order is not reflexive and transitive.
    """
    if not order.is_quasi_order():
        raise NotQuasiOrder("the order must be reflexive and transitive")
    return order.union(order.inverse())


def order_monotonicity(t: SelfMap, order: Relation) -> Finding:
    """
    (<=)-monotone maps are <>-increasing.

    Parameters:
        t (SelfMap): the map.
        order (Relation): a quasi-order.

    Returns:
        (Finding) holds when monotone implies <>-increasing here; the
            note tells whether T is increasing or decreasing.
    """
    increasing = all((t(x), t(y)) in order for x, y in order.edges)
    decreasing = all((t(y), t(x)) in order for x, y in order.edges)
    comparable = check_increasing(t, comparability_relation(order))
    monotone = increasing or decreasing
    kind = "increasing" if increasing else "decreasing" if decreasing else "neither"
    return finding(
        "(<=)-monotone implies <>-increasing",
        not monotone or comparable.verdict,
        comparable.witnesses[0] if comparable.witnesses else None,
        note="T is (<=)-" + kind if monotone else "T is not (<=)-monotone",
    )


def strongly_order_connected(order: Relation) -> Finding:
    """
    Every pair has a common lower and a common upper bound.

    Such orders have <>^w = X x X, which is also checked.

    Parameters:
        order (Relation): a quasi-order.

    Returns:
        (Finding) holds for a strongly order connected order; the
            witness is a pair lacking a bound.
    """
    size = order.carrier_size
    for x in range(size):
        for y in range(size):
            lower = any((z, x) in order and (z, y) in order for z in range(size))
            upper = any((x, z) in order and (y, z) in order for z in range(size))
            if not (lower and upper):
                return finding("(<=) is strongly order connected", False, (x, y))
    connected = s_omega(comparability_relation(order)) == Relation.full(size)
    return finding(
        "(<=) is strongly order connected",
        True,
        note="<>^w is X x X: " + ("yes" if connected else "no"),
    )


def verify_nieto_lopez(
    space: FiniteMetricSpace, t: SelfMap, order: Relation, lam: Any
) -> TheoremReport:
    """
    Nieto-Lopez: the linear rs theorem with S = <>.

    Parameters:
        space (FiniteMetricSpace): the space.
        t (SelfMap): the map.
        order (Relation): a quasi-order.
        lam (Fraction | int | str): the modulus in (0, 1).

    Returns:
        (TheoremReport) the AI-lin-rsms report under the NL-lin-qoms
            id, with monotonicity and order connectedness observations.

    Raises:
        NotQuasiOrder: if order is not a quasi-order.
    """
    base = verify_ai_linear_rs(space, t, comparability_relation(order), lam)
    return replace(
        base,
        theorem_id=NL_LIN_QOMS,
        notes=base.notes + ("instantiated with S = <> of the order",),
        observations=base.observations
        + (order_monotonicity(t, order), strongly_order_connected(order)),
    )

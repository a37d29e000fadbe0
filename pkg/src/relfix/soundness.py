"""
The soundness suite: every theorem over many generated instances.

An instance is sound when its TheoremReport is not a violation. For
the linear rs theorem every premise satisfying instance is also
reduced to a Banach instance from each admissible start, and a failed
round trip counts as a violation.

File:       soundness.py
Author:     Lorn B Kerr
Copyright:  (c) 2026 Lorn B Kerr
License:    MIT, see file LICENSE
Version:    1.0.0
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace

from .comparison import T_OVER_1_PLUS_T, ComparisonFn
from .contraction import semi_progressive_points
from .errors import PreconditionError
from .generators import MAX_CARRIER, Instance, generate_instance
from .relation import rs_cover, s_omega
from .reports import HOLDS
from .theorems import (
    AI_FCT_RMS,
    AI_LIN_RSMS,
    B_CP_BDMS,
    B_CP_MS,
    E_CP_MS,
    K_ASY_RMS,
    NL_LIN_QOMS,
    THEOREM_IDS,
    VIOLATION,
    TheoremReport,
    reduce_to_banach,
    verify_ai_functional,
    verify_ai_linear_rs,
    verify_banach,
    verify_banach_bounded,
    verify_edelstein,
    verify_kirk,
    verify_nieto_lopez,
)

file_version = "1.0.0"
changes = {
    "1.0.0": "Initial release",
}

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SuiteSummary:
    """
    Counts over one suite run.

    Attributes:
        theorem_id (str): the theorem.
        seed (int): the first seed; instance k used seed + k.
        instances (int): number of instances checked.
        premises_held (int): instances whose premises all held.
        conclusions_held (int): instances whose conclusion held.
        violations (tuple[int, ...]): seeds of violating instances.
    """

    theorem_id: str
    seed: int
    instances: int
    premises_held: int
    conclusions_held: int
    violations: tuple = ()

    @property
    def sound(self) -> bool:
        """(bool) True iff no instance violated the theorem."""
        return not self.violations


def run_theorem(theorem_id: str, instance: Instance) -> TheoremReport:
    """
    Verify one theorem on a generated instance.

    The functional theorem uses linear(lambda) on odd seeds and
    t/(1 + t) on even ones.

    Parameters:
        theorem_id (str): one of THEOREM_IDS.
        instance (Instance): the instance.

    Returns:
        (TheoremReport) the report, stamped with the instance seed.

    Raises:
        PreconditionError: for an unknown theorem id.
    """
    space, t, lam = instance.space, instance.t, instance.lam
    if theorem_id == B_CP_MS:
        report = verify_banach(space, t, lam)
    elif theorem_id == B_CP_BDMS:
        report = verify_banach_bounded(space, t, lam)
    elif theorem_id == K_ASY_RMS:
        report = verify_kirk(space, t, instance.relation)
    elif theorem_id == AI_FCT_RMS:
        phi = (
            ComparisonFn.linear(lam)
            if instance.seed % 2
            else ComparisonFn.catalog(T_OVER_1_PLUS_T)
        )
        report = verify_ai_functional(space, t, instance.relation, phi)
    elif theorem_id == AI_LIN_RSMS:
        report = verify_ai_linear_rs(space, t, rs_cover(instance.relation), lam)
    elif theorem_id == E_CP_MS:
        report = verify_edelstein(space, t, instance.epsilon, lam)
    elif theorem_id == NL_LIN_QOMS:
        report = verify_nieto_lopez(space, t, instance.order, lam)
    else:
        raise PreconditionError(
            "'" + theorem_id + "' is not one of " + ", ".join(THEOREM_IDS)
        )
    return replace(report, seed=instance.seed)


def reduction_round_trips(instance: Instance) -> bool:
    """
    Reduce from every admissible start and compare the limits.

    Parameters:
        instance (Instance): an instance whose linear rs premises hold
            for s = rs_cover(relation).

    Returns:
        (bool) True iff every reduction round trip holds.
    """
    s = rs_cover(instance.relation)
    starts = semi_progressive_points(instance.t, s_omega(s))
    for x0 in sorted(starts):
        reduced = reduce_to_banach(instance.space, instance.t, s, instance.lam, x0)
        if not reduced.round_trip_holds:
            return False
    return True


def check_seed(theorem_id: str, seed: int, max_size: int = MAX_CARRIER) -> tuple:
    """
    Check one seed; module level so worker processes can run it.

    Returns:
        (tuple) (premises held, conclusion held, sound).
    """
    instance = generate_instance(seed, max_size)
    report = run_theorem(theorem_id, instance)
    sound = report.soundness != VIOLATION
    if sound and theorem_id == AI_LIN_RSMS and report.premises_hold:
        sound = reduction_round_trips(instance)
    if not sound:
        logger.error("%s violated on seed %d", theorem_id, seed)
    return report.premises_hold, report.conclusion == HOLDS, sound


def run_suite(
    theorem_id: str,
    count: int = 500,
    seed: int = 0,
    workers: int = 4,
    max_size: int = MAX_CARRIER,
) -> SuiteSummary:
    """
    Verify a theorem on 'count' instances drawn from consecutive seeds.

    Parameters:
        theorem_id (str): one of THEOREM_IDS.
        count (int): number of instances, at least 1.
        seed (int): the first seed.
        workers (int): worker processes; 1 runs in this process.
        max_size (int): the largest carrier.

    Returns:
        (SuiteSummary) the counts and the violating seeds.

    Raises:
        PreconditionError: for an unknown theorem id or a bad count.
    """
    if theorem_id not in THEOREM_IDS:
        raise PreconditionError(
            "'" + theorem_id + "' is not one of " + ", ".join(THEOREM_IDS)
        )
    if count < 1 or workers < 1:
        raise PreconditionError("count and workers must be at least 1")
    seeds = range(seed, seed + count)
    ids = [theorem_id] * count
    sizes = [max_size] * count
    if workers == 1:
        results = list(map(check_seed, ids, seeds, sizes))
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(
                pool.map(check_seed, ids, seeds, sizes, chunksize=max(1, count // 64))
            )
    summary = SuiteSummary(
        theorem_id,
        seed,
        count,
        sum(1 for held, _, _ in results if held),
        sum(1 for _, holds, _ in results if holds),
        tuple(s for s, (_, _, sound) in zip(seeds, results) if not sound),
    )
    logger.info(
        "%s: %d instances, %d with premises, %d violations",
        theorem_id,
        summary.instances,
        summary.premises_held,
        len(summary.violations),
    )
    return summary

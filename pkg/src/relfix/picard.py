"""
Picard iteration on finite instances and on numeric maps.

Finite orbits are followed until a point repeats, which happens within
carrier_size + 1 steps; no tolerance is involved. The numeric engine
iterates a map on real vectors until the step falls below a tolerance
and, for a known contraction modulus, keeps the a posteriori error
bound of every iterate.

File:       picard.py
Author:     Lorn B Kerr
Copyright:  (c) 2026 Lorn B Kerr
License:    MIT, see file LICENSE
Version:    1.0.0
"""

import logging
from collections.abc import Callable, Sequence
from dataclasses import dataclass

import numpy as np

from .contraction import semi_progressive_points
from .errors import NonFiniteValue, PreconditionError
from .metric import FiniteMetricSpace, SelfMap
from .relation import Relation
from .reports import CheckReport

file_version = "1.0.0"
changes = {
    "1.0.0": "Initial release",
}

logger = logging.getLogger(__name__)

CONVERGED = "converged"
CYCLE = "cycle"
MAX_ITER_REACHED = "max_iter_reached"

MAX_NORM = "max"
EUCLIDEAN = "euclidean"
METRICS = (MAX_NORM, EUCLIDEAN)

DEFAULT_TOL = 1e-12
DEFAULT_MAX_ITER = 10000


@dataclass(frozen=True)
class PicardTrace:
    """
    The orbit of one start point up to its first repetition.

    Attributes:
        start (int): the start point.
        orbit (tuple[int, ...]): the distinct visited points in order,
            orbit[k + 1] = T(orbit[k]).
        outcome (str): CONVERGED or CYCLE.
        fixed_point (int): the limit when converged, else None.
        period (int): the cycle length when cycling, else None.
    """

    start: int
    orbit: tuple
    outcome: str
    fixed_point: int = None
    period: int = None

    @property
    def steps(self) -> int:
        """(int) the number of applications of T recorded."""
        return len(self.orbit) - 1

    @property
    def converged(self) -> bool:
        """(bool) True iff the orbit ends in a fixed point."""
        return self.outcome == CONVERGED


def orbit(t: SelfMap, x: int) -> PicardTrace:
    """
    Follow x, Tx, T^2 x, ... until a point repeats.

    Parameters:
        t (SelfMap): the map.
        x (int): the start.

    Returns:
        (PicardTrace) converged(z) when the orbit ends in T(z) = z,
            cycle(p) with p >= 2 otherwise.
    """
    visited = {x: 0}
    points = [x]
    while True:
        image = t(points[-1])
        if image in visited:
            break
        visited[image] = len(points)
        points.append(image)
    if image == points[-1]:
        return PicardTrace(x, tuple(points), CONVERGED, fixed_point=image)
    return PicardTrace(
        x, tuple(points), CYCLE, period=len(points) - visited[image]
    )


def is_strongly_picard(
    space: FiniteMetricSpace, t: SelfMap, r: Relation
) -> CheckReport:
    """
    Check that every orbit from X(T, R) converges to a fixed point.

    Parameters:
        space (FiniteMetricSpace): the space.
        t (SelfMap): the map.
        r (Relation): the relation selecting the starts.

    Returns:
        (CheckReport) witnesses are the cycling starts (x,); details
            carry the limit of every converging start.
    """
    starts = sorted(semi_progressive_points(t, r))
    traces = [orbit(t, x) for x in starts]
    witnesses = tuple((trace.start,) for trace in traces if not trace.converged)
    notes = ()
    if not starts:
        notes = ("X(T, R) is empty; the property holds vacuously",)
    return CheckReport(
        "strongly Picard (modulo (d, R))",
        not witnesses,
        witnesses,
        notes,
        {
            "semi_progressive": tuple(starts),
            "limits": {
                trace.start: trace.fixed_point for trace in traces if trace.converged
            },
        },
    )


def is_picard(space: FiniteMetricSpace, t: SelfMap, r: Relation) -> CheckReport:
    """
    Check that every orbit from X(T, R) is d-Cauchy.

    On a finite carrier a Cauchy sequence is eventually constant, so an
    orbit is Cauchy exactly when it converges.

    Parameters:
        space (FiniteMetricSpace): the space.
        t (SelfMap): the map.
        r (Relation): the relation selecting the starts.

    Returns:
        (CheckReport) witnesses are the starts of non-Cauchy orbits.
    """
    strong = is_strongly_picard(space, t, r)
    return CheckReport(
        "Picard (modulo (d, R))",
        strong.verdict,
        strong.witnesses,
        strong.notes
        + ("d-Cauchy orbits on a finite carrier are eventually constant",),
        strong.details,
    )


@dataclass(frozen=True)
class NumericTrace:
    """
    The record of a numeric Picard iteration.

    Attributes:
        iterates (tuple[np.ndarray, ...]): x0, x1, ... as float vectors.
        step_norms (tuple[float, ...]): d(x(n), x(n + 1)) for every step.
        bounds (tuple[float, ...]): lambda / (1 - lambda) * step norm,
            the a posteriori error bound of x(n + 1); empty without a
            modulus.
        status (str): CONVERGED or MAX_ITER_REACHED.
    """

    iterates: tuple
    step_norms: tuple
    bounds: tuple
    status: str

    @property
    def a_posteriori_bound(self) -> float:
        """(float) the bound on the last iterate, None without a modulus."""
        return self.bounds[-1] if self.bounds else None

    @property
    def fixed_point(self) -> np.ndarray:
        """(np.ndarray) the last iterate."""
        return self.iterates[-1]

    @property
    def steps(self) -> int:
        """(int) the number of map evaluations."""
        return len(self.step_norms)


def numeric_picard(
    fn: Callable[[np.ndarray], Sequence[float]],
    x0: Sequence[float],
    metric: str = MAX_NORM,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
    lam: float = None,
) -> NumericTrace:
    """
    Iterate a map on real vectors until the step is below tol.

    Parameters:
        fn (Callable): the map; must not keep state between calls.
        x0 (Sequence[float] | float): the start vector.
        metric (str): MAX_NORM or EUCLIDEAN.
        tol (float): the step size that ends the iteration, > 0.
        max_iter (int): the largest number of steps, >= 1.
        lam (float): optional contraction modulus in [0, 1).

    Returns:
        (NumericTrace) the iterates and step norms.

    Raises:
        PreconditionError: for a bad tolerance, step count, modulus or
            metric name.
        NonFiniteValue: if the map returns a NaN or infinite coordinate.
    """
    if not tol > 0:
        raise PreconditionError("tol must be positive")
    if max_iter < 1:
        raise PreconditionError("max_iter must be at least 1")
    if lam is not None and not 0 <= lam < 1:
        raise PreconditionError("lambda must lie in [0, 1)")
    if metric not in METRICS:
        raise PreconditionError("metric must be one of " + ", ".join(METRICS))
    order = np.inf if metric == MAX_NORM else 2

    x = np.atleast_1d(np.asarray(x0, dtype=float))
    if not np.all(np.isfinite(x)):
        raise NonFiniteValue("start vector is not finite")
    iterates = [x]
    step_norms = []
    bounds = []
    status = MAX_ITER_REACHED
    for _ in range(max_iter):
        y = np.atleast_1d(np.asarray(fn(x), dtype=float))
        if not np.all(np.isfinite(y)):
            raise NonFiniteValue(
                "map value is not finite after " + str(len(step_norms)) + " steps"
            )
        step = float(np.linalg.norm(y - x, ord=order))
        iterates.append(y)
        step_norms.append(step)
        if lam is not None:
            bounds.append(lam / (1 - lam) * step)
        x = y
        if step < tol:
            status = CONVERGED
            break
    logger.debug("numeric picard: %s after %d steps", status, len(step_norms))
    return NumericTrace(tuple(iterates), tuple(step_norms), tuple(bounds), status)


def cosine(x: np.ndarray) -> np.ndarray:
    """x -> cos(x), componentwise."""
    return np.cos(x)


def half(x: np.ndarray) -> np.ndarray:
    """x -> x / 2."""
    return 0.5 * x


def shift(x: np.ndarray) -> np.ndarray:
    """x -> x + 1, which has no fixed point."""
    return x + 1.0


ROTATE_HALF_MATRIX = 0.5 * np.array([[0.0, -1.0], [1.0, 0.0]])


def rotate_half(x: np.ndarray) -> np.ndarray:
    """Rotate a plane vector by a quarter turn and halve it."""
    if x.shape != (2,):
        raise PreconditionError("rotate-half needs a 2-vector")
    return ROTATE_HALF_MATRIX @ x


NUMERIC_MAPS = {
    "cos": cosine,
    "half": half,
    "shift": shift,
    "rotate-half": rotate_half,
}
"""Named maps available to the command line."""

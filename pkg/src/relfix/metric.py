"""
Finite metric spaces and selfmaps.

Point ids are strings; internally every point is its index in the
ordered id list. Distances are exact Fractions in the rational backend
and floats in the float backend; nothing here depends on which.

File:       metric.py
Author:     Lorn B Kerr
Copyright:  (c) 2026 Lorn B Kerr
License:    MIT, see file LICENSE
Version:    1.0.0
"""

import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import MapError, ShapeMismatch

file_version = "1.0.0"
changes = {
    "1.0.0": "Initial release",
}

logger = logging.getLogger(__name__)

Distance = Union[Fraction, float, int]

RATIONAL = "rational"
"""Exact rational arithmetic backend."""
FLOAT = "float"
"""Floating point backend."""
ARITHMETICS = (RATIONAL, FLOAT)


def to_backend(value: Distance, arithmetic: str) -> Distance:
    """
    Convert a number to the chosen arithmetic.

    Parameters:
        value (Distance): the number.
        arithmetic (str): RATIONAL or FLOAT.

    Returns:
        (Distance) a Fraction or a float.
    """
    if arithmetic == FLOAT:
        return float(value)
    if isinstance(value, float):
        return Fraction(value).limit_denominator(10**12)
    return Fraction(value)


@dataclass(frozen=True)
class FiniteMetricSpace:
    """
    A finite carrier of point ids with its distance matrix.

    Construction checks only the shape; the axioms are checked by
    validate_metric() so that invalid spaces can still be reported on.

    Attributes:
        points (tuple[str, ...]): point ids in index order.
        dist (tuple[tuple[Distance, ...], ...]): the square matrix.

    Raises:
        ShapeMismatch: if the matrix is not square with one row per
            point.
    """

    points: tuple
    dist: tuple

    def __post_init__(self) -> None:
        object.__setattr__(self, "points", tuple(self.points))
        object.__setattr__(self, "dist", tuple(tuple(row) for row in self.dist))
        size = len(self.points)
        if len(self.dist) != size:
            raise ShapeMismatch(
                "distance matrix has "
                + str(len(self.dist))
                + " rows for "
                + str(size)
                + " points"
            )
        for number, row in enumerate(self.dist):
            if len(row) != size:
                raise ShapeMismatch(
                    "row "
                    + str(number)
                    + " has "
                    + str(len(row))
                    + " entries for "
                    + str(size)
                    + " points"
                )
        if len(set(self.points)) != size:
            raise ShapeMismatch("point ids are not unique")

    @classmethod
    def on_line(
        cls, coordinates: Sequence[Distance], points: Sequence[str] = None
    ) -> "FiniteMetricSpace":
        """
        Embed points on the real line with d(x, y) = |x - y|.

        Parameters:
            coordinates (Sequence[Distance]): the positions, distinct.
            points (Sequence[str]): ids, default 'p0', 'p1', ...

        Returns:
            (FiniteMetricSpace) the induced metric space.
        """
        if points is None:
            points = ["p" + str(i) for i in range(len(coordinates))]
        dist = [[abs(x - y) for y in coordinates] for x in coordinates]
        return cls(tuple(points), dist)

    @property
    def size(self) -> int:
        """(int) the number of points."""
        return len(self.points)

    def d(self, i: int, j: int) -> Distance:
        """(Distance) the distance between points i and j."""
        return self.dist[i][j]

    def index_of(self, point_id: str) -> int:
        """
        Translate a point id into its index.

        Parameters:
            point_id (str): the id.

        Returns:
            (int) the index.

        Raises:
            KeyError: if the id is unknown.
        """
        try:
            return self.points.index(point_id)
        except ValueError:
            raise KeyError(point_id) from None

    def subspace(self, indices: Sequence[int]) -> "FiniteMetricSpace":
        """
        Restrict the space to some of its points.

        Parameters:
            indices (Sequence[int]): the kept points, in the new order.

        Returns:
            (FiniteMetricSpace) the restricted space.
        """
        return FiniteMetricSpace(
            tuple(self.points[i] for i in indices),
            [[self.dist[i][j] for j in indices] for i in indices],
        )

    def with_arithmetic(self, arithmetic: str) -> "FiniteMetricSpace":
        """
        Convert every distance to the chosen arithmetic.

        Parameters:
            arithmetic (str): RATIONAL or FLOAT.

        Returns:
            (FiniteMetricSpace) the converted space.
        """
        return FiniteMetricSpace(
            self.points,
            [[to_backend(value, arithmetic) for value in row] for row in self.dist],
        )


@dataclass(frozen=True)
class MetricViolation:
    """
    One violated metric axiom.

    Attributes:
        axiom (str): 'non-negative', 'reflexive', 'symmetric',
            'triangular' or 'sufficient'.
        witness (tuple[int, ...]): the offending point indices.
        message (str): a readable description using point ids.
    """

    axiom: str
    witness: tuple
    message: str


@dataclass(frozen=True)
class ValidationReport:
    """
    The outcome of validate_metric.

    Attributes:
        violations (tuple[MetricViolation, ...]): every violation found.
    """

    violations: tuple = ()

    @property
    def valid(self) -> bool:
        """(bool) True iff no axiom is violated."""
        return not self.violations


def validate_metric(space: FiniteMetricSpace) -> ValidationReport:
    """
    Check the metric axioms, listing every violation with a witness.

    Parameters:
        space (FiniteMetricSpace): the space to check.

    Returns:
        (ValidationReport) empty iff the matrix is a metric.
    """
    ids = space.points
    size = space.size
    violations: list[MetricViolation] = []
    for i in range(size):
        for j in range(size):
            value = space.d(i, j)
            if not _is_finite(value) or value < 0:
                violations.append(
                    MetricViolation(
                        "non-negative",
                        (i, j),
                        "d(" + ids[i] + ", " + ids[j] + ") = " + str(value),
                    )
                )
    for i in range(size):
        if space.d(i, i) != 0:
            violations.append(
                MetricViolation(
                    "reflexive", (i,), "d(" + ids[i] + ", " + ids[i] + ") is not 0"
                )
            )
    for i in range(size):
        for j in range(i + 1, size):
            if space.d(i, j) != space.d(j, i):
                violations.append(
                    MetricViolation(
                        "symmetric",
                        (i, j),
                        "d(" + ids[i] + ", " + ids[j] + ") differs from d("
                        + ids[j] + ", " + ids[i] + ")",
                    )
                )
            if space.d(i, j) == 0 or space.d(j, i) == 0:
                violations.append(
                    MetricViolation(
                        "sufficient",
                        (i, j),
                        "distinct points " + ids[i] + " and " + ids[j]
                        + " at distance 0",
                    )
                )
    for i in range(size):
        for j in range(size):
            for k in range(size):
                if space.d(i, j) > space.d(i, k) + space.d(k, j):
                    violations.append(
                        MetricViolation(
                            "triangular",
                            (i, k, j),
                            "d(" + ids[i] + ", " + ids[j] + ")"
                            + " exceeds the path through "
                            + ids[k],
                        )
                    )
    logger.debug("metric on %d points: %d violations", size, len(violations))
    return ValidationReport(tuple(violations))


def diameter(space: FiniteMetricSpace) -> Distance:
    """
    The largest distance in the space.

    Parameters:
        space (FiniteMetricSpace): a valid metric space.

    Returns:
        (Distance) max d(i, j), 0 for a singleton carrier.
    """
    return max((value for row in space.dist for value in row), default=0)


def min_positive_distance(space: FiniteMetricSpace) -> Distance:
    """
    The smallest positive distance in the space.

    On a finite carrier this is the scale below which every convergent
    sequence is constant.

    Parameters:
        space (FiniteMetricSpace): a valid metric space.

    Returns:
        (Distance) the minimum positive distance, math.inf if there is
            no pair of distinct points.
    """
    return min(
        (value for row in space.dist for value in row if value > 0), default=math.inf
    )


@dataclass(frozen=True)
class SelfMap:
    """
    A total selfmap T of the carrier {0, ..., n - 1}.

    Attributes:
        table (tuple[int, ...]): table[i] is T(i).

    Raises:
        MapError: if an image lies outside the carrier.
    """

    table: tuple

    def __post_init__(self) -> None:
        object.__setattr__(self, "table", tuple(int(image) for image in self.table))
        for point, image in enumerate(self.table):
            if not 0 <= image < len(self.table):
                raise MapError(
                    "image of point "
                    + str(point)
                    + " is "
                    + str(image)
                    + ", outside the carrier"
                )

    @classmethod
    def identity(cls, size: int) -> "SelfMap":
        """(SelfMap) the identity on size points."""
        return cls(tuple(range(size)))

    @classmethod
    def constant(cls, size: int, value: int) -> "SelfMap":
        """(SelfMap) the map sending every point to value."""
        return cls(tuple(value for _ in range(size)))

    @property
    def size(self) -> int:
        """(int) the number of points."""
        return len(self.table)

    def __call__(self, point: int) -> int:
        return self.table[point]

    def iterate(self, point: int, times: int) -> int:
        """
        Apply the map repeatedly.

        Parameters:
            point (int): the start.
            times (int): number of applications, at least 0.

        Returns:
            (int) T^times(point).
        """
        for _ in range(times):
            point = self.table[point]
        return point

    def restrict(self, indices: Sequence[int]) -> "SelfMap":
        """
        Restrict the map to an invariant subset, reindexed.

        Parameters:
            indices (Sequence[int]): the subset, in the new order.

        Returns:
            (SelfMap) the map on positions of 'indices'.

        Raises:
            MapError: if the subset is not invariant.
        """
        position = {point: number for number, point in enumerate(indices)}
        table = []
        for point in indices:
            image = self.table[point]
            if image not in position:
                raise MapError("subset is not invariant under the map")
            table.append(position[image])
        return SelfMap(tuple(table))


def fixed_points(t: SelfMap) -> frozenset:
    """
    Fix(T) = {x : T(x) = x}.

    Parameters:
        t (SelfMap): the map.

    Returns:
        (frozenset[int]) exactly the indices with T(i) = i.
    """
    return frozenset(i for i, image in enumerate(t.table) if image == i)


def _is_finite(value: Distance) -> bool:
    """(bool) False for NaN and infinite floats."""
    return not isinstance(value, float) or math.isfinite(value)

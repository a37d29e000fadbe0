"""
The chain metric on an equivalence class and its closure properties.

On a class X0 of s_omega(s) the chain metric e(x, y) is the least
d-length of an s-chain joining x and y. On a finite carrier the
infimum is a minimum over simple chains, so e is computed as weighted
shortest path lengths in the graph of s restricted to X0.

File:       chain_geometry.py
Author:     Lorn B Kerr
Copyright:  (c) 2026 Lorn B Kerr
License:    MIT, see file LICENSE
Version:    1.0.0
"""

import logging
import math
from collections.abc import Iterable
from dataclasses import dataclass

import networkx as nx

from .errors import NotConnectedClass, NotSymmetric
from .metric import (
    Distance,
    FiniteMetricSpace,
    SelfMap,
    min_positive_distance,
    validate_metric,
)
from .relation import (
    Chain,
    Relation,
    enumerate_chains,
    equivalence_class,
    s_omega,
)
from .reports import FAILS, TRIVIAL, Finding, finding

file_version = "1.0.0"
changes = {
    "1.0.0": "Initial release",
}

logger = logging.getLogger(__name__)

FINITE_CARRIER_NOTE = (
    "every convergent sequence on a finite carrier is eventually constant"
)


def chain_length(space: FiniteMetricSpace, chain: Chain) -> Distance:
    """
    The d-length d(z1, z2) + ... + d(z(k-1), zk) of a chain.

    Parameters:
        space (FiniteMetricSpace): the space holding the chain's points.
        chain (Chain): the chain.

    Returns:
        (Distance) the summed consecutive distances, 0 for (z, z).
    """
    points = chain.points
    return sum(
        (space.d(points[i], points[i + 1]) for i in range(len(points) - 1)),
        space.d(points[0], points[0]),
    )


def chain_infimum(
    space: FiniteMetricSpace, s: Relation, x: int, y: int
) -> Distance:
    """
    Brute force least d-length over all simple s-chains from x to y.

    This is the reference the shortest path computation is tested
    against; it is exponential in the carrier size.

    Parameters:
        space (FiniteMetricSpace): the space.
        s (Relation): the relation the chains follow.
        x (int): source point.
        y (int): target point.

    Returns:
        (Distance) the minimum chain length, math.inf when no chain
            joins x and y.
    """
    chains = enumerate_chains(s, x, y, space.size + 1, simple=True)
    return min((chain_length(space, chain) for chain in chains), default=math.inf)


@dataclass(frozen=True)
class ChainMetric:
    """
    The chain metric e over one equivalence class.

    Attributes:
        class_points (tuple[int, ...]): the class, ascending indices of
            the ambient carrier.
        e (tuple[tuple[Distance, ...], ...]): e[a][b] is the distance
            between class_points[a] and class_points[b].
    """

    class_points: tuple
    e: tuple

    def position(self, x: int) -> int:
        """
        Translate an ambient point index into its position in the class.

        Parameters:
            x (int): an ambient index.

        Returns:
            (int) the position of x in class_points.

        Raises:
            KeyError: if x is not in the class.
        """
        try:
            return self.class_points.index(x)
        except ValueError:
            raise KeyError(x) from None

    def distance(self, x: int, y: int) -> Distance:
        """(Distance) e(x, y) for ambient indices x and y of the class."""
        return self.e[self.position(x)][self.position(y)]

    def as_space(self, ambient: FiniteMetricSpace) -> FiniteMetricSpace:
        """
        The class as a metric space under e.

        Parameters:
            ambient (FiniteMetricSpace): the space the class came from,
                used for the point ids.

        Returns:
            (FiniteMetricSpace) (X0, e), points in class_points order.
        """
        return FiniteMetricSpace(
            tuple(ambient.points[x] for x in self.class_points), self.e
        )

    def min_positive_distance(self) -> Distance:
        """(Distance) the least positive e-distance, math.inf if none."""
        return min(
            (value for row in self.e for value in row if value > 0), default=math.inf
        )


def chain_metric(
    space: FiniteMetricSpace, s: Relation, class_points: Iterable[int]
) -> ChainMetric:
    """
    Compute the chain metric e on one s_omega(s) class.

    Parameters:
        space (FiniteMetricSpace): a valid metric space.
        s (Relation): a reflexive symmetric relation over the carrier.
        class_points (Iterable[int]): exactly one class of s_omega(s).

    Returns:
        (ChainMetric) e over the class.

    Raises:
        NotSymmetric: if s is not symmetric.
        NotConnectedClass: if class_points is not a single class of
            s_omega(s).
    """
    if not s.is_symmetric():
        raise NotSymmetric("chain metric needs a symmetric relation")
    members = tuple(sorted(set(class_points)))
    if not members:
        raise NotConnectedClass("the point set is empty")
    if frozenset(members) != equivalence_class(s_omega(s), members[0]):
        raise NotConnectedClass(
            "points " + str(list(members)) + " do not form one chain connected class"
        )

    graph = nx.Graph()
    graph.add_nodes_from(members)
    inside = set(members)
    for i, j in s.edges:
        if i != j and i in inside and j in inside:
            graph.add_edge(i, j, weight=space.d(i, j))

    rows = []
    for x in members:
        lengths = nx.single_source_dijkstra_path_length(graph, x, weight="weight")
        rows.append(
            tuple(space.d(x, x) if y == x else lengths[y] for y in members)
        )
    logger.debug(
        "chain metric on %d points from %d edges",
        len(members),
        graph.number_of_edges(),
    )
    return ChainMetric(members, tuple(rows))


@dataclass(frozen=True)
class ClassReport:
    """
    Closure properties of the class of x0.

    Attributes:
        class_points (tuple[int, ...]): the class X0.
        findings (tuple[Finding, ...]): one Finding per property.
        details (dict): extra values; 't_invariant' tells whether
            T maps X0 into itself.
    """

    class_points: tuple
    findings: tuple
    details: dict

    @property
    def verdict(self) -> bool:
        """(bool) True iff every finding is satisfied."""
        return all(item.satisfied for item in self.findings)


def check_class_closure(
    space: FiniteMetricSpace, s: Relation, t: SelfMap, e: Relation, x0: int
) -> ClassReport:
    """
    Check the closure properties of X0, the e-class of x0.

    The findings, in order:
        s-neighbourhoods stay in X0: X(x, S) is a subset of X0 for x in X0.
        (E)-connected: every pair of X0 is e-related.
        s-chains stay in X0: no s-chain leaves X0.
        (d, S)-closed under limits: trivially satisfied on a finite
            carrier, the minimum positive distance is the evidence.

    Parameters:
        space (FiniteMetricSpace): the space.
        s (Relation): reflexive symmetric relation.
        t (SelfMap): the map; only its invariance is reported.
        e (Relation): s_omega(s).
        x0 (int): a point of the class.

    Returns:
        (ClassReport) the findings.
    """
    members = equivalence_class(e, x0)
    ordered = tuple(sorted(members))

    leaving = [
        (x, y) for x in ordered for y in s.successors(x) if y not in members
    ]
    neighbourhoods = finding(
        "s-neighbourhoods stay in X0", not leaving, leaving[0] if leaving else None
    )

    unrelated = [(x, y) for x in ordered for y in ordered if (x, y) not in e]
    connected = finding(
        "X0 is (E)-connected", not unrelated, unrelated[0] if unrelated else None
    )

    graph = s.to_digraph()
    escape = None
    for x in ordered:
        outside = nx.descendants(graph, x) - members
        if outside:
            escape = tuple(nx.shortest_path(graph, x, min(outside)))
            break
    chains = finding("s-chains stay in X0", escape is None, escape)

    evidence = space.subspace(ordered)
    limits = Finding(
        "X0 is (d, S)-closed",
        TRIVIAL,
        note=FINITE_CARRIER_NOTE
        + "; minimum positive distance "
        + str(min_positive_distance(evidence)),
    )

    invariant = all(t(x) in members for x in ordered)
    return ClassReport(
        ordered,
        (neighbourhoods, connected, chains, limits),
        {"t_invariant": invariant},
    )


def check_chain_metric(
    space: FiniteMetricSpace, s: Relation, metric: ChainMetric
) -> tuple:
    """
    Verify the properties of a chain metric against its ambient space.

    Parameters:
        space (FiniteMetricSpace): the ambient space.
        s (Relation): the relation e was built from.
        metric (ChainMetric): the chain metric.

    Returns:
        (tuple[Finding, ...]) e is a metric, d is subordinated to e,
            e agrees with d on s-pairs, and (X0, e) is complete.
    """
    points = metric.class_points
    report = validate_metric(metric.as_space(space))
    is_metric = finding(
        "e is a metric on X0",
        report.valid,
        tuple(points[k] for k in report.violations[0].witness)
        if report.violations
        else None,
    )

    below = [
        (x, y)
        for x in points
        for y in points
        if space.d(x, y) > metric.distance(x, y)
    ]
    subordinated = finding(
        "d is subordinated to e", not below, below[0] if below else None
    )

    differ = [
        (x, y)
        for x in points
        for y in points
        if (x, y) in s and metric.distance(x, y) != space.d(x, y)
    ]
    agrees = finding(
        "e equals d on s-pairs", not differ, differ[0] if differ else None
    )

    scale = metric.min_positive_distance()
    complete = Finding(
        "X0 is e-complete",
        TRIVIAL if scale > 0 else FAILS,
        note=FINITE_CARRIER_NOTE + "; minimum positive e-distance " + str(scale),
    )
    return (is_metric, subordinated, agrees, complete)


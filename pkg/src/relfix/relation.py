"""
Finite binary relations, their covers, chains and equivalence classes.

A Relation is an explicit edge set over the indexed carrier
{0, ..., carrier_size - 1}. Closures are computed with networkx on the
directed graph of the relation. All values are immutable.

File:       relation.py
Author:     Lorn B Kerr
Copyright:  (c) 2026 Lorn B Kerr
License:    MIT, see file LICENSE
Version:    1.0.0
"""

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

import networkx as nx

from .errors import NotEquivalence, PreconditionError, RelationError

file_version = "1.0.0"
changes = {
    "1.0.0": "Initial release",
}

logger = logging.getLogger(__name__)

Pair = tuple[int, int]


@dataclass(frozen=True)
class Relation:
    """
    A binary relation over the carrier {0, ..., carrier_size - 1}.

    Attributes:
        carrier_size (int): number of points of the carrier.
        edges (frozenset[tuple[int, int]]): the related ordered pairs.
        reflexive (bool): tag; when set, construction enforces that
            every (i, i) is an edge.

    Raises:
        RelationError: if an index lies outside the carrier or the
            reflexive tag is violated.
    """

    carrier_size: int
    edges: frozenset = frozenset()
    reflexive: bool = field(default=False, compare=False)

    def __post_init__(self) -> None:
        if self.carrier_size < 0:
            raise RelationError("carrier size must be non-negative")
        edges = frozenset((int(i), int(j)) for i, j in self.edges)
        object.__setattr__(self, "edges", edges)
        for i, j in edges:
            if not (0 <= i < self.carrier_size and 0 <= j < self.carrier_size):
                raise RelationError(
                    "edge ("
                    + str(i)
                    + ", "
                    + str(j)
                    + ") lies outside a carrier of "
                    + str(self.carrier_size)
                    + " points"
                )
        if self.reflexive:
            for i in range(self.carrier_size):
                if (i, i) not in edges:
                    raise RelationError(
                        "relation tagged reflexive lacks ("
                        + str(i)
                        + ", "
                        + str(i)
                        + ")"
                    )

    @classmethod
    def identity(cls, carrier_size: int) -> "Relation":
        """
        The diagonal relation.

        Parameters:
            carrier_size (int): number of points.

        Returns:
            (Relation) {(i, i)}, tagged reflexive.
        """
        return cls(carrier_size, frozenset((i, i) for i in range(carrier_size)), True)

    @classmethod
    def full(cls, carrier_size: int) -> "Relation":
        """
        The full relation X x X.

        Parameters:
            carrier_size (int): number of points.

        Returns:
            (Relation) every ordered pair, tagged reflexive.
        """
        pairs = frozenset(
            (i, j) for i in range(carrier_size) for j in range(carrier_size)
        )
        return cls(carrier_size, pairs, True)

    @classmethod
    def from_pairs(
        cls, carrier_size: int, pairs: Iterable[Pair], with_identity: bool = False
    ) -> "Relation":
        """
        Build a relation from pairs, optionally adding the diagonal.

        Parameters:
            carrier_size (int): number of points.
            pairs (Iterable[tuple[int, int]]): the edges.
            with_identity (bool): add every (i, i) and tag reflexive.

        Returns:
            (Relation) the new relation.
        """
        edges = set(pairs)
        if with_identity:
            edges.update((i, i) for i in range(carrier_size))
        relation = cls(carrier_size, frozenset(edges))
        if with_identity or relation.is_reflexive():
            relation = cls(carrier_size, relation.edges, True)
        return relation

    def __contains__(self, pair: Pair) -> bool:
        return tuple(pair) in self.edges

    def __len__(self) -> int:
        return len(self.edges)

    def related(self, x: int, y: int) -> bool:
        """(bool) True iff x is related to y."""
        return (x, y) in self.edges

    def successors(self, x: int) -> list[int]:
        """
        Get the points related from x, in index order.

        Parameters:
            x (int): the source point.

        Returns:
            (list[int]) every y with (x, y) an edge.
        """
        return sorted(j for i, j in self.edges if i == x)

    def inverse(self) -> "Relation":
        """(Relation) the transposed relation."""
        return Relation(
            self.carrier_size, frozenset((j, i) for i, j in self.edges), self.reflexive
        )

    def union(self, other: "Relation") -> "Relation":
        """
        Union of two relations over the same carrier.

        Parameters:
            other (Relation): relation over the same carrier.

        Returns:
            (Relation) the union, reflexive if either operand is.

        Raises:
            RelationError: if the carriers differ.
        """
        if other.carrier_size != self.carrier_size:
            raise RelationError("relations over different carriers")
        return Relation(
            self.carrier_size,
            self.edges | other.edges,
            self.reflexive or other.reflexive,
        )

    def is_reflexive(self) -> bool:
        """(bool) True iff every (i, i) is an edge."""
        return all((i, i) in self.edges for i in range(self.carrier_size))

    def is_symmetric(self) -> bool:
        """(bool) True iff (i, j) an edge implies (j, i) an edge."""
        return all((j, i) in self.edges for i, j in self.edges)

    def is_transitive(self) -> bool:
        """(bool) True iff (i, j), (j, k) edges imply (i, k) an edge."""
        successors: dict[int, set[int]] = {}
        for i, j in self.edges:
            successors.setdefault(i, set()).add(j)
        for i, js in successors.items():
            for j in js:
                if not successors.get(j, set()) <= js:
                    return False
        return True

    def is_equivalence(self) -> bool:
        """(bool) True iff reflexive, symmetric and transitive."""
        return self.is_reflexive() and self.is_symmetric() and self.is_transitive()

    def is_quasi_order(self) -> bool:
        """(bool) True iff reflexive and transitive."""
        return self.is_reflexive() and self.is_transitive()

    def to_digraph(self) -> nx.DiGraph:
        """
        Build the directed graph of the relation.

        Returns:
            (nx.DiGraph) nodes are the carrier indices, edges the pairs.
        """
        graph = nx.DiGraph()
        graph.add_nodes_from(range(self.carrier_size))
        graph.add_edges_from(self.edges)
        return graph


@dataclass(frozen=True)
class Chain:
    """
    A chain (z_1, ..., z_k), k >= 2, between z_1 and z_k.

    Attributes:
        points (tuple[int, ...]): the chain's points in order.
    """

    points: tuple

    def __post_init__(self) -> None:
        object.__setattr__(self, "points", tuple(int(p) for p in self.points))
        if len(self.points) < 2:
            raise PreconditionError("a chain has at least two points")

    @property
    def source(self) -> int:
        """(int) the first point."""
        return self.points[0]

    @property
    def target(self) -> int:
        """(int) the last point."""
        return self.points[-1]

    def is_simple(self) -> bool:
        """(bool) True iff no point repeats, the loop (x, x) excepted."""
        return len(self.points) == 2 or len(set(self.points)) == len(self.points)

    def follows(self, r: Relation) -> bool:
        """(bool) True iff consecutive points are edges of r."""
        return is_ascending(self.points, r)


def rs_cover(r: Relation) -> Relation:
    """
    Reflexive symmetric cover: r, its transpose and the identity.

    Parameters:
        r (Relation): any relation.

    Returns:
        (Relation) the smallest reflexive symmetric relation containing r.
    """
    edges = set(r.edges)
    edges.update((j, i) for i, j in r.edges)
    edges.update((i, i) for i in range(r.carrier_size))
    return Relation(r.carrier_size, frozenset(edges), True)


def rt_cover(r: Relation) -> Relation:
    """
    Reflexive transitive cover: the union of all powers of r and the identity.

    The union of the powers alone coincides with this whenever r is
    reflexive, which is the standing assumption on relations here.

    Parameters:
        r (Relation): any relation.

    Returns:
        (Relation) the smallest reflexive transitive relation containing r.
    """
    closure = nx.transitive_closure(r.to_digraph(), reflexive=True)
    result = Relation(r.carrier_size, frozenset(closure.edges()), True)
    logger.debug(
        "closure of %d edges on %d points has %d edges",
        len(r),
        r.carrier_size,
        len(result),
    )
    return result


def s_omega(r: Relation) -> Relation:
    """
    The equivalence generated by r: rt_cover(rs_cover(r)).

    Parameters:
        r (Relation): any relation.

    Returns:
        (Relation) an equivalence relation.

    Raises:
        NotEquivalence: if the closure is not an equivalence; this
            signals a defect, valid input never triggers it.
    """
    result = rt_cover(rs_cover(r))
    if not (result.is_reflexive() and result.is_symmetric() and result.is_transitive()):
        raise NotEquivalence("closure of the symmetric cover is not an equivalence")
    return result


def equivalence_class(e: Relation, x: int) -> frozenset:
    """
    The class {y : x e y} of x.

    Parameters:
        e (Relation): an equivalence relation.
        x (int): a point of the carrier.

    Returns:
        (frozenset[int]) the class of x, which contains x.

    Raises:
        NotEquivalence: if e is not reflexive, symmetric and transitive.
        RelationError: if x is outside the carrier.
    """
    if not e.is_equivalence():
        raise NotEquivalence("relation is not an equivalence")
    if not 0 <= x < e.carrier_size:
        raise RelationError("point " + str(x) + " is outside the carrier")
    return frozenset(y for i, y in e.edges if i == x)


def equivalence_classes(e: Relation) -> list[frozenset]:
    """
    Partition the carrier into the classes of e.

    Parameters:
        e (Relation): an equivalence relation.

    Returns:
        (list[frozenset[int]]) the classes, ordered by smallest member.

    Raises:
        NotEquivalence: if e is not an equivalence.
    """
    classes: list[frozenset] = []
    seen: set[int] = set()
    for x in range(e.carrier_size):
        if x not in seen:
            members = equivalence_class(e, x)
            seen.update(members)
            classes.append(members)
    return classes


def enumerate_chains(
    r: Relation, x: int, y: int, max_len: int, simple: bool = False
) -> list[Chain]:
    """
    Every r-chain from x to y with at most max_len points.

    Chains may repeat points unless 'simple' is set; simple chains
    repeat no point, except the two point loop (x, x) when x = y.
    Chains are produced in depth first order over ascending indices.

    Parameters:
        r (Relation): the relation the chains follow.
        x (int): source point.
        y (int): target point.
        max_len (int): the largest number of points, at least 2.
        simple (bool): restrict to simple chains.

    Returns:
        (list[Chain]) all such chains, empty when x and y are not joined.

    Raises:
        PreconditionError: if max_len < 2.
    """
    if max_len < 2:
        raise PreconditionError("max_len must be at least 2")
    successors = {i: r.successors(i) for i in range(r.carrier_size)}
    chains: list[Chain] = []

    def extend(path: list[int]) -> None:
        for nxt in successors[path[-1]]:
            if simple and nxt in path and not (len(path) == 1 and nxt == x == y):
                continue
            path.append(nxt)
            if nxt == y:
                chains.append(Chain(tuple(path)))
            if len(path) < max_len and not (simple and nxt == y):
                extend(path)
            path.pop()

    extend([x])
    return chains


def is_ascending(seq: Sequence[int], r: Relation) -> bool:
    """
    Check that consecutive members of a sequence are r related.

    Parameters:
        seq (Sequence[int]): the sequence; empty and singleton
            sequences are ascending.
        r (Relation): the relation.

    Returns:
        (bool) True iff every (seq[i], seq[i+1]) is an edge of r.
    """
    return all((seq[i], seq[i + 1]) in r.edges for i in range(len(seq) - 1))

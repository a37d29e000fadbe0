"""
Seeded random instances for the property and soundness suites.

Points are embedded on the rational line, so every generated distance
matrix is a metric. Maps are biased toward collapsing behaviour so
that premise satisfying instances occur often enough to matter. Every
instance records the seed it was drawn from for replay.

File:       generators.py
Author:     Lorn B Kerr
Copyright:  (c) 2026 Lorn B Kerr
License:    MIT, see file LICENSE
Version:    1.0.0
"""

import logging
import random
from dataclasses import dataclass
from fractions import Fraction

from .metric import FiniteMetricSpace, SelfMap
from .relation import Relation, rs_cover, rt_cover

file_version = "1.0.0"
changes = {
    "1.0.0": "Initial release",
}

logger = logging.getLogger(__name__)

MAX_CARRIER = 12
LAMBDAS = (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), Fraction(9, 10))
DENOMINATORS = (1, 2, 3, 4, 5, 10)


@dataclass(frozen=True)
class Instance:
    """
    A generated instance.

    Attributes:
        space (FiniteMetricSpace): points on the rational line.
        t (SelfMap): the map.
        relation (Relation): a reflexive relation.
        order (Relation): a quasi-order.
        lam (Fraction): a modulus in (0, 1).
        epsilon (Fraction): a positive radius.
        seed (int): the seed the instance was drawn from.
    """

    space: FiniteMetricSpace
    t: SelfMap
    relation: Relation
    order: Relation
    lam: Fraction
    epsilon: Fraction
    seed: int


def random_space(rng: random.Random, size: int) -> FiniteMetricSpace:
    """
    Embed 'size' distinct rationals on the line.

    Parameters:
        rng (random.Random): the generator.
        size (int): number of points, at least 1.

    Returns:
        (FiniteMetricSpace) with ids 'p0', 'p1', ...
    """
    denominator = rng.choice(DENOMINATORS)
    numerators = rng.sample(range(4 * size + 4), size)
    return FiniteMetricSpace.on_line([Fraction(n, denominator) for n in numerators])


def random_relation(rng: random.Random, size: int, density: float = None) -> Relation:
    """
    A random reflexive relation.

    Parameters:
        rng (random.Random): the generator.
        size (int): number of points.
        density (float): chance of each off-diagonal pair, random when
            None.

    Returns:
        (Relation) tagged reflexive.
    """
    if density is None:
        density = rng.choice((0.1, 0.25, 0.5, 0.8))
    pairs = [
        (x, y)
        for x in range(size)
        for y in range(size)
        if x != y and rng.random() < density
    ]
    return Relation.from_pairs(size, pairs, with_identity=True)


def random_connected_relation(rng: random.Random, size: int) -> Relation:
    """
    A random reflexive symmetric relation whose graph is connected.

    A random spanning tree is extended by random extra edges.

    Parameters:
        rng (random.Random): the generator.
        size (int): number of points.

    Returns:
        (Relation) reflexive, symmetric, one s_omega class.
    """
    order = list(range(size))
    rng.shuffle(order)
    pairs = [(order[k], rng.choice(order[:k])) for k in range(1, size)]
    extra = rng.choice((0.0, 0.1, 0.3))
    pairs.extend(
        (x, y)
        for x in range(size)
        for y in range(x + 1, size)
        if rng.random() < extra
    )
    return rs_cover(Relation(size, frozenset(pairs)))


def random_map(rng: random.Random, size: int) -> SelfMap:
    """
    A random selfmap, mostly collapsing.

    The kinds drawn are constant maps, maps that funnel every point
    toward one fixed point, maps onto a small image and uniform maps.

    Parameters:
        rng (random.Random): the generator.
        size (int): number of points.

    Returns:
        (SelfMap) the map.
    """
    kind = rng.choices(("constant", "funnel", "small", "uniform"), (3, 4, 2, 1))[0]
    if kind == "constant":
        return SelfMap.constant(size, rng.randrange(size))
    if kind == "funnel":
        order = list(range(size))
        rng.shuffle(order)
        table = [0] * size
        table[order[0]] = order[0]
        for k in range(1, size):
            table[order[k]] = order[rng.randrange(k)]
        return SelfMap(tuple(table))
    if kind == "small":
        image = rng.sample(range(size), min(size, rng.choice((1, 2))))
        return SelfMap(tuple(rng.choice(image) for _ in range(size)))
    return SelfMap(tuple(rng.randrange(size) for _ in range(size)))


def random_order(rng: random.Random, size: int) -> Relation:
    """
    A random quasi-order: a total order or the closure of a relation.

    Parameters:
        rng (random.Random): the generator.
        size (int): number of points.

    Returns:
        (Relation) reflexive and transitive.
    """
    if rng.random() < 0.25:
        ranks = list(range(size))
        rng.shuffle(ranks)
        return Relation.from_pairs(
            size,
            [(x, y) for x in range(size) for y in range(size) if ranks[x] <= ranks[y]],
        )
    return rt_cover(random_relation(rng, size, rng.choice((0.05, 0.15, 0.3))))


def generate_instance(seed: int, max_size: int = MAX_CARRIER) -> Instance:
    """
    Draw one instance from a seed.

    Parameters:
        seed (int): the seed; equal seeds give equal instances.
        max_size (int): the largest carrier, at least 1.

    Returns:
        (Instance) the instance.
    """
    rng = random.Random(seed)
    size = rng.randint(1, max_size)
    space = random_space(rng, size)
    epsilon = rng.choice(
        sorted({value for row in space.dist for value in row if value > 0})
        or [Fraction(1)]
    ) + Fraction(1, 100)
    instance = Instance(
        space,
        random_map(rng, size),
        random_relation(rng, size),
        random_order(rng, size),
        rng.choice(LAMBDAS),
        epsilon,
        seed,
    )
    logger.debug("seed %d: %d points", seed, size)
    return instance


def generate_connected(seed: int, max_size: int = 8) -> tuple:
    """
    Draw a space with a connected reflexive symmetric relation.

    Parameters:
        seed (int): the seed.
        max_size (int): the largest carrier.

    Returns:
        (tuple) (FiniteMetricSpace, Relation).
    """
    rng = random.Random(seed)
    size = rng.randint(1, max_size)
    return random_space(rng, size), random_connected_relation(rng, size)

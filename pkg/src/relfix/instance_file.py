"""
The instance file: a validated set of instance properties.

An InstanceFile holds the fields of one instance document. Each field
has a setter that validates the value and returns the usual
{'entry', 'valid', 'msg'} result; invalid values are replaced by the
field default and remembered, so all errors of a file can be listed.

load_instance() turns a file into an InstanceBundle of the core types
and raises on the first invalid field or violated metric axiom.

Document fields:
    points     list of unique point ids.
    distance   square matrix of numbers, one row per point.
    relation   list of [id, id] pairs.
    map        list of [id, id] pairs, one per point.
    order      optional list of [id, id] pairs.
    modulus    optional {"kind": "linear", "lambda": x} or
               {"kind": "catalog", "name": n}.
    epsilon    optional positive number.
    start      optional point id.

File:       instance_file.py
Author:     Lorn B Kerr
Copyright:  (c) 2022, 2023, 2026 Lorn B Kerr
License:    MIT, see file License
Version:    2.0.0
"""

import logging
from copy import deepcopy
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .comparison import CATALOG, LINEAR, ComparisonFn
from .datafile import DataFile, number_text
from .errors import PreconditionError, ValidationError
from .metric import RATIONAL, FiniteMetricSpace, SelfMap, validate_metric
from .relation import Relation
from .validate import Validate

file_version = "2.0.0"
changes = {
    "1.0.0": "Initial release",
    "2.0.0": "Instance documents replace the datafile table rows.",
}

logger = logging.getLogger(__name__)

FIELD_ORDER = (
    "points",
    "distance",
    "relation",
    "map",
    "order",
    "modulus",
    "epsilon",
    "start",
)
"""Fields in validation order; later fields refer to 'points'."""

REQUIRED_FIELDS = ("points", "distance", "relation", "map")


class InstanceFile:
    """
    The validated properties of one instance document.

    Unknown keys are discarded with a warning. Validation results are
    kept per field; get_errors() lists the failures.
    """

    def __init__(self, document: dict[str, Any] = None) -> None:
        """
        Initialize a new InstanceFile.

        Parameters:
            document (dict): the parsed document, default empty. All
                fields in REQUIRED_FIELDS must be present.
        """
        self.validate: Validate = Validate()
        """Reference to the Validate class for value validation."""
        self._defaults: dict[str, Any] = {
            "points": [],
            "distance": [],
            "relation": [],
            "map": [],
            "order": None,
            "modulus": None,
            "epsilon": None,
            "start": None,
        }
        """Default values of the fields."""
        self.__properties: dict[str, Any] = deepcopy(self._defaults)
        """The current values of the fields."""
        self.__results: dict[str, dict[str, Any]] = {}
        """The validation result of every field set so far."""

        if document is not None:
            for name in REQUIRED_FIELDS:
                if name not in document:
                    self.__results[name] = {
                        "entry": None,
                        "valid": False,
                        "msg": "the field is required",
                    }
            self.set_properties(document)

    def set_properties(self, properties: dict[str, Any]) -> dict[str, dict]:
        """
        Set the fields from a document.

        Fields are set in FIELD_ORDER so that id references can be
        checked against 'points'.

        Parameters:
            properties (dict): the document, may be sparse.

        Returns:
            (dict[str, dict]) the validation results of the fields set.
        """
        setters = {
            "points": self.set_points,
            "distance": self.set_distance,
            "relation": self.set_relation,
            "map": self.set_map,
            "order": self.set_order,
            "modulus": self.set_modulus,
            "epsilon": self.set_epsilon,
            "start": self.set_start,
        }
        set_results = {}
        if isinstance(properties, dict):
            for key in properties:
                if key not in setters:
                    logger.warning("ignoring unknown field '%s'", key)
            for key in FIELD_ORDER:
                if key in properties:
                    set_results[key] = setters[key](properties[key])
        return set_results

    def get_properties(self) -> dict[str, Any]:
        """
        Get the fields as a dict.

        Returns:
            (dict) the current field values.
        """
        return self.__properties

    def is_valid(self) -> bool:
        """(bool) True iff every field set so far is valid."""
        return all(result["valid"] for result in self.__results.values())

    def get_errors(self) -> list[tuple[str, str]]:
        """
        List the invalid fields.

        Returns:
            (list[tuple[str, str]]) (field, message) in FIELD_ORDER.
        """
        return [
            (name, self.__results[name]["msg"])
            for name in FIELD_ORDER
            if name in self.__results and not self.__results[name]["valid"]
        ]

    def _store(self, name: str, result: dict[str, Any]) -> dict[str, Any]:
        """Keep a validation result and the value, or the default."""
        self.__results[name] = result
        if result["valid"]:
            self.__properties[name] = result["entry"]
        else:
            self.__properties[name] = deepcopy(self._defaults[name])
        return result

    def get_points(self) -> list[str]:
        """(list[str]) the point ids."""
        return self.__properties["points"]

    def set_points(self, points: Any) -> dict[str, Any]:
        """
        Set the point ids.

        Parameters:
            points (list[str]): at least one id, all unique.

        Returns:
            (dict) the validation result.
        """
        result = {"entry": points, "valid": True, "msg": ""}
        if not isinstance(points, list) or not points:
            result.update(valid=False, msg="points must be a non-empty list of ids")
            return self._store("points", result)
        ids = []
        for point in points:
            check = self.validate.identifier_field(point, Validate.REQUIRED)
            if not check["valid"]:
                result.update(valid=False, msg=check["msg"])
                return self._store("points", result)
            if check["entry"] in ids:
                result.update(
                    valid=False, msg="point id '" + check["entry"] + "' is repeated"
                )
                return self._store("points", result)
            ids.append(check["entry"])
        result["entry"] = ids
        return self._store("points", result)

    def get_distance(self) -> list[list[Fraction]]:
        """(list[list[Fraction]]) the distance matrix."""
        return self.__properties["distance"]

    def set_distance(self, distance: Any) -> dict[str, Any]:
        """
        Set the distance matrix.

        Parameters:
            distance (list[list]): one row per point, one number per
                point in each row.

        Returns:
            (dict) the validation result; entries become Fractions.
        """
        size = len(self.get_points())
        result = {"entry": distance, "valid": True, "msg": ""}
        if not isinstance(distance, list) or len(distance) != size:
            result.update(
                valid=False,
                msg="the matrix must have one row for each of "
                + str(size)
                + " points",
            )
            return self._store("distance", result)
        rows = []
        for number, row in enumerate(distance):
            if not isinstance(row, list) or len(row) != size:
                result.update(
                    valid=False,
                    msg="row " + str(number) + " must have " + str(size) + " entries",
                )
                return self._store("distance", result)
            values = []
            for value in row:
                check = self.validate.rational_field(value, Validate.REQUIRED)
                if not check["valid"]:
                    result.update(
                        valid=False, msg="row " + str(number) + ": " + check["msg"]
                    )
                    return self._store("distance", result)
                values.append(check["entry"])
            rows.append(values)
        result["entry"] = rows
        return self._store("distance", result)

    def _set_pairs(self, name: str, pairs: Any, required: bool) -> dict[str, Any]:
        """Validate a list of [id, id] pairs referring to known points."""
        result = {"entry": pairs, "valid": True, "msg": ""}
        if pairs is None and required == Validate.OPTIONAL:
            result["entry"] = None
            return self._store(name, result)
        if not isinstance(pairs, list):
            result.update(valid=False, msg=name + " must be a list of [id, id] pairs")
            return self._store(name, result)
        known = self.get_points()
        entries = []
        for pair in pairs:
            if not isinstance(pair, list) or len(pair) != 2:
                result.update(valid=False, msg="'" + str(pair) + "' is not an id pair")
                return self._store(name, result)
            for point in pair:
                if point not in known:
                    result.update(
                        valid=False, msg="unknown point id '" + str(point) + "'"
                    )
                    result["witness"] = point
                    return self._store(name, result)
            entries.append([pair[0], pair[1]])
        result["entry"] = entries
        return self._store(name, result)

    def get_relation(self) -> list[list[str]]:
        """(list[list[str]]) the relation as id pairs."""
        return self.__properties["relation"]

    def set_relation(self, relation: Any) -> dict[str, Any]:
        """
        Set the relation.

        Parameters:
            relation (list[list[str]]): [id, id] pairs of known points.

        Returns:
            (dict) the validation result.
        """
        return self._set_pairs("relation", relation, Validate.REQUIRED)

    def get_map(self) -> list[list[str]]:
        """(list[list[str]]) the map as [point, image] pairs."""
        return self.__properties["map"]

    def set_map(self, mapping: Any) -> dict[str, Any]:
        """
        Set the selfmap.

        Parameters:
            mapping (list[list[str]]): one [point, image] pair for
                every point.

        Returns:
            (dict) the validation result.
        """
        result = self._set_pairs("map", mapping, Validate.REQUIRED)
        if not result["valid"]:
            return result
        sources = [pair[0] for pair in result["entry"]]
        for point in self.get_points():
            if sources.count(point) != 1:
                result.update(
                    valid=False,
                    msg="point '" + point + "' must have exactly one image",
                    witness=point,
                )
                return self._store("map", result)
        return result

    def get_order(self) -> list[list[str]]:
        """(list[list[str]]) the order as id pairs, or None."""
        return self.__properties["order"]

    def set_order(self, order: Any) -> dict[str, Any]:
        """
        Set the optional quasi-order.

        Parameters:
            order (list[list[str]]): [id, id] pairs of known points.

        Returns:
            (dict) the validation result.
        """
        return self._set_pairs("order", order, Validate.OPTIONAL)

    def get_modulus(self) -> ComparisonFn:
        """(ComparisonFn) the modulus, or None."""
        return self.__properties["modulus"]

    def set_modulus(self, modulus: Any) -> dict[str, Any]:
        """
        Set the optional modulus.

        Parameters:
            modulus (dict): {"kind": "linear", "lambda": x} or
                {"kind": "catalog", "name": n}.

        Returns:
            (dict) the validation result; the entry is a ComparisonFn.
        """
        result = {"entry": modulus, "valid": True, "msg": ""}
        if modulus is None:
            return self._store("modulus", result)
        if not isinstance(modulus, dict):
            result.update(valid=False, msg="the modulus must be an object")
            return self._store("modulus", result)
        kind = self.validate.choice_field(
            modulus.get("kind"), (LINEAR, CATALOG), Validate.REQUIRED
        )
        if not kind["valid"]:
            result.update(valid=False, msg="kind: " + kind["msg"])
            return self._store("modulus", result)
        try:
            if kind["entry"] == LINEAR:
                factor = self.validate.rational_field(
                    modulus.get("lambda"), Validate.REQUIRED, min_value=0
                )
                if not factor["valid"]:
                    result.update(valid=False, msg="lambda: " + factor["msg"])
                    return self._store("modulus", result)
                result["entry"] = ComparisonFn.linear(factor["entry"])
            else:
                result["entry"] = ComparisonFn.catalog(modulus.get("name"))
        except PreconditionError as exc:
            result.update(valid=False, msg=str(exc))
        return self._store("modulus", result)

    def get_epsilon(self) -> Fraction:
        """(Fraction) the radius, or None."""
        return self.__properties["epsilon"]

    def set_epsilon(self, epsilon: Any) -> dict[str, Any]:
        """
        Set the optional radius.

        Parameters:
            epsilon (str | int): a positive number.

        Returns:
            (dict) the validation result.
        """
        result = self.validate.rational_field(
            epsilon, Validate.OPTIONAL, min_value=0, min_exclusive=True
        )
        return self._store("epsilon", result)

    def get_start(self) -> str:
        """(str) the start point id, or None."""
        return self.__properties["start"]

    def set_start(self, start: Any) -> dict[str, Any]:
        """
        Set the optional start point.

        Parameters:
            start (str): a known point id.

        Returns:
            (dict) the validation result.
        """
        result = self.validate.identifier_field(start, Validate.OPTIONAL)
        if result["valid"] and result["entry"] is not None:
            if result["entry"] not in self.get_points():
                result.update(
                    valid=False, msg="unknown point id '" + result["entry"] + "'"
                )
                result["witness"] = result["entry"]
        return self._store("start", result)

    def first_error(self) -> ValidationError:
        """
        The first invalid field as an exception, None if all are valid.

        Returns:
            (ValidationError) naming the field, its message and the
                offending id when there is one.
        """
        for name in FIELD_ORDER:
            result = self.__results.get(name)
            if result is not None and not result["valid"]:
                return ValidationError(name, result["msg"], result.get("witness"))
        return None

    def to_document(self) -> dict[str, Any]:
        """
        The normalized document: numbers as exact strings, optional
        fields only when set.

        Returns:
            (dict) the document.
        """
        properties = self.get_properties()
        document = {
            "points": list(properties["points"]),
            "distance": [
                [number_text(value) for value in row] for row in properties["distance"]
            ],
            "relation": sorted(properties["relation"]),
            "map": sorted(properties["map"]),
        }
        if properties["order"] is not None:
            document["order"] = sorted(properties["order"])
        modulus = properties["modulus"]
        if modulus is not None:
            if modulus.kind == LINEAR:
                document["modulus"] = {
                    "kind": LINEAR,
                    "lambda": number_text(modulus.lam),
                }
            else:
                document["modulus"] = {"kind": CATALOG, "name": modulus.name}
        if properties["epsilon"] is not None:
            document["epsilon"] = number_text(properties["epsilon"])
        if properties["start"] is not None:
            document["start"] = properties["start"]
        return document


@dataclass(frozen=True)
class InstanceBundle:
    """
    A loaded and validated instance.

    Attributes:
        space (FiniteMetricSpace): the metric space.
        relation (Relation): the relation, used as written.
        t (SelfMap): the map.
        order (Relation): the quasi-order, or None.
        modulus (ComparisonFn): the modulus, or None.
        epsilon (Fraction): the radius, or None.
        start (int): index of the start point, or None.
        source (str): the file the instance came from.
    """

    space: FiniteMetricSpace
    relation: Relation
    t: SelfMap
    order: Relation = None
    modulus: ComparisonFn = None
    epsilon: Fraction = None
    start: int = None
    source: str = ""


def bundle_from_document(
    document: dict[str, Any], arithmetic: str = RATIONAL, source: str = ""
) -> InstanceBundle:
    """
    Validate a parsed document and build the core values.

    Parameters:
        document (dict): the parsed document.
        arithmetic (str): RATIONAL or FLOAT distances.
        source (str): where the document came from, for reports.

    Returns:
        (InstanceBundle) the instance.

    Raises:
        ValidationError: for the first invalid field, or the first
            violated metric axiom with its witness ids.
    """
    instance = InstanceFile(document)
    error = instance.first_error()
    if error is not None:
        raise error
    ids = instance.get_points()
    index = {point: number for number, point in enumerate(ids)}

    space = FiniteMetricSpace(tuple(ids), instance.get_distance())
    report = validate_metric(space)
    if not report.valid:
        violation = report.violations[0]
        raise ValidationError(
            "distance: " + violation.axiom,
            violation.message,
            tuple(ids[k] for k in violation.witness),
        )
    space = space.with_arithmetic(arithmetic)

    def relation_of(pairs: list) -> Relation:
        return Relation.from_pairs(len(ids), [(index[x], index[y]) for x, y in pairs])

    table = [0] * len(ids)
    for point, image in instance.get_map():
        table[index[point]] = index[image]
    order = instance.get_order()
    start = instance.get_start()
    return InstanceBundle(
        space,
        relation_of(instance.get_relation()),
        SelfMap(tuple(table)),
        relation_of(order) if order is not None else None,
        instance.get_modulus(),
        instance.get_epsilon(),
        index[start] if start is not None else None,
        source,
    )


def load_instance(path: str, arithmetic: str = RATIONAL) -> InstanceBundle:
    """
    Read, validate and build an instance file.

    Parameters:
        path (str): the file.
        arithmetic (str): RATIONAL or FLOAT distances.

    Returns:
        (InstanceBundle) the instance.

    Raises:
        ParseError: if the file is not strict JSON.
        ValidationError: if a field or metric axiom is violated.
    """
    document = DataFile().read(path)
    bundle = bundle_from_document(document, arithmetic, path)
    logger.info("loaded %s: %d points", path, bundle.space.size)
    return bundle


def bundle_to_document(bundle: InstanceBundle) -> dict[str, Any]:
    """
    The normalized document of an instance.

    Parameters:
        bundle (InstanceBundle): the instance.

    Returns:
        (dict) the document, as InstanceFile.to_document() writes it.
    """
    ids = bundle.space.points

    def pairs_of(relation: Relation) -> list:
        return [[ids[x], ids[y]] for x, y in sorted(relation.edges)]

    document = {
        "points": list(ids),
        "distance": [list(row) for row in bundle.space.dist],
        "relation": pairs_of(bundle.relation),
        "map": [[ids[x], ids[bundle.t(x)]] for x in range(bundle.space.size)],
    }
    if bundle.order is not None:
        document["order"] = pairs_of(bundle.order)
    if bundle.modulus is not None:
        if bundle.modulus.kind == LINEAR:
            document["modulus"] = {"kind": LINEAR, "lambda": bundle.modulus.lam}
        else:
            document["modulus"] = {"kind": CATALOG, "name": bundle.modulus.name}
    if bundle.epsilon is not None:
        document["epsilon"] = bundle.epsilon
    if bundle.start is not None:
        document["start"] = ids[bundle.start]
    return InstanceFile(_as_text(document)).to_document()


def save_instance(bundle: InstanceBundle, path: str) -> None:
    """
    Write an instance in canonical form.

    Parameters:
        bundle (InstanceBundle): the instance.
        path (str): the file to write.
    """
    DataFile().write(bundle_to_document(bundle), path)


def _as_text(value: Any) -> Any:
    """Replace numbers by their exact text, recursively."""
    if isinstance(value, list):
        return [_as_text(item) for item in value]
    if isinstance(value, dict):
        return {key: _as_text(item) for key, item in value.items()}
    if isinstance(value, (Fraction, float)) or (
        isinstance(value, int) and not isinstance(value, bool)
    ):
        return number_text(value)
    return value

"""
relfix: fixed point theorems on finite relational metric spaces.

A finite metric space carries a relation and a selfmap. The package
decides the premises of a family of fixed point theorems on such an
instance, evaluates their conclusions by exact Picard iteration and
reports any instance where the premises hold and the conclusion fails.

The common classes:
    DataFile       Read and write strict JSON instance files.
    InstanceFile   The validated fields of one instance file.
    InstanceSet    The instance files of a directory.
    IniFileParser  Read and Write *.ini Files.
    Validate       Support validation of instance and setting values.

File:       __init__.py
Author:     Lorn B Kerr
Copyright:  (c) 2022, 2024, 2026 Lorn B Kerr
License:    MIT, see file LICENSE
"""

from .chain_geometry import ChainMetric, chain_infimum, chain_length, chain_metric
from .comparison import Admissibility, ComparisonFn, classify_phi
from .datafile import DataFile
from .errors import (
    MapError,
    NonFiniteValue,
    NotConnectedClass,
    NotEquivalence,
    NotInClass,
    NotQuasiOrder,
    NotRegressive,
    NotSymmetric,
    ParseError,
    PreconditionError,
    PremiseFailure,
    RelationError,
    RelfixError,
    ShapeMismatch,
    ValidationError,
)
from .ini_file_parser import IniFileParser, Settings, load_settings
from .instance_file import InstanceBundle, InstanceFile, load_instance, save_instance
from .instance_set import InstanceSet
from .metric import FiniteMetricSpace, SelfMap, validate_metric
from .picard import numeric_picard, orbit
from .relation import Chain, Relation, rs_cover, rt_cover, s_omega
from .reports import CheckReport, Finding
from .soundness import run_suite
from .theorems import THEOREM_IDS, TheoremReport, reduce_to_banach
from .validate import Validate

file_version = "2.0.0"
changes = {
    "1.0.0": "Initial release",
    "1.1.0": "Changed name from 'Dbal' to 'DataFile'.",
    "2.0.0": "relfix: relational metric spaces replace the element library.",
}

"""
A Wrapper around configparser for ini files, and the relfix settings.

File:       ini_file_parser.py
Author:     Lorn B Kerr
Copyright:  (c) 2022, 2026 Lorn B Kerr
License:    MIT, see file LICENSE
Version:    2.0.0
"""

import configparser
import logging
import os
import sys
from dataclasses import dataclass, replace
from typing import Any, Mapping

from .comparison import DEFAULT_HORIZON, DEFAULT_SAMPLE_POINTS, DEFAULT_TAIL_TOLERANCE
from .metric import ARITHMETICS, RATIONAL
from .picard import DEFAULT_MAX_ITER, DEFAULT_TOL
from .validate import Validate

file_version = "2.0.0"
changes = {
    "1.0.0": "Initial release",
    "2.0.0": "Config files live under 'relfix'; added Settings and load_settings.",
}

logger = logging.getLogger(__name__)

CONFIG_FILE = "relfix.ini"
SECTION = "relfix"
SEED_VARIABLE = "RELFIX_SEED"


class IniFileParser:
    """
    Exposes the stored configuation file (*.ini) as a standard dict.

    By default, it uses the standard Linux or Windows configuration
    locations, '{HOME}/.config/relfix/<subdir>' or
    '{HOME}/AppData/Local/relfix/<subdir>'.
    """

    def __init__(
        self, filename: str, program_config_subdir: str = "", config_dir: str = ""
    ) -> None:
        """
        Initialize the configuration file parser.

        The directory of the config file is created if it does not
        already exist.

        Parameters:
            filename: (str) the config ini filename to be used.
            program_config_subdir: (str) (optional) the config
                subdirectory for this file. If not given, defaults to
                filename minus the suffix.
            config_dir: (str) replaces the platform config directory
                (testing primarily).
        """
        home_dir = os.path.expanduser("~")

        self.config_file: str = ""
        """The full path to the ini file"""

        if not program_config_subdir:
            program_config_subdir = os.path.splitext(filename)[0]

        if not config_dir:
            if sys.platform.startswith("win"):
                config_dir = os.path.join(
                    home_dir, "AppData", "Local", "relfix", program_config_subdir
                )
            else:
                config_dir = os.path.join(
                    home_dir, ".config", "relfix", program_config_subdir
                )
        else:
            config_dir = os.path.join(config_dir, program_config_subdir)

        if not os.path.exists(config_dir):
            os.makedirs(config_dir, 0o744)

        self.config_file = os.path.join(config_dir, filename)

    def read_config(self) -> dict[str, Any]:
        """
        Read the configuration file.

        Everything is treated as a string.

        Returns:
            (dict) section name to a dict of the section's keys. An
            empty dict if the file does not exist.
        """
        config: dict[str, Any] = {}
        config_parser = configparser.ConfigParser(allow_no_value=True)

        if os.path.exists(self.config_file):
            with open(self.config_file, "r", encoding="utf-8") as source:
                config_parser.read_file(source)
            for section in config_parser.sections():
                config[section] = dict(config_parser[section])
        return config

    def write_config(self, new_config: dict[str, Any]) -> None:
        """
        Save the config values to the file.

        Parameters:
            new_config: (dict) The new configuration settings to save.
        """
        config_parser = configparser.ConfigParser(allow_no_value=True)
        config_parser.read_dict(new_config)
        with open(self.config_file, "w", encoding="utf-8") as target:
            config_parser.write(target)

    def config_path(self) -> str:
        """
        Provide the absolute path to the config file.

        Returns:
            (str) The absolute path to the config file.
        """
        return self.config_file


@dataclass(frozen=True)
class Settings:
    """
    The tunable values of relfix.

    Attributes:
        arithmetic (str): 'rational' or 'float' distances.
        horizon (int): iterate count for classify_phi.
        tail_tolerance (float): vanishing threshold for classify_phi.
        sample_points (tuple[float, ...]): regressiveness samples.
        tol (float): numeric Picard step tolerance.
        max_iter (int): numeric Picard iteration cap.
        seed (int): first seed of generated suites.
        suite_count (int): instances per suite.
        workers (int): suite worker processes.
    """

    arithmetic: str = RATIONAL
    horizon: int = DEFAULT_HORIZON
    tail_tolerance: float = DEFAULT_TAIL_TOLERANCE
    sample_points: tuple = DEFAULT_SAMPLE_POINTS
    tol: float = DEFAULT_TOL
    max_iter: int = DEFAULT_MAX_ITER
    seed: int = 0
    suite_count: int = 500
    workers: int = 4


def _sample_points_field(validate: Validate, text: str) -> dict[str, Any]:
    """Validate a comma separated list of positive numbers."""
    result = {"entry": text, "valid": True, "msg": ""}
    points = []
    for item in str(text).split(","):
        check = validate.real_field(
            item, Validate.REQUIRED, min_value=0.0, min_exclusive=True
        )
        if not check["valid"]:
            return check
        points.append(check["entry"])
    result["entry"] = tuple(points)
    return result


def load_settings(
    parser: IniFileParser = None, environ: Mapping[str, str] = os.environ
) -> Settings:
    """
    Merge the defaults, the [relfix] ini section and the environment.

    An invalid ini value is logged and its default kept. RELFIX_SEED,
    when set to a valid integer, takes precedence over the ini seed.

    Parameters:
        parser (IniFileParser): the config file, None for defaults only.
        environ (Mapping[str, str]): the environment.

    Returns:
        (Settings) the merged settings.
    """
    validate = Validate()
    checks = {
        "arithmetic": lambda v: validate.choice_field(
            v, ARITHMETICS, Validate.REQUIRED
        ),
        "horizon": lambda v: validate.integer_field(v, Validate.REQUIRED, 4),
        "tail_tolerance": lambda v: validate.real_field(
            v, Validate.REQUIRED, 0.0, min_exclusive=True
        ),
        "sample_points": lambda v: _sample_points_field(validate, v),
        "tol": lambda v: validate.real_field(
            v, Validate.REQUIRED, 0.0, min_exclusive=True
        ),
        "max_iter": lambda v: validate.integer_field(v, Validate.REQUIRED, 1),
        "seed": lambda v: validate.integer_field(v, Validate.REQUIRED, 0),
        "suite_count": lambda v: validate.integer_field(v, Validate.REQUIRED, 1),
        "workers": lambda v: validate.integer_field(v, Validate.REQUIRED, 1),
    }
    values: dict[str, Any] = {}
    section = parser.read_config().get(SECTION, {}) if parser is not None else {}
    for key, text in section.items():
        if key not in checks:
            logger.warning("ignoring unknown setting '%s'", key)
            continue
        result = checks[key](text)
        if result["valid"]:
            values[key] = result["entry"]
        else:
            logger.warning("setting %s=%r rejected: %s", key, text, result["msg"])

    if SEED_VARIABLE in environ:
        result = checks["seed"](environ[SEED_VARIABLE])
        if result["valid"]:
            values["seed"] = result["entry"]
        else:
            logger.warning(
                "%s=%r rejected: %s",
                SEED_VARIABLE,
                environ[SEED_VARIABLE],
                result["msg"],
            )
    settings = replace(Settings(), **values)
    logger.debug("settings: %s", settings)
    return settings

"""
Shared test values, fixtures and strategies for relfix.

File:       __init__.py
Author:     Lorn B Kerr
Copyright:  (c) 2024, 2026 Lorn B Kerr
License:    MIT, see file LICENSE
Version:    2.0.0
"""

from .core_setup import (
    I1_DOCUMENT,
    directories,
    filesystem,
    i1_map,
    i1_relation,
    i1_space,
    rational_spaces,
    relations,
    selfmaps,
    space_instances,
    write_document,
)

file_version = "2.0.0"
changes = {
    "1.0.0": "Initial release",
    "1.0.1": "Added version info.",
    "2.0.0": "Instance fixtures and strategies.",
}

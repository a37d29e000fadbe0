"""
A set of instance files from a directory.

File:       instance_set.py
Author:     Lorn B Kerr
Copyright:  (c) 2022, 2023, 2026 Lorn B Kerr
License:    MIT see file License
Version:    2.1.0
"""

import glob
import logging
import os
from collections.abc import Iterator
from dataclasses import dataclass

from .errors import ParseError, ValidationError
from .instance_file import InstanceBundle, load_instance
from .metric import RATIONAL

file_version = "2.1.0"
changes = {
    "1.0.0": "Initial release",
    "2.0.0": "Holds the instance files of a directory instead of table rows.",
    "2.1.0": "Entries are only added by loading the directory.",
}

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class InstanceEntry:
    """
    One file of the set: the bundle, or the error that stopped it.

    Attributes:
        path (str): the file.
        bundle (InstanceBundle): the loaded instance, None on error.
        error (Exception): the ParseError or ValidationError, or None.
    """

    path: str
    bundle: InstanceBundle = None
    error: Exception = None

    @property
    def valid(self) -> bool:
        """(bool) True iff the file loaded."""
        return self.error is None


class InstanceSet:
    """
    The instance files ('*.json') of a directory, sorted by name.

    Every file is loaded when the set is built; a file that fails is
    kept with its error. The class implements the "Iterator" interface.
    """

    def __init__(self, directory: str, arithmetic: str = RATIONAL) -> None:
        """
        Load the instance files of a directory.

        Parameters:
            directory (str): the directory to scan, not recursive.
            arithmetic (str): RATIONAL or FLOAT distances.
        """
        self.__property_set: list[InstanceEntry] = []
        """The entries, one per file."""
        self.__position: int = -1
        """The current iterator position in the property_set."""

        for path in sorted(glob.glob(os.path.join(directory, "*.json"))):
            try:
                entry = InstanceEntry(path, load_instance(path, arithmetic))
            except (ParseError, ValidationError) as exc:
                logger.warning("%s: %s", path, exc)
                entry = InstanceEntry(path, error=exc)
            self.__property_set.append(entry)

    def __len__(self) -> int:
        """(int) the number of files in the set."""
        return len(self.__property_set)

    def failures(self) -> list[InstanceEntry]:
        """
        The entries that did not load.

        Returns:
            (list) failed entries, in file name order.
        """
        return [entry for entry in self.__property_set if not entry.valid]

    # ***** Iterator Interface *****

    def __iter__(self) -> Iterator:
        """
        Generate an Iterator object for this set.

        Returns:
            (Iterator) This InstanceSet reference as the Iterator Object.
        """
        return self

    def __next__(self) -> InstanceEntry:
        """
        Return the next entry in the set.

        Returns:
            (InstanceEntry) the next entry.

        Raises:
            StopIteration: after the last entry; the position is reset.
        """
        self.__position += 1
        if self.__position < len(self.__property_set):
            return self.__property_set[self.__position]
        self.__position = -1
        raise StopIteration

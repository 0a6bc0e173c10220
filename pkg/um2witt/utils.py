"""Utilities for progress reporting and input file lists."""

import contextlib
from pathlib import Path
from typing import List, Union

from .logs import logger


def print_processing_status(
    counter: int,
    total: int,
    label: str = "Checking rows",
    step: int = 10,
    threshold: int = 100,
):
    """Log status while looping over many randomized cases.

    Args:
        counter (int):   Counter of the current case (1-based)
        total (int):     Total number of cases
        label (str):     Label used to describe activity
        step (int):      Log output for each step-increment in percentage
        threshold (int): Minimal number of cases before logging status

    """
    with contextlib.suppress(ZeroDivisionError):
        if total > threshold:
            percent_prev = float(counter - 1) / total
            percent = float(counter) / total

            if int(percent_prev * step) != int(percent * step):
                msg = f"{label}: {counter} out of {total} ({int(percent * 100)}%)"
                logger.debug(f"[STATUS] {msg}")


def unify_file_list(
    file_or_files: Union[Path, str, List[Union[Path, str]]]
) -> List[Path]:
    """Unifies a str, Path or list[str|Path] to a list[Path].

    Args:
        file_or_files: One or more files represented as string or Path

    Returns:
        A list of Paths representing all files
    """
    if isinstance(file_or_files, (list, tuple)):
        return [file if isinstance(file, Path) else Path(file) for file in file_or_files]
    if isinstance(file_or_files, Path):
        return [file_or_files]
    if isinstance(file_or_files, str):
        return [Path(file_or_files)]

    logger.warning(
        f"Unexpected file_or_files provided; "
        f"type(file_or_files) = {type(file_or_files).__name__}, "
        f"file_or_files = {file_or_files}."
    )
    return list(file_or_files)

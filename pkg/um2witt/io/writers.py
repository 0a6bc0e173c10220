"""Module to render results as text, versioned JSON or TAP."""

import json
import os
from typing import Any, List

import pandas as pd

SCHEMA = "um2witt/1"


def generate_output_filename(input_filename: str, output_extension: str) -> str:
    """Generates filename based on filename and prefered output extension.

    Args:
        input_filename (str):   Filename to derive output filename from
        output_extension (str): Extension of the output file

    Returns:
        The generated output filename with the requested extension

    """
    input_filename_base, _ = os.path.splitext(input_filename)
    if not output_extension.startswith("."):
        output_extension = f".{output_extension}"
    output_filename = f"{input_filename_base}{output_extension}"
    return output_filename


def parse_ext_string_to_list(formats: str) -> List[str]:
    """Parses extensions like .[csv,txt] as a list of extensions."""
    if formats.startswith(".[") and formats.endswith("]"):
        formats = formats[2:-1].split(",")

    if not isinstance(formats, list):
        formats = [formats]

    return formats


def to_json(command: str, payload: dict) -> str:
    """Deterministic JSON document with schema tag and command name."""
    document = {"schema": SCHEMA, "command": command, **payload}
    return json.dumps(document, indent=2, sort_keys=True, default=_json_default)


def _json_default(value: Any):
    if hasattr(value, "to_dict"):
        return value.to_dict()
    if hasattr(value, "tolist"):
        return value.tolist()
    return str(value)


def format_matrix(rows: List[List[str]]) -> str:
    """Bracketed matrix rows, one per line."""
    return "\n".join("[" + ", ".join(row) + "]" for row in rows)


def format_tap(results: pd.DataFrame, title: str = "um2witt") -> str:
    """TAP report with one test line per row of results.

    Args:
        results (pandas.DataFrame): Columns name, passed and detail

    Returns:
        TAP text
    """
    lines = ["TAP version 13", f"1..{len(results)}", f"# {title}"]
    for number, row in enumerate(results.itertuples(index=False), start=1):
        status = "ok" if row.passed else "not ok"
        lines.append(f"{status} {number} - {row.name}")
        if row.detail:
            lines.append(f"  # {row.detail}")
    return "\n".join(lines) + "\n"

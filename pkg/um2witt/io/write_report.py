"""Module to write verification results to file."""

import os
from pathlib import Path
from typing import List, Optional

import pandas as pd
from tabulate import tabulate

from ..io.writers import format_tap, generate_output_filename, parse_ext_string_to_list
from ..logs import logger


def results_table(results: pd.DataFrame) -> str:
    """Plain text table of results with PASS/FAIL status."""
    table = results.copy()
    table.insert(0, "status", table.pop("passed").map({True: "PASS", False: "FAIL"}))
    if "seconds" in table:
        table["seconds"] = table["seconds"].map(lambda seconds: f"{seconds:.2f}")
    return tabulate(table, headers="keys", tablefmt="psql", showindex=False)


def write_report(
    results: pd.DataFrame,
    output_dir: Path,
    filename: str,
    header: Optional[str] = None,
) -> List[Path]:
    """Write results to every format in the filename's extension list.

    Args:
        results (pandas.DataFrame): Columns name, passed, detail and seconds
        output_dir (Path):          Output directory (created if needed)
        filename (str):             Name such as acceptance.[tap,txt,csv]
        header (str):               (Optional) header line of the text table

    Returns:
        Paths of the written files
    """
    written = []
    if filename is None or len(filename) == 0:
        return written

    output_dir = Path(output_dir)
    output_dir.mkdir(parents=True, exist_ok=True)
    _, ext = os.path.splitext(filename)
    for ext in parse_ext_string_to_list(ext):
        output_filename = output_dir / generate_output_filename(filename, ext)
        if ext.lower() in ["csv", ".csv"]:
            results.to_csv(output_filename, index=False)
        elif ext.lower() in ["tap", ".tap"]:
            with open(output_filename, "w") as file:
                file.write(format_tap(results, header or "um2witt"))
        elif ext.lower() in ["txt", ".txt"]:
            with open(output_filename, "w") as file:
                title = header or ""
                if len(title) > 0 and not title.endswith("\n"):
                    title = f"{title}\n"

                file.write(f"{title}{results_table(results)}\n")
        else:
            logger.warning(
                f"Could not derive valid output format for extension {ext}. "
                "No file written."
            )
            continue
        written.append(output_filename)

    return written

"""Module to read rings, rows, matrices, words, points and maps from JSON files."""

import json
import os
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

from ..errors import ConfigurationError
from ..GroebnerBasis import DEFAULT_BUDGET
from ..logs import logger
from ..QuotientRing import QuotientRing, RingElement, sphere_ring
from ..quadrics.sphere_maps import alpha_map, composite_map, hopf_map
from ..realization.NumericMap import NumericMap
from ..RingConfig import RingConfig
from ..SkewMatrix import SkewMatrix
from ..UnimodularRow import ElementaryMove, UnimodularRow, row_make

BUILTIN_RINGS = {"sphere": lambda budget: sphere_ring(4, budget=budget)}

BUILTIN_MAPS = {
    "hopf": lambda: hopf_map().to_numeric(),
    "H-h": lambda: composite_map().to_numeric(),
    "alpha-symmetric": lambda: alpha_map(symmetric=True).to_numeric(),
}


def read_json(input_filename: str) -> Any:
    """Reads a JSON document.

    Raises:
        FileNotFoundError:  If the file does not exist
        ConfigurationError: If the file is not valid JSON
    """
    if not os.path.exists(input_filename):
        raise FileNotFoundError(f"Input file not found: {input_filename}")
    with open(input_filename, "r") as file:
        try:
            return json.load(file)
        except json.JSONDecodeError as e:
            raise ConfigurationError(f"Invalid JSON in {input_filename}: {e}") from e


def resolve_ring(
    ring: Union[str, Dict[str, Any]],
    base_dir: Optional[Path] = None,
    budget: int = DEFAULT_BUDGET,
) -> QuotientRing:
    """Ring from an inline presentation, a presentation file or a builtin name.

    Args:
        ring:     Inline dictionary, path (relative to base_dir) or "sphere"
        base_dir: Directory relative paths refer to
        budget:   Step budget of the ring

    Returns:
        QuotientRing: the ring
    """
    if isinstance(ring, dict):
        return RingConfig.from_dict(ring).build(budget=budget)

    if not isinstance(ring, str):
        raise ConfigurationError(f"Cannot interpret ring entry {ring!r}")

    path = Path(ring)
    if base_dir is not None and not path.is_absolute():
        path = base_dir / path
    if path.exists():
        return RingConfig.from_file(str(path)).build(budget=budget)
    if ring in BUILTIN_RINGS:
        return BUILTIN_RINGS[ring](budget)
    raise FileNotFoundError(f"Ring file not found: {path}")


def _load(input_filename: str, budget: int) -> Tuple[Dict[str, Any], QuotientRing]:
    data = read_json(input_filename)
    if not isinstance(data, dict) or "ring" not in data:
        raise ConfigurationError(f"{input_filename} needs a 'ring' entry")
    ring = resolve_ring(data["ring"], Path(input_filename).parent, budget)
    return data, ring


def read_ring(input_filename: str, budget: int = DEFAULT_BUDGET) -> QuotientRing:
    """Reads a ring presentation (JSON or TOML)."""
    return resolve_ring(input_filename, None, budget)


def read_row(input_filename: str, budget: int = DEFAULT_BUDGET) -> UnimodularRow:
    """Reads {"ring": ..., "row": [...], "certificate": [...]} (certificate optional).

    Raises:
        BadCertificateError: Supplied certificate fails
        NotUnimodularError:  No certificate supplied and the row is not unimodular
    """
    data, ring = _load(input_filename, budget)
    if "row" not in data:
        raise ConfigurationError(f"{input_filename} needs a 'row' entry")
    logger.debug(f"Read row of length {len(data['row'])} from {input_filename}")
    return row_make(ring, data["row"], data.get("certificate"))


def parse_word(ring: QuotientRing, word: List[Dict[str, Any]]) -> List[ElementaryMove]:
    """Elementary moves from [{"i": 1, "j": 2, "lambda": "w"}, ...]."""
    try:
        return [
            ElementaryMove(int(move["i"]), int(move["j"]), ring.elem(str(move["lambda"])))
            for move in word
        ]
    except KeyError as e:
        raise ConfigurationError(f"Elementary move lacks key {e}") from e


def read_word(input_filename: str, ring: QuotientRing) -> List[ElementaryMove]:
    """Reads a word, either a bare list or {"word": [...]}."""
    data = read_json(input_filename)
    if isinstance(data, dict):
        data = data.get("word", [])
    return parse_word(ring, data)


def read_matrix(input_filename: str, budget: int = DEFAULT_BUDGET) -> SkewMatrix:
    """Reads {"ring": ..., "entries": [[...], ...]} as an alternating matrix."""
    data, ring = _load(input_filename, budget)
    if "entries" not in data:
        raise ConfigurationError(f"{input_filename} needs an 'entries' entry")
    return SkewMatrix.from_rows(ring, data["entries"])


def read_point(
    input_filename: str, budget: int = DEFAULT_BUDGET
) -> Tuple[QuotientRing, Tuple[RingElement, ...], RingElement]:
    """Reads {"ring": ..., "point": [...], "alpha": "-1"} (alpha defaults to -1)."""
    data, ring = _load(input_filename, budget)
    if "point" not in data:
        raise ConfigurationError(f"{input_filename} needs a 'point' entry")
    point = tuple(ring.elem(str(entry)) for entry in data["point"])
    return ring, point, ring.elem(str(data.get("alpha", -1)))


def read_numeric_map(map_name_or_file: str) -> NumericMap:
    """Numeric map from a builtin name or {"vars": [...], "components": [...]}."""
    if map_name_or_file in BUILTIN_MAPS and not os.path.exists(map_name_or_file):
        return BUILTIN_MAPS[map_name_or_file]()

    data = read_json(map_name_or_file)
    try:
        return NumericMap.from_strings(
            data["vars"], data["components"], name=data.get("name", map_name_or_file)
        )
    except KeyError as e:
        raise ConfigurationError(f"Missing required key in map file: {e}") from e

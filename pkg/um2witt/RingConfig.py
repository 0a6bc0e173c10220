"""Module with ring presentation files (JSON or TOML)."""

import json
import os
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

import tomli as toml

from .errors import ConfigurationError
from .GroebnerBasis import DEFAULT_BUDGET
from .QuotientRing import QuotientRing, ring_make


@dataclass
class RingConfig:
    """Presentation of a finitely presented Q-algebra.

    Attributes:
        vars (List[str]):      Ordered variable names
        relations (List[str]): Relations as polynomial text
        order (str):           Monomial order name
        name (str):            (Optional) label of the ring
    """

    vars: List[str]
    relations: List[str] = field(default_factory=list)
    order: str = "degrevlex"
    name: Optional[str] = None

    @classmethod
    def from_json(cls, json_path: str) -> "RingConfig":
        """Create RingConfig from a JSON file.

        Args:
            json_path (str): Path to JSON presentation file

        Returns:
            RingConfig: Initialized ring presentation

        Raises:
            FileNotFoundError: If the file doesn't exist
            ConfigurationError: If required keys are missing
        """
        if not os.path.exists(json_path):
            raise FileNotFoundError(f"Ring file not found: {json_path}")

        with open(json_path, "r") as file:
            return cls.from_dict(json.load(file))

    @classmethod
    def from_toml(cls, toml_path: str) -> "RingConfig":
        """Create RingConfig from a TOML file with a [ring] table.

        Args:
            toml_path (str): Path to TOML presentation file

        Returns:
            RingConfig: Initialized ring presentation

        Raises:
            FileNotFoundError: If the file doesn't exist
            ConfigurationError: If required keys are missing
        """
        if not os.path.exists(toml_path):
            raise FileNotFoundError(f"Ring file not found: {toml_path}")

        with open(toml_path, "rb") as file:
            config = toml.load(file)
            try:
                return cls.from_dict(config["ring"])
            except KeyError as e:
                raise ConfigurationError(f"Missing required key in TOML file: {e}") from e

    @classmethod
    def from_dict(cls, ring: Dict[str, Any]) -> "RingConfig":
        """Create RingConfig from a dictionary.

        Args:
            ring (Dict[str, Any]): Dictionary with keys vars, relations, order

        Returns:
            RingConfig: Initialized ring presentation

        Raises:
            ConfigurationError: If required keys are missing
        """
        try:
            return cls(
                vars=[str(var) for var in ring["vars"]],
                relations=[str(rel) for rel in ring.get("relations", [])],
                order=str(ring.get("order", "degrevlex")),
                name=ring.get("name"),
            )
        except KeyError as e:
            raise ConfigurationError(
                f"Missing required key in ring presentation: {e}"
            ) from e

    @classmethod
    def from_file(cls, path: str) -> "RingConfig":
        """Create RingConfig from a .json or .toml file."""
        _, ext = os.path.splitext(path)
        if ext.lower() in [".toml"]:
            return cls.from_toml(path)
        return cls.from_json(path)

    def to_dict(self) -> Dict[str, Any]:
        """Dictionary form, as in the JSON presentation."""
        data = {
            "vars": list(self.vars),
            "relations": list(self.relations),
            "order": self.order,
        }
        if self.name:
            data["name"] = self.name
        return data

    def build(self, budget: int = DEFAULT_BUDGET) -> QuotientRing:
        """Construct the quotient ring."""
        return ring_make(
            self.vars, self.relations, self.order, budget=budget, name=self.name
        )
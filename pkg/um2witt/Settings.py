"""Module with the run configuration (config.yaml)."""

import os
from dataclasses import asdict, dataclass, field, fields, replace
from pathlib import Path
from typing import Any, Dict, Optional

import yaml

from .errors import ConfigurationError
from .GroebnerBasis import DEFAULT_BUDGET
from .logs import logger
from .MonomialOrder import MonomialOrder


@dataclass(frozen=True)
class GroebnerSettings:
    """Settings of exact computations.

    Attributes:
        order (str):  Monomial order name (degrevlex or lex)
        budget (int): Reduction step budget
    """

    order: str = "degrevlex"
    budget: int = DEFAULT_BUDGET

    @property
    def monomial_order(self) -> MonomialOrder:
        """The parsed monomial order."""
        return MonomialOrder.from_string(self.order)


@dataclass(frozen=True)
class RealizeSettings:
    """Settings of the numerical realization."""

    seed: int = 0
    samples: int = 10_000
    grid: int = 64
    max_doublings: int = 3
    residual_tolerance: float = 0.2
    newton_tolerance: float = 1e-12
    chart_bound: float = 1e3


@dataclass(frozen=True)
class SuiteSettings:
    """Sizes of the randomized acceptance checks."""

    seed: int = 20240229
    pfaffian_rows: int = 100
    h_rows: int = 100
    certified_rows: int = 200
    refuted_rows: int = 20
    elementary_pairs: int = 500


@dataclass(frozen=True)
class OutputSettings:
    """Output locations.

    Attributes:
        directory (str): Directory for reports and the processed configuration
        report (str):    Report filename; extension list syntax name.[tap,txt,csv]
        json (bool):     Print JSON instead of text
    """

    directory: str = "output"
    report: str = "acceptance.[tap,txt]"
    json: bool = False


_SECTIONS = {
    "groebner": GroebnerSettings,
    "realize": RealizeSettings,
    "suite": SuiteSettings,
    "output": OutputSettings,
}


@dataclass(frozen=True)
class Settings:
    """Complete run configuration."""

    groebner: GroebnerSettings = field(default_factory=GroebnerSettings)
    realize: RealizeSettings = field(default_factory=RealizeSettings)
    suite: SuiteSettings = field(default_factory=SuiteSettings)
    output: OutputSettings = field(default_factory=OutputSettings)

    @classmethod
    def from_yaml(cls, config_path: Optional[str] = "config.yaml") -> "Settings":
        """Create Settings from a YAML file; missing file or keys give defaults.

        Args:
            config_path (str): Path to YAML configuration file

        Returns:
            Settings: Initialized configuration

        Raises:
            ConfigurationError: If the file is not a YAML mapping or holds bad values
        """
        if config_path is None or not os.path.exists(config_path):
            logger.info(f"No configuration file {config_path}; using defaults")
            return cls()

        with open(config_path, "r") as file:
            config = yaml.safe_load(file) or {}
        if not isinstance(config, dict):
            raise ConfigurationError(f"Configuration {config_path} is not a mapping")
        return cls.from_dict(config)

    @classmethod
    def from_dict(cls, config: Dict[str, Any]) -> "Settings":
        """Create Settings from a config dictionary.

        Args:
            config (Dict[str, Any]): Sections groebner, realize, suite and output

        Returns:
            Settings: Initialized configuration
        """
        sections = {}
        for name, section_class in _SECTIONS.items():
            values = config.get(name) or {}
            known = {f.name for f in fields(section_class)}
            unknown = set(values) - set(known)
            if unknown:
                logger.warning(
                    f"Ignoring unknown keys in config::{name}: {sorted(unknown)}"
                )
            try:
                sections[name] = section_class(
                    **{key: value for key, value in values.items() if key in known}
                )
            except TypeError as e:
                raise ConfigurationError(f"Invalid config::{name}: {e}") from e

        settings = cls(**sections)
        settings.validate()
        return settings

    def with_overrides(self, **overrides) -> "Settings":
        """Copy with overrides such as realize_grid=128; None values are ignored.

        Keys are <section>_<field>.
        """
        sections = {name: getattr(self, name) for name in _SECTIONS}
        for key, value in overrides.items():
            if value is None:
                continue
            section, _, name = key.partition("_")
            if section not in sections or not hasattr(sections[section], name):
                raise ConfigurationError(f"Unknown setting {key}")
            sections[section] = replace(sections[section], **{name: value})
        settings = replace(self, **sections)
        settings.validate()
        return settings

    def validate(self):
        """Check value ranges.

        Raises:
            ConfigurationError: On invalid values
        """
        MonomialOrder.from_string(self.groebner.order)
        if self.groebner.budget <= 0:
            raise ConfigurationError("config::groebner.budget must be positive")
        if self.realize.grid < 8:
            raise ConfigurationError("config::realize.grid must be at least 8")
        if self.realize.samples < 1000:
            raise ConfigurationError("config::realize.samples must be at least 1000")
        if not 0 < self.realize.residual_tolerance < 0.5:
            raise ConfigurationError(
                "config::realize.residual_tolerance must be in (0, 0.5)"
            )

    def to_dict(self) -> Dict[str, Any]:
        """Nested dictionary, as in config.yaml."""
        return asdict(self)

    def dump(self, output_dir: Optional[str] = None) -> Path:
        """Write the effective configuration to <output_dir>/processed_config.yaml."""
        directory = Path(output_dir or self.output.directory)
        directory.mkdir(parents=True, exist_ok=True)
        path = directory / "processed_config.yaml"
        with open(path, "w") as outfile:
            yaml.dump(self.to_dict(), outfile, default_flow_style=False)
        return path

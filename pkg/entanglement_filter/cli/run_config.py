"""
RUN CONFIG - Validated per-invocation configuration for the CLI

PRECEDENCE (highest first):
1. Command-line flags
2. --config file (plain key=value lines, read with python-dotenv)
3. Settings defaults (which honour ENTANGLEMENT_FILTER_* env vars)

Grid sizes and ranges left unset here are filled from Settings at dispatch.
"""

from enum import Enum
from pathlib import Path
from typing import Any, Dict, FrozenSet, List, Mapping, Optional

from dotenv import dotenv_values
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from entanglement_filter.core.models.params import QubitPair, StateName
from entanglement_filter.exceptions import InvalidRunConfigError


class Command(str, Enum):
    FIGURE = "figure"
    POINT = "point"
    SWEEP_K = "sweep-k"
    SWEEP_NOISE = "sweep-noise"
    ESD = "esd"


class OutputFormat(str, Enum):
    CSV = "csv"
    JSON = "json"


def _split_numbers(value: Any) -> Any:
    """'0, 0.25,0.5' -> ['0', '0.25', '0.5']; lists pass through"""
    if isinstance(value, str):
        return [part for part in value.replace(";", ",").split(",") if part.strip()]
    return value


class RunConfig(BaseModel):
    """Everything one CLI command needs, validated before dispatch"""

    model_config = ConfigDict(frozen=True, extra="forbid")

    command: Command
    figure: Optional[int] = Field(None, ge=1, le=8, description="Figure number")
    state: StateName = Field(StateName.W3, description="Initial pure state")
    k: float = Field(0.5, ge=0.0, le=1.0, description="Filtering parameter")
    k_list: Optional[List[float]] = Field(None, description="Explicit k grid or curve family")
    gamma_t: float = Field(0.0, ge=0.0, description="Noise time for a single point")
    gamma_t_min: float = Field(0.0, ge=0.0)
    gamma_t_max: Optional[float] = Field(None, gt=0.0)
    points: Optional[int] = Field(None, ge=2, description="Grid size")
    pair: QubitPair = Field(QubitPair.P23, description="Pair tracked by esd")
    target_qubit: int = Field(1, ge=1, le=3, description="Qubit the filter acts on")
    noisy_qubits: FrozenSet[int] = Field(default_factory=lambda: frozenset({2, 3}))
    tol: Optional[float] = Field(None, gt=0.0, description="ESD bisection width")
    output_path: Optional[Path] = None
    format: OutputFormat = OutputFormat.CSV

    @field_validator("state", mode="before")
    @classmethod
    def parse_state(cls, v: Any) -> StateName:
        return StateName.parse(v)

    @field_validator("pair", mode="before")
    @classmethod
    def parse_pair(cls, v: Any) -> QubitPair:
        return QubitPair.parse(v)

    @field_validator("format", mode="before")
    @classmethod
    def parse_format(cls, v: Any) -> Any:
        return v.strip().lower() if isinstance(v, str) else v

    @field_validator("k_list", mode="before")
    @classmethod
    def parse_k_list(cls, v: Any) -> Any:
        return _split_numbers(v)

    @field_validator("k_list")
    @classmethod
    def validate_k_list(cls, v: Optional[List[float]]) -> Optional[List[float]]:
        if v is None:
            return v
        if not v:
            raise ValueError("k_list must not be empty")
        for k in v:
            if not 0.0 <= k <= 1.0:
                raise ValueError(f"k_list values must lie in [0, 1], got {k}")
        return v

    @field_validator("noisy_qubits", mode="before")
    @classmethod
    def parse_noisy_qubits(cls, v: Any) -> Any:
        return frozenset(_split_numbers(v)) if isinstance(v, str) else v

    @field_validator("noisy_qubits")
    @classmethod
    def validate_noisy_qubits(cls, v: FrozenSet[int]) -> FrozenSet[int]:
        if not v or not v <= {1, 2, 3}:
            raise ValueError(f"noisy_qubits must be a nonempty subset of {{1, 2, 3}}, got {sorted(v)}")
        return v

    @model_validator(mode="after")
    def check_command_inputs(self) -> "RunConfig":
        if self.command is Command.FIGURE and self.figure is None:
            raise ValueError("figure: a figure number is required")
        if self.gamma_t_max is not None and self.gamma_t_min >= self.gamma_t_max:
            raise ValueError(
                f"gamma_t_min ({self.gamma_t_min}) must be below gamma_t_max ({self.gamma_t_max})"
            )
        return self


# flag spellings that differ from field names
_KEY_ALIASES = {"out": "output_path", "output": "output_path"}


def load_config_file(path: Path) -> Dict[str, str]:
    """
    Read a key=value file; keys may be written like flags (--gamma-t-max)

    Raises:
        InvalidRunConfigError: file missing or a key without a value
    """
    if not path.is_file():
        raise InvalidRunConfigError(f"config file not found: {path}")
    values: Dict[str, str] = {}
    for key, value in dotenv_values(path).items():
        if value is None:
            raise InvalidRunConfigError(f"config key {key!r} has no value")
        name = key.strip().lstrip("-").lower().replace("-", "_")
        values[_KEY_ALIASES.get(name, name)] = value
    return values


def resolve_gamma_t_range(
    config: RunConfig, default_max: float, default_points: int
) -> "tuple[float, float, int]":
    """(gamma_t_min, gamma_t_max, points) with unset values taken from settings"""
    gamma_t_max = config.gamma_t_max or default_max
    if config.gamma_t_min >= gamma_t_max:
        raise InvalidRunConfigError(
            f"gamma_t_min ({config.gamma_t_min}) must be below gamma_t_max ({gamma_t_max})"
        )
    return config.gamma_t_min, gamma_t_max, config.points or default_points


def build_run_config(
    command: "Command | str",
    flags: Mapping[str, Any],
    config_path: Optional[Path] = None,
) -> RunConfig:
    """Merge file values under flag values and validate"""
    merged: Dict[str, Any] = {}
    if config_path is not None:
        merged.update(load_config_file(config_path))
    merged.update({key: value for key, value in flags.items() if value is not None})
    merged["command"] = command
    if merged.get("output_path") == "-":
        merged.pop("output_path")
    return RunConfig(**merged)


__all__ = [
    "Command",
    "OutputFormat",
    "RunConfig",
    "load_config_file",
    "build_run_config",
    "resolve_gamma_t_range",
]

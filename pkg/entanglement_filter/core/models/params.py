#!/usr/bin/env python3
"""
PARAMETER MODELS - Pydantic schemas for filter, noise and selector inputs

VALIDATION RULES:
- Filtering parameter k must be 0.0-1.0
- Target/noisy qubits are 1-based and unique
- Dimensionless time Γt must be non-negative (so p = 1 - e^(-Γt/2) is in [0, 1))
"""

import math
from enum import Enum
from typing import FrozenSet, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator


class StateName(str, Enum):
    """Named 3-qubit pure states"""

    W3 = "W3"
    GHZ3 = "GHZ3"
    WWBAR3 = "WWbar3"

    @classmethod
    def parse(cls, value: "str | StateName") -> "StateName":
        """Case-insensitive lookup by value"""
        if isinstance(value, StateName):
            return value
        for member in cls:
            if member.value.lower() == str(value).strip().lower():
                return member
        raise ValueError(f"unknown state {value!r}; expected one of {[m.value for m in cls]}")


class QubitPair(str, Enum):
    """Two-qubit subsystem selector"""

    P12 = "12"
    P13 = "13"
    P23 = "23"

    @property
    def qubits(self) -> Tuple[int, int]:
        return int(self.value[0]), int(self.value[1])

    @classmethod
    def parse(cls, value: "str | QubitPair") -> "QubitPair":
        """Accept '23', '2,3', '(2,3)' or 'p23'"""
        if isinstance(value, QubitPair):
            return value
        digits = "".join(ch for ch in str(value) if ch.isdigit())
        try:
            return cls(digits)
        except ValueError:
            raise ValueError(f"unknown qubit pair {value!r}; expected 12, 13 or 23") from None


class FilterParams(BaseModel):
    """Single local filter F(k) acting on one qubit"""

    model_config = ConfigDict(frozen=True)

    k: float = Field(..., ge=0.0, le=1.0, description="Filtering parameter")
    target_qubit: int = Field(1, ge=1, description="1-based qubit the filter acts on")


class NoiseParams(BaseModel):
    """Depolarizing noise on a subset of qubits"""

    model_config = ConfigDict(frozen=True)

    gamma_t: float = Field(..., ge=0.0, description="Dimensionless time Γt")
    noisy_qubits: FrozenSet[int] = Field(
        default_factory=lambda: frozenset({2, 3}), description="1-based noisy qubits"
    )

    @field_validator("gamma_t")
    @classmethod
    def validate_gamma_t(cls, v: float) -> float:
        """Γt must be finite"""
        if not math.isfinite(v):
            raise ValueError("gamma_t must be finite")
        return v

    @field_validator("noisy_qubits")
    @classmethod
    def validate_noisy_qubits(cls, v: FrozenSet[int]) -> FrozenSet[int]:
        """Noise must act somewhere, on 1-based indices"""
        if not v:
            raise ValueError("noisy_qubits must not be empty")
        if min(v) < 1:
            raise ValueError("qubit indices are 1-based")
        return v


__all__ = ["StateName", "QubitPair", "FilterParams", "NoiseParams"]

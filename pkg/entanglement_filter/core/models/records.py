#!/usr/bin/env python3
"""
RECORD MODELS - Experiment output rows and ESD onset results

SweepRecord is one row of sweep output: the parameters of the point plus
the three pairwise concurrences, purities and the filter success probability.
"""

from dataclasses import dataclass
from typing import Dict, Tuple

from pydantic import BaseModel, ConfigDict, Field

from entanglement_filter.core.models.params import QubitPair, StateName


class SweepRecord(BaseModel):
    """Measured quantities at one (state, k, Γt) point"""

    model_config = ConfigDict(frozen=True, use_enum_values=False)

    state_name: StateName = Field(..., description="Initial pure state")
    k: float = Field(..., ge=0.0, le=1.0, description="Filtering parameter")
    gamma_t: float = Field(0.0, ge=0.0, description="Dimensionless noise time (0 = no noise)")

    c12: float = Field(..., ge=0.0, le=1.0, description="Concurrence of qubits 1,2")
    c13: float = Field(..., ge=0.0, le=1.0, description="Concurrence of qubits 1,3")
    c23: float = Field(..., ge=0.0, le=1.0, description="Concurrence of qubits 2,3")

    g12: float = Field(..., ge=0.0, le=1.0, description="Purity of qubits 1,2")
    g13: float = Field(..., ge=0.0, le=1.0, description="Purity of qubits 1,3")
    g23: float = Field(..., ge=0.0, le=1.0, description="Purity of qubits 2,3")

    success_prob: float = Field(..., ge=0.0, le=1.0, description="Filter success probability")

    def concurrence(self, pair: QubitPair) -> float:
        """Concurrence of the selected pair"""
        return {QubitPair.P12: self.c12, QubitPair.P13: self.c13, QubitPair.P23: self.c23}[pair]

    def purity(self, pair: QubitPair) -> float:
        """Purity of the selected pair"""
        return {QubitPair.P12: self.g12, QubitPair.P13: self.g13, QubitPair.P23: self.g23}[pair]

    def to_row(self) -> Dict[str, object]:
        """Flat dict for tabular output"""
        row = self.model_dump()
        row["state_name"] = self.state_name.value
        return row


@dataclass(frozen=True)
class EsdResult:
    """Located onset of entanglement sudden death"""

    state_name: StateName
    k: float
    pair: QubitPair
    gamma_t_star: float
    lower: float  # last Γt known entangled
    upper: float  # first Γt known dead
    tolerance: float

    @property
    def bracket(self) -> Tuple[float, float]:
        return self.lower, self.upper

    @property
    def width(self) -> float:
        return self.upper - self.lower


__all__ = ["SweepRecord", "EsdResult"]

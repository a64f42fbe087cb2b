"""Typed models: quantum states, parameters and experiment records"""

from entanglement_filter.core.models.params import (
    FilterParams,
    NoiseParams,
    QubitPair,
    StateName,
)
from entanglement_filter.core.models.quantum import ComplexMatrix, DensityMatrix, StateVector
from entanglement_filter.core.models.records import EsdResult, SweepRecord

__all__ = [
    "ComplexMatrix",
    "StateVector",
    "DensityMatrix",
    "StateName",
    "QubitPair",
    "FilterParams",
    "NoiseParams",
    "SweepRecord",
    "EsdResult",
]

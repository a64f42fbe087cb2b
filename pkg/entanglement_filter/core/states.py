#!/usr/bin/env python3
"""
STATES - Named 3-qubit pure states and pure-state density matrices

CONSTRUCTORS:
✅ w3:      (|001> + |010> + |100>)/√3
✅ ghz3:    (|000> + |111>)/√2
✅ wwbar3:  (|W> + |W̄>)/√2, |W̄> = (|110> + |101> + |011>)/√3
✅ density: |ψ><ψ| / <ψ|ψ>

Basis state |b1 b2 b3> sits at index 4*b1 + 2*b2 + b3.
"""

import math
from typing import Callable, Dict, Iterable

import numpy as np

from entanglement_filter.core.models.params import StateName
from entanglement_filter.core.models.quantum import DensityMatrix, StateVector


def basis_state(bits: str) -> StateVector:
    """Computational basis state from a bit string, e.g. '010'"""
    if not bits or set(bits) - {"0", "1"}:
        raise ValueError(f"bits must be a non-empty string of 0/1, got {bits!r}")
    amps = np.zeros(1 << len(bits), dtype=np.complex128)
    amps[int(bits, 2)] = 1.0
    return StateVector(len(bits), amps)


def _uniform(n_qubits: int, indices: Iterable[int]) -> StateVector:
    indices = list(indices)
    amps = np.zeros(1 << n_qubits, dtype=np.complex128)
    amps[indices] = 1.0 / math.sqrt(len(indices))
    return StateVector(n_qubits, amps)


def w3() -> StateVector:
    return _uniform(3, [0b001, 0b010, 0b100])


def wbar3() -> StateVector:
    """Obverse W state, all weight-2 basis states"""
    return _uniform(3, [0b110, 0b101, 0b011])


def ghz3() -> StateVector:
    return _uniform(3, [0b000, 0b111])


def wwbar3() -> StateVector:
    return _uniform(3, [0b001, 0b010, 0b100, 0b011, 0b101, 0b110])


def bell_psi_plus() -> StateVector:
    """(|01> + |10>)/√2"""
    return _uniform(2, [0b01, 0b10])


def density(psi: StateVector) -> DensityMatrix:
    """Outer product of the normalized vector with itself"""
    v = psi.amplitudes / psi.norm()
    return DensityMatrix(n_qubits=psi.n_qubits, mat=np.outer(v, np.conj(v)))


STATE_CONSTRUCTORS: Dict[StateName, Callable[[], StateVector]] = {
    StateName.W3: w3,
    StateName.GHZ3: ghz3,
    StateName.WWBAR3: wwbar3,
}


def build_state(name: "StateName | str") -> StateVector:
    """Look up a named state"""
    return STATE_CONSTRUCTORS[StateName.parse(name)]()


__all__ = [
    "basis_state",
    "w3",
    "wbar3",
    "ghz3",
    "wwbar3",
    "bell_psi_plus",
    "density",
    "STATE_CONSTRUCTORS",
    "build_state",
]

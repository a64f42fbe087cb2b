#!/usr/bin/env python3
"""
QUANTUM MODELS - State vectors and density matrices over n qubits

VALIDATION RULES:
- StateVector: 2^n finite amplitudes with nonzero norm (normalization is
  checked on demand, never cached)
- DensityMatrix: 2^n × 2^n, Hermitian within 1e-10, unit trace within 1e-10,
  all eigenvalues >= -1e-10
- Basis index of |b1 b2 ... bn> is the binary number b1 b2 ... bn (qubit 1
  is the most significant bit)
"""

from dataclasses import dataclass, field

import numpy as np
import numpy.typing as npt

from entanglement_filter.core.linalg import (
    CLAMP_ATOL,
    HERMITIAN_ATOL,
    MAX_QUBITS,
    ComplexMatrix,
    as_matrix,
    herm_eigvals,
    is_hermitian,
)
from entanglement_filter.exceptions import ContractViolationError

TRACE_ATOL = 1e-10


def _check_n_qubits(n_qubits: int) -> None:
    if not 1 <= n_qubits <= MAX_QUBITS:
        raise ContractViolationError(f"n_qubits must be in 1..{MAX_QUBITS}, got {n_qubits}")


@dataclass(frozen=True, eq=False)
class StateVector:
    """Pure-state amplitude vector over n qubits"""

    n_qubits: int
    amplitudes: np.ndarray = field(repr=False)

    def __post_init__(self):
        _check_n_qubits(self.n_qubits)
        amps = np.array(self.amplitudes, dtype=np.complex128).reshape(-1)
        if amps.shape[0] != 1 << self.n_qubits:
            raise ContractViolationError(
                f"{self.n_qubits} qubits need {1 << self.n_qubits} amplitudes, got {amps.shape[0]}"
            )
        if not np.all(np.isfinite(amps)):
            raise ContractViolationError("amplitudes must be finite")
        if np.linalg.norm(amps) == 0.0:
            raise ContractViolationError("state vector has zero norm")
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    @classmethod
    def from_amplitudes(cls, amplitudes: npt.ArrayLike) -> "StateVector":
        """Infer the qubit count from the vector length"""
        amps = np.asarray(amplitudes).reshape(-1)
        n = amps.shape[0].bit_length() - 1
        return cls(n_qubits=n, amplitudes=amps)

    @property
    def dim(self) -> int:
        return 1 << self.n_qubits

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def is_normalized(self, atol: float = 1e-14) -> bool:
        return abs(self.norm() - 1.0) <= atol

    def normalized(self) -> "StateVector":
        return StateVector(self.n_qubits, self.amplitudes / self.norm())

    def __add__(self, other: "StateVector") -> "StateVector":
        if other.n_qubits != self.n_qubits:
            raise ContractViolationError("cannot add states on different registers")
        return StateVector(self.n_qubits, self.amplitudes + other.amplitudes)


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Positive semidefinite, unit-trace operator with qubit-count metadata"""

    n_qubits: int
    mat: ComplexMatrix = field(repr=False)

    def __post_init__(self):
        _check_n_qubits(self.n_qubits)
        m = as_matrix(self.mat)
        if m.shape[0] != 1 << self.n_qubits:
            raise ContractViolationError(
                f"{self.n_qubits} qubits need a {1 << self.n_qubits}-dim matrix, got {m.shape[0]}"
            )
        if not is_hermitian(m, HERMITIAN_ATOL):
            raise ContractViolationError("density matrix must be Hermitian")
        tr = np.trace(m)
        if abs(tr - 1.0) > TRACE_ATOL:
            raise ContractViolationError(f"density matrix must have unit trace, got {tr.real:.12g}")
        if herm_eigvals(m)[-1] < -CLAMP_ATOL:
            raise ContractViolationError("density matrix must be positive semidefinite")
        object.__setattr__(self, "mat", m)

    @property
    def dim(self) -> int:
        return 1 << self.n_qubits

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DensityMatrix):
            return NotImplemented
        return self.n_qubits == other.n_qubits and bool(
            np.all(np.abs(self.mat - other.mat) <= 1e-12)
        )


__all__ = ["ComplexMatrix", "StateVector", "DensityMatrix"]

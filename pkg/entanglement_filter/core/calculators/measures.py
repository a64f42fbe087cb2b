#!/usr/bin/env python3
"""
MEASURES - Two-qubit concurrence, purity and mixedness

CALCULATION TYPES:
✅ spin_flip: ρ̃ = (σy⊗σy) ρ* (σy⊗σy), conjugation in the computational basis
✅ concurrence: max(0, λ1 - λ2 - λ3 - λ4), λ the square-rooted spectrum of ρρ̃
✅ purity: Tr(ρ²)
✅ mixedness: 1 - Tr(ρ²)

EDGE CASES HANDLED:
- ρρ̃ is not Hermitian. The λ are the singular values of R = √ρ (σy⊗σy) √ρ*
  (R R† = √ρ ρ̃ √ρ), read off the Hermitian dilation [[0, R], [R†, 0]] whose
  spectrum is ±λ. No square root of a near-zero eigenvalue is taken.
- Concurrence within 1e-12 of zero is reported as exactly 0
- Results are clipped to [0, 1] against roundoff above 1
"""

from typing import List

import numpy as np
import numpy.typing as npt

from entanglement_filter.core.channels import SIGMA_Y
from entanglement_filter.core.linalg import (
    ComplexMatrix,
    as_matrix,
    clamp_eigenvalues,
    herm_eigvals,
    kron,
    mat_sqrt_psd,
)
from entanglement_filter.core.models.quantum import DensityMatrix, StateVector
from entanglement_filter.exceptions import ContractViolationError

ZERO_SNAP = 1e-12
SIGMA_YY = kron(SIGMA_Y, SIGMA_Y)


def _require_two_qubits(rho: DensityMatrix) -> None:
    if rho.n_qubits != 2:
        raise ContractViolationError(f"expected a 2-qubit density matrix, got {rho.n_qubits} qubits")


def spin_flip(rho: DensityMatrix) -> ComplexMatrix:
    """Wootters spin-flipped state ρ̃"""
    _require_two_qubits(rho)
    return as_matrix(SIGMA_YY @ np.conj(rho.mat) @ SIGMA_YY)


def concurrence_spectrum(rho: DensityMatrix) -> List[float]:
    """λ1 >= λ2 >= λ3 >= λ4 >= 0, square roots of the eigenvalues of ρρ̃"""
    _require_two_qubits(rho)
    root = mat_sqrt_psd(rho.mat)
    r = root @ SIGMA_YY @ np.conj(root)
    zeros = np.zeros_like(r)
    dilation = np.block([[zeros, r], [np.conj(r).T, zeros]])
    # spectrum is (λ1, .., λ4, -λ4, .., -λ1)
    lambdas = clamp_eigenvalues(herm_eigvals(dilation)[:4])
    return sorted((float(v) for v in lambdas), reverse=True)


def concurrence(rho: DensityMatrix) -> float:
    """Wootters concurrence of a 2-qubit state, in [0, 1]"""
    l1, l2, l3, l4 = concurrence_spectrum(rho)
    c = l1 - l2 - l3 - l4
    if c < ZERO_SNAP:
        return 0.0
    return min(c, 1.0)


def purity(rho: DensityMatrix) -> float:
    """Tr(ρ²), in [1/dim, 1]"""
    m = rho.mat
    # Tr(ρ²) = Σ |ρ_ij|² for Hermitian ρ
    value = float(np.sum(np.abs(m) ** 2))
    return min(max(value, 1.0 / rho.dim), 1.0)


def mixedness(rho: DensityMatrix) -> float:
    return 1.0 - purity(rho)


def fidelity(rho: DensityMatrix, psi: StateVector) -> float:
    """<ψ|ρ|ψ> against a pure reference state"""
    if psi.n_qubits != rho.n_qubits:
        raise ContractViolationError("fidelity needs states on the same register")
    v: npt.NDArray[np.complex128] = psi.amplitudes / psi.norm()
    return float(np.real(np.conj(v) @ rho.mat @ v))


__all__ = [
    "spin_flip",
    "concurrence_spectrum",
    "concurrence",
    "purity",
    "mixedness",
    "fidelity",
]

#!/usr/bin/env python3
"""
CHANNELS - Local filtering, depolarizing noise and operator lifting

OPERATIONS:
✅ filter_op: F(k) = √(1-k)|0><0| + √k|1><1|
✅ lift: place a single-qubit operator at one position of an n-qubit register
✅ apply_filter: ρ → MρM†/Tr(MρM†), also returns Tr(MρM†) as success probability
✅ depolarizing_kraus: four Kraus operators with p = 1 - e^(-Γt/2)
✅ lift_kraus / apply_noise: product Kraus sets over the noisy qubits

CONVENTIONS:
- The third depolarizing operator is √(p/3)·[[0, i], [-i, 0]], the transpose of
  the usual σ_y. Kraus operators enter as k ρ k†, so the channel is the same.
- Multi-qubit Kraus tuples are enumerated lexicographically.
- A filter outcome with probability below 1e-14 is an annihilation error.
"""

import itertools
import math
from dataclasses import dataclass, field
from typing import Iterable, List, Sequence, Tuple

import numpy as np
import structlog

from entanglement_filter.core.linalg import (
    MATRIX_ATOL,
    ComplexMatrix,
    as_matrix,
    kron_all,
    matrices_close,
)
from entanglement_filter.core.models.params import FilterParams, NoiseParams
from entanglement_filter.core.models.quantum import DensityMatrix
from entanglement_filter.exceptions import (
    ContractViolationError,
    FilterAnnihilatesStateError,
)

logger = structlog.get_logger(__name__)

ANNIHILATION_THRESHOLD = 1e-14

I2 = as_matrix([[1, 0], [0, 1]])
SIGMA_X = as_matrix([[0, 1], [1, 0]])
SIGMA_Y = as_matrix([[0, -1j], [1j, 0]])
SIGMA_Z = as_matrix([[1, 0], [0, -1]])
# third depolarizing Kraus operator, the transpose of SIGMA_Y
SIGMA_Y_T = as_matrix([[0, 1j], [-1j, 0]])


@dataclass(frozen=True, eq=False)
class KrausSet:
    """Kraus operators of a trace-preserving channel"""

    ops: Tuple[ComplexMatrix, ...] = field(repr=False)

    def __post_init__(self):
        ops = tuple(as_matrix(op) for op in self.ops)
        if not ops:
            raise ContractViolationError("a Kraus set needs at least one operator")
        dim = ops[0].shape[0]
        if any(op.shape[0] != dim for op in ops):
            raise ContractViolationError("Kraus operators must share one dimension")
        object.__setattr__(self, "ops", ops)
        if not matrices_close(self.completeness(), np.eye(dim), MATRIX_ATOL):
            raise ContractViolationError("Kraus operators violate the completeness relation")

    @property
    def dim(self) -> int:
        return self.ops[0].shape[0]

    def __len__(self) -> int:
        return len(self.ops)

    def completeness(self) -> ComplexMatrix:
        """Σ op† op"""
        return as_matrix(sum(np.conj(op).T @ op for op in self.ops))

    def apply(self, mat: np.ndarray) -> np.ndarray:
        """Σ op ρ op†"""
        return sum(op @ mat @ np.conj(op).T for op in self.ops)


def _check_probability(name: str, value: float) -> None:
    if not (math.isfinite(value) and 0.0 <= value <= 1.0):
        raise ContractViolationError(f"{name} must lie in [0, 1], got {value}")


def filter_op(k: float) -> ComplexMatrix:
    """2×2 filter diag(√(1-k), √k)"""
    _check_probability("k", k)
    return as_matrix(np.diag([math.sqrt(1.0 - k), math.sqrt(k)]))


def lift(op: ComplexMatrix, n_qubits: int, target: int) -> ComplexMatrix:
    """op at 1-based position `target`, identity on every other qubit"""
    if not 1 <= target <= n_qubits:
        raise ContractViolationError(f"target {target} out of range 1..{n_qubits}")
    op = as_matrix(op)
    if op.shape != (2, 2):
        raise ContractViolationError("lift expects a single-qubit operator")
    return kron_all(op if q == target else I2 for q in range(1, n_qubits + 1))


def apply_filter(rho: DensityMatrix, params: FilterParams) -> Tuple[DensityMatrix, float]:
    """
    Apply the local filter to one qubit and renormalize

    Returns:
        (filtered state, success probability Tr(MρM†))

    Raises:
        FilterAnnihilatesStateError: success probability below 1e-14
    """
    m = lift(filter_op(params.k), rho.n_qubits, params.target_qubit)
    unnormalized = m @ rho.mat @ np.conj(m).T
    success_prob = float(np.real(np.trace(unnormalized)))
    if success_prob < ANNIHILATION_THRESHOLD:
        logger.warning(
            "filter_annihilates_state", k=params.k, target=params.target_qubit, prob=success_prob
        )
        raise FilterAnnihilatesStateError(success_prob)
    filtered = DensityMatrix(n_qubits=rho.n_qubits, mat=unnormalized / success_prob)
    return filtered, min(success_prob, 1.0)


def p_of_time(gamma_t: float) -> float:
    """Depolarizing probability p = 1 - e^(-Γt/2)"""
    if not math.isfinite(gamma_t) or gamma_t < 0.0:
        raise ContractViolationError(f"gamma_t must be a finite value >= 0, got {gamma_t}")
    return -math.expm1(-gamma_t / 2.0)


def depolarizing_kraus(p: float) -> KrausSet:
    """√(1-p)·I, √(p/3)·σx, √(p/3)·[[0, i], [-i, 0]], √(p/3)·σz"""
    _check_probability("p", p)
    a = math.sqrt(1.0 - p)
    b = math.sqrt(p / 3.0)
    return KrausSet((a * I2, b * SIGMA_X, b * SIGMA_Y_T, b * SIGMA_Z))


def lift_kraus(kraus: KrausSet, n_qubits: int, qubits: Iterable[int]) -> KrausSet:
    """
    Product Kraus set acting with `kraus` on each listed qubit

    For qubits {2, 3} of three this is s_ij = I ⊗ k_i ⊗ k_j, with (i, j)
    enumerated lexicographically.
    """
    targets: List[int] = sorted(set(qubits))
    if not targets:
        raise ContractViolationError("lift_kraus needs at least one qubit")
    if targets[0] < 1 or targets[-1] > n_qubits:
        raise ContractViolationError(f"qubits {targets} out of range 1..{n_qubits}")
    if kraus.dim != 2:
        raise ContractViolationError("lift_kraus expects single-qubit Kraus operators")

    lifted = []
    for combo in itertools.product(kraus.ops, repeat=len(targets)):
        by_qubit = dict(zip(targets, combo))
        lifted.append(kron_all(by_qubit.get(q, I2) for q in range(1, n_qubits + 1)))
    return KrausSet(tuple(lifted))


def apply_noise(rho: DensityMatrix, params: NoiseParams) -> DensityMatrix:
    """Depolarizing noise of strength p(Γt) on every qubit in params.noisy_qubits"""
    if max(params.noisy_qubits) > rho.n_qubits:
        raise ContractViolationError(
            f"noisy qubits {sorted(params.noisy_qubits)} exceed register of {rho.n_qubits}"
        )
    if params.gamma_t == 0.0:
        return rho
    channel = lift_kraus(depolarizing_kraus(p_of_time(params.gamma_t)), rho.n_qubits, params.noisy_qubits)
    return DensityMatrix(n_qubits=rho.n_qubits, mat=channel.apply(rho.mat))


def unitary_conjugate(rho: DensityMatrix, ops: Sequence[ComplexMatrix]) -> DensityMatrix:
    """U ρ U† with U = ops[0] ⊗ ops[1] ⊗ ..."""
    u = kron_all(ops)
    return DensityMatrix(n_qubits=rho.n_qubits, mat=u @ rho.mat @ np.conj(u).T)


__all__ = [
    "I2",
    "SIGMA_X",
    "SIGMA_Y",
    "SIGMA_Z",
    "SIGMA_Y_T",
    "KrausSet",
    "filter_op",
    "lift",
    "apply_filter",
    "p_of_time",
    "depolarizing_kraus",
    "lift_kraus",
    "apply_noise",
    "unitary_conjugate",
]

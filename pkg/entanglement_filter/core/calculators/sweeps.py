#!/usr/bin/env python3
"""
SWEEPS - Point evaluation and parameter sweeps of the noise + filter pipeline

PIPELINE (per grid point):
1. Build the named 3-qubit pure state
2. Depolarizing noise of strength p(Γt) on the noisy qubits (default {2, 3})
3. Local filter F(k) on the target qubit (default 1), renormalized
4. Reduce to the pairs (1,2), (1,3), (2,3); record concurrence and purity

The noise and filter act on disjoint qubits, so step order does not change
the state; noise first matches the retrieval-after-noise reading.
Grid points are independent. With max_workers > 1 they run on a thread pool
and are merged back in grid order.
"""

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, FrozenSet, Iterable, List, Optional, Sequence, TypeVar

import numpy as np
import structlog

from entanglement_filter.core.calculators.measures import concurrence, purity
from entanglement_filter.core.channels import apply_filter, apply_noise
from entanglement_filter.core.linalg import partial_trace
from entanglement_filter.core.models.params import (
    FilterParams,
    NoiseParams,
    QubitPair,
    StateName,
)
from entanglement_filter.core.models.records import SweepRecord
from entanglement_filter.core.states import build_state, density
from entanglement_filter.exceptions import ContractViolationError

logger = structlog.get_logger(__name__)

DEFAULT_NOISY_QUBITS: FrozenSet[int] = frozenset({2, 3})
TIE_ATOL = 1e-9

T = TypeVar("T")
R = TypeVar("R")


def k_grid(points: int) -> List[float]:
    """Evenly spaced filter parameters on [0, 1]"""
    if points < 2:
        raise ContractViolationError(f"a grid needs at least 2 points, got {points}")
    return [float(k) for k in np.linspace(0.0, 1.0, points)]


def gamma_t_grid(gamma_t_max: float, points: int, gamma_t_min: float = 0.0) -> List[float]:
    """Evenly spaced dimensionless times on [gamma_t_min, gamma_t_max]"""
    if points < 2:
        raise ContractViolationError(f"a grid needs at least 2 points, got {points}")
    if not 0.0 <= gamma_t_min < gamma_t_max:
        raise ContractViolationError(
            f"need 0 <= gamma_t_min < gamma_t_max, got [{gamma_t_min}, {gamma_t_max}]"
        )
    return [float(t) for t in np.linspace(gamma_t_min, gamma_t_max, points)]


def _ordered_map(fn: Callable[[T], R], items: Sequence[T], max_workers: int) -> List[R]:
    if max_workers <= 1 or len(items) < 2:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=max_workers) as pool:
        # Executor.map yields in submission order
        return list(pool.map(fn, items))


def evaluate_point(
    state_name: "StateName | str",
    k: float,
    gamma_t: float = 0.0,
    target_qubit: int = 1,
    noisy_qubits: Iterable[int] = DEFAULT_NOISY_QUBITS,
) -> SweepRecord:
    """
    Run the pipeline once and measure every pair

    Args:
        state_name: Initial pure state
        k: Filtering parameter in [0, 1]
        gamma_t: Dimensionless noise time; 0 skips the noise step
        target_qubit: Qubit the filter acts on
        noisy_qubits: Qubits exposed to depolarizing noise

    Returns:
        SweepRecord with concurrences, purities and success probability
    """
    name = StateName.parse(state_name)
    filter_params = FilterParams(k=k, target_qubit=target_qubit)
    rho = density(build_state(name))
    if gamma_t > 0.0:
        rho = apply_noise(rho, NoiseParams(gamma_t=gamma_t, noisy_qubits=frozenset(noisy_qubits)))
    elif gamma_t < 0.0:
        raise ContractViolationError(f"gamma_t must be >= 0, got {gamma_t}")
    filtered, success_prob = apply_filter(rho, filter_params)

    measured = {}
    for pair in QubitPair:
        reduced = partial_trace(filtered, pair.qubits)
        measured[f"c{pair.value}"] = concurrence(reduced)
        measured[f"g{pair.value}"] = purity(reduced)

    return SweepRecord(
        state_name=name,
        k=k,
        gamma_t=gamma_t,
        success_prob=success_prob,
        **measured,
    )


def sweep_filter(
    state_name: "StateName | str",
    k_values: Sequence[float],
    target_qubit: int = 1,
    max_workers: int = 1,
) -> List[SweepRecord]:
    """Noise-free sweep over filter parameters"""
    name = StateName.parse(state_name)
    logger.debug("sweep_filter", state=name.value, points=len(k_values), target=target_qubit)
    return _ordered_map(
        lambda k: evaluate_point(name, k, 0.0, target_qubit=target_qubit),
        list(k_values),
        max_workers,
    )


def sweep_noise_filter(
    state_name: "StateName | str",
    k: float,
    gamma_t_values: Sequence[float],
    target_qubit: int = 1,
    noisy_qubits: Iterable[int] = DEFAULT_NOISY_QUBITS,
    max_workers: int = 1,
) -> List[SweepRecord]:
    """Sweep over noise time at a fixed filter parameter"""
    name = StateName.parse(state_name)
    noisy = frozenset(noisy_qubits)
    logger.debug(
        "sweep_noise_filter",
        state=name.value,
        k=k,
        points=len(gamma_t_values),
        noisy=sorted(noisy),
    )
    return _ordered_map(
        lambda t: evaluate_point(name, k, t, target_qubit=target_qubit, noisy_qubits=noisy),
        list(gamma_t_values),
        max_workers,
    )


def optimal_filter_parameters(
    state_name: "StateName | str",
    pair: "QubitPair | str",
    k_values: Sequence[float],
    gamma_t: float = 0.0,
) -> List[float]:
    """
    Filter parameters on the grid that maximize one pair's concurrence

    Ties within 1e-9 of the best value are all returned, in grid order.
    """
    selected = QubitPair.parse(pair)
    records = [evaluate_point(state_name, k, gamma_t) for k in k_values]
    values = [record.concurrence(selected) for record in records]
    if not values:
        return []
    best = max(values)
    return [record.k for record, value in zip(records, values) if best - value <= TIE_ATOL]


def pair_concurrence(
    state_name: "StateName | str",
    k: float,
    gamma_t: float,
    pair: "QubitPair | str",
    noisy_qubits: Optional[Iterable[int]] = None,
    target_qubit: int = 1,
) -> float:
    """Concurrence of one pair at one pipeline point"""
    record = evaluate_point(
        state_name,
        k,
        gamma_t,
        target_qubit=target_qubit,
        noisy_qubits=DEFAULT_NOISY_QUBITS if noisy_qubits is None else noisy_qubits,
    )
    return record.concurrence(QubitPair.parse(pair))


__all__ = [
    "DEFAULT_NOISY_QUBITS",
    "k_grid",
    "gamma_t_grid",
    "evaluate_point",
    "sweep_filter",
    "sweep_noise_filter",
    "optimal_filter_parameters",
    "pair_concurrence",
]

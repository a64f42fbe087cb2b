#!/usr/bin/env python3
"""
ESD ONSET - Locate entanglement sudden death of one pair under noise + filtering

SEARCH METHODOLOGY:
✅ Bracketing: scan Γt = step, 2·step, ... up to the horizon (default 0.05 → 20)
✅ Persistence: a zero only counts if the pair stays dead on [Γt, Γt + 0.5]
✅ Refinement: bisection on "concurrence == 0" until the bracket is narrower
   than the tolerance (default 1e-6)
✅ Onset: the upper (dead) end of the final bracket

FAILURE MODES:
- NeverEntangledError: the pair has zero concurrence at Γt = 0
- NoDeathFoundError: the pair is still entangled at the horizon
"""

import math
from typing import Callable, Iterable, List, Optional

import structlog

from entanglement_filter.config import Settings, get_settings
from entanglement_filter.core.calculators.sweeps import DEFAULT_NOISY_QUBITS, pair_concurrence
from entanglement_filter.core.models.params import QubitPair, StateName
from entanglement_filter.core.models.records import EsdResult
from entanglement_filter.exceptions import (
    ContractViolationError,
    NeverEntangledError,
    NoDeathFoundError,
)

logger = structlog.get_logger(__name__)

UNFILTERED_K = 0.5


class EsdLocator:
    """Find the smallest Γt at which a pair's concurrence dies for good"""

    def __init__(
        self,
        scan_step: Optional[float] = None,
        horizon: Optional[float] = None,
        persistence: Optional[float] = None,
        settings: Optional[Settings] = None,
    ):
        settings = settings or get_settings()
        self.scan_step = settings.esd_scan_step if scan_step is None else scan_step
        self.horizon = settings.esd_horizon if horizon is None else horizon
        self.persistence = settings.esd_persistence if persistence is None else persistence
        self.default_tolerance = settings.esd_tolerance
        if self.scan_step <= 0.0 or self.horizon <= 0.0 or self.persistence < 0.0:
            raise ContractViolationError("scan_step and horizon must be > 0, persistence >= 0")
        self.search_log: List[str] = []

    def locate(
        self,
        state_name: "StateName | str",
        k: float,
        pair: "QubitPair | str",
        tol: Optional[float] = None,
        target_qubit: int = 1,
        noisy_qubits: Optional[Iterable[int]] = None,
    ) -> EsdResult:
        """
        Locate the ESD onset for one pair

        Args:
            state_name: Initial pure state
            k: Filtering parameter
            pair: Pair whose concurrence is tracked
            tol: Final bracket width (default from settings)
            target_qubit: Qubit the filter acts on
            noisy_qubits: Qubits exposed to noise (default {2, 3})

        Returns:
            EsdResult with the onset and its bracket
        """
        name = StateName.parse(state_name)
        selected = QubitPair.parse(pair)
        noisy = frozenset(DEFAULT_NOISY_QUBITS if noisy_qubits is None else noisy_qubits)
        tol = self.default_tolerance if tol is None else tol
        if tol <= 0.0:
            raise ContractViolationError(f"tol must be > 0, got {tol}")

        def conc(gamma_t: float) -> float:
            return pair_concurrence(name, k, gamma_t, selected, noisy, target_qubit)

        self.search_log = [
            f"ESD search: {name.value}, k={k:g} on qubit {target_qubit}, "
            f"pair {selected.value}, noise on {sorted(noisy)}"
        ]

        initial = conc(0.0)
        if initial == 0.0:
            logger.warning("never_entangled", state=name.value, k=k, pair=selected.value)
            raise NeverEntangledError(
                f"pair {selected.value} of {name.value} is never entangled at k={k:g}"
            )

        lower, upper = self._bracket(conc)
        self.search_log.append(f"Bracket from scan: [{lower:g}, {upper:g}]")

        while upper - lower >= tol:
            mid = 0.5 * (lower + upper)
            if conc(mid) == 0.0:
                upper = mid
            else:
                lower = mid

        self.search_log.append(f"Onset {upper:.9g} (bracket width {upper - lower:.3e})")
        logger.info(
            "esd_onset",
            state=name.value,
            k=k,
            pair=selected.value,
            gamma_t_star=upper,
            width=upper - lower,
        )
        return EsdResult(
            state_name=name,
            k=k,
            pair=selected,
            gamma_t_star=upper,
            lower=lower,
            upper=upper,
            tolerance=tol,
        )

    def _bracket(self, conc: Callable[[float], float]) -> "tuple[float, float]":
        """(last entangled grid point, first persistently dead grid point)"""
        n_steps = int(math.floor(self.horizon / self.scan_step + 1e-9))
        window = int(math.ceil(self.persistence / self.scan_step - 1e-9))
        last_alive = 0.0
        i = 1
        while i <= n_steps:
            t = i * self.scan_step
            if conc(t) > 0.0:
                last_alive = t
                i += 1
                continue
            revived_at = None
            for j in range(1, window + 1):
                if i + j > n_steps:
                    break
                if conc((i + j) * self.scan_step) > 0.0:
                    revived_at = i + j
                    break
            if revived_at is None:
                return last_alive, t
            self.search_log.append(f"Grazing zero at {t:g}, revived at {revived_at * self.scan_step:g}")
            last_alive = revived_at * self.scan_step
            i = revived_at + 1

        final = conc(self.horizon)
        logger.warning("no_death_found", horizon=self.horizon, concurrence=final)
        raise NoDeathFoundError(self.horizon, final)


def esd_onset(
    state_name: "StateName | str",
    k: float,
    which_pair: "QubitPair | str",
    tol: float = 1e-6,
    target_qubit: int = 1,
    noisy_qubits: Optional[Iterable[int]] = None,
) -> float:
    """Γt* for one pair with the default search settings"""
    locator = EsdLocator()
    return locator.locate(state_name, k, which_pair, tol, target_qubit, noisy_qubits).gamma_t_star


def esd_delay(
    state_name: "StateName | str",
    k: float,
    which_pair: "QubitPair | str",
    tol: float = 1e-6,
) -> float:
    """Onset shift relative to the unfiltered state; positive means delayed death"""
    locator = EsdLocator()
    filtered = locator.locate(state_name, k, which_pair, tol).gamma_t_star
    unfiltered = locator.locate(state_name, UNFILTERED_K, which_pair, tol).gamma_t_star
    return filtered - unfiltered


__all__ = ["EsdLocator", "esd_onset", "esd_delay", "UNFILTERED_K"]

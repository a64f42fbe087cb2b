"""Measures, closed-form oracles, sweeps, ESD search and figure series"""

from entanglement_filter.core.calculators.closed_form import (
    closed_form_w,
    closed_form_w_success_prob,
    closed_form_wwbar_purity,
)
from entanglement_filter.core.calculators.esd import EsdLocator, esd_delay, esd_onset
from entanglement_filter.core.calculators.figures import FIGURES, build_figure
from entanglement_filter.core.calculators.measures import (
    concurrence,
    concurrence_spectrum,
    fidelity,
    mixedness,
    purity,
    spin_flip,
)
from entanglement_filter.core.calculators.sweeps import (
    evaluate_point,
    gamma_t_grid,
    k_grid,
    optimal_filter_parameters,
    sweep_filter,
    sweep_noise_filter,
)

__all__ = [
    "closed_form_w",
    "closed_form_w_success_prob",
    "closed_form_wwbar_purity",
    "EsdLocator",
    "esd_delay",
    "esd_onset",
    "FIGURES",
    "build_figure",
    "concurrence",
    "concurrence_spectrum",
    "fidelity",
    "mixedness",
    "purity",
    "spin_flip",
    "evaluate_point",
    "gamma_t_grid",
    "k_grid",
    "optimal_filter_parameters",
    "sweep_filter",
    "sweep_noise_filter",
]

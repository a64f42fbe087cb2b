#!/usr/bin/env python3
"""
CLOSED FORM - Analytic subsystem values after filtering qubit 1

W state, filtered with parameter k:
    C12 = C13 = max(0, 2√(k(1-k)) / (2-k))
    C23       = max(0, 2(1-k) / (2-k))
    γ12 = γ13 = (2 - (2-k)k) / (2-k)²
    γ23       = (4 - k(8-5k)) / (2-k)²

W-W̄ superposition, filtered with parameter k:
    γ12 = γ13 = (7 - 2k(1-k)) / 9
    γ23       = (9 - 10k(1-k)) / 9

W state success probability of the filter on qubit 1: (2-k)/3.

These are oracles for the numeric pipeline; nothing in the pipeline calls them.
"""

import math
from typing import NamedTuple

from entanglement_filter.exceptions import ContractViolationError


class WClosedForm(NamedTuple):
    c12: float
    c23: float
    g12: float
    g23: float


class WWbarPurity(NamedTuple):
    g12: float
    g23: float


def _check_k(k: float) -> None:
    if not (math.isfinite(k) and 0.0 <= k <= 1.0):
        raise ContractViolationError(f"k must lie in [0, 1], got {k}")


def closed_form_w(k: float) -> WClosedForm:
    _check_k(k)
    d = 2.0 - k
    return WClosedForm(
        c12=max(0.0, 2.0 * math.sqrt(k * (1.0 - k)) / d),
        c23=max(0.0, 2.0 * (1.0 - k) / d),
        g12=(2.0 - d * k) / d**2,
        g23=(4.0 - k * (8.0 - 5.0 * k)) / d**2,
    )


def closed_form_wwbar_purity(k: float) -> WWbarPurity:
    _check_k(k)
    x = k * (1.0 - k)
    return WWbarPurity(g12=(7.0 - 2.0 * x) / 9.0, g23=(9.0 - 10.0 * x) / 9.0)


def closed_form_w_success_prob(k: float) -> float:
    """Norm² of (F ⊗ I ⊗ I)|W>"""
    _check_k(k)
    return (2.0 - k) / 3.0


__all__ = [
    "WClosedForm",
    "WWbarPurity",
    "closed_form_w",
    "closed_form_wwbar_purity",
    "closed_form_w_success_prob",
]

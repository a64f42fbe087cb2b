#!/usr/bin/env python3
"""
FIGURES - Tabular series behind the eight published curves

FIGURE CATALOGUE:
1. W state, concurrences c12 (= c13) and c23 vs k
2. W state, purities g12 (= g13) and g23 vs k
3. W-W̄ state, concurrences vs k
4. W-W̄ state, purities vs k
5. W state, c23 vs Γt, one column per k in the family
6. W-W̄ state, c23 vs Γt, one column per k
7. W state, c12 vs Γt, one column per k
8. W-W̄ state, c12 vs Γt, one column per k
"""

from dataclasses import dataclass
from typing import Dict, Optional, Sequence, Tuple

import pandas as pd
import structlog

from entanglement_filter.config import Settings, get_settings
from entanglement_filter.core.calculators.sweeps import (
    gamma_t_grid,
    k_grid,
    sweep_filter,
    sweep_noise_filter,
)
from entanglement_filter.core.models.params import QubitPair, StateName
from entanglement_filter.exceptions import ContractViolationError

logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class FigureSpec:
    """What one figure plots"""

    number: int
    state_name: StateName
    kind: str  # "filter": columns vs k; "noise": one pair vs Γt per k
    columns: Tuple[str, ...] = ()
    pair: Optional[QubitPair] = None
    caption: str = ""


FIGURES: Dict[int, FigureSpec] = {
    1: FigureSpec(1, StateName.W3, "filter", ("c12", "c23"), caption="W: concurrence vs k"),
    2: FigureSpec(2, StateName.W3, "filter", ("g12", "g23"), caption="W: purity vs k"),
    3: FigureSpec(3, StateName.WWBAR3, "filter", ("c12", "c23"), caption="W-Wbar: concurrence vs k"),
    4: FigureSpec(4, StateName.WWBAR3, "filter", ("g12", "g23"), caption="W-Wbar: purity vs k"),
    5: FigureSpec(5, StateName.W3, "noise", pair=QubitPair.P23, caption="W: c23 vs gamma_t"),
    6: FigureSpec(6, StateName.WWBAR3, "noise", pair=QubitPair.P23, caption="W-Wbar: c23 vs gamma_t"),
    7: FigureSpec(7, StateName.W3, "noise", pair=QubitPair.P12, caption="W: c12 vs gamma_t"),
    8: FigureSpec(8, StateName.WWBAR3, "noise", pair=QubitPair.P12, caption="W-Wbar: c12 vs gamma_t"),
}


def family_column(pair: QubitPair, k: float) -> str:
    """Column label for one curve of a noise figure, e.g. c23_k0.25"""
    return f"c{pair.value}_k{k:g}"


def build_figure(
    number: int,
    k_values: Optional[Sequence[float]] = None,
    gamma_t_max: Optional[float] = None,
    points: Optional[int] = None,
    settings: Optional[Settings] = None,
) -> pd.DataFrame:
    """
    Regenerate the data series of one figure

    Args:
        number: Figure number, 1..8
        k_values: k grid for figures 1-4, curve family for figures 5-8
        gamma_t_max: Upper end of the Γt axis (figures 5-8)
        points: Grid size along the x axis

    Returns:
        DataFrame with the x column first, then one column per series
    """
    if number not in FIGURES:
        raise ContractViolationError(f"figure number must be in 1..8, got {number}")
    settings = settings or get_settings()
    spec = FIGURES[number]
    logger.info(
        "build_figure",
        figure=number,
        caption=spec.caption,
        state=spec.state_name.value,
        kind=spec.kind,
    )

    if spec.kind == "filter":
        ks = list(k_values) if k_values is not None else k_grid(points or settings.k_points)
        records = sweep_filter(spec.state_name, ks, max_workers=settings.max_workers)
        frame = pd.DataFrame([record.to_row() for record in records])
        return frame[["k", *spec.columns]].reset_index(drop=True)

    assert spec.pair is not None
    family = list(k_values) if k_values is not None else list(settings.k_family)
    times = gamma_t_grid(
        settings.gamma_t_max if gamma_t_max is None else gamma_t_max,
        points or settings.gamma_t_points,
    )
    columns = {"gamma_t": times}
    for k in family:
        records = sweep_noise_filter(spec.state_name, k, times, max_workers=settings.max_workers)
        columns[family_column(spec.pair, k)] = [record.concurrence(spec.pair) for record in records]
    return pd.DataFrame(columns)


__all__ = ["FigureSpec", "FIGURES", "family_column", "build_figure"]

"""
OUTPUT - Render CLI results as CSV or JSON

CSV: header row, one row per grid point, plain decimal point,
`%.<digits>g` float formatting (12 significant digits by default) so the
same invocation always produces byte-identical files.
"""

import json
import sys
from pathlib import Path
from typing import Any, Iterable, Mapping, Optional

import pandas as pd

from entanglement_filter.core.models.records import EsdResult, SweepRecord


def records_to_frame(records: Iterable[SweepRecord]) -> pd.DataFrame:
    """One row per record, columns in SweepRecord field order"""
    rows = [record.to_row() for record in records]
    return pd.DataFrame(rows, columns=list(SweepRecord.model_fields))


def frame_to_csv(frame: pd.DataFrame, digits: int = 12) -> str:
    return frame.to_csv(index=False, float_format=f"%.{digits}g", lineterminator="\n")


def frame_to_json(frame: pd.DataFrame, digits: int = 12) -> str:
    return frame.to_json(orient="records", indent=2, double_precision=min(digits, 15)) + "\n"


def record_to_json(record: SweepRecord) -> str:
    return record.model_dump_json(indent=2) + "\n"


def esd_payload(result: EsdResult) -> Mapping[str, Any]:
    """Flat description of an onset and its bracket"""
    return {
        "state_name": result.state_name.value,
        "k": result.k,
        "pair": result.pair.value,
        "gamma_t_star": result.gamma_t_star,
        "lower": result.lower,
        "upper": result.upper,
        "width": result.width,
        "tolerance": result.tolerance,
    }


def esd_to_text(result: EsdResult, digits: int = 12) -> str:
    lines = [
        f"state={result.state_name.value} k={result.k:g} pair={result.pair.value}",
        f"gamma_t_star={result.gamma_t_star:.{digits}g}",
        f"bracket=[{result.lower:.{digits}g}, {result.upper:.{digits}g}]",
        f"width={result.width:.3e} (tolerance {result.tolerance:g})",
    ]
    return "\n".join(lines) + "\n"


def esd_to_json(result: EsdResult) -> str:
    return json.dumps(dict(esd_payload(result)), indent=2) + "\n"


def write_text(text: str, path: Optional[Path] = None) -> None:
    """Write to `path`, or to stdout when no path is given"""
    if path is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")


__all__ = [
    "records_to_frame",
    "frame_to_csv",
    "frame_to_json",
    "record_to_json",
    "esd_payload",
    "esd_to_text",
    "esd_to_json",
    "write_text",
]

"""Link-margin planning: flag surveyed locations that need another AP.

A location is flagged when its worst observed RSSI sits less than the
margin threshold (default 10 dB) above the receiver sensitivity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

from .survey import Survey


@dataclass(frozen=True)
class PlanEntry:
    """Planning verdict for one surveyed location.

    On a per-location failure, error is set and the numeric fields are None.
    """

    location_id: str
    worst_rssi_dbm: float | None
    margin_db: float | None
    needs_new_ap: bool | None
    error: str | None = None


@dataclass(frozen=True)
class PlanReport:
    """Per-location planning entries plus the rule parameters used."""

    entries: list[PlanEntry]
    sensitivity_dbm: float
    margin_threshold_db: float


def link_margin_db(rssi_dbm: float, sensitivity_dbm: float) -> float:
    """Margin of the received signal above receiver sensitivity, in dB."""
    if not math.isfinite(rssi_dbm):
        raise ValueError(f"rssi_dbm must be finite, got {rssi_dbm!r}")
    if not math.isfinite(sensitivity_dbm):
        raise ValueError(f"sensitivity_dbm must be finite, got {sensitivity_dbm!r}")
    return rssi_dbm - sensitivity_dbm


def needs_new_ap(
    rssi_dbm: float, sensitivity_dbm: float, margin_threshold_db: float = 10.0
) -> bool:
    """True when the margin above sensitivity is strictly below the threshold.

    A location at exactly the threshold margin is not flagged.
    """
    if not (math.isfinite(margin_threshold_db) and margin_threshold_db >= 0):
        raise ValueError(f"margin_threshold_db must be >= 0, got {margin_threshold_db!r}")
    return link_margin_db(rssi_dbm, sensitivity_dbm) < margin_threshold_db


def plan_surveys(
    surveys: Iterable[Survey], sensitivity_dbm: float, margin_threshold_db: float = 10.0
) -> PlanReport:
    """Apply the margin rule to the worst (minimum) sample of each survey."""
    surveys = list(surveys)
    if not surveys:
        raise ValueError("no surveys")
    if not math.isfinite(sensitivity_dbm):
        raise ValueError(f"sensitivity_dbm must be finite, got {sensitivity_dbm!r}")
    if not (math.isfinite(margin_threshold_db) and margin_threshold_db >= 0):
        raise ValueError(f"margin_threshold_db must be >= 0, got {margin_threshold_db!r}")

    entries = []
    for survey in surveys:
        if not survey.samples:
            entries.append(
                PlanEntry(survey.location_id, None, None, None, error="survey has no samples")
            )
            continue
        worst = min(s.rssi_dbm for s in survey.samples)
        margin = link_margin_db(worst, sensitivity_dbm)
        entries.append(
            PlanEntry(survey.location_id, worst, margin, margin < margin_threshold_db)
        )
    return PlanReport(
        entries=entries,
        sensitivity_dbm=sensitivity_dbm,
        margin_threshold_db=margin_threshold_db,
    )

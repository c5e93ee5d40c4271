"""Least-squares estimation of a log-distance model from survey data.

Measured path loss (tx power minus sample RSSI) is regressed on
log10(d/d0): the slope divided by 10 is the path loss exponent, the
intercept is the loss at the reference distance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .propagation import LogDistanceModel
from .survey import Survey
from .units import path_loss_db


@dataclass
class FitResult:
    """Outcome of one ordinary least squares path-loss fit.

    residuals are measured minus predicted path loss, in sample order;
    sigma_db on the model is the residual standard error with N-2 degrees
    of freedom (0 for the exact two-point fit).
    """

    model: LogDistanceModel
    r_squared: float
    num_samples: int
    residuals: list[float]


@dataclass
class LocationFit:
    """Per-location fit outcome; exactly one of result / error is set."""

    location_id: str
    result: FitResult | None = None
    error: str | None = None

    @property
    def ok(self) -> bool:
        return self.error is None


def fit_log_distance(survey: Survey, d0_m: float = 1.0) -> FitResult:
    """Fit a log-distance model to one survey by ordinary least squares.

    Requires at least two samples with at least two distinct distances.
    Duplicate distances (repeated readings at one point) are fine; only an
    all-identical abscissa leaves the slope undefined.
    """
    if not (math.isfinite(d0_m) and d0_m > 0):
        raise ValueError(f"d0_m must be positive, got {d0_m!r}")
    samples = survey.samples
    if len(samples) < 2:
        raise ValueError(f"insufficient data: need at least 2 samples, got {len(samples)}")
    distances = np.array([s.distance_m for s in samples], dtype=float)
    if np.any(distances <= 0) or not np.all(np.isfinite(distances)):
        raise ValueError("all sample distances must be positive and finite")
    if np.unique(distances).size < 2:
        raise ValueError("degenerate abscissa: all sample distances are identical")

    x = np.log10(distances / d0_m)
    y = np.array(
        [path_loss_db(survey.ap.tx_power_dbm, s.rssi_dbm) for s in samples], dtype=float
    )
    slope, intercept = np.polyfit(x, y, 1)
    residuals = y - (intercept + slope * x)

    n_samples = len(samples)
    ss_res = float(np.sum(residuals**2))
    ss_tot = float(np.sum((y - y.mean()) ** 2))
    sigma_db = math.sqrt(ss_res / (n_samples - 2)) if n_samples > 2 else 0.0
    if ss_tot == 0.0:
        r_squared = 1.0
    else:
        r_squared = min(1.0, max(0.0, 1.0 - ss_res / ss_tot))

    model = LogDistanceModel(
        pl_d0_db=float(intercept), d0_m=d0_m, n=float(slope) / 10.0, sigma_db=sigma_db
    )
    return FitResult(
        model=model,
        r_squared=r_squared,
        num_samples=n_samples,
        residuals=[float(r) for r in residuals],
    )


def fit_many(surveys: Iterable[Survey], d0_m: float = 1.0) -> list[LocationFit]:
    """Fit every survey, collecting per-location failures instead of raising."""
    surveys = list(surveys)
    if not surveys:
        raise ValueError("no surveys")
    results = []
    for survey in surveys:
        try:
            results.append(LocationFit(survey.location_id, result=fit_log_distance(survey, d0_m)))
        except ValueError as exc:
            results.append(LocationFit(survey.location_id, error=str(exc)))
    return results

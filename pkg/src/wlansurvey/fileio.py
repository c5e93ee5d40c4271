"""File formats: survey CSV, model JSON, heatmap grid CSV.

Survey files are plain CSV with optional '#' comment lines, the header
``location_id,distance,unit,rssi_dbm`` and one measurement per row; the
unit column is ``m`` or ``ft`` and feet are converted to meters at
ingestion. Model files are flat JSON documents. Values are written with
shortest round-trip float formatting, so read(write(x)) is lossless.
"""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import IO, Iterable

from .coverage import HeatmapGrid
from .fit import FitResult
from .propagation import LogDistanceModel
from .survey import ApConfig, Sample, Survey
from .units import feet_to_meters

SURVEY_FIELDS = ("location_id", "distance", "unit", "rssi_dbm")
SURVEY_HEADER = ",".join(SURVEY_FIELDS)
HEATMAP_HEADER = "x_m,y_m,rssi_dbm,region"


def _parse_float(text: str, what: str, line_num: int) -> float:
    try:
        value = float(text)
    except ValueError:
        raise ValueError(f"line {line_num}: {what} is not a number: {text!r}") from None
    if not math.isfinite(value):
        raise ValueError(f"line {line_num}: {what} must be finite, got {text!r}")
    return value


def parse_survey(source: str | Path | IO[str], ap: ApConfig) -> list[Survey]:
    """Parse a survey CSV into surveys grouped by location.

    The format carries measurements only, so the AP configuration is
    supplied by the caller and attached to every survey. Groups keep the
    first-appearance order of location ids; rows keep file order within a
    group. Errors name the offending line.
    """
    if isinstance(source, (str, Path)):
        with open(source, "r", encoding="utf-8") as fh:
            return parse_survey(fh, ap)

    groups: dict[str, list[Sample]] = {}
    header_seen = False
    for line_num, raw in enumerate(source, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if not header_seen:
            if line != SURVEY_HEADER:
                raise ValueError(
                    f"line {line_num}: expected header {SURVEY_HEADER!r}, got {line!r}"
                )
            header_seen = True
            continue
        fields = [f.strip() for f in line.split(",")]
        if len(fields) != len(SURVEY_FIELDS):
            raise ValueError(
                f"line {line_num}: expected {len(SURVEY_FIELDS)} fields, got {len(fields)}"
            )
        location_id, distance_text, unit, rssi_text = fields
        if not location_id:
            raise ValueError(f"line {line_num}: location_id must be non-empty")
        distance = _parse_float(distance_text, "distance", line_num)
        if unit == "m":
            distance_m = distance
        elif unit == "ft":
            distance_m = feet_to_meters(distance)
        else:
            raise ValueError(f"line {line_num}: unknown unit {unit!r} (expected m or ft)")
        if distance_m <= 0:
            raise ValueError(f"line {line_num}: distance must be positive, got {distance_text!r}")
        rssi_dbm = _parse_float(rssi_text, "rssi_dbm", line_num)
        groups.setdefault(location_id, []).append(Sample(distance_m, rssi_dbm))

    if not header_seen:
        raise ValueError("survey file has no header line")
    if not groups:
        raise ValueError("survey file has no data rows")
    return [Survey(location_id, samples, ap) for location_id, samples in groups.items()]


def write_survey(dest: str | Path | IO[str], surveys: Iterable[Survey]) -> None:
    """Write surveys to the survey CSV format (meters, full float precision)."""
    if isinstance(dest, (str, Path)):
        with open(dest, "w", encoding="utf-8", newline="") as fh:
            write_survey(fh, surveys)
        return
    dest.write(SURVEY_HEADER + "\n")
    for survey in surveys:
        if "," in survey.location_id:
            raise ValueError(f"location_id must not contain commas: {survey.location_id!r}")
        for sample in survey.samples:
            dest.write(f"{survey.location_id},{sample.distance_m!r},m,{sample.rssi_dbm!r}\n")


@dataclass(frozen=True)
class ModelFile:
    """On-disk record of one fitted model plus its fit provenance."""

    name: str
    pl_d0_db: float
    d0_m: float
    n: float
    sigma_db: float
    tx_power_dbm: float
    frequency_mhz: float
    num_samples: int
    r_squared: float

    def to_model(self) -> LogDistanceModel:
        return LogDistanceModel(
            pl_d0_db=self.pl_d0_db, d0_m=self.d0_m, n=self.n, sigma_db=self.sigma_db
        )

    @classmethod
    def from_fit(
        cls, name: str, fit: FitResult, tx_power_dbm: float, frequency_mhz: float
    ) -> "ModelFile":
        return cls(
            name=name,
            pl_d0_db=fit.model.pl_d0_db,
            d0_m=fit.model.d0_m,
            n=fit.model.n,
            sigma_db=fit.model.sigma_db,
            tx_power_dbm=tx_power_dbm,
            frequency_mhz=frequency_mhz,
            num_samples=fit.num_samples,
            r_squared=fit.r_squared,
        )


def write_model(path: str | Path, record: ModelFile) -> None:
    """Write one model record as a flat JSON document."""
    with open(path, "w", encoding="utf-8", newline="") as fh:
        json.dump(asdict(record), fh, indent=2)
        fh.write("\n")


def read_model(path: str | Path) -> ModelFile:
    """Read a model record written by write_model."""
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, dict):
        raise ValueError(f"{path}: model file must hold a JSON object")
    expected = set(ModelFile.__dataclass_fields__)
    missing = expected - data.keys()
    if missing:
        raise ValueError(f"{path}: model file is missing fields: {sorted(missing)}")
    extra = data.keys() - expected
    if extra:
        raise ValueError(f"{path}: model file has unknown fields: {sorted(extra)}")
    return ModelFile(**data)


def write_heatmap_csv(dest: str | Path | IO[str], grid: HeatmapGrid) -> None:
    """Write a heatmap grid as CSV: one row per cell center, row-major."""
    if isinstance(dest, (str, Path)):
        with open(dest, "w", encoding="utf-8", newline="") as fh:
            write_heatmap_csv(fh, grid)
        return
    dest.write(HEATMAP_HEADER + "\n")
    for x, y, rssi, region in grid.iter_cells():
        dest.write(f"{x:.3f},{y:.3f},{rssi:.2f},{region.value}\n")

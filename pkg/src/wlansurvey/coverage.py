"""Signal-quality regions and rasterized coverage maps around one AP."""

from __future__ import annotations

import enum
import functools
import math
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .propagation import LogDistanceModel, predict_rssi


@functools.total_ordering
class Region(enum.Enum):
    """Coverage quality band, A (strongest) through D plus out-of-coverage.

    Comparison follows signal quality: A > B > C > D > OUT_OF_COVERAGE.
    The value is the serialized token used in report and grid files.
    """

    A = "A"
    B = "B"
    C = "C"
    D = "D"
    OUT_OF_COVERAGE = "OUT"

    @property
    def rank(self) -> int:
        """Signal-quality order, higher is stronger (A=4 ... OUT=0)."""
        return _REGION_RANK[self]

    def __lt__(self, other):
        if not isinstance(other, Region):
            return NotImplemented
        return self.rank < other.rank


_REGION_RANK = {
    Region.OUT_OF_COVERAGE: 0,
    Region.D: 1,
    Region.C: 2,
    Region.B: 3,
    Region.A: 4,
}


@dataclass(frozen=True)
class RegionTable:
    """RSSI floors (dBm) and distance edges (m) delimiting regions A..D.

    rssi_floors are the weakest RSSI still inside A, B, C, D in that order;
    each band owns its floor, anything stronger than the A band is clamped
    into A, and anything below the D floor is out of coverage. range_edges
    are the outer distance edges of A, B and C; beyond the last edge is D
    with no outer limit.
    """

    rssi_floors: tuple[float, float, float, float] = (-56.0, -64.0, -72.0, -80.0)
    range_edges: tuple[float, float, float] = (4.0, 10.0, 25.0)

    def __post_init__(self):
        object.__setattr__(self, "rssi_floors", tuple(float(v) for v in self.rssi_floors))
        object.__setattr__(self, "range_edges", tuple(float(v) for v in self.range_edges))
        if len(self.rssi_floors) != 4 or not all(map(math.isfinite, self.rssi_floors)):
            raise ValueError(f"rssi_floors must be 4 finite values, got {self.rssi_floors!r}")
        if any(a <= b for a, b in zip(self.rssi_floors, self.rssi_floors[1:])):
            raise ValueError(f"rssi_floors must be strictly descending, got {self.rssi_floors!r}")
        if len(self.range_edges) != 3 or not all(map(math.isfinite, self.range_edges)):
            raise ValueError(f"range_edges must be 3 finite values, got {self.range_edges!r}")
        if self.range_edges[0] <= 0 or any(
            a >= b for a, b in zip(self.range_edges, self.range_edges[1:])
        ):
            raise ValueError(
                f"range_edges must be positive and strictly ascending, got {self.range_edges!r}"
            )


DEFAULT_REGION_TABLE = RegionTable()


def classify_rssi(rssi_dbm: float, table: RegionTable = DEFAULT_REGION_TABLE) -> Region:
    """Classify an RSSI value into its coverage region."""
    if not math.isfinite(rssi_dbm):
        raise ValueError(f"rssi_dbm must be finite, got {rssi_dbm!r}")
    a, b, c, d = table.rssi_floors
    if rssi_dbm >= a:
        return Region.A
    if rssi_dbm >= b:
        return Region.B
    if rssi_dbm >= c:
        return Region.C
    if rssi_dbm >= d:
        return Region.D
    return Region.OUT_OF_COVERAGE


def classify_distance(distance_m: float, table: RegionTable = DEFAULT_REGION_TABLE) -> Region:
    """Classify a distance from the AP into the region whose ring contains it.

    Distances inside the innermost ring count as A; beyond the last edge
    everything is D (the weakest ring has no outer limit).
    """
    if not (math.isfinite(distance_m) and distance_m >= 0):
        raise ValueError(f"distance_m must be >= 0 and finite, got {distance_m!r}")
    a, b, c = table.range_edges
    if distance_m < a:
        return Region.A
    if distance_m < b:
        return Region.B
    if distance_m < c:
        return Region.C
    return Region.D


@dataclass
class HeatmapGrid:
    """Raster of predicted RSSI and region around one AP.

    rssi_dbm and regions are (n_y, n_x) arrays sampled at cell centers;
    row j spans y_min_m + j*resolution_m upward, column i likewise in x.
    """

    ap_x_m: float
    ap_y_m: float
    x_min_m: float
    x_max_m: float
    y_min_m: float
    y_max_m: float
    resolution_m: float
    rssi_dbm: np.ndarray
    regions: np.ndarray

    def __post_init__(self):
        if self.rssi_dbm.shape != self.regions.shape or self.rssi_dbm.ndim != 2:
            raise ValueError(
                f"rssi/region rasters must share a 2-D shape, got "
                f"{self.rssi_dbm.shape} and {self.regions.shape}"
            )

    @property
    def n_x(self) -> int:
        return self.rssi_dbm.shape[1]

    @property
    def n_y(self) -> int:
        return self.rssi_dbm.shape[0]

    def x_center(self, i: int) -> float:
        return self.x_min_m + (i + 0.5) * self.resolution_m

    def y_center(self, j: int) -> float:
        return self.y_min_m + (j + 0.5) * self.resolution_m

    def iter_cells(self) -> Iterator[tuple[float, float, float, Region]]:
        """Yield (x, y, rssi_dbm, region) per cell, row-major (y outer, x inner)."""
        for j in range(self.n_y):
            cy = self.y_center(j)
            for i in range(self.n_x):
                yield self.x_center(i), cy, float(self.rssi_dbm[j, i]), self.regions[j, i]


def _cell_count(span: float, resolution_m: float) -> int:
    # epsilon guard: an extent that is an exact multiple of the resolution
    # must not gain a spurious row/column from fp division noise
    return max(1, math.ceil(span / resolution_m * (1.0 - 1e-12)))


def generate_heatmap(
    model: LogDistanceModel,
    tx_power_dbm: float,
    ap_x_m: float,
    ap_y_m: float,
    extent: tuple[float, float, float, float],
    resolution_m: float,
    table: RegionTable = DEFAULT_REGION_TABLE,
) -> HeatmapGrid:
    """Predict RSSI and region on a rectangular raster of cell centers.

    Cell distance to the AP is clamped to the model reference distance so
    the log term never diverges inside d0.
    """
    x_min, x_max, y_min, y_max = (float(v) for v in extent)
    for name, value in (("ap_x_m", ap_x_m), ("ap_y_m", ap_y_m)):
        if not math.isfinite(value):
            raise ValueError(f"{name} must be finite, got {value!r}")
    if not all(map(math.isfinite, (x_min, x_max, y_min, y_max))):
        raise ValueError(f"extent must be finite, got {extent!r}")
    if x_min >= x_max or y_min >= y_max:
        raise ValueError(f"extent must satisfy x_min < x_max and y_min < y_max, got {extent!r}")
    if not (math.isfinite(resolution_m) and resolution_m > 0):
        raise ValueError(f"resolution_m must be positive, got {resolution_m!r}")

    n_x = _cell_count(x_max - x_min, resolution_m)
    n_y = _cell_count(y_max - y_min, resolution_m)
    rssi = np.empty((n_y, n_x), dtype=float)
    regions = np.empty((n_y, n_x), dtype=object)
    for j in range(n_y):
        cy = y_min + (j + 0.5) * resolution_m
        for i in range(n_x):
            cx = x_min + (i + 0.5) * resolution_m
            d = max(math.hypot(cx - ap_x_m, cy - ap_y_m), model.d0_m)
            value = predict_rssi(model, tx_power_dbm, d)
            rssi[j, i] = value
            regions[j, i] = classify_rssi(value, table)
    return HeatmapGrid(
        ap_x_m=ap_x_m,
        ap_y_m=ap_y_m,
        x_min_m=x_min,
        x_max_m=x_max,
        y_min_m=y_min,
        y_max_m=y_max,
        resolution_m=resolution_m,
        rssi_dbm=rssi,
        regions=regions,
    )

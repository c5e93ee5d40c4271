"""Domain types for one field-survey campaign: samples, AP config, surveys."""

from __future__ import annotations

import math
from dataclasses import dataclass, field


@dataclass(frozen=True)
class Sample:
    """One field measurement: distance from the reference point and the RSSI read there."""

    distance_m: float
    rssi_dbm: float

    def __post_init__(self):
        if not (math.isfinite(self.distance_m) and self.distance_m > 0):
            raise ValueError(f"sample distance must be positive, got {self.distance_m!r}")
        if not math.isfinite(self.rssi_dbm):
            raise ValueError(f"sample rssi must be finite, got {self.rssi_dbm!r}")


@dataclass(frozen=True)
class ApConfig:
    """Access point parameters active while a survey was taken.

    Antenna gains and the system loss factor are dimensionless linear
    quantities (gain 1.0 == 0 dBi, loss 1.0 == lossless); sensitivity_dbm
    is the receiver sensitivity used for planning, None when unknown.
    """

    name: str
    tx_power_dbm: float
    frequency_mhz: float
    sensitivity_dbm: float | None = None
    antenna_gain_tx: float = 1.0
    antenna_gain_rx: float = 1.0
    system_loss: float = 1.0

    def __post_init__(self):
        if not math.isfinite(self.tx_power_dbm):
            raise ValueError(f"tx_power_dbm must be finite, got {self.tx_power_dbm!r}")
        if not (math.isfinite(self.frequency_mhz) and self.frequency_mhz > 0):
            raise ValueError(f"frequency_mhz must be positive, got {self.frequency_mhz!r}")
        if self.sensitivity_dbm is not None and not math.isfinite(self.sensitivity_dbm):
            raise ValueError(f"sensitivity_dbm must be finite, got {self.sensitivity_dbm!r}")
        for gain_name in ("antenna_gain_tx", "antenna_gain_rx"):
            gain = getattr(self, gain_name)
            if not (math.isfinite(gain) and gain > 0):
                raise ValueError(f"{gain_name} must be a positive linear gain, got {gain!r}")
        if not (math.isfinite(self.system_loss) and self.system_loss >= 1.0):
            raise ValueError(f"system_loss must be a linear factor >= 1, got {self.system_loss!r}")


@dataclass(frozen=True)
class Survey:
    """A named collection of samples taken around one AP at one location."""

    location_id: str
    samples: list[Sample] = field(repr=False)
    ap: ApConfig

    def __post_init__(self):
        if not self.location_id:
            raise ValueError("location_id must be non-empty")
        if not self.samples:
            raise ValueError(f"survey {self.location_id!r} has no samples")

"""dB/dBm arithmetic and unit conversions shared by every other module."""

from __future__ import annotations

import math

METERS_PER_FOOT = 0.3048


def _require_finite(name: str, value: float) -> None:
    if not math.isfinite(value):
        raise ValueError(f"{name} must be finite, got {value!r}")


def mw_to_dbm(power_mw: float) -> float:
    """Convert a power in milliwatts (> 0) to dBm."""
    _require_finite("power_mw", power_mw)
    if power_mw <= 0:
        raise ValueError(f"power_mw must be positive, got {power_mw!r}")
    return 10.0 * math.log10(power_mw)


def dbm_to_mw(power_dbm: float) -> float:
    """Convert a power in dBm to milliwatts."""
    _require_finite("power_dbm", power_dbm)
    return 10.0 ** (power_dbm / 10.0)


def path_loss_db(tx_power_dbm: float, rx_power_dbm: float) -> float:
    """Path loss in dB between a transmit and a receive power in dBm."""
    _require_finite("tx_power_dbm", tx_power_dbm)
    _require_finite("rx_power_dbm", rx_power_dbm)
    return tx_power_dbm - rx_power_dbm


def feet_to_meters(distance_ft: float) -> float:
    """Convert a distance in feet (>= 0) to meters."""
    _require_finite("distance_ft", distance_ft)
    if distance_ft < 0:
        raise ValueError(f"distance_ft must be >= 0, got {distance_ft!r}")
    return distance_ft * METERS_PER_FOOT

"""Closed-form propagation models and their inversion to a coverage radius.

Free space follows the Friis equation Pr = Pt*Gt*Gr*W^2 / ((4*pi)^2 * d^2 * L)
with W the wavelength and L a dimensionless system loss factor. The practical
model is the log-distance form PL(d) = PL(d0) + 10*n*log10(d/d0); the random
shadowing term around that mean lives in the synth module.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .survey import ApConfig
from .units import dbm_to_mw, mw_to_dbm

SPEED_OF_LIGHT_M_S = 299_792_458.0


@dataclass(frozen=True)
class LogDistanceModel:
    """Log-distance path loss model.

    pl_d0_db is the loss at the reference distance d0_m, n the path loss
    exponent (2 in free space; noisy fits may go negative) and sigma_db the
    standard deviation of the shadowing around the mean loss.
    """

    pl_d0_db: float
    d0_m: float
    n: float
    sigma_db: float = 0.0

    def __post_init__(self):
        for name in ("pl_d0_db", "d0_m", "n", "sigma_db"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite, got {getattr(self, name)!r}")
        if self.d0_m <= 0:
            raise ValueError(f"d0_m must be positive, got {self.d0_m!r}")
        if self.sigma_db < 0:
            raise ValueError(f"sigma_db must be >= 0, got {self.sigma_db!r}")


def _require_positive_distance(distance_m: float) -> None:
    if not (math.isfinite(distance_m) and distance_m > 0):
        raise ValueError(f"distance_m must be positive, got {distance_m!r}")


def wavelength_m(frequency_mhz: float) -> float:
    """Wavelength in meters of a carrier at frequency_mhz."""
    if not (math.isfinite(frequency_mhz) and frequency_mhz > 0):
        raise ValueError(f"frequency_mhz must be positive, got {frequency_mhz!r}")
    return SPEED_OF_LIGHT_M_S / (frequency_mhz * 1e6)


def friis_received_power(ap: ApConfig, distance_m: float) -> float:
    """Free-space received power in dBm at distance_m from the AP.

    Evaluated in milliwatts via the Friis equation, then converted back
    to dBm.
    """
    _require_positive_distance(distance_m)
    w = wavelength_m(ap.frequency_mhz)
    pt_mw = dbm_to_mw(ap.tx_power_dbm)
    # gains grouped first so swapping Gt and Gr gives a bit-identical result
    pr_mw = (
        pt_mw * (ap.antenna_gain_tx * ap.antenna_gain_rx) * w**2
        / ((4.0 * math.pi) ** 2 * distance_m**2 * ap.system_loss)
    )
    return mw_to_dbm(pr_mw)


def free_space_path_loss_db(ap: ApConfig, distance_m: float) -> float:
    """Free-space path loss 10*log10(Pt/Pr) in dB, gains and system loss included."""
    _require_positive_distance(distance_m)
    w = wavelength_m(ap.frequency_mhz)
    ratio = (
        (ap.antenna_gain_tx * ap.antenna_gain_rx) * w**2
        / ((4.0 * math.pi) ** 2 * distance_m**2 * ap.system_loss)
    )
    return -10.0 * math.log10(ratio)


def log_distance_path_loss_db(model: LogDistanceModel, distance_m: float) -> float:
    """Mean path loss of the model at distance_m (shadowing term omitted)."""
    _require_positive_distance(distance_m)
    return model.pl_d0_db + 10.0 * model.n * math.log10(distance_m / model.d0_m)


def predict_rssi(model: LogDistanceModel, tx_power_dbm: float, distance_m: float) -> float:
    """Predicted RSSI in dBm at distance_m for a transmitter at tx_power_dbm."""
    if not math.isfinite(tx_power_dbm):
        raise ValueError(f"tx_power_dbm must be finite, got {tx_power_dbm!r}")
    return tx_power_dbm - log_distance_path_loss_db(model, distance_m)


def coverage_radius(model: LogDistanceModel, tx_power_dbm: float, threshold_dbm: float) -> float:
    """Distance at which the predicted RSSI has decayed to threshold_dbm.

    Algebraic inversion of the log-distance model; requires n > 0 (with a
    non-positive exponent the signal never decays to the threshold) and a
    threshold strictly below the transmit power.
    """
    if not math.isfinite(tx_power_dbm):
        raise ValueError(f"tx_power_dbm must be finite, got {tx_power_dbm!r}")
    if not math.isfinite(threshold_dbm):
        raise ValueError(f"threshold_dbm must be finite, got {threshold_dbm!r}")
    if model.n <= 0:
        raise ValueError(f"model not invertible: path loss exponent must be positive, got {model.n!r}")
    if threshold_dbm >= tx_power_dbm:
        raise ValueError(
            f"threshold ({threshold_dbm!r} dBm) must be below tx power ({tx_power_dbm!r} dBm)"
        )
    exponent = (tx_power_dbm - threshold_dbm - model.pl_d0_db) / (10.0 * model.n)
    return model.d0_m * 10.0**exponent

"""Deterministic synthetic surveys from a log-distance model with shadowing.

The random stream is frozen and self-contained: a splitmix64 integer
generator feeding a Box-Muller transform. Identical specs therefore
reproduce identical surveys on any platform, independent of interpreter
or library RNG defaults. Distances are drawn uniformly in log10 space,
which keeps the fit abscissa well conditioned and matches how survey
readings spread over a log-scale distance axis.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .propagation import LogDistanceModel, log_distance_path_loss_db
from .survey import ApConfig, Sample, Survey

_MASK64 = (1 << 64) - 1
_GOLDEN_GAMMA = 0x9E3779B97F4A7C15
_U53 = 2.0**-53

DEFAULT_SYNTH_FREQUENCY_MHZ = 2432.0


def _splitmix64(state: int) -> tuple[int, int]:
    """One splitmix64 step; returns (next_state, output word)."""
    state = (state + _GOLDEN_GAMMA) & _MASK64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return state, z ^ (z >> 31)


def uniform_stream(seed: int, count: int) -> list[float]:
    """First `count` uniforms in [0, 1) of the stream keyed by seed."""
    if count < 0:
        raise ValueError(f"count must be >= 0, got {count!r}")
    state = seed & _MASK64
    values = []
    for _ in range(count):
        state, word = _splitmix64(state)
        values.append((word >> 11) * _U53)
    return values


def gaussian_stream(seed: int, count: int) -> list[float]:
    """First `count` standard normal deviates of the stream keyed by seed.

    Box-Muller on consecutive uniform pairs; the sequence for a shorter
    count is always a prefix of the sequence for a longer one.
    """
    if count < 0:
        raise ValueError(f"count must be >= 0, got {count!r}")
    state = seed & _MASK64
    values: list[float] = []
    while len(values) < count:
        state, a = _splitmix64(state)
        state, b = _splitmix64(state)
        u1 = ((a >> 11) + 1) * _U53  # (0, 1]: keeps log() finite
        u2 = (b >> 11) * _U53
        r = math.sqrt(-2.0 * math.log(u1))
        theta = 2.0 * math.pi * u2
        values.append(r * math.cos(theta))
        values.append(r * math.sin(theta))
    del values[count:]
    return values


@dataclass(frozen=True)
class SynthSpec:
    """Parameters for one synthetic survey."""

    model: LogDistanceModel
    tx_power_dbm: float
    num_samples: int
    d_min_m: float
    d_max_m: float
    seed: int
    location_id: str = "synthetic"
    frequency_mhz: float = DEFAULT_SYNTH_FREQUENCY_MHZ

    def __post_init__(self):
        if not math.isfinite(self.tx_power_dbm):
            raise ValueError(f"tx_power_dbm must be finite, got {self.tx_power_dbm!r}")
        if self.num_samples < 1:
            raise ValueError(f"num_samples must be >= 1, got {self.num_samples!r}")
        if not (math.isfinite(self.d_min_m) and self.d_min_m > 0):
            raise ValueError(f"d_min_m must be positive, got {self.d_min_m!r}")
        if not (math.isfinite(self.d_max_m) and self.d_max_m >= self.d_min_m):
            raise ValueError(
                f"d_max_m must be >= d_min_m, got {self.d_max_m!r} < {self.d_min_m!r}"
            )
        if not 0 <= self.seed <= _MASK64:
            raise ValueError(f"seed must be a 64-bit unsigned integer, got {self.seed!r}")
        if not self.location_id:
            raise ValueError("location_id must be non-empty")


def generate_survey(spec: SynthSpec) -> Survey:
    """Generate one survey: log-uniform distances, shadowed RSSI readings.

    The distance and noise substreams use child seeds derived from
    spec.seed, so the same spec always yields the same samples.
    """
    state = spec.seed & _MASK64
    state, distance_seed = _splitmix64(state)
    state, noise_seed = _splitmix64(state)

    log_lo = math.log10(spec.d_min_m)
    log_hi = math.log10(spec.d_max_m)
    uniforms = uniform_stream(distance_seed, spec.num_samples)
    noise = gaussian_stream(noise_seed, spec.num_samples)

    samples = []
    for u, g in zip(uniforms, noise):
        d = 10.0 ** (log_lo + u * (log_hi - log_lo))
        d = min(max(d, spec.d_min_m), spec.d_max_m)  # fp guard at the bounds
        loss = log_distance_path_loss_db(spec.model, d) + spec.model.sigma_db * g
        samples.append(Sample(distance_m=d, rssi_dbm=spec.tx_power_dbm - loss))

    ap = ApConfig(
        name=f"synth-{spec.location_id}",
        tx_power_dbm=spec.tx_power_dbm,
        frequency_mhz=spec.frequency_mhz,
    )
    return Survey(location_id=spec.location_id, samples=samples, ap=ap)

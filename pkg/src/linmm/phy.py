"""Electrical configuration and the sampled-waveform type shared by all
physical-layer modules.

All quantities are SI base units: volts, hertz, seconds.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Iterator

import numpy as np


class ConfigError(ValueError):
    """Raised for invalid or inconsistent physical-layer configuration."""


@dataclass(frozen=True)
class PhyConfig:
    """Electrical and modulation constants of one bus setup.

    Defaults model a 12 V battery net running 19.2 kbit/s with a 100 kHz,
    1.2 V carrier and a 1.92 MS/s simulation clock (100 samples per bit,
    19.2 samples per carrier cycle).
    """

    v_batt: float = 12.0
    baud: int = 19200
    tx_dominant_level: float = 0.20      # fraction of v_batt driven for a 0
    tx_recessive_level: float = 0.80     # fraction of v_batt driven for a 1
    rx_dominant_max: float = 0.40        # receiver reads 0 below this fraction
    rx_recessive_min: float = 0.60       # receiver reads 1 above this fraction
    f_c: float = 100_000.0               # carrier frequency, Hz
    a_c: float = 1.2                     # carrier amplitude, V
    sample_rate: float = 1_920_000.0
    filter_low: float = 75_000.0
    filter_high: float = 125_000.0
    # 0.5x the steady-state filtered carrier amplitude (1.1995 V measured on
    # the default band-pass at 100 kHz); see demod.calibrate_comparator_threshold.
    comparator_threshold: float = 0.600
    pulse_threshold: int = 3
    slew_tau: float = 0.0                # first-order edge time constant, s; 0 = ideal edges

    def __post_init__(self) -> None:
        self.validate()

    def validate(self) -> None:
        if self.v_batt <= 0 or self.baud <= 0 or self.sample_rate <= 0:
            raise ConfigError("v_batt, baud and sample_rate must be positive")
        if not (self.filter_low < self.f_c < self.filter_high):
            raise ConfigError(
                f"carrier {self.f_c} Hz outside filter band "
                f"[{self.filter_low}, {self.filter_high}] Hz"
            )
        if self.sample_rate < 10 * self.f_c:
            raise ConfigError("sample_rate must be at least 10x the carrier frequency")
        if self.sample_rate < 10 * self.filter_high:
            raise ConfigError("sample_rate must be at least 10x filter_high")
        if self.sample_rate % self.baud != 0:
            raise ConfigError("sample_rate must be an integer multiple of baud")
        if not (0 < self.tx_dominant_level < self.rx_dominant_max
                < self.rx_recessive_min < self.tx_recessive_level < 1):
            raise ConfigError("voltage level fractions must be ordered "
                              "0 < tx_dom < rx_dom_max < rx_rec_min < tx_rec < 1")
        if self.a_c <= 0:
            raise ConfigError("carrier amplitude must be positive")
        # carrier must not push either level across the receiver thresholds
        if self.a_c >= self.v_batt * (self.rx_recessive_min - self.tx_dominant_level):
            raise ConfigError("carrier amplitude too large for receiver thresholds")
        dom_peak = self.tx_dominant_level * self.v_batt + self.a_c
        rec_trough = self.tx_recessive_level * self.v_batt - self.a_c
        if dom_peak >= self.rx_dominant_max * self.v_batt:
            raise ConfigError("dominant level plus carrier crosses rx_dominant_max")
        if rec_trough <= self.rx_recessive_min * self.v_batt:
            raise ConfigError("recessive level minus carrier crosses rx_recessive_min")
        if self.comparator_threshold <= 0:
            raise ConfigError("comparator_threshold must be positive")
        if self.pulse_threshold < 1:
            raise ConfigError("pulse_threshold must be at least 1")
        if self.slew_tau < 0:
            raise ConfigError("slew_tau must be non-negative")

    @property
    def samples_per_bit(self) -> int:
        return int(self.sample_rate) // int(self.baud)

    @property
    def bit_period(self) -> float:
        return 1.0 / self.baud

    @property
    def v_dominant(self) -> float:
        return self.tx_dominant_level * self.v_batt

    @property
    def v_recessive(self) -> float:
        return self.tx_recessive_level * self.v_batt

    def with_overrides(self, **kwargs) -> "PhyConfig":
        return replace(self, **kwargs)


@dataclass(frozen=True)
class Waveform:
    """Uniformly sampled voltage-vs-time signal."""

    sample_rate: float
    t0: float
    samples: np.ndarray

    def __post_init__(self) -> None:
        arr = np.asarray(self.samples, dtype=np.float64)
        object.__setattr__(self, "samples", arr)
        if arr.ndim != 1:
            raise ConfigError("waveform samples must be one-dimensional")
        if arr.size and not np.all(np.isfinite(arr)):
            raise ConfigError("waveform contains non-finite samples")

    def __len__(self) -> int:
        return len(self.samples)

    @property
    def duration(self) -> float:
        return len(self.samples) / self.sample_rate

    def times(self) -> np.ndarray:
        return self.t0 + np.arange(len(self.samples)) / self.sample_rate

    def index_of(self, t: float) -> int:
        """Nearest sample index for an absolute time."""
        return int(round((t - self.t0) * self.sample_rate))

    def slice_samples(self, start: int, stop: int) -> "Waveform":
        start = max(start, 0)
        return Waveform(self.sample_rate, self.t0 + start / self.sample_rate,
                        self.samples[start:stop])

    def aligned_with(self, other: "Waveform") -> bool:
        return (self.sample_rate == other.sample_rate
                and self.t0 == other.t0
                and len(self) == len(other))


def write_waveform_csv(path, wave: Waveform, extra: dict[str, np.ndarray] | None = None) -> None:
    """Write `time_s,voltage_v[,...]` rows with 10 significant digits."""
    cols = {"voltage_v": wave.samples}
    if extra:
        for name, values in extra.items():
            if len(values) != len(wave):
                raise ConfigError(f"extra column {name!r} length mismatch")
            cols[name] = np.asarray(values)
    t = wave.times()
    with open(path, "w", newline="") as fh:
        fh.write("time_s," + ",".join(cols) + "\n")
        for i in range(len(wave)):
            row = [f"{t[i]:.9e}"]
            for values in cols.values():
                v = values[i]
                row.append(str(int(v)) if np.issubdtype(values.dtype, np.integer)
                           else f"{float(v):.9e}")
            fh.write(",".join(row) + "\n")


def read_waveform_csv(path) -> Iterator[tuple[float, float]]:
    """Yield (time_s, voltage_v) pairs from a waveform CSV."""
    with open(path) as fh:
        header = fh.readline()
        if not header.startswith("time_s,voltage_v"):
            raise ConfigError(f"unexpected waveform CSV header: {header!r}")
        for line in fh:
            parts = line.strip().split(",")
            yield float(parts[0]), float(parts[1])

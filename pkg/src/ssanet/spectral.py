"""1-D resampling analysis on a circular domain.

Tools for studying how strided downsampling plus linear-interpolation
upsampling compares against Gaussian smoothing: comb subsampling,
decimation, first-order-hold upsampling, a direct DFT, and an energy
based bandwidth measure. All signals live on a circular domain so the
DFT identities used by the tests hold exactly.

Signals are 1-D float64 arrays, spectra 1-D complex128 arrays whose
bin k represents angular frequency 2*pi*k/N.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass

import numpy as np

from .rng import Xoshiro256StarStar


def as_signal(x) -> np.ndarray:
    """Validate and return a signal: 1-D float64, length >= 2, finite."""
    arr = np.asarray(x, dtype=np.float64)
    if arr.ndim != 1:
        raise ValueError(f"signal must be 1-D, got shape {arr.shape}")
    if arr.shape[0] < 2:
        raise ValueError("signal length must be >= 2")
    if not np.all(np.isfinite(arr)):
        raise ValueError("signal contains non-finite samples")
    return arr


def random_signal(length: int, seed: int, lo: float = -1.0, hi: float = 1.0) -> np.ndarray:
    """Seeded uniform random signal in [lo, hi)."""
    gen = Xoshiro256StarStar(seed)
    return as_signal(gen.uniforms(length, lo, hi))


@dataclass(frozen=True)
class GaussianSpec:
    """Sampled Gaussian kernel parameters: std dev and half-width."""

    sigma: float
    radius: int

    def __post_init__(self):
        if not (self.sigma > 0.0 and math.isfinite(self.sigma)):
            raise ValueError("sigma must be positive and finite")
        if self.radius < math.ceil(3.0 * self.sigma):
            raise ValueError(
                f"radius {self.radius} too small: need >= ceil(3*sigma) = "
                f"{math.ceil(3.0 * self.sigma)}"
            )


def gaussian_kernel(spec: GaussianSpec) -> np.ndarray:
    """Sampled, normalized Gaussian: w[n] ~ exp(-n^2 / (2 sigma^2)).

    Returns the 2*radius+1 weights for offsets -radius..radius; they
    are symmetric and sum to 1.
    """
    n = np.arange(-spec.radius, spec.radius + 1, dtype=np.float64)
    w = np.exp(-(n * n) / (2.0 * spec.sigma * spec.sigma))
    return w / w.sum()


def gaussian_blur(x, spec: GaussianSpec) -> np.ndarray:
    """Circular convolution with the normalized Gaussian kernel."""
    x = as_signal(x)
    k = gaussian_kernel(spec)
    if k.shape[0] > x.shape[0]:
        raise ValueError(
            f"kernel length {k.shape[0]} exceeds signal length {x.shape[0]}"
        )
    out = np.zeros_like(x)
    for m in range(-spec.radius, spec.radius + 1):
        out += k[m + spec.radius] * np.roll(x, m)
    return out


def _check_factor(length: int, factor: int) -> None:
    if factor < 2:
        raise ValueError("factor must be >= 2")
    if length % factor != 0:
        raise ValueError(f"factor {factor} does not divide length {length}")


def comb_subsample(x, factor: int = 2) -> np.ndarray:
    """Zero out samples off the coarse grid; length is unchanged."""
    x = as_signal(x)
    _check_factor(x.shape[0], factor)
    out = np.zeros_like(x)
    out[::factor] = x[::factor]
    return out


def decimate(x, factor: int = 2) -> np.ndarray:
    """Keep every factor-th sample; length shrinks by the factor."""
    x = as_signal(x)
    _check_factor(x.shape[0], factor)
    return x[::factor].copy()


def upsample_linear(x, factor: int = 2) -> np.ndarray:
    """First-order hold doubling: zero insertion then [0.5, 1, 0.5] smoothing.

    Only factor 2 is supported. Even outputs copy the input, odd outputs
    are circular midpoints: out[2i] = x[i], out[2i+1] = (x[i] + x[i+1]) / 2.
    """
    x = as_signal(x)
    if factor != 2:
        raise ValueError("only factor 2 upsampling is supported")
    n = x.shape[0]
    out = np.empty(2 * n, dtype=np.float64)
    out[0::2] = x
    out[1::2] = 0.5 * (x + np.roll(x, -1))
    return out


def ssa_downscale(x) -> np.ndarray:
    """Stride-2 sampling followed by linear upsampling; length is unchanged."""
    x = as_signal(x)
    if x.shape[0] % 2 != 0:
        raise ValueError("signal length must be even")
    return upsample_linear(decimate(x, 2), 2)


def dft(x) -> np.ndarray:
    """Direct O(N^2) DFT: bins[k] = sum_n x[n] exp(-i 2 pi k n / N)."""
    x = as_signal(x)
    n = x.shape[0]
    idx = np.arange(n)
    bins = np.empty(n, dtype=np.complex128)
    for k in range(n):
        bins[k] = np.sum(x * np.exp(-2j * np.pi * k * idx / n))
    return bins


def bin_frequencies(n: int) -> np.ndarray:
    """Angular frequency magnitude per bin: min(2 pi k / N, 2 pi - 2 pi k / N)."""
    k = np.arange(n, dtype=np.float64)
    w = 2.0 * np.pi * k / n
    return np.minimum(w, 2.0 * np.pi - w)


def energy_bandwidth(spectrum, rho: float = 0.95) -> float:
    """Smallest frequency radius containing at least ``rho`` of the energy.

    Energy is |bin|^2; frequencies are folded onto [0, pi].
    """
    s = np.asarray(spectrum, dtype=np.complex128)
    if s.ndim != 1 or s.shape[0] < 2:
        raise ValueError("spectrum must be 1-D with length >= 2")
    if not (0.0 < rho <= 1.0):
        raise ValueError("rho must lie in (0, 1]")
    energy = np.abs(s) ** 2
    total = energy.sum()
    if total <= 0.0:
        raise ValueError("zero-energy spectrum has no bandwidth")
    freqs = bin_frequencies(s.shape[0])
    order = np.argsort(freqs, kind="stable")
    cum = np.cumsum(energy[order])
    sorted_freqs = freqs[order]
    target = rho * total
    for i in range(len(order)):
        if cum[i] >= target:
            return float(sorted_freqs[i])
    return float(sorted_freqs[-1])


@dataclass(frozen=True)
class ApproximationReport:
    """How closely resampling chains track the Gaussian-smoothed signal."""

    dist_ssa_gauss: float
    dist_comb_gauss: float
    bandwidth_in: float
    bandwidth_decimated: float

    def __post_init__(self):
        for name in ("dist_ssa_gauss", "dist_comb_gauss"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v >= 0.0):
                raise ValueError(f"{name} must be finite and nonnegative")
        for name in ("bandwidth_in", "bandwidth_decimated"):
            v = getattr(self, name)
            if not (0.0 <= v <= math.pi + 1e-12):
                raise ValueError(f"{name} must lie in [0, pi]")

    def as_dict(self) -> dict:
        return {
            "dist_ssa_gauss": self.dist_ssa_gauss,
            "dist_comb_gauss": self.dist_comb_gauss,
            "bandwidth_in": self.bandwidth_in,
            "bandwidth_decimated": self.bandwidth_decimated,
        }


def relative_l2(a, b) -> float:
    """||a - b|| / ||b||."""
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    denom = float(np.linalg.norm(b))
    if denom == 0.0:
        raise ValueError("reference signal has zero norm")
    return float(np.linalg.norm(a - b)) / denom


def approximation_report(x, spec: GaussianSpec, rho: float = 0.95) -> ApproximationReport:
    """Compare the downsample/upsample chain and comb subsampling against
    Gaussian smoothing, and measure the bandwidth stretch of decimation."""
    x = as_signal(x)
    if x.shape[0] % 2 != 0 or x.shape[0] < 8:
        raise ValueError("signal length must be even and >= 8")
    blurred = gaussian_blur(x, spec)
    ssa = ssa_downscale(x)
    comb = comb_subsample(x, 2)
    return ApproximationReport(
        dist_ssa_gauss=relative_l2(ssa, blurred),
        dist_comb_gauss=relative_l2(comb, blurred),
        bandwidth_in=energy_bandwidth(dft(x), rho),
        bandwidth_decimated=energy_bandwidth(dft(decimate(x, 2)), rho),
    )


def write_signal_csv(x, path) -> None:
    x = as_signal(x)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["index", "value"])
        for i, v in enumerate(x):
            writer.writerow([i, repr(float(v))])


def read_signal_csv(path) -> np.ndarray:
    with open(path, "r", encoding="utf-8", newline="") as fh:
        rows = list(csv.reader(fh))
    if not rows or rows[0] != ["index", "value"]:
        raise ValueError(f"{path}: expected header 'index,value'")
    return as_signal([float(r[1]) for r in rows[1:]])


def write_spectrum_csv(s, path) -> None:
    s = np.asarray(s, dtype=np.complex128)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["index", "re", "im"])
        for i, v in enumerate(s):
            writer.writerow([i, repr(float(v.real)), repr(float(v.imag))])


def read_spectrum_csv(path) -> np.ndarray:
    with open(path, "r", encoding="utf-8", newline="") as fh:
        rows = list(csv.reader(fh))
    if not rows or rows[0] != ["index", "re", "im"]:
        raise ValueError(f"{path}: expected header 'index,re,im'")
    return np.array([complex(float(r[1]), float(r[2])) for r in rows[1:]],
                    dtype=np.complex128)

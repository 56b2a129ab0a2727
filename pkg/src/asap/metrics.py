"""Verification metrics for the downsampling operators.

aliasing_measure
    Fraction of the output spectrum's energy that cannot be explained as a
    real, per-frequency gain applied to the ideally low-passed input. The
    ideal reference keeps every input frequency below the new Nyquist limit
    (and symmetrizes the Nyquist row/column so it stays real). Real gains
    cover both the hard cut and any zero-phase window, so FLC and ASAP
    score zero up to rounding; anything folded in from above the limit
    shows up as residual.
radial_power_spectrum / spectrum_kl
    Power binned by integer distance from DC, compared as probability
    vectors with the KL divergence (nats).
ringing_overshoot, centroid
    Gibbs overshoot above a known step level and the intensity centroid,
    used to quantify ringing and drift.
"""
from __future__ import annotations

import time
from dataclasses import asdict, dataclass

import numpy as np

from .pooling import PoolConfig, downsample
from .tensor import ShapeError, as_plane

KL_EPS = 1e-12


@dataclass
class MetricsReport:
    image: str
    method: str
    aliasing: float
    spectrum_kl: float
    overshoot: float
    centroid_drift: float
    wall_time: float

    def as_dict(self) -> dict:
        return asdict(self)


def _signed_index(n: int, big: int) -> np.ndarray:
    """Positions in a length-``big`` unshifted axis of the ``n`` lowest frequencies.

    Ordered as an unshifted length-``n`` axis: 0, 1, ..., then the negative
    frequencies, with ``-n//2`` (the new Nyquist) at index ``n//2`` for even n.
    """
    k = np.arange(n)
    k = np.where(k < (n + 1) // 2, k, k - n)
    return k % big


def ideal_lowpass_spectrum(x, steps: int) -> np.ndarray:
    """Unshifted spectrum at ``1/2**steps`` resolution of the ideal real low-pass of ``x``.

    Scaled by ``4**-steps`` so a constant keeps its value after the inverse
    transform at the small size.
    """
    x = as_plane(x)
    _, H, W = x.shape
    h, w = H >> steps, W >> steps
    if h << steps != H or w << steps != W:
        raise ShapeError(f"{H}x{W} is not divisible by 2**{steps}")
    X = np.fft.fft2(x)
    Xc = X[:, _signed_index(h, H)][:, :, _signed_index(w, W)]
    mirror = Xc[:, -np.arange(h) % h][:, :, -np.arange(w) % w]
    return 0.5 * (Xc + mirror.conj()) / 4.0**steps


def aliasing_fraction(Y: np.ndarray, Y_ideal: np.ndarray) -> float:
    """Residual energy fraction of ``Y`` after the best real per-bin gain on ``Y_ideal``.

    Both arguments are 2D unshifted spectra of one channel.
    """
    total = float(np.sum(np.abs(Y) ** 2))
    if total == 0.0:
        return 0.0
    den = np.abs(Y_ideal) ** 2
    tol = (1e-12 * np.sqrt(den.max())) ** 2 if den.size else 0.0
    safe = den > tol
    gain = np.zeros(den.shape)
    gain[safe] = np.real(Y[safe] * np.conj(Y_ideal[safe])) / den[safe]
    residual = float(np.sum(np.abs(Y - gain * Y_ideal) ** 2))
    return min(1.0, max(0.0, residual / total))


def aliasing_measure(x, y, steps: int) -> float:
    """Misfolded-energy fraction of ``y`` as a ``2**steps`` reduction of ``x``.

    Averaged over channels; lies in [0, 1].
    """
    x = as_plane(x, name="x")
    y = as_plane(y, name="y")
    C, H, W = x.shape
    if y.shape != (C, H >> steps, W >> steps):
        raise ShapeError(f"shape mismatch: {y.shape} is not {x.shape} reduced {steps} times")
    Y = np.fft.fft2(y)
    Y_ideal = ideal_lowpass_spectrum(x, steps)
    return float(np.mean([aliasing_fraction(Y[c], Y_ideal[c]) for c in range(C)]))


def _radius_map(H: int, W: int) -> np.ndarray:
    i, j = np.indices((H, W))
    return np.rint(np.hypot(i - H // 2, j - W // 2)).astype(int)


def radial_power_spectrum(x, nbins: int | None = None, max_radius: int | None = None) -> np.ndarray:
    """Band sums of ``|X|**2`` (channels added) binned by distance from DC.

    Integer radii ``0 .. max_radius`` are spread evenly over ``nbins`` bands;
    coefficients farther out than ``max_radius`` are dropped. With the
    defaults (``nbins = min(H, W)//2`` and the largest radius on the grid)
    nothing is dropped and the bands sum to the total power.
    """
    x = as_plane(x)
    _, H, W = x.shape
    nbins = max(2, min(H, W) // 2) if nbins is None else int(nbins)
    if nbins < 2:
        raise ValueError(f"nbins must be >= 2, got {nbins}")
    power = np.sum(np.abs(np.fft.fftshift(np.fft.fft2(x), axes=(-2, -1))) ** 2, axis=0)
    r = _radius_map(H, W)
    max_radius = int(r.max()) if max_radius is None else int(max_radius)
    keep = r <= max_radius
    band = r[keep] * nbins // (max_radius + 1)
    return np.bincount(band, weights=power[keep], minlength=nbins)


def spectrum_kl(p_ref, q, eps: float = KL_EPS) -> float:
    """KL(p_ref || q) in nats after adding ``eps`` to every band and normalizing."""
    p = np.asarray(p_ref, dtype=np.float64) + eps
    q = np.asarray(q, dtype=np.float64) + eps
    if p.shape != q.shape:
        raise ValueError(f"length mismatch: {p.shape} vs {q.shape}")
    p /= p.sum()
    q /= q.sum()
    return max(0.0, float(np.sum(p * np.log(p / q))))


def band_limited_kl(x, y) -> float:
    """KL between the in-band radial spectrum of ``x`` and that of its reduction ``y``.

    Both are binned one band per integer radius, up to (but excluding) the
    Nyquist radius of ``y``, so the two supports match. Channel average.
    """
    x = as_plane(x, name="x")
    y = as_plane(y, name="y")
    if x.shape[0] != y.shape[0]:
        raise ShapeError(f"channel mismatch: {x.shape} vs {y.shape}")
    nbins = max(2, min(y.shape[1:]) // 2)
    values = []
    for c in range(x.shape[0]):
        p = radial_power_spectrum(x[c], nbins, max_radius=nbins - 1)
        q = radial_power_spectrum(y[c], nbins, max_radius=nbins - 1)
        values.append(spectrum_kl(p, q))
    return float(np.mean(values))


def ringing_overshoot(y, v_lo: float, v_hi: float) -> float:
    """Overshoot above ``v_hi`` as a fraction of the step ``v_hi - v_lo``."""
    if not v_hi > v_lo:
        raise ValueError(f"v_hi must exceed v_lo, got {v_lo}, {v_hi}")
    y = as_plane(y, name="y")
    return max(0.0, (float(y.max()) - v_hi) / (v_hi - v_lo))


def centroid(x) -> tuple[float, float]:
    """Intensity-weighted (row, col) mean position; channels are summed."""
    m = as_plane(x).sum(axis=0)
    mass = m.sum()
    if not mass > 0:
        raise ValueError(f"centroid needs positive mass, got {mass}")
    i, j = np.indices(m.shape)
    return float((i * m).sum() / mass), float((j * m).sum() / mass)


def centroid_drift(x, y, steps: int) -> float:
    """Distance (output pixels) between ``centroid(y)`` and ``centroid(x) / 2**steps``.

    Output pixel ``i`` sits at input position ``i * 2**steps`` for every
    operator here, so an unbiased reduction has zero drift.
    """
    cx = np.asarray(centroid(x)) / 2.0**steps
    cy = np.asarray(centroid(y))
    return float(np.hypot(*(cy - cx)))


def evaluate(x, cfg: PoolConfig, image: str = "") -> MetricsReport:
    """Downsample ``x`` with ``cfg`` and collect every metric for the result."""
    x = as_plane(x)
    t0 = time.perf_counter()
    y = downsample(x, cfg)
    elapsed = time.perf_counter() - t0

    lo, hi = float(x.min()), float(x.max())
    overshoot = ringing_overshoot(y, lo, hi) if hi > lo else 0.0
    try:
        drift = centroid_drift(x, y, cfg.steps)
    except ValueError:
        drift = float("nan")
    return MetricsReport(
        image=image,
        method=cfg.method,
        aliasing=aliasing_measure(x, y, cfg.steps),
        spectrum_kl=band_limited_kl(x, y),
        overshoot=overshoot,
        centroid_drift=drift,
        wall_time=elapsed,
    )

"""2x downsampling operators: max, average, stride, FLC and ASAP.

FLC ("frequency low cut") pooling keeps the central half-size block of the
shifted spectrum, so nothing above the new Nyquist frequency can fold back.
ASAP additionally tapers the retained band with a 2D Hamming window,
which removes the sinc ringing of the hard cut, and runs its transforms
through a shared :class:`FftOrderState`.

The window spans the retained ``H/2 x W/2`` band by default, so its edge
value ``2*alpha - 1`` lands on the cut. ``window="full"`` instead weights
the whole ``H x W`` shifted spectrum before cropping; the cut edge then
sits at ``alpha`` and a good part of the ringing survives.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .spectral import (
    FftOrderState,
    fftshift,
    ifftshift,
    stabilized_forward,
    stabilized_inverse,
)
from .tensor import ComplexSpectrum, ShapeError, as_plane, pointwise_mul
from .window import HAMMING_ALPHA, hamming2d

METHODS = ("max", "avg", "stride", "flc", "asap")
NORMALIZATIONS = ("preserve_mean", "nonorm")
WINDOWS = ("band", "full")


class DimensionError(ShapeError):
    pass


@dataclass
class PoolConfig:
    method: str = "asap"
    normalization: str = "preserve_mean"
    steps: int = 1
    alpha: float = HAMMING_ALPHA
    stabilize: bool = True
    window: str = "band"

    def __post_init__(self):
        if self.method not in METHODS:
            raise ValueError(f"unknown method {self.method!r}; expected one of {METHODS}")
        if self.normalization not in NORMALIZATIONS:
            raise ValueError(f"unknown normalization {self.normalization!r}")
        if self.window not in WINDOWS:
            raise ValueError(f"unknown window extent {self.window!r}")
        if int(self.steps) != self.steps or self.steps < 1:
            raise ValueError(f"steps must be a positive integer, got {self.steps}")

    def new_state(self) -> FftOrderState:
        return FftOrderState(alternate=self.stabilize)


def _even(x) -> np.ndarray:
    x = as_plane(x)
    _, H, W = x.shape
    if H % 2 or W % 2:
        raise DimensionError(f"even dims required, got {H}x{W}")
    return x


def max_pool2(x) -> np.ndarray:
    x = _even(x)
    C, H, W = x.shape
    return x.reshape(C, H // 2, 2, W // 2, 2).max(axis=(2, 4))


def avg_pool2(x) -> np.ndarray:
    x = _even(x)
    C, H, W = x.shape
    return x.reshape(C, H // 2, 2, W // 2, 2).mean(axis=(2, 4))


def stride_pool2(x) -> np.ndarray:
    return np.ascontiguousarray(_even(x)[:, ::2, ::2])


def centre_crop(X: ComplexSpectrum) -> ComplexSpectrum:
    """Keep the central ``H/2 x W/2`` block of a shifted spectrum.

    For H divisible by 4 this is rows ``[H/4, 3H/4)``; in general the block
    starts at ``H/2 - H//4`` so the old DC bin lands on the new centre.
    """
    if not X.shifted:
        raise ValueError("layout violation: crop needs a shifted spectrum")
    _, H, W = X.shape
    r0 = H // 2 - H // 4
    c0 = W // 2 - W // 4
    return ComplexSpectrum(X.data[:, r0:r0 + H // 2, c0:c0 + W // 2], shifted=True)


def _min_size(cfg: PoolConfig) -> tuple[int, int]:
    """(minimum size, required divisor) of each axis for one spectral step."""
    if cfg.method == "asap" and cfg.window == "band":
        return 4, 4  # the band window needs an even crop
    return 4, 2


def _spectral_pool2(x, cfg: PoolConfig, state: FftOrderState | None, windowed: bool):
    x = _even(x)
    _, H, W = x.shape
    lo, div = _min_size(cfg) if windowed else (4, 2)
    if min(H, W) < lo or H % div or W % div:
        raise DimensionError(f"{cfg.method} pooling needs H, W >= {lo} and divisible by {div}, got {H}x{W}")
    state = FftOrderState() if state is None else state

    X = fftshift(stabilized_forward(state, x))
    if windowed and cfg.window == "full":
        X = pointwise_mul(X, hamming2d(H, W, cfg.alpha))
    X = centre_crop(X)
    if windowed and cfg.window == "band":
        X = pointwise_mul(X, hamming2d(H // 2, W // 2, cfg.alpha))
    if cfg.normalization == "preserve_mean":
        X = ComplexSpectrum(X.data * 0.25, shifted=True)
    out = stabilized_inverse(state, ifftshift(X))
    # the unpaired -N/4 row/column makes the result slightly complex;
    # the real part is the Hermitian-symmetric (ideal real) answer
    return np.ascontiguousarray(out.data.real)


def flc_pool2(x, cfg: PoolConfig | None = None, state: FftOrderState | None = None) -> np.ndarray:
    cfg = cfg or PoolConfig(method="flc")
    return _spectral_pool2(x, cfg, state, windowed=False)


def asap_pool2(x, cfg: PoolConfig | None = None, state: FftOrderState | None = None) -> np.ndarray:
    cfg = cfg or PoolConfig(method="asap")
    return _spectral_pool2(x, cfg, state, windowed=True)


def downsample(x, cfg: PoolConfig, state: FftOrderState | None = None, *, keep_steps: bool = False):
    """Apply the configured 2x operator ``cfg.steps`` times.

    One :class:`FftOrderState` is threaded through every spectral step. With
    ``keep_steps=True`` the list of intermediate results (one per step) is
    returned instead of only the last one.
    """
    x = as_plane(x)
    _, H, W = x.shape
    lo, div = _min_size(cfg) if cfg.method in ("flc", "asap") else (2, 2)
    for k in range(1, cfg.steps + 1):
        h, w = H >> (k - 1), W >> (k - 1)
        if min(h, w) < lo or h % div or w % div:
            raise DimensionError(
                f"{H}x{W} not divisible by 2**{cfg.steps}: step {k} would see {h}x{w}"
            )
    state = cfg.new_state() if state is None else state

    outputs = []
    for _ in range(cfg.steps):
        if cfg.method == "max":
            x = max_pool2(x)
        elif cfg.method == "avg":
            x = avg_pool2(x)
        elif cfg.method == "stride":
            x = stride_pool2(x)
        elif cfg.method == "flc":
            x = flc_pool2(x, cfg, state)
        else:
            x = asap_pool2(x, cfg, state)
        outputs.append(x)
    return outputs if keep_steps else x

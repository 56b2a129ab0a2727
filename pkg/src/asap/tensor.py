"""Real planes and complex spectra.

A *plane* is a ``(C, H, W)`` float64 numpy array. A 2D array is accepted
anywhere a plane is expected and is promoted to a single channel. Channels
never interact.

A :class:`ComplexSpectrum` wraps a ``(C, H, W)`` complex128 array together
with a flag saying whether the DC bin has been rolled to the centre.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np


class ShapeError(ValueError):
    pass


class NonFiniteError(ValueError):
    pass


def as_plane(x, *, name: str = "x") -> np.ndarray:
    """Validate ``x`` and return it as a contiguous ``(C, H, W)`` float64 array."""
    arr = np.asarray(x)
    if np.iscomplexobj(arr):
        raise TypeError(f"{name}: expected a real array, got {arr.dtype}")
    arr = np.ascontiguousarray(arr, dtype=np.float64)
    if arr.ndim == 2:
        arr = arr[np.newaxis]
    if arr.ndim != 3 or min(arr.shape) < 1:
        raise ShapeError(f"{name}: expected (C, H, W) with positive sizes, got {arr.shape}")
    if not np.isfinite(arr).all():
        raise NonFiniteError(f"{name}: non-finite input")
    return arr


@dataclass(frozen=True)
class ComplexSpectrum:
    data: np.ndarray
    shifted: bool = False

    def __post_init__(self):
        data = np.asarray(self.data, dtype=np.complex128)
        if data.ndim == 2:
            data = data[np.newaxis]
        if data.ndim != 3:
            raise ShapeError(f"spectrum must be (C, H, W), got {data.shape}")
        object.__setattr__(self, "data", data)

    @property
    def shape(self) -> tuple[int, int, int]:
        return self.data.shape

    @property
    def channels(self) -> int:
        return self.data.shape[0]


def transpose(x):
    """Swap the two spatial axes of a plane or spectrum (layout flag kept)."""
    if isinstance(x, ComplexSpectrum):
        return ComplexSpectrum(np.ascontiguousarray(x.data.transpose(0, 2, 1)), x.shifted)
    return np.ascontiguousarray(as_plane(x).transpose(0, 2, 1))


def pointwise_mul(X: ComplexSpectrum, w) -> ComplexSpectrum:
    """Multiply every channel of ``X`` by the single-channel real plane ``w``."""
    w = as_plane(w, name="w")
    if w.shape[0] != 1 or w.shape[1:] != X.shape[1:]:
        raise ShapeError(f"shape mismatch: spectrum {X.shape} vs window {w.shape}")
    return ComplexSpectrum(X.data * w[0], X.shifted)

"""2D DFT, quadrant shifts and the alternating-orientation transform.

Convention: unnormalized forward transform with a negative exponent,
``1/(H*W)`` on the inverse, so ``X[0, 0]`` is the pixel sum.

The 2D transform is evaluated as two passes of 1D FFTs: along rows
(last axis) first, then along columns. :class:`FftOrderState` flips that
order on every other call by transposing the data around the same
row-first routine, so repeated forward/inverse pairs do not accumulate
rounding error along one fixed axis.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .tensor import ComplexSpectrum, as_plane, transpose


class LayoutError(ValueError):
    pass


@dataclass
class FftOrderState:
    """Parity counter owned by one pooling pipeline.

    ``alternate=False`` keeps the counter running but always uses the
    row-first path; it exists to compare against the stabilized variant.
    """

    parity: int = 0
    alternate: bool = True

    def advance(self) -> bool:
        """Return True if this call should take the transposed path."""
        odd = self.alternate and self.parity % 2 == 1
        self.parity += 1
        return odd


def _spectrum_data(x) -> np.ndarray:
    if isinstance(x, ComplexSpectrum):
        if x.shifted:
            raise LayoutError("layout violation: expected an unshifted spectrum")
        return x.data
    return as_plane(x).astype(np.complex128)


def _rows_then_cols(data: np.ndarray, inverse: bool) -> np.ndarray:
    f = np.fft.ifft if inverse else np.fft.fft
    return f(f(data, axis=-1), axis=-2)


def dft2d_forward(x) -> ComplexSpectrum:
    """Unnormalized 2D DFT of a plane or unshifted spectrum, per channel."""
    return ComplexSpectrum(_rows_then_cols(_spectrum_data(x), inverse=False))


def dft2d_inverse(X: ComplexSpectrum) -> ComplexSpectrum:
    """Inverse 2D DFT including the ``1/(H*W)`` factor."""
    return ComplexSpectrum(_rows_then_cols(_spectrum_data(X), inverse=True))


def fftshift(X: ComplexSpectrum) -> ComplexSpectrum:
    """Roll the DC bin from (0, 0) to (H//2, W//2)."""
    if X.shifted:
        raise LayoutError("layout violation: spectrum is already shifted")
    return ComplexSpectrum(np.fft.fftshift(X.data, axes=(-2, -1)), shifted=True)


def ifftshift(X: ComplexSpectrum) -> ComplexSpectrum:
    """Undo :func:`fftshift`; exact for odd sizes as well."""
    if not X.shifted:
        raise LayoutError("layout violation: spectrum is not shifted")
    return ComplexSpectrum(np.fft.ifftshift(X.data, axes=(-2, -1)), shifted=False)


def _stabilized(state: FftOrderState, x, transform) -> ComplexSpectrum:
    if not state.advance():
        return transform(x)
    # transposed data through the row-first routine == column-first on x
    if not isinstance(x, ComplexSpectrum):
        x = as_plane(x)
    return transpose(transform(transpose(x)))


def stabilized_forward(state: FftOrderState, x) -> ComplexSpectrum:
    return _stabilized(state, x, dft2d_forward)


def stabilized_inverse(state: FftOrderState, X: ComplexSpectrum) -> ComplexSpectrum:
    return _stabilized(state, X, dft2d_inverse)

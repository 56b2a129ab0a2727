"""Hamming windows sampled on the shifted frequency grid."""
from __future__ import annotations

import numpy as np

#: Hamming coefficient; makes the first sidelobe of the window's transform vanish.
HAMMING_ALPHA = 25 / 46


def _check(N: int) -> int:
    if int(N) != N or N < 2 or N % 2:
        raise ValueError(f"even length required, got {N}")
    return int(N)


def hamming1d(N: int, alpha: float = HAMMING_ALPHA) -> np.ndarray:
    """``alpha - (1 - alpha) * cos(2*pi*n/N)`` for ``n = 0 .. N-1``.

    One sample per frequency bin, with the peak of exactly 1 at ``n = N/2``,
    the position of DC after :func:`asap.spectral.fftshift`.
    """
    N = _check(N)
    if not 0.5 <= alpha <= 1:
        raise ValueError(f"alpha must lie in [0.5, 1], got {alpha}")
    # cos(2*pi*n/N) == -cos(2*pi*(n - N/2)/N); centring the argument makes the
    # mirror pairs bit-identical and the peak exactly alpha + (1 - alpha) == 1
    m = np.arange(N) - N // 2
    return alpha + (1 - alpha) * np.cos(2 * np.pi * m / N)


def hamming2d(H: int, W: int, alpha: float = HAMMING_ALPHA) -> np.ndarray:
    """Outer product window as a single-channel ``(1, H, W)`` plane."""
    return np.outer(hamming1d(H, alpha), hamming1d(W, alpha))[np.newaxis]

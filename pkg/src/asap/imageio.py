"""Binary PNM (P5/P6) reading and writing, plus synthetic test images.

Pixel values are mapped linearly to [0, 1] at the boundary. Generators
return single-channel ``(1, H, W)`` float64 planes and are deterministic;
:func:`gen_random` draws from numpy's PCG64 bit generator
(``numpy.random.default_rng(seed).random``), uniform on [0, 1).
"""
from __future__ import annotations

import os

import numpy as np

from .tensor import as_plane

_MAGIC = {b"P5": 1, b"P6": 3}


class PnmError(ValueError):
    pass


class UnsupportedMagicError(PnmError):
    pass


class MalformedHeaderError(PnmError):
    pass


class TruncatedDataError(PnmError):
    pass


def _header_tokens(buf: bytes, count: int) -> tuple[list[bytes], int]:
    """Read ``count`` whitespace-separated tokens, skipping ``#`` comments."""
    tokens, pos, n = [], 0, len(buf)
    while len(tokens) < count:
        while pos < n and buf[pos:pos + 1].isspace():
            pos += 1
        if pos < n and buf[pos:pos + 1] == b"#":
            while pos < n and buf[pos:pos + 1] not in (b"\n", b"\r"):
                pos += 1
            continue
        start = pos
        while pos < n and not buf[pos:pos + 1].isspace() and buf[pos:pos + 1] != b"#":
            pos += 1
        if start == pos:
            raise MalformedHeaderError("malformed header: unexpected end of file")
        tokens.append(buf[start:pos])
    # exactly one whitespace byte separates the header from the samples
    if pos >= n or not buf[pos:pos + 1].isspace():
        raise MalformedHeaderError("malformed header: missing separator before data")
    return tokens, pos + 1


def decode_pnm(buf: bytes) -> np.ndarray:
    magic = buf[:2]
    if magic not in _MAGIC:
        raise UnsupportedMagicError(f"unsupported magic {magic!r}")
    tokens, offset = _header_tokens(buf[2:], 3)
    offset += 2
    try:
        width, height, maxval = (int(t) for t in tokens)
    except ValueError:
        raise MalformedHeaderError(f"malformed header: {tokens!r}") from None
    if width < 1 or height < 1 or not 0 < maxval < 65536:
        raise MalformedHeaderError(f"malformed header: {width}x{height}, maxval {maxval}")

    channels = _MAGIC[magic]
    dtype = np.dtype(">u2") if maxval > 255 else np.dtype("u1")
    expected = width * height * channels * dtype.itemsize
    data = buf[offset:offset + expected]
    if len(data) < expected:
        raise TruncatedDataError(f"truncated data: expected {expected} bytes, got {len(data)}")
    samples = np.frombuffer(data, dtype=dtype).reshape(height, width, channels)
    return samples.transpose(2, 0, 1).astype(np.float64) / maxval


def encode_pnm(x, maxval: int = 255) -> tuple[bytes, int]:
    """Encode a 1- or 3-channel plane; returns (bytes, number of clamped samples)."""
    x = as_plane(x)
    C, H, W = x.shape
    if C not in (1, 3):
        raise ValueError(f"PNM holds 1 or 3 channels, got {C}")
    if maxval not in (255, 65535):
        raise ValueError(f"maxval must be 255 or 65535, got {maxval}")
    clamped = int(np.count_nonzero((x < 0) | (x > 1)))
    q = np.rint(np.clip(x, 0.0, 1.0) * maxval)
    dtype = ">u2" if maxval > 255 else "u1"
    magic = b"P5" if C == 1 else b"P6"
    header = magic + f"\n{W} {H}\n{maxval}\n".encode("ascii")
    return header + q.transpose(1, 2, 0).astype(dtype).tobytes(), clamped


def read_pnm(path) -> np.ndarray:
    with open(path, "rb") as fh:
        return decode_pnm(fh.read())


def write_pnm(path, x, maxval: int = 255) -> int:
    """Write ``x`` (values clamped to [0, 1]) and return how many samples were clamped."""
    data, clamped = encode_pnm(x, maxval)
    with open(os.fspath(path), "wb") as fh:
        fh.write(data)
    return clamped


# -- synthetic images ---------------------------------------------------------

def _check_shape(H: int, W: int):
    if int(H) != H or int(W) != W or H < 1 or W < 1:
        raise ValueError(f"image size must be positive, got {H}x{W}")


def gen_constant(H: int, W: int, value: float = 0.5) -> np.ndarray:
    _check_shape(H, W)
    if not 0 <= value <= 1:
        raise ValueError(f"value must lie in [0, 1], got {value}")
    return np.full((1, H, W), float(value))


def gen_checkerboard(H: int, W: int, period: int = 2) -> np.ndarray:
    """0/1 checkerboard with square cells of ``period // 2`` pixels, 0 at the origin."""
    _check_shape(H, W)
    if period < 2 or period % 2:
        raise ValueError(f"period must be an even integer >= 2, got {period}")
    u, v = np.indices((H, W))
    cell = period // 2
    return ((u // cell + v // cell) % 2).astype(np.float64)[np.newaxis]


def gen_box(H: int, W: int, box_h: int, box_w: int, v_lo: float = 0.0, v_hi: float = 1.0) -> np.ndarray:
    """Centred ``box_h x box_w`` rectangle of ``v_hi`` on a ``v_lo`` background."""
    _check_shape(H, W)
    if not (0 < box_h <= H and 0 < box_w <= W):
        raise ValueError(f"box {box_h}x{box_w} does not fit in {H}x{W}")
    if not 0 <= v_lo <= 1 or not 0 <= v_hi <= 1:
        raise ValueError("levels must lie in [0, 1]")
    out = np.full((1, H, W), float(v_lo))
    r0, c0 = (H - box_h) // 2, (W - box_w) // 2
    out[:, r0:r0 + box_h, c0:c0 + box_w] = v_hi
    return out


def gen_disk(H: int, W: int, radius: float) -> np.ndarray:
    """Disk of ones centred at ((H-1)/2, (W-1)/2); symmetric under both flips."""
    _check_shape(H, W)
    if not 0 < radius <= min(H, W) / 2:
        raise ValueError(f"radius {radius} does not fit in {H}x{W}")
    u, v = np.indices((H, W))
    d2 = (u - (H - 1) / 2) ** 2 + (v - (W - 1) / 2) ** 2
    return (d2 <= radius**2).astype(np.float64)[np.newaxis]


def gen_sinusoid(H: int, W: int, fu: float, fv: float, phase: float = 0.0) -> np.ndarray:
    """``0.5 + 0.5*cos(2*pi*(fu*u/H + fv*v/W) + phase)``; frequencies in cycles per image."""
    _check_shape(H, W)
    u, v = np.indices((H, W))
    return (0.5 + 0.5 * np.cos(2 * np.pi * (fu * u / H + fv * v / W) + phase))[np.newaxis]


def gen_impulse(H: int, W: int, u: int = 0, v: int = 0) -> np.ndarray:
    _check_shape(H, W)
    if not (0 <= u < H and 0 <= v < W):
        raise ValueError(f"impulse position ({u}, {v}) outside {H}x{W}")
    out = np.zeros((1, H, W))
    out[0, u, v] = 1.0
    return out


def gen_random(H: int, W: int, seed: int = 0) -> np.ndarray:
    """Uniform white noise on [0, 1) from ``default_rng(seed)`` (PCG64)."""
    _check_shape(H, W)
    return np.random.default_rng(seed).random((1, H, W))


def gen_texture(H: int, W: int, seed: int = 0) -> np.ndarray:
    """Band-rich texture: white noise blended with a few random oriented stripes.

    Stripe frequencies are drawn over the whole band (up to Nyquist) so
    both in-band and foldable energy is present. Rescaled to [0, 1].
    """
    _check_shape(H, W)
    rng = np.random.default_rng(seed)
    u, v = np.indices((H, W))
    out = 0.5 * rng.random((H, W))
    for _ in range(int(rng.integers(2, 6))):
        fu = rng.integers(-(H // 2), H // 2 + 1)
        fv = rng.integers(-(W // 2), W // 2 + 1)
        amp = rng.uniform(0.2, 1.0)
        out += amp * np.cos(2 * np.pi * (fu * u / H + fv * v / W) + rng.uniform(0, 2 * np.pi))
    lo, hi = out.min(), out.max()
    return ((out - lo) / (hi - lo) if hi > lo else np.zeros_like(out))[np.newaxis]

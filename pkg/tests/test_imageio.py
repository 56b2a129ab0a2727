import numpy as np
import pytest

from asap import imageio
from asap.imageio import (
    MalformedHeaderError,
    TruncatedDataError,
    UnsupportedMagicError,
    decode_pnm,
    read_pnm,
    write_pnm,
)


@pytest.mark.parametrize("maxval", [255, 65535])
@pytest.mark.parametrize("channels", [1, 3])
def test_round_trip_within_quantization(tmp_path, rng, maxval, channels):
    x = rng.random((channels, 16, 12))
    path = tmp_path / "img.pnm"
    assert write_pnm(path, x, maxval) == 0
    y = read_pnm(path)
    assert y.shape == x.shape
    assert np.abs(y - x).max() <= 1 / (2 * maxval) + 1e-15


def test_sixteen_bit_is_big_endian(tmp_path):
    path = tmp_path / "a.pgm"
    write_pnm(path, np.array([[[1.0]]]), 65535)
    data = path.read_bytes()
    assert data.startswith(b"P5\n1 1\n65535\n") and data.endswith(b"\xff\xff")
    write_pnm(path, np.array([[[256 / 65535]]]), 65535)
    assert path.read_bytes().endswith(b"\x01\x00")


def test_single_byte_scaling():
    assert decode_pnm(b"P5\n1 1\n255\n\x80")[0, 0, 0] == 128 / 255


def test_ppm_channel_order():
    x = decode_pnm(b"P6 2 1 255\n\x00\x80\xff\x10\x20\x30")
    assert x.shape == (3, 1, 2)
    np.testing.assert_array_equal(x[:, 0, 0] * 255, [0, 128, 255])
    np.testing.assert_array_equal(x[:, 0, 1] * 255, [16, 32, 48])


def test_header_comments():
    x = decode_pnm(b"P5 # made by hand\n2 # width\n1\n255\n\x00\xff")
    np.testing.assert_array_equal(x[0], [[0, 1]])


def test_clamping_is_counted(tmp_path):
    x = np.array([[[-0.5, 0.2, 1.5, 1.0]]])
    assert write_pnm(tmp_path / "c.pgm", x) == 2
    np.testing.assert_allclose(read_pnm(tmp_path / "c.pgm")[0, 0], [0, 51 / 255, 1, 1])


@pytest.mark.parametrize("buf,err", [
    (b"P7\n1 1\n255\n\x00", UnsupportedMagicError),
    (b"P2\n1 1\n255\n0", UnsupportedMagicError),
    (b"P5\n1 x\n255\n\x00", MalformedHeaderError),
    (b"P5\n1 1\n0\n\x00", MalformedHeaderError),
    (b"P5\n1 1", MalformedHeaderError),
    (b"P5\n2 2\n255\n\x00\x00", TruncatedDataError),
    (b"P6\n1 1\n65535\n\x00\x00\x00", TruncatedDataError),
])
def test_decode_errors(buf, err):
    with pytest.raises(err):
        decode_pnm(buf)


def test_unsupported_magic_message():
    with pytest.raises(UnsupportedMagicError, match="unsupported magic"):
        decode_pnm(b"P7\n")


def test_encode_rejects_bad_channel_count_and_maxval():
    with pytest.raises(ValueError):
        imageio.encode_pnm(np.zeros((2, 4, 4)))
    with pytest.raises(ValueError):
        imageio.encode_pnm(np.zeros((1, 4, 4)), maxval=1023)


def test_checkerboard():
    np.testing.assert_array_equal(imageio.gen_checkerboard(4, 4, 2)[0],
                                  [[0, 1, 0, 1], [1, 0, 1, 0], [0, 1, 0, 1], [1, 0, 1, 0]])
    np.testing.assert_array_equal(imageio.gen_checkerboard(4, 4, 4)[0],
                                  [[0, 0, 1, 1], [0, 0, 1, 1], [1, 1, 0, 0], [1, 1, 0, 0]])
    with pytest.raises(ValueError):
        imageio.gen_checkerboard(4, 4, 3)


def test_impulse():
    x = imageio.gen_impulse(4, 4, 0, 0)
    assert x[0, 0, 0] == 1 and x.sum() == 1
    with pytest.raises(ValueError):
        imageio.gen_impulse(4, 4, 4, 0)


def test_random_is_deterministic():
    a, b = imageio.gen_random(8, 8, seed=42), imageio.gen_random(8, 8, seed=42)
    assert np.array_equal(a, b)
    assert not np.array_equal(a, imageio.gen_random(8, 8, seed=43))
    # documented PRNG: PCG64 via default_rng
    assert np.array_equal(a[0], np.random.default_rng(42).random((8, 8)))


def test_box_and_disk():
    b = imageio.gen_box(8, 8, 4, 2, 0.1, 0.9)[0]
    assert b[2:6, 3:5].min() == 0.9 and (b == 0.9).sum() == 8 and b[0, 0] == 0.1
    d = imageio.gen_disk(9, 9, 2)[0]
    assert d[4, 4] == 1 and d[4, 6] == 1 and d[4, 7] == 0
    assert np.array_equal(d, d[::-1]) and np.array_equal(d, d[:, ::-1])
    with pytest.raises(ValueError):
        imageio.gen_box(8, 8, 9, 2)
    with pytest.raises(ValueError):
        imageio.gen_disk(8, 8, 5)


def test_value_ranges():
    for x in (imageio.gen_sinusoid(16, 8, 3, 1, 0.3), imageio.gen_texture(32, 32, 5),
              imageio.gen_random(8, 8), imageio.gen_constant(4, 4, 1.0)):
        assert x.min() >= 0 and x.max() <= 1
    s = imageio.gen_sinusoid(8, 8, 1, 0)[0]
    assert s[0, 0] == pytest.approx(1) and s[4, 0] == pytest.approx(0)


def test_texture_is_deterministic_and_band_rich():
    t = imageio.gen_texture(32, 32, 11)
    assert np.array_equal(t, imageio.gen_texture(32, 32, 11))
    P = np.abs(np.fft.fftshift(np.fft.fft2(t[0] - t.mean()))) ** 2
    outer = P.copy()
    outer[8:24, 8:24] = 0
    assert outer.sum() > 0.05 * P.sum()


def test_bad_shapes():
    with pytest.raises(ValueError):
        imageio.gen_random(0, 4)

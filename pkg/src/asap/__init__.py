"""Aliasing- and leakage-free 2x downsampling with FFT low-cut pooling."""
from .imageio import (
    gen_box,
    gen_checkerboard,
    gen_constant,
    gen_disk,
    gen_impulse,
    gen_random,
    gen_sinusoid,
    gen_texture,
    read_pnm,
    write_pnm,
)
from .metrics import (
    MetricsReport,
    aliasing_measure,
    band_limited_kl,
    centroid,
    centroid_drift,
    evaluate,
    radial_power_spectrum,
    ringing_overshoot,
    spectrum_kl,
)
from .pooling import (
    PoolConfig,
    asap_pool2,
    avg_pool2,
    downsample,
    flc_pool2,
    max_pool2,
    stride_pool2,
)
from .spectral import FftOrderState, dft2d_forward, dft2d_inverse, fftshift, ifftshift
from .tensor import ComplexSpectrum
from .window import HAMMING_ALPHA, hamming1d, hamming2d

__version__ = "0.1.0"

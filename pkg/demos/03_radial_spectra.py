"""
Radial power spectra after downsampling
=======================================

A disk is reduced twice and the power of the result is binned by integer
distance from DC. Striding and max pooling leave extra power near the new
Nyquist radius (folded high frequencies); FLC keeps the input's band
exactly; ASAP rolls the top of the band off smoothly.

    python demos/03_radial_spectra.py
"""
import numpy as np

from asap import PoolConfig, downsample, gen_disk, radial_power_spectrum

x = gen_disk(128, 128, 40)
steps = 2
h = 128 >> steps
nbins = h // 2

reference = radial_power_spectrum(x, nbins, max_radius=nbins - 1) / 16**steps
rows = {"input (in band)": reference}
for method in ("max", "stride", "flc", "asap"):
    y = downsample(x, PoolConfig(method=method, steps=steps))
    rows[method] = radial_power_spectrum(y, nbins, max_radius=nbins - 1)

###############################################################################
# log10 power per radius; the input's band is rescaled to the output size.

print(f"{'radius':16s}" + " ".join(f"{r:6d}" for r in range(0, nbins, 2)))
for name, p in rows.items():
    print(f"{name[:15]:16s}" + " ".join(f"{v:6.2f}" for v in np.log10(p[::2] + 1e-30)))

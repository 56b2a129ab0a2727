"""Command-line driver: ``asap-pool {downsample,analyze,spectrum,compare}``.

Synthetic inputs are described as, ``name:HxW[:param...]``::

    constant:HxW[:value]        checkerboard:HxW[:period]
    box:HxW:BHxBW[:lo:hi]       disk:HxW:radius
    sinusoid:HxW:fu:fv[:phase]  impulse:HxW[:u:v]
    random:HxW[:seed]           texture:HxW[:seed]

``analyze --corpus`` also takes ``random:COUNT:HxW[:seed]`` (or ``texture``),
meaning COUNT images seeded ``seed, seed+1, ...``.

Every run writes its resolved options as ``key=value`` lines next to the
outputs; ``--manifest FILE`` replays such a file (command-line flags win).

Exit codes: 0 ok, 1 bad arguments, 2 I/O failure, 3 dimension violation.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from . import imageio
from .metrics import (
    aliasing_measure,
    band_limited_kl,
    centroid,
    centroid_drift,
    evaluate,
    radial_power_spectrum,
    ringing_overshoot,
)
from .pooling import METHODS, NORMALIZATIONS, WINDOWS, DimensionError, PoolConfig, downsample

EXIT_OK, EXIT_ARGS, EXIT_IO, EXIT_DIMS = 0, 1, 2, 3
COMPARE_METHODS = "max,stride,flc,asap"
PNM_SUFFIXES = (".pgm", ".ppm", ".pnm")


class UsageError(Exception):
    pass


def fmt(value: float) -> str:
    """Fixed 9 significant digits."""
    return "nan" if not np.isfinite(value) else f"{value:.8e}"


# -- generator specs -------------------------------------------------------------

def _size(text: str) -> tuple[int, int]:
    try:
        h, w = text.lower().split("x")
        return int(h), int(w)
    except ValueError:
        raise UsageError(f"bad size {text!r}, expected HxW") from None


def generate(spec: str) -> np.ndarray:
    name, *rest = spec.split(":")
    if not rest:
        raise UsageError(f"bad generator spec {spec!r}")
    H, W = _size(rest[0])
    p = rest[1:]
    try:
        if name == "constant":
            return imageio.gen_constant(H, W, float(p[0]) if p else 0.5)
        if name == "checkerboard":
            return imageio.gen_checkerboard(H, W, int(p[0]) if p else 2)
        if name == "box":
            bh, bw = _size(p[0])
            levels = [float(v) for v in p[1:3]] or [0.0, 1.0]
            return imageio.gen_box(H, W, bh, bw, *levels)
        if name == "disk":
            return imageio.gen_disk(H, W, float(p[0]))
        if name == "sinusoid":
            return imageio.gen_sinusoid(H, W, float(p[0]), float(p[1]), float(p[2]) if len(p) > 2 else 0.0)
        if name == "impulse":
            return imageio.gen_impulse(H, W, *(int(v) for v in p[:2]))
        if name == "random":
            return imageio.gen_random(H, W, int(p[0]) if p else 0)
        if name == "texture":
            return imageio.gen_texture(H, W, int(p[0]) if p else 0)
    except (IndexError, ValueError) as exc:
        raise UsageError(f"bad generator spec {spec!r}: {exc}") from None
    raise UsageError(f"unknown generator {name!r}")


def corpus(spec: str, seed: int) -> list[tuple[str, np.ndarray]]:
    parts = spec.split(":")
    if len(parts) >= 3 and parts[1].isdigit():
        name, count, size = parts[0], int(parts[1]), parts[2]
        if name not in ("random", "texture"):
            raise UsageError(f"corpus generator must be random or texture, got {name!r}")
        seed0 = int(parts[3]) if len(parts) > 3 else seed
        width = max(5, len(str(count)))
        return [(f"{name}_{i:0{width}d}", generate(f"{name}:{size}:{seed0 + i}")) for i in range(count)]
    return [(spec, generate(spec))]


def _load_input(args) -> np.ndarray:
    if bool(args.input) == bool(args.gen):
        raise UsageError("exactly one of --in and --gen is required")
    return imageio.read_pnm(args.input) if args.input else generate(args.gen)


def _methods(text: str) -> list[str]:
    wanted = [m.strip() for m in text.split(",") if m.strip()]
    unknown = sorted(set(wanted) - set(METHODS))
    if unknown or not wanted:
        raise UsageError(f"unknown methods {unknown}; choose from {','.join(METHODS)}")
    return [m for m in METHODS if m in wanted]


def _config(args, method: str) -> PoolConfig:
    return PoolConfig(
        method=method,
        normalization=args.norm,
        steps=args.steps,
        stabilize=not args.no_stabilize,
        window=args.window,
    )


# -- manifests -------------------------------------------------------------------

_MANIFEST_SKIP = {"manifest", "func"}


def write_manifest(path: Path, args) -> None:
    items = sorted((k, v) for k, v in vars(args).items() if k not in _MANIFEST_SKIP and v is not None)
    lines = [f"{k}={str(v).lower() if isinstance(v, bool) else v}" for k, v in items]
    path.write_text("\n".join(lines) + "\n", encoding="utf-8", newline="\n")


def read_manifest(path) -> dict[str, str]:
    out = {}
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise UsageError(f"bad manifest line {line!r}")
        out[key.strip()] = value.strip()
    return out


def _manifest_argv(values: dict[str, str], parser: argparse.ArgumentParser) -> list[str]:
    options = {a.dest: a for a in parser._actions if a.option_strings}
    argv = []
    for key, value in values.items():
        if key == "command" or key not in options:
            continue
        action = options[key]
        if isinstance(action, argparse._StoreTrueAction):
            if value == "true":
                argv.append(action.option_strings[-1])
        else:
            argv += [action.option_strings[-1], value]
    return argv


# -- commands --------------------------------------------------------------------

def cmd_downsample(args) -> int:
    x = _load_input(args)
    y = downsample(x, _config(args, args.method))
    out = Path(args.out)
    clamped = imageio.write_pnm(out, y, args.maxval)
    if clamped:
        print(f"note: {clamped} samples clamped to [0, 1]", file=sys.stderr)
    write_manifest(out.with_name(out.name + ".manifest"), args)
    return EXIT_OK


def cmd_analyze(args) -> int:
    spec = args.corpus or args.gen
    if bool(args.input) == bool(spec) or (args.corpus and args.gen):
        raise UsageError("exactly one of --in, --corpus and --gen is required")
    if args.input:
        folder = Path(args.input)
        if not folder.is_dir():
            raise OSError(f"not a directory: {folder}")
        files = sorted(p for p in folder.iterdir() if p.suffix.lower() in PNM_SUFFIXES)
        images = [(p.name, imageio.read_pnm(p)) for p in files]
    else:
        images = corpus(spec, args.seed)
    if not images:
        raise UsageError("empty corpus")
    methods = _methods(args.methods)
    images.sort(key=lambda item: item[0])

    rows, per_method = [], {m: [] for m in methods}
    for name, x in images:
        for m in methods:
            rep = evaluate(x, _config(args, m), image=name)
            per_method[m].append(rep)
            rows.append(rep)

    columns = ("aliasing", "spectrum_kl", "overshoot", "wall_time")
    lines = ["image,method,aliasing,spectrum_kl,overshoot,wall_time_s"]

    def timed(value: float) -> str:
        return fmt(value) if args.timing else "nan"

    for r in rows:
        lines.append(f"{r.image},{r.method},{fmt(r.aliasing)},{fmt(r.spectrum_kl)},{fmt(r.overshoot)},{timed(r.wall_time)}")
    for stat, fn in (("__mean__", np.mean), ("__std__", np.std)):
        for m in methods:
            vals = [float(fn([getattr(r, c) for r in per_method[m]])) for c in columns]
            lines.append(f"{stat},{m},{fmt(vals[0])},{fmt(vals[1])},{fmt(vals[2])},{timed(vals[3])}")

    out = Path(args.out)
    out.write_text("\n".join(lines) + "\n", encoding="utf-8", newline="\n")
    write_manifest(out.with_name(out.name + ".manifest"), args)
    return EXIT_OK


def _spectrum_csv(x, bins) -> str:
    power = radial_power_spectrum(x, bins)
    return "band,power\n" + "".join(f"{b},{fmt(p)}\n" for b, p in enumerate(power))


def cmd_spectrum(args) -> int:
    x = _load_input(args)
    out = Path(args.out)
    out.write_text(_spectrum_csv(x, args.bins), encoding="utf-8", newline="\n")
    write_manifest(out.with_name(out.name + ".manifest"), args)
    return EXIT_OK


def cmd_compare(args) -> int:
    x = _load_input(args)
    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    lo, hi = float(x.min()), float(x.max())
    header = "method,step,height,width,centroid_row,centroid_col,centroid_drift,overshoot,aliasing,spectrum_kl"
    lines = [header]
    for m in _methods(args.methods):
        outputs = downsample(x, _config(args, m), keep_steps=True)
        for k, y in enumerate(outputs, start=1):
            stem = f"{m}_step{k}"
            imageio.write_pnm(outdir / f"{stem}.pnm", y, 65535)
            (outdir / f"{stem}_spectrum.csv").write_text(_spectrum_csv(y, None), encoding="utf-8", newline="\n")
            try:
                cr, cc = centroid(y)
                drift = centroid_drift(x, y, k)
            except ValueError:
                cr = cc = drift = float("nan")
            over = ringing_overshoot(y, lo, hi) if hi > lo else 0.0
            _, h, w = y.shape
            lines.append(",".join([m, str(k), str(h), str(w), fmt(cr), fmt(cc), fmt(drift), fmt(over),
                                   fmt(aliasing_measure(x, y, k)), fmt(band_limited_kl(x, y))]))
    (outdir / "summary.csv").write_text("\n".join(lines) + "\n", encoding="utf-8", newline="\n")
    write_manifest(outdir / "manifest.txt", args)
    return EXIT_OK


# -- parser ----------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="asap-pool", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, *, pooling=True):
        p.add_argument("--in", dest="input", help="input PNM file")
        p.add_argument("--gen", help="synthetic input spec, e.g. disk:256x256:64")
        p.add_argument("--manifest", help="replay options from a key=value manifest")
        if pooling:
            p.add_argument("--steps", type=int, default=1, help="number of 2x reductions")
            p.add_argument("--norm", choices=NORMALIZATIONS, default="preserve_mean")
            p.add_argument("--window", choices=WINDOWS, default="band", help="ASAP window extent")
            p.add_argument("--no-stabilize", action="store_true", help="disable alternating FFT order")

    p = sub.add_parser("downsample", help="downsample one image")
    common(p)
    p.add_argument("--method", choices=METHODS, default="asap")
    p.add_argument("--out", required=True)
    p.add_argument("--maxval", type=int, choices=(255, 65535), default=255)
    p.set_defaults(func=cmd_downsample)

    p = sub.add_parser("analyze", help="metrics table over a corpus")
    common(p)
    p.add_argument("--corpus", help="corpus spec, e.g. random:1000:32x32")
    p.add_argument("--methods", default=",".join(METHODS))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--timing", action="store_true", help="record wall times (output no longer reproducible)")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("spectrum", help="radial power spectrum of one image")
    common(p, pooling=False)
    p.add_argument("--bins", type=int)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("compare", help="per-step images, spectra and summary for several methods")
    common(p)
    p.add_argument("--methods", default=COMPARE_METHODS)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_compare)
    return parser


def _subparser(parser, name):
    for action in parser._actions:
        if isinstance(action, argparse._SubParsersAction):
            return action.choices.get(name)
    return None


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.manifest:
            values = read_manifest(args.manifest)
            extra = _manifest_argv(values, _subparser(parser, args.command))
            args = parser.parse_args([args.command, *extra, *argv[1:]])
        if getattr(args, "steps", 1) < 1:
            raise UsageError("--steps must be >= 1")
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ARGS
    except DimensionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DIMS
    except (OSError, imageio.PnmError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ARGS


if __name__ == "__main__":
    sys.exit(main())

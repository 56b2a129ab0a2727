import numpy as np
import pytest

from asap.cli import generate, main, read_manifest
from asap.imageio import read_pnm, write_pnm


def run(tmp_path, *argv):
    return main([str(a) for a in argv])


def test_checkerboard_stride_collapses(tmp_path):
    out = tmp_path / "o.pgm"
    assert main(["downsample", "--gen", "checkerboard:32x32:2", "--method", "stride", "--steps", "1", "--out", str(out)]) == 0
    y = read_pnm(out)
    assert y.shape == (1, 16, 16) and np.all(y == y.flat[0])
    assert (tmp_path / "o.pgm.manifest").exists()


def test_dimension_violation_exit_3(tmp_path, capsys):
    rc = main(["downsample", "--gen", "random:24x24", "--method", "stride", "--steps", "4", "--out", str(tmp_path / "o.pgm")])
    assert rc == 3
    assert "step" in capsys.readouterr().err


def test_asap_keeps_grey(tmp_path):
    out = tmp_path / "g.pgm"
    assert main(["downsample", "--gen", "constant:32x32:0.5", "--method", "asap", "--steps", "2", "--out", str(out)]) == 0
    y = read_pnm(out)
    assert y.shape == (1, 8, 8) and np.all(y == 128 / 255)


def test_reads_pnm_input(tmp_path, rng):
    src = tmp_path / "in.ppm"
    write_pnm(src, rng.random((3, 16, 16)))
    out = tmp_path / "out.ppm"
    assert main(["downsample", "--in", str(src), "--method", "flc", "--out", str(out), "--maxval", "65535"]) == 0
    assert read_pnm(out).shape == (3, 8, 8)


@pytest.mark.parametrize("argv", [
    ["downsample", "--gen", "random:8x8", "--method", "blur", "--out", "x.pgm"],
    ["downsample", "--gen", "nosuch:8x8", "--out", "x.pgm"],
    ["downsample", "--gen", "random:8by8", "--out", "x.pgm"],
    ["downsample", "--out", "x.pgm"],
    ["downsample", "--gen", "random:8x8", "--steps", "0", "--out", "x.pgm"],
    ["analyze", "--corpus", "random:0:8x8", "--out", "r.csv"],
    ["analyze", "--corpus", "random:2:8x8", "--methods", "max,blur", "--out", "r.csv"],
    ["frobnicate"],
    [],
])
def test_bad_arguments_exit_1(tmp_path, monkeypatch, argv):
    monkeypatch.chdir(tmp_path)
    assert main(argv) == 1


def test_io_failures_exit_2(tmp_path):
    assert main(["downsample", "--in", str(tmp_path / "missing.pgm"), "--out", str(tmp_path / "o.pgm")]) == 2
    bad = tmp_path / "bad.pgm"
    bad.write_bytes(b"P7\n1 1\n255\n\x00")
    assert main(["downsample", "--in", str(bad), "--out", str(tmp_path / "o.pgm")]) == 2
    assert main(["analyze", "--in", str(tmp_path / "nodir"), "--out", str(tmp_path / "r.csv")]) == 2


def test_empty_directory_is_empty_corpus(tmp_path):
    (tmp_path / "imgs").mkdir()
    assert main(["analyze", "--in", str(tmp_path / "imgs"), "--out", str(tmp_path / "r.csv")]) == 1


def read_csv(path):
    lines = path.read_text().splitlines()
    return lines[0].split(","), [line.split(",") for line in lines[1:]]


def test_analyze_schema_and_order(tmp_path):
    out = tmp_path / "r.csv"
    assert main(["analyze", "--corpus", "random:3:16x16", "--methods", "stride,flc,max", "--out", str(out)]) == 0
    header, rows = read_csv(out)
    assert header == ["image", "method", "aliasing", "spectrum_kl", "overshoot", "wall_time_s"]
    body = [r for r in rows if not r[0].startswith("__")]
    assert [(r[0], r[1]) for r in body] == [(f"random_{i:05d}", m) for i in range(3) for m in ("max", "stride", "flc")]
    summary = [(r[0], r[1]) for r in rows if r[0].startswith("__")]
    assert summary == [(s, m) for s in ("__mean__", "__std__") for m in ("max", "stride", "flc")]
    for r in rows:
        for cell in r[2:5]:
            assert cell == "nan" or len(cell.split("e")[0].replace(".", "").lstrip("-")) == 9


def test_analyze_directory_input(tmp_path, rng):
    folder = tmp_path / "imgs"
    folder.mkdir()
    for name in ("b.pgm", "a.pgm"):
        write_pnm(folder / name, rng.random((1, 16, 16)))
    (folder / "notes.txt").write_text("ignored")
    out = tmp_path / "r.csv"
    assert main(["analyze", "--in", str(folder), "--methods", "asap", "--out", str(out)]) == 0
    _, rows = read_csv(out)
    assert [r[0] for r in rows[:2]] == ["a.pgm", "b.pgm"]


def test_analyze_constant_image(tmp_path):
    out = tmp_path / "r.csv"
    assert main(["analyze", "--gen", "constant:16x16:0.3", "--out", str(out)]) == 0
    _, rows = read_csv(out)
    assert all(float(r[2]) == 0 for r in rows if not r[0].startswith("__std"))


def test_analyze_timing_flag(tmp_path):
    out = tmp_path / "r.csv"
    main(["analyze", "--corpus", "random:2:8x8", "--methods", "flc", "--timing", "--out", str(out)])
    _, rows = read_csv(out)
    assert float(rows[0][5]) >= 0


def test_manifest_replay_is_byte_identical(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert main(["analyze", "--corpus", "texture:4:16x16:9", "--methods", "max,asap", "--steps", "2", "--out", str(a)]) == 0
    manifest = read_manifest(tmp_path / "a.csv.manifest")
    assert manifest["corpus"] == "texture:4:16x16:9" and manifest["steps"] == "2"
    assert main(["analyze", "--manifest", str(tmp_path / "a.csv.manifest"), "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_spectrum_command(tmp_path):
    out = tmp_path / "s.csv"
    assert main(["spectrum", "--gen", "constant:16x16:0.5", "--bins", "4", "--out", str(out)]) == 0
    header, rows = read_csv(out)
    assert header == ["band", "power"] and len(rows) == 4
    assert float(rows[0][1]) > 0 and all(float(r[1]) < 1e-20 for r in rows[1:])

    assert main(["spectrum", "--gen", "sinusoid:16x16:2:0", "--out", str(out)]) == 0
    _, rows = read_csv(out)
    powers = [float(r[1]) for r in rows[1:]]
    assert int(rows[1 + int(np.argmax(powers))][0]) == 2 * 8 // 12

    assert main(["spectrum", "--gen", "impulse:8x8", "--bins", "4", "--out", str(out)]) == 0
    _, rows = read_csv(out)
    assert sum(float(r[1]) for r in rows) == pytest.approx(64)


def test_compare_disk(tmp_path):
    out = tmp_path / "cmp"
    assert main(["compare", "--gen", "disk:128x128:32", "--steps", "3", "--out", str(out)]) == 0
    images = sorted(p.name for p in out.glob("*.pnm"))
    assert len(images) == 12 and len(list(out.glob("*_spectrum.csv"))) == 12
    header, rows = read_csv(out / "summary.csv")
    assert header[:3] == ["method", "step", "height"]
    col = header.index("centroid_drift")
    asap = [r for r in rows if r[0] == "asap"]
    assert len(asap) == 3 and all(float(r[col]) <= 0.5 for r in asap)
    assert (out / "manifest.txt").exists()


def test_compare_box_ringing(tmp_path):
    out = tmp_path / "cmp"
    assert main(["compare", "--gen", "box:64x64:32x32", "--steps", "2", "--out", str(out)]) == 0
    header, rows = read_csv(out / "summary.csv")
    col = header.index("overshoot")
    final = {r[0]: float(r[col]) for r in rows if r[1] == "2"}
    assert final["flc"] >= 0.05 and final["asap"] <= 0.01


def test_compare_constant(tmp_path):
    out = tmp_path / "cmp"
    assert main(["compare", "--gen", "constant:32x32:0.25", "--steps", "2", "--methods", "max,avg,stride,flc,asap",
                 "--out", str(out)]) == 0
    for p in out.glob("*.pnm"):
        assert np.abs(read_pnm(p) - 0.25).max() <= 1 / 131070 + 1e-9


def test_generator_grammar():
    assert generate("box:8x8:4x2:0.2:0.6").max() == 0.6
    assert generate("impulse:4x4:1:2")[0, 1, 2] == 1
    assert generate("sinusoid:8x8:1:0:3.14159").shape == (1, 8, 8)

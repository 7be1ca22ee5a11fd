import csv
import json
import random

import pytest

from helpers import synthetic_photo
from kmodulus.cli import main
from kmodulus.container import HEADER_SIZE, payload_size
from kmodulus.image import RasterImage
from kmodulus.pnm import read_pnm, write_pnm
from kmodulus.transform import bits_per_pixel, levels


@pytest.fixture(scope="module")
def small_scene():
    return synthetic_photo(width=96, height=96, seed=17)


@pytest.fixture
def scene_path(tmp_path, small_scene):
    path = tmp_path / "scene.pgm"
    path.write_bytes(write_pnm(small_scene))
    return path


def test_transform_writes_quantized_image(tmp_path, scene_path, capsys):
    out = tmp_path / "out.pgm"
    assert main(["transform", "-k", "5", str(scene_path), str(out)]) == 0
    img = read_pnm(out.read_bytes())
    assert all(p % 5 == 0 or p == 255 for p in img.pixels)
    printed = capsys.readouterr().out
    assert printed.startswith("PSNR: ")
    assert printed.strip().endswith("dB")


def test_transform_rejects_k_below_minimum(scene_path, tmp_path):
    with pytest.raises(SystemExit) as err:
        main(["transform", "-k", "1", str(scene_path), str(tmp_path / "x.pgm")])
    assert err.value.code == 2


def test_transform_rejects_ascii_pnm(tmp_path, capsys):
    bad = tmp_path / "bad.pgm"
    bad.write_bytes(b"P3\n1 1\n255\n0\n")
    out = tmp_path / "out.pgm"
    assert main(["transform", "-k", "5", str(bad), str(out)]) == 1
    assert "magic" in capsys.readouterr().err
    assert not out.exists()


def test_transform_missing_input(tmp_path, capsys):
    code = main(
        ["transform", "-k", "5", str(tmp_path / "nope.pgm"), str(tmp_path / "o.pgm")]
    )
    assert code == 1
    assert "error" in capsys.readouterr().err


def test_pack_then_unpack_matches_transform(tmp_path, scene_path):
    packed = tmp_path / "scene.kmm"
    restored = tmp_path / "restored.pgm"
    transformed = tmp_path / "transformed.pgm"
    assert main(["pack", "-k", "10", str(scene_path), str(packed)]) == 0
    assert main(["unpack", str(packed), str(restored)]) == 0
    assert main(["transform", "-k", "10", str(scene_path), str(transformed)]) == 0
    assert restored.read_bytes() == transformed.read_bytes()


def test_pack_output_size(tmp_path, scene_path, small_scene):
    packed = tmp_path / "scene.kmm"
    assert main(["pack", "-k", "10", str(scene_path), str(packed)]) == 0
    expected = HEADER_SIZE + payload_size(
        small_scene.width, small_scene.height, 1, 10
    )
    assert packed.stat().st_size == expected


def test_unpack_rejects_garbage(tmp_path, capsys):
    garbage = tmp_path / "garbage.kmm"
    garbage.write_bytes(random.Random(3).randbytes(64))
    assert main(["unpack", str(garbage), str(tmp_path / "o.pgm")]) == 1
    assert "magic" in capsys.readouterr().err


def test_metrics_identical_images(scene_path, capsys):
    assert main(["metrics", str(scene_path), str(scene_path)]) == 0
    out = capsys.readouterr().out
    assert "PSNR: inf dB" in out


def test_metrics_json(tmp_path, scene_path, capsys):
    other = tmp_path / "other.pgm"
    assert main(["transform", "-k", "7", str(scene_path), str(other)]) == 0
    capsys.readouterr()
    assert main(["metrics", "--json", str(scene_path), str(other)]) == 0
    report = json.loads(capsys.readouterr().out)
    assert set(report) == {"mse", "psnr_db", "per_channel_psnr"}
    assert report["mse"] > 0
    assert len(report["per_channel_psnr"]) == 1


def test_metrics_shape_mismatch(tmp_path, scene_path, capsys):
    small = tmp_path / "small.pgm"
    small.write_bytes(write_pnm(RasterImage(1, 1, 1, b"\x00")))
    assert main(["metrics", str(scene_path), str(small)]) == 1
    assert "shape" in capsys.readouterr().err


def test_histogram_csv(tmp_path):
    zeros = tmp_path / "zeros.pgm"
    zeros.write_bytes(write_pnm(RasterImage(4, 2, 1, bytes(8))))
    out = tmp_path / "hist.csv"
    assert main(["histogram", str(zeros), str(out)]) == 0
    rows = list(csv.reader(out.read_text().splitlines()))
    assert rows[0] == ["value", "channel", "count"]
    assert rows[1] == ["0", "0", "8"]
    assert len(rows) == 1 + 256
    assert all(row[2] == "0" for row in rows[2:])


def test_histogram_csv_color_row_count(tmp_path):
    rgb = tmp_path / "rgb.ppm"
    rgb.write_bytes(write_pnm(RasterImage(2, 2, 3, bytes(range(12)))))
    out = tmp_path / "hist.csv"
    assert main(["histogram", str(rgb), str(out)]) == 0
    rows = out.read_text().splitlines()
    assert len(rows) == 1 + 256 * 3


def test_histogram_support_after_transform(tmp_path, scene_path):
    transformed = tmp_path / "t.pgm"
    out = tmp_path / "hist.csv"
    assert main(["transform", "-k", "7", str(scene_path), str(transformed)]) == 0
    assert main(["histogram", str(transformed), str(out)]) == 0
    for row in csv.DictReader(out.read_text().splitlines()):
        if int(row["count"]):
            value = int(row["value"])
            assert value % 7 == 0 or value == 255


def test_sweep_csv(tmp_path, scene_path, small_scene):
    out = tmp_path / "sweep.csv"
    assert main(["sweep", str(scene_path), "2", "20", str(out)]) == 0
    text = out.read_text()
    assert text.splitlines()[0] == (
        "k,psnr_db,mse,bits_per_pixel,levels,quotient_entropy,packed_bytes"
    )
    rows = list(csv.DictReader(text.splitlines()))
    assert len(rows) == 19
    assert [int(r["k"]) for r in rows] == list(range(2, 21))
    for row in rows:
        k = int(row["k"])
        assert int(row["bits_per_pixel"]) == bits_per_pixel(k)
        assert int(row["levels"]) == levels(k)
        assert int(row["packed_bytes"]) == HEADER_SIZE + payload_size(
            small_scene.width, small_scene.height, 1, k
        )
    psnrs = [float(r["psnr_db"]) for r in rows]
    assert all(a > b for a, b in zip(psnrs, psnrs[1:]))


def test_sweep_csv_round_trips_at_written_precision(tmp_path, scene_path):
    out = tmp_path / "sweep.csv"
    assert main(["sweep", str(scene_path), "5", "6", str(out)]) == 0
    first = out.read_text()
    assert main(["sweep", str(scene_path), "5", "6", str(out)]) == 0
    assert out.read_text() == first  # deterministic
    for row in csv.DictReader(first.splitlines()):
        for field in ("psnr_db", "mse", "quotient_entropy"):
            assert f"{float(row[field]):.4f}" == row[field]


def test_sweep_rejects_inverted_range(tmp_path, scene_path, capsys):
    code = main(["sweep", str(scene_path), "9", "3", str(tmp_path / "s.csv")])
    assert code == 2
    assert "k-min" in capsys.readouterr().err


def test_outputs_are_deterministic(tmp_path, scene_path):
    a = tmp_path / "a.pgm"
    b = tmp_path / "b.pgm"
    assert main(["transform", "-k", "9", str(scene_path), str(a)]) == 0
    assert main(["transform", "-k", "9", str(scene_path), str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()

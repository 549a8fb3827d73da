import numpy as np
import pytest

from drtghost import formats
from drtghost.frt import frt_forward
from drtghost.mojette import RationalAngle, mojette_project


def test_pgm_round_trip(tmp_path, rng):
    img = rng.integers(0, 256, (7, 5))
    path = tmp_path / "a.pgm"
    formats.write_pgm(path, img, comment="two\nlines")
    back = formats.read_pgm(path)
    assert np.array_equal(back, img)
    formats.write_pgm(tmp_path / "b.pgm", back, comment="two\nlines")
    assert path.read_bytes() == (tmp_path / "b.pgm").read_bytes()


def test_pgm_ascii_and_comments(tmp_path):
    path = tmp_path / "a.pgm"
    path.write_text("P2\n# hello\n3 2\n# more\n255\n1 2 3\n4 5 255\n")
    assert np.array_equal(formats.read_pgm(path), [[1, 2, 3], [4, 5, 255]])


def test_pgm_binary_with_whitespace_pixel(tmp_path):
    img = np.array([[10, 32], [9, 13]])
    formats.write_pgm(tmp_path / "w.pgm", img)
    assert np.array_equal(formats.read_pgm(tmp_path / "w.pgm"), img)


def test_pgm_errors(tmp_path):
    with pytest.raises(ValueError):
        formats.write_pgm(tmp_path / "x.pgm", np.array([[256]]))
    (tmp_path / "y.pgm").write_text("P3\n1 1\n255\n0 0 0\n")
    with pytest.raises(ValueError):
        formats.read_pgm(tmp_path / "y.pgm")
    (tmp_path / "z.pgm").write_bytes(b"P5\n4 4\n255\n\x00\x01")
    with pytest.raises(ValueError):
        formats.read_pgm(tmp_path / "z.pgm")
    (tmp_path / "w.pgm").write_text("P2\n1 1\n65535\n0\n")
    with pytest.raises(ValueError):
        formats.read_pgm(tmp_path / "w.pgm")


def test_residue_scaling():
    assert list(formats.residues_to_gray(np.array([0, 52, 26]), 53)) == [0, 255, 128]
    assert list(formats.residues_to_gray(np.array([-1]), 53)) == [255]


def test_frt_round_trip(tmp_path, rings, rng):
    space = frt_forward(rng.integers(0, 256, (7, 7)), rings(7)).with_missing([2, 7])
    text = formats.format_frt(space)
    assert "MISSING 2" in text and "MISSING PERP" in text
    back = formats.parse_frt(text)
    assert np.array_equal(back.known, space.known)
    assert np.array_equal(back.rows[back.known], space.rows[space.known])
    assert back.ring.modulus == space.ring.modulus
    formats.write_frt(tmp_path / "s.frt", space, (4, 6))
    text = (tmp_path / "s.frt").read_text()
    assert formats.frt_image_shape(text) == (4, 6)
    assert formats.frt_image_shape(formats.format_frt(space)) is None
    assert formats.format_frt(formats.read_frt(tmp_path / "s.frt"), (4, 6)) == text


def test_frt_parse_errors():
    with pytest.raises(ValueError):
        formats.parse_frt("NOPE 5 11\n")
    with pytest.raises(ValueError):
        formats.parse_frt("FRT 2 3\n0 1 2 3\n1 0 0\nPERP 0 0\n")
    with pytest.raises(ValueError):
        formats.parse_frt("FRT 2 3\n0 1 2\n0 1 2\nPERP 0 0\n")
    with pytest.raises(ValueError):
        formats.parse_frt("FRT 2 3\n0 1 2\n")


def test_mojette_round_trip(tmp_path, rng):
    img = rng.integers(0, 256, (4, 6))
    projs = [mojette_project(img, RationalAngle.make(q, p)) for q, p in [(0, 1), (1, -2), (3, 1)]]
    formats.write_mojette(tmp_path / "p.moj", projs, 4, 6)
    Q, P, back = formats.read_mojette(tmp_path / "p.moj")
    assert (Q, P) == (4, 6)
    for a, b in zip(projs, back):
        assert a.angle == b.angle and a.offset == b.offset and np.array_equal(a.bins, b.bins)
    with pytest.raises(ValueError):
        formats.parse_mojette("MOJ 2 2\n1 -1 0 5\n")
    with pytest.raises(ValueError):
        formats.parse_mojette("PGM 2 2\n")


def test_histogram_csv(tmp_path):
    formats.write_histogram_csv(tmp_path / "h.csv", np.array([3, 1, 0, 2]))
    assert (tmp_path / "h.csv").read_text() == "angle,count\n0,3\n1,1\n2,0\nPERP,2\n"

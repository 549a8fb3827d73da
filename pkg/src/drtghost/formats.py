"""Text and image file formats.

PGM
    P5 (binary, 8-bit) is written; P5 and P2 (ASCII) are read.
FRT
    ``FRT N M`` then one line per projection ``m t0 .. t(N-1)`` for
    ``m = 0..N-1`` and ``PERP t0 .. t(N-1)`` last.  A missing projection is
    written ``MISSING m`` (``MISSING PERP``).  Forward projections are plain
    sums; the ``1/N`` normalisation lives entirely in the inverse.  Lines
    starting with ``#`` are comments, except ``# image Q P``, which records
    the size of the image embedded at the top-left of the grid.
MOJ
    ``MOJ Q P`` then one line per projection ``p q offset b0 .. b(K-1)``.
CSV
    Multiplicity histograms as ``angle,count`` rows.
"""
from __future__ import annotations

import io
import re
from pathlib import Path

import numpy as np

from .frt import FrtSpace
from .modring import ModRing
from .mojette import MojetteProjection, RationalAngle


def _tokens(data: bytes):
    """Header tokens of a PGM, skipping ``#`` comments; yields (token, end)."""
    for m in re.finditer(rb"#[^\n]*\n?|(\S+)", data):
        if m.group(1) is not None:
            yield m.group(1), m.end()


def read_pgm(path) -> np.ndarray:
    data = Path(path).read_bytes()
    toks = _tokens(data)
    magic, _ = next(toks)
    if magic not in (b"P5", b"P2"):
        raise ValueError(f"{path}: not a P5/P2 PGM file")
    width = int(next(toks)[0])
    height = int(next(toks)[0])
    maxval_tok, end = next(toks)
    maxval = int(maxval_tok)
    if maxval > 255:
        raise ValueError(f"{path}: only 8-bit PGM is supported (maxval {maxval})")
    if magic == b"P5":
        raster = data[end + 1:end + 1 + width * height]
        if len(raster) != width * height:
            raise ValueError(f"{path}: truncated raster")
        return np.frombuffer(raster, dtype=np.uint8).reshape(height, width).astype(np.int64)
    values = [int(t) for t, _ in toks]
    if len(values) < width * height:
        raise ValueError(f"{path}: truncated raster")
    return np.array(values[:width * height], dtype=np.int64).reshape(height, width)


def write_pgm(path, img, comment: str | None = None) -> None:
    img = np.asarray(img)
    if img.min(initial=0) < 0 or img.max(initial=0) > 255:
        raise ValueError("PGM pixels must lie in [0, 255]")
    height, width = img.shape
    header = "P5\n"
    if comment:
        header += "".join(f"# {line}\n" for line in comment.splitlines())
    header += f"{width} {height}\n255\n"
    Path(path).write_bytes(header.encode("ascii") + img.astype(np.uint8).tobytes())


def residues_to_gray(img, modulus: int) -> np.ndarray:
    """Linear map of residues ``[0, M-1]`` onto ``[0, 255]``."""
    img = np.asarray(img, dtype=np.int64) % modulus
    return (img * 255 + (modulus - 1) // 2) // max(modulus - 1, 1)


def write_residue_pgm(path, img, modulus: int, what: str = "") -> None:
    note = f"{what} residues mod {modulus} scaled [0,{modulus - 1}] -> [0,255]".strip()
    write_pgm(path, residues_to_gray(img, modulus), comment=note)


SCALING_NOTE = "# rows are plain sums mod M; the inverse divides by N"


def format_frt(space: FrtSpace, image_shape=None) -> str:
    N = space.N
    lines = [f"FRT {N} {space.ring.modulus}", SCALING_NOTE]
    if image_shape is not None:
        lines.append(f"# image {image_shape[0]} {image_shape[1]}")
    for m in range(N + 1):
        name = "PERP" if m == N else str(m)
        if space.known[m]:
            lines.append(name + " " + " ".join(str(int(v)) for v in space.rows[m]))
        else:
            lines.append(f"MISSING {name}")
    return "\n".join(lines) + "\n"


def frt_image_shape(text: str):
    """``(Q, P)`` from an ``# image Q P`` line, or ``None``."""
    for ln in text.splitlines():
        parts = ln.split()
        if parts[:2] == ["#", "image"] and len(parts) == 4:
            return int(parts[2]), int(parts[3])
    return None


def parse_frt(text: str) -> FrtSpace:
    lines = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    if not lines or lines[0][0] != "FRT" or len(lines[0]) != 3:
        raise ValueError("missing 'FRT N M' header")
    N, M = int(lines[0][1]), int(lines[0][2])
    ring = ModRing.from_modulus(M, N)
    rows = np.zeros((N + 1, N), dtype=np.int64)
    known = np.zeros(N + 1, dtype=bool)
    seen = set()
    for parts in lines[1:]:
        if parts[0] == "MISSING":
            m = N if parts[1] == "PERP" else int(parts[1])
            values = None
        else:
            m = N if parts[0] == "PERP" else int(parts[0])
            values = [int(v) for v in parts[1:]]
            if len(values) != N:
                raise ValueError(f"projection {parts[0]} has {len(values)} entries, expected {N}")
        if not 0 <= m <= N or m in seen:
            raise ValueError(f"bad or repeated projection index {m}")
        seen.add(m)
        if values is not None:
            rows[m] = values
            known[m] = True
    if len(seen) != N + 1:
        raise ValueError(f"expected {N + 1} projection lines, found {len(seen)}")
    return FrtSpace(rows, ring, known)


def write_frt(path, space: FrtSpace, image_shape=None) -> None:
    Path(path).write_text(format_frt(space, image_shape))


def read_frt(path) -> FrtSpace:
    return parse_frt(Path(path).read_text())


def format_mojette(projections, Q: int, P: int) -> str:
    out = io.StringIO()
    out.write(f"MOJ {Q} {P}\n")
    for proj in projections:
        vals = " ".join(str(int(b)) for b in proj.bins)
        out.write(f"{proj.angle.p} {proj.angle.q} {proj.offset} {vals}\n")
    return out.getvalue()


def parse_mojette(text: str) -> tuple[int, int, list[MojetteProjection]]:
    lines = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0][0] != "MOJ" or len(lines[0]) != 3:
        raise ValueError("missing 'MOJ Q P' header")
    Q, P = int(lines[0][1]), int(lines[0][2])
    projections = []
    for parts in lines[1:]:
        p, q, offset = (int(v) for v in parts[:3])
        angle = RationalAngle.make(q, p)
        if angle != (q, p):
            raise ValueError(f"direction p={p} q={q} is not in canonical sign")
        projections.append(MojetteProjection(angle, offset,
                                             np.array([int(v) for v in parts[3:]], dtype=np.int64)))
    return Q, P, projections


def write_mojette(path, projections, Q: int, P: int) -> None:
    Path(path).write_text(format_mojette(projections, Q, P))


def read_mojette(path):
    return parse_mojette(Path(path).read_text())


def write_histogram_csv(path, hist) -> None:
    N = len(hist) - 1
    rows = ["angle,count"]
    rows += [f"{'PERP' if m == N else m},{int(c)}" for m, c in enumerate(hist)]
    Path(path).write_text("\n".join(rows) + "\n")

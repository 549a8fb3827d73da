"""Command line front end: ``drtghost <command> ...``.

Commands
--------
forward       PGM image -> FRT projection file
inverse       FRT projection file -> PGM image (de-ghosts missing rows)
project       PGM image -> MOJ file of rational-angle projections
reconstruct   MOJ file -> PGM image; exit status 0 only on exact recovery
ghost-demo    ghost and operator-table images for a missing angle set
angles        angle set listing, or multiplicity histogram as CSV
bench         stage timings of a synthetic reconstruction
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import formats
from .deghost import InconsistentDataError, RedundancyError, lift_residues, reconstruct_space
from .frt import embed, frt_forward, frt_inverse
from .ghost import GhostSpec, build_ghost_1d, operator_table, support_rows
from .modring import ModRing, is_prime, next_prime, select_modulus
from .mojette import (COVERAGES, generate_angle_set, map_angle_to_frt, mapping_multiplicity,
                      mojette_project)
from .pipeline import PipelineConfig, benchmark, default_projection_count, reconstruct


def _ring(N, modulus):
    if modulus is None:
        return select_modulus(N, 256)
    return ModRing.from_modulus(modulus, N)


def _side(path, suffix):
    p = Path(path)
    return p.with_name(f"{p.stem}_{suffix}.pgm")


def cmd_forward(args):
    img = formats.read_pgm(args.image)
    N = args.size or next_prime(max(img.shape))
    if not is_prime(N):
        raise SystemExit(f"error: --size {N} is not prime")
    if max(img.shape) > N:
        raise SystemExit(f"error: {img.shape[0]}x{img.shape[1]} image does not fit in N={N}")
    space = frt_forward(embed(img, N), _ring(N, args.modulus))
    formats.write_frt(args.output, space, img.shape)
    print(f"wrote {N + 1} projections of size {N} (modulus {space.ring.modulus}) to {args.output}")
    return 0


def cmd_inverse(args):
    text = Path(args.projections).read_text()
    space = formats.parse_frt(text)
    N = space.N
    shape = formats.frt_image_shape(text)
    Q = args.rows or (shape[0] if shape else N)
    P = args.cols or (shape[1] if shape else N)
    if space.known.all():
        grid = frt_inverse(space)
    else:
        if shape is None and args.rows is None and args.cols is None:
            raise SystemExit("error: projections are missing; give --rows/--cols of the "
                             "embedded image so the zero region can be used")
        grid = reconstruct_space(space, Q, P)
    img = lift_residues(grid[:Q, :P], 255, space.ring.modulus)
    formats.write_pgm(args.output, img)
    print(f"wrote {Q}x{P} image to {args.output}")
    return 0


def cmd_project(args):
    img = formats.read_pgm(args.image)
    Q, P = img.shape
    count = args.projections or default_projection_count(Q, P, args.coverage)
    N = args.size or next_prime(max(Q, P))
    angles = generate_angle_set(count, args.coverage, N, Q, P)
    formats.write_mojette(args.output, [mojette_project(img, a) for a in angles], Q, P)
    print(f"wrote {len(angles)} projections ({args.coverage}, distinct modulo {N}) to {args.output}")
    return 0


def cmd_reconstruct(args):
    Q, P, projections = formats.read_mojette(args.projections)
    try:
        rec = reconstruct(projections, Q, P, args.size, args.modulus)
    except (RedundancyError, InconsistentDataError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    formats.write_pgm(args.output, rec.image)
    M = rec.ring.modulus
    if args.emit_ghost is not None and rec.missing:
        path = args.emit_ghost or _side(args.output, "ghost")
        formats.write_residue_pgm(path, rec.deconv_ghost, M, "de-convolution ghost")
        print(f"wrote de-convolution ghost to {path}")
    if args.emit_operators is not None:
        path = args.emit_operators or _side(args.output, "operators")
        formats.write_residue_pgm(path, operator_table(rec.ring), M, "ghost operator table")
        print(f"wrote operator table to {path}")
    print(f"N={rec.N} M={M} ghosts={rec.missing} transposed={rec.transposed} "
          f"exact={rec.exact} time={rec.timings['total'] * 1e3:.1f} ms")
    return 0 if rec.exact else 1


def cmd_ghost_demo(args):
    N = args.size
    ring = _ring(N, args.modulus)
    missing = [N if m.strip().upper() == "PERP" else int(m) for m in args.missing.split(",")]
    spec = GhostSpec(N, tuple(missing), ring)
    ghost = build_ghost_1d(spec)
    rows = support_rows(ghost)
    out = Path(args.output_dir)
    out.mkdir(parents=True, exist_ok=True)
    formats.write_residue_pgm(out / "ghost.pgm", ghost, ring.modulus, "ghost")
    formats.write_residue_pgm(out / "operators.pgm", operator_table(ring), ring.modulus,
                              "ghost operator table")
    print(f"N={N} M={ring.modulus} missing={len(spec.missing)} "
          f"ghost rows={len(rows)} (rows {rows.min()}..{rows.max()})")
    print(f"wrote {out / 'ghost.pgm'} and {out / 'operators.pgm'}")
    return 0


def cmd_angles(args):
    N = args.size
    if args.multiplicity:
        hist = mapping_multiplicity(N, args.coverage, args.bound)
        if args.csv:
            formats.write_histogram_csv(args.csv, hist)
            print(f"wrote histogram ({int(hist.sum())} directions) to {args.csv}")
        else:
            sys.stdout.write("angle,count\n")
            for m, c in enumerate(hist):
                sys.stdout.write(f"{'PERP' if m == N else m},{c}\n")
        return 0
    count = args.projections or N + 1
    angles = generate_angle_set(count, args.coverage, N, args.rows, args.cols)
    sys.stdout.write("q,p,m\n")
    for a in angles:
        m = map_angle_to_frt(a, N)
        sys.stdout.write(f"{a.q},{a.p},{'PERP' if m == N else m}\n")
    return 0


def cmd_bench(args):
    config = PipelineConfig(args.rows, args.cols, args.size, args.modulus, args.coverage,
                            args.projections, args.seed)
    report = benchmark(config, args.repeats)
    t = report["timings"]
    print(f"image {report['Q']}x{report['P']}  N={report['N']}  M={report['modulus']}  "
          f"projections={report['projections']}  ghosts={report['ghosts']}"
          + ("  (transposed)" if report["transposed"] else ""))
    for stage in ("project", "setup", "rebin", "back_projection", "plan", "deghost",
                  "lift", "verify", "total"):
        if stage in t:
            print(f"  {stage:<16}{t[stage] * 1e3:10.2f} ms")
    print(f"exact={report['exact']}")
    return 0 if report["exact"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="drtghost", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def ring_opts(p):
        p.add_argument("--size", type=int, help="prime grid size N (default: automatic)")
        p.add_argument("--modulus", type=int, help="prime modulus M = 1 mod N (default: automatic)")

    p = sub.add_parser("forward", help="finite Radon transform of a PGM image")
    p.add_argument("image")
    p.add_argument("output")
    ring_opts(p)
    p.set_defaults(func=cmd_forward)

    p = sub.add_parser("inverse", help="exact image from an FRT file")
    p.add_argument("projections")
    p.add_argument("output")
    p.add_argument("--rows", type=int, help="rows Q of the embedded image (crop / de-ghost)")
    p.add_argument("--cols", type=int, help="columns P of the embedded image")
    p.set_defaults(func=cmd_inverse)

    p = sub.add_parser("project", help="rational-angle projections of a PGM image")
    p.add_argument("image")
    p.add_argument("output")
    p.add_argument("--size", type=int, help="N used to keep mapped angles distinct")
    p.add_argument("--coverage", choices=COVERAGES, default="halfplane")
    p.add_argument("--projections", type=int, help="number of projections (default Q+1)")
    p.set_defaults(func=cmd_project)

    p = sub.add_parser("reconstruct", help="exact limited-angle reconstruction")
    p.add_argument("projections")
    p.add_argument("output")
    ring_opts(p)
    p.add_argument("--emit-ghost", nargs="?", const="", metavar="PATH",
                   help="also write the de-convolution ghost")
    p.add_argument("--emit-operators", nargs="?", const="", metavar="PATH",
                   help="also write the ghost operator table")
    p.set_defaults(func=cmd_reconstruct)

    p = sub.add_parser("ghost-demo", help="ghost and operator-table images")
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--missing", required=True, help="comma separated angles, e.g. 1,2,3,4 or PERP")
    p.add_argument("--modulus", type=int)
    p.add_argument("--output-dir", default=".")
    p.set_defaults(func=cmd_ghost_demo)

    p = sub.add_parser("angles", help="angle sets and mapping multiplicity")
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--coverage", choices=COVERAGES, default="halfplane")
    p.add_argument("--projections", type=int)
    p.add_argument("--rows", type=int)
    p.add_argument("--cols", type=int)
    p.add_argument("--multiplicity", action="store_true")
    p.add_argument("--bound", type=int, default=32, help="max(|p|,|q|) for --multiplicity")
    p.add_argument("--csv", help="write the histogram here instead of stdout")
    p.set_defaults(func=cmd_angles)

    p = sub.add_parser("bench", help="time a synthetic reconstruction")
    p.add_argument("--rows", type=int, default=100)
    p.add_argument("--cols", type=int, default=100)
    ring_opts(p)
    p.add_argument("--coverage", choices=COVERAGES, default="halfplane")
    p.add_argument("--projections", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--repeats", type=int, default=1)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Input files hold planar_code (binary, optional ``>>planar_code<<`` header)
or rotation text; the format is detected from the first bytes.  ``-`` reads
standard input.
"""

from __future__ import annotations

import argparse
import itertools
import sys
from typing import Sequence

from . import generators
from .counting import count_klein, count_projective, count_torus
from .dual import build_dual
from .graph import (GraphFormatError, PlanarMap, read_maps, validate_cubic_planar,
                    write_planar_code, write_rotation_text)
from .oracle import DEFAULT_EDGE_CAP, CapExceeded, brute_force_distribution, verify_counts
from .patterns import enumerate_surface

EXIT_OK, EXIT_MISMATCH, EXIT_BAD_INPUT = 0, 1, 2

SURFACE_CHOICES = ("pp", "torus", "klein")


class BadInput(Exception):
    pass


def _load(path: str) -> list[PlanarMap]:
    try:
        if path == "-":
            data = sys.stdin.buffer.read()
        else:
            with open(path, "rb") as fh:
                data = fh.read()
        maps = read_maps(data)
    except (OSError, GraphFormatError, UnicodeDecodeError) as exc:
        raise BadInput(str(exc)) from None
    for i, pm in enumerate(maps):
        report = validate_cubic_planar(pm)
        if not report.ok:
            raise BadInput(f"graph {i}: {report.detail}")
    return maps


def _blocks(maps, out):
    for i, pm in enumerate(maps):
        if len(maps) > 1:
            out.write(f"#graph\t{i}\n")
        yield pm


def cmd_count(args, out) -> int:
    surfaces = SURFACE_CHOICES if args.surface == "all" else (args.surface,)
    counters = {"pp": count_projective, "torus": count_torus, "klein": count_klein}
    maps = _load(args.file)
    for pm in _blocks(maps, out):
        dual = build_dual(pm)
        for s in surfaces:
            out.write(f"{s}\t{counters[s](dual)}\n")
    return EXIT_OK


def cmd_enumerate(args, out) -> int:
    maps = _load(args.file)
    for pm in _blocks(maps, out):
        matches = enumerate_surface(build_dual(pm), args.surface)
        if args.limit is not None:
            matches = itertools.islice(matches, args.limit)
        for match in matches:
            m = "-" if match.m is None else str(match.m)
            ids = ",".join(map(str, match.key))
            out.write(f"{args.surface}\t{match.kind.family}\t{m}\t{ids}\n")
            if args.flush:
                out.flush()
    return EXIT_OK


def cmd_distribution(args, out) -> int:
    maps = _load(args.file)
    for pm in _blocks(maps, out):
        try:
            dist = brute_force_distribution(pm, edge_cap=args.edge_cap, jobs=args.jobs)
        except CapExceeded as exc:
            raise BadInput(str(exc)) from None
        for surface, count in dist.rows():
            orientable = "true" if surface.orientable else "false"
            out.write(f"{surface.euler_characteristic}\t{orientable}\t{surface.name}\t{count}\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    maps = _load(args.file)
    status = EXIT_OK
    for pm in _blocks(maps, out):
        report = verify_counts(pm, edge_cap=args.edge_cap, jobs=args.jobs)
        if report.ok:
            out.write("OK\n")
        else:
            status = EXIT_MISMATCH
            out.write("\n".join(report.lines()) + "\n")
    return status


def build_fixture(spec: str) -> PlanarMap:
    name, _, rest = spec.partition(":")
    try:
        if name in ("tetrahedron", "cube", "dodecahedron") and not rest:
            return getattr(generators, name)()
        if name == "prism":
            return generators.prism(int(rest))
        if name == "trunc":
            seed, steps = rest.split(":")
            return generators.random_truncation_sequence(int(seed), int(steps))
    except ValueError as exc:
        raise BadInput(f"bad generator spec {spec!r}: {exc}") from None
    raise BadInput(f"unknown generator {spec!r}")


def cmd_gen(args, out) -> int:
    pm = build_fixture(args.spec)
    fmt = args.format or ("planar_code" if args.output else "text")
    payload = write_planar_code([pm]) if fmt == "planar_code" else write_rotation_text(pm).encode()
    if args.output:
        with open(args.output, "wb") as fh:
            fh.write(payload)
    else:
        out.flush()
        if hasattr(out, "buffer"):
            out.buffer.write(payload)
        else:
            out.write(payload.decode("latin-1"))
    return EXIT_OK


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cubic-reembed",
        description="Count and enumerate projective-plane, torus and Klein bottle "
                    "embeddings of 3-connected cubic planar graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="closed-form counts per surface")
    p.add_argument("file")
    p.add_argument("--surface", choices=SURFACE_CHOICES + ("all",), default="all")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("enumerate", help="list twist sets for one surface")
    p.add_argument("file")
    p.add_argument("--surface", choices=SURFACE_CHOICES, required=True)
    p.add_argument("--limit", type=int, default=None)
    p.add_argument("--flush", action="store_true", help="flush after every line")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("distribution", help="exhaustive surface census over all twist sets")
    p.add_argument("file")
    p.add_argument("--edge-cap", type=int, default=DEFAULT_EDGE_CAP)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_distribution)

    p = sub.add_parser("gen", help="write a fixture graph")
    p.add_argument("spec", help="tetrahedron | cube | dodecahedron | prism:M | trunc:SEED:STEPS")
    p.add_argument("-o", "--output")
    p.add_argument("--format", choices=("planar_code", "text"))
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="compare closed form, enumeration and sweep")
    p.add_argument("file")
    p.add_argument("--edge-cap", type=int, default=DEFAULT_EDGE_CAP)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = make_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except BadInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

"""Command line interface.

Exit status: 0 success, 1 invalid input, 2 a failed identity, 3 I/O error.
"""

import argparse
import json
import sys

from . import continuous, hull, moebius, partitions, projection
from .checks import VerificationError, verify

EXIT_OK, EXIT_INVALID, EXIT_MISMATCH, EXIT_IO = 0, 1, 2, 3

MAX_N = 16


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def _emit(data, fmt, text, out):
    if fmt == "json":
        out.write(json.dumps(data, sort_keys=False) + "\n")
    else:
        out.write(text if text.endswith("\n") else text + "\n")


def _check_n(n, hi=MAX_N, what="this command"):
    if not 2 <= n <= hi:
        raise ValueError(f"{what} needs 2 <= N <= {hi}, got {n}")


def cmd_enumerate(args, out):
    _check_n(args.n)
    lams = partitions.enumerate_young(args.n)
    rows = [{"partition": list(lam), "size": sum(lam), "corners": len(partitions.inner_corners(lam))}
            for lam in lams]
    width = max(len(partitions.format_partition(lam)) for lam in lams)
    lines = [f"{'partition':<{width}}  size  corners"]
    lines += [f"{partitions.format_partition(lam):<{width}}  {r['size']:>4}  {r['corners']:>7}"
              for lam, r in zip(lams, rows)]
    _emit({"n": args.n, "partitions": rows}, args.format, "\n".join(lines), out)


def _partition_arg(args):
    if args.partition is None:
        raise ValueError("--partition is required")
    lam = partitions.parse_partition(args.partition)
    partitions.check_young(lam, args.n)
    return lam


def cmd_vertex(args, out):
    _check_n(args.n)
    lam = _partition_arg(args)
    v = hull.vertex_direct(lam, args.n)
    rim = moebius.rim_of_partition(lam, args.n)
    text = (f"partition: {partitions.format_partition(lam)}\n"
            f"f: {' '.join(map(str, v.values))}\n"
            f"rim: {' '.join(f'({j},{k})' for j, k in rim.sites)}")
    _emit({"n": args.n, "partition": list(lam), "f": list(v.values), "rim": rim.to_json()},
          args.format, text, out)


def cmd_faces(args, out):
    _check_n(args.n)
    if args.count_only:
        dims = range(args.n // 2 + 1) if args.dim is None else [args.dim]
        counts = {v: len(hull.enumerate_faces(args.n, v)) for v in dims}
        text = " ".join(f"v={v}:{m}" for v, m in counts.items())
        _emit({"n": args.n, "counts": {str(v): m for v, m in counts.items()}}, args.format, text, out)
        return
    dim = 0 if args.dim is None else args.dim
    faces = hull.enumerate_faces(args.n, dim)
    text = "\n".join(f"top {partitions.format_partition(f.lam)}  corners "
                     + " ".join(f"({r},{c})" for r, c in f.corners) for f in faces)
    _emit(hull.faces_to_json(args.n, faces), args.format, text, out)


def cmd_skeleton(args, out):
    _check_n(args.n)
    skel = hull.hasse_skeleton(args.n)
    lines = [f"{i}: {partitions.format_partition(v.lam)}  f = {' '.join(map(str, v.values))}"
             for i, v in enumerate(skel.vertices)]
    lines.append(f"edges ({len(skel.edges)}): " + " ".join(f"{a}-{b}" for a, b in skel.edges))
    _emit(skel.to_json(), args.format, "\n".join(lines), out)


def cmd_project(args, out):
    _check_n(args.n)
    emb = projection.project_skeleton(args.n)
    if args.svg:
        projection.write_svg(emb, args.svg, scale=args.scale, radius=args.radius)
    origin = projection.origin_vertices(emb)
    pts = [{"partition": list(lam), "xy": [round(float(x), 12) + 0.0, round(float(y), 12) + 0.0]}
           for lam, (x, y) in zip(emb.partitions, emb.points)]
    lines = [f"{partitions.format_partition(p['partition'])}  {p['xy'][0]: .9f} {p['xy'][1]: .9f}" for p in pts]
    lines.append("at origin: " + (" ".join(partitions.format_partition(l) for l in origin) or "none"))
    if args.svg:
        lines.append(f"svg written to {args.svg}")
    _emit({"n": args.n, "points": pts, "edges": [list(e) for e in emb.edges],
           "origin": [list(l) for l in origin]}, args.format, "\n".join(lines), out)


def cmd_verify(args, out):
    _check_n(args.n)
    if args.oracle:
        _check_n(args.n, hull.ORACLE_MAX_N, "the vertex oracle")
    lines = []
    verify(args.n, oracle=args.oracle, samples=args.samples, seed=args.seed, log=lines.append)
    lines.append("verify: all checks passed")
    _emit({"n": args.n, "report": lines, "ok": True}, args.format, "\n".join(lines), out)


def cmd_continuous(args, out):
    if args.partition is not None:
        _check_n(args.n)
        lam = _partition_arg(args)
        disc, prof = continuous.discretize_profile(lam, args.n)
        lo = disc.start
        text = (f"t:      {' '.join(f'{t:>3}' for t in range(lo, lo + args.n))}\n"
                f"height: {' '.join(f'{h:>3}' for h in disc.heights)}\n"
                f"profile: {json.dumps(prof.to_json())}")
        _emit({"n": args.n, "partition": list(lam), "start": lo, "heights": list(disc.heights),
               "profile": prof.to_json()}, args.format, text, out)
        return
    failures = continuous.check_identities(samples=args.samples, seed=args.seed)
    total = args.samples * 10
    text = f"rectangle identity: {total - failures}/{total} exact matches (seed {args.seed})"
    _emit({"samples": args.samples, "seed": args.seed, "checked": total, "failures": failures},
          args.format, text, out)
    if failures:
        raise VerificationError(f"{failures} rectangle identity failures")


COMMANDS = {
    "enumerate": cmd_enumerate,
    "vertex": cmd_vertex,
    "faces": cmd_faces,
    "skeleton": cmd_skeleton,
    "project": cmd_project,
    "verify": cmd_verify,
    "continuous": cmd_continuous,
}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, default=5, help="number of points N (default 5)")
    common.add_argument("--format", choices=["text", "json"], default="text")
    parser = _Parser(prog="younghull", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)
    sub.add_parser("enumerate", parents=[common], help="list the partitions in Y_N")
    p = sub.add_parser("vertex", parents=[common], help="hull vertex and rim of a partition")
    p.add_argument("--partition", help="comma separated parts; 0 is the empty partition")
    p = sub.add_parser("faces", parents=[common], help="faces of the hull")
    p.add_argument("--dim", type=int)
    p.add_argument("--count-only", action="store_true")
    sub.add_parser("skeleton", parents=[common], help="1-skeleton (JSON export with --format json)")
    p = sub.add_parser("project", parents=[common], help="planar projection, optional SVG")
    p.add_argument("--svg", metavar="PATH")
    p.add_argument("--scale", type=float, default=100.0, metavar="PX")
    p.add_argument("--radius", type=float, default=2.0, metavar="PX")
    p = sub.add_parser("verify", parents=[common], help="run all consistency checks for N")
    p.add_argument("--oracle", action="store_true", help="also run the brute-force vertex oracle")
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p = sub.add_parser("continuous", parents=[common], help="continuous profiles")
    p.add_argument("--partition")
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    return parser


def run(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        err.write(f"{exc}\n")
        return EXIT_INVALID
    try:
        COMMANDS[args.verb](args, out)
    except VerificationError as exc:
        err.write(f"verification failed: {exc}\n")
        return EXIT_MISMATCH
    except OSError as exc:
        err.write(f"I/O error: {exc}\n")
        return EXIT_IO
    except ValueError as exc:
        err.write(f"invalid input: {exc}\n")
        return EXIT_INVALID
    return EXIT_OK


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()

"""``mgk`` command line.

Every subcommand is a thin wrapper over library calls.  Exit status is 0
on success, 1 when a checked property fails and 2 on bad input.
"""

import argparse
import os
import sys

from . import filling, geometry, graphs, turaev_viro
from .census import enumerate_census
from .isosig import decode_signature
from .records import build_records, write_census
from .regression import run_regression

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

_USER_ERRORS = (
    ValueError,  # DomainError, SlopeError, SignatureError, TVError, ...
    graphs.ResourceGuardError,
)


def _num(x):
    return f"{x:.12f}"


def counts_table(counts, n):
    """Rows ``c = g + k``, one column per number of cusps."""
    ks = range(0, max([k for _, k in counts] + [2]) + 1)
    head = "c  " + "".join(f"{'M_{c-%d,%d}' % (k, k) if k else 'M_{c,0}':>12}" for k in ks)
    row = f"{n:<3}" + "".join(f"{counts.get((n - k, k), '-'):>12}" for k in ks)
    return head + "\n" + row


def cmd_census(args):
    if args.ceiling is not None:
        os.environ["MGK_CEILING"] = str(args.ceiling)
    table = enumerate_census(args.tets, jobs=args.jobs)
    if args.max_cells is not None:
        table.cells = {key: sigs[:args.max_cells] for key, sigs in table.cells.items()}
    records = build_records(table, volumes=not args.no_volume)
    if args.out:
        write_census(records, args.out)
    print(counts_table(table.counts(), args.tets))
    return EXIT_OK


def cmd_geom(args):
    sol = geometry.solve_angles(args.g, args.k)
    print(f"g={args.g} k={args.k}")
    if sol.alpha is not None:
        print(f"alpha {_num(sol.alpha)}")
    if sol.beta is not None:
        print(f"beta {_num(sol.beta)}")
    print(f"residual_length {sol.residual_length:.3e}")
    print(f"residual_angle {sol.residual_angle:.3e}")
    status = EXIT_OK
    if args.volume:
        from .volume import manifold_volume
        v = manifold_volume(args.g, args.k)
        if v.vol_id_block is not None:
            print(f"vol_id_block {_num(v.vol_id_block)}")
        if v.vol_reg_block is not None:
            print(f"vol_reg_block {_num(v.vol_reg_block)}")
        print(f"volume {_num(v.total)}")
    if args.tilts:
        for name, total in geometry.tilts(args.g, args.k, args.r).pairs:
            print(f"tilt {name} {_num(total)}")
    if args.check_canonical:
        ok, r = geometry.check_canonical(args.g, args.k)
        print(f"canonical {'yes' if ok else 'no'}" + (f" r={r:g}" if ok else ""))
        if not ok:
            status = EXIT_FAIL
    return status


def cmd_fill(args):
    slopes = filling.parse_slope_list(args.slopes)
    print(filling.classify_filling(args.g, args.k, slopes))
    return EXIT_OK


def cmd_farey(args):
    a, b = filling.Slope.parse(args.a), filling.Slope.parse(args.b)
    print(filling.farey_distance(a, b))
    return EXIT_OK


def cmd_tv(args):
    T = decode_signature(args.isosig)
    value = turaev_viro.tv_value(T, turaev_viro.TVParams(args.r, args.root))
    print(_num(value))
    return EXIT_OK


def cmd_graphs(args):
    if args.ceiling is not None:
        os.environ["MGK_CEILING"] = str(args.ceiling)
    status = EXIT_OK
    for n in range(1, args.n + 1):
        rep = graphs.growth_bounds_check(n, len(graphs.enumerate_graphs(n)))
        print(f"n={n} count={rep.count} upper={rep.upper} "
              f"lower={rep.lower_numerator}/{rep.lower_denominator} "
              f"{'ok' if rep.holds else 'VIOLATED'}")
        if not rep.holds:
            status = EXIT_FAIL
    return status


def cmd_regress(args):
    report = run_regression(args.n, jobs=args.jobs)
    for line in report.lines():
        print(line)
    return EXIT_OK if report.passed else EXIT_FAIL


def build_parser():
    p = argparse.ArgumentParser(prog="mgk", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("census", help="enumerate M_{g,k} with n = g + k tetrahedra")
    c.add_argument("--tets", type=int, required=True)
    c.add_argument("--max-cells", type=int, default=None,
                   help="write at most this many records per (g,k) cell")
    c.add_argument("--jobs", type=int, default=1)
    c.add_argument("--ceiling", type=int, default=None)
    c.add_argument("--no-volume", action="store_true")
    c.add_argument("--out")
    c.set_defaults(func=cmd_census)

    g = sub.add_parser("geom", help="angles, volume and tilts of a cell")
    g.add_argument("--g", type=int, required=True)
    g.add_argument("--k", type=int, required=True)
    g.add_argument("--r", type=float, default=1.0)
    g.add_argument("--volume", action="store_true")
    g.add_argument("--tilts", action="store_true")
    g.add_argument("--check-canonical", action="store_true")
    g.set_defaults(func=cmd_geom)

    f = sub.add_parser("fill", help="classify a Dehn filling")
    f.add_argument("--g", type=int, required=True)
    f.add_argument("--k", type=int, required=True)
    f.add_argument("--slopes", required=True, help='e.g. "1=3,2=-1/2"')
    f.set_defaults(func=cmd_fill)

    fa = sub.add_parser("farey", help="distance between two slopes")
    fa.add_argument("a")
    fa.add_argument("b")
    fa.set_defaults(func=cmd_farey)

    t = sub.add_parser("tv", help="Turaev-Viro invariant of a signature")
    t.add_argument("--isosig", required=True)
    t.add_argument("--r", type=int, required=True)
    t.add_argument("--root", type=int, default=1)
    t.set_defaults(func=cmd_tv)

    gr = sub.add_parser("graphs", help="face-pairing graph counts and bounds")
    gr.add_argument("--n", type=int, default=4)
    gr.add_argument("--ceiling", type=int, default=None)
    gr.set_defaults(func=cmd_graphs)

    r = sub.add_parser("regress", help="replay the census table up to N tetrahedra")
    r.add_argument("n", type=int)
    r.add_argument("--jobs", type=int, default=1)
    r.set_defaults(func=cmd_regress)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _USER_ERRORS as exc:
        print(f"mgk: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

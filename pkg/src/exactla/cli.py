"""Command-line interface.

Subcommands: charpoly, det, validate, bench.  Exit codes: 0 success,
2 validation disagreement, 1 usage or input errors.
"""

import argparse
import sys

from . import bench, registry
from .errors import ExactLAError
from .matrix import parse_matrix
from .modular import det_modular
from .elimination import det_fraction_free, det_field


def _read_matrix(path):
    with open(path) as fh:
        return parse_matrix(fh.read())


def cmd_charpoly(args):
    m = _read_matrix(args.infile)
    if m.rows != m.cols:
        print("error: charpoly needs a square matrix", file=sys.stderr)
        return 1
    algo = registry.get(args.algo)
    reason = algo.applicable(m.ring, m.rows)
    if reason is not None:
        print("error: %s" % reason, file=sys.stderr)
        return 1
    cp = algo.run(m)
    print(cp.format())
    return 0


def cmd_det(args):
    m = _read_matrix(args.infile)
    if m.rows != m.cols:
        print("error: det needs a square matrix", file=sys.stderr)
        return 1
    ring = m.ring
    if args.modular:
        if ring.name != "Z":
            print("error: --modular needs an integer matrix", file=sys.stderr)
            return 1
        print(det_modular(m))
        return 0
    if ring.spec.is_field:
        print(ring.format(det_field(m)))
    elif ring.spec.is_integral_domain and ring.spec.has_exact_division:
        print(ring.format(det_fraction_free(m)))
    else:
        from .charpoly import charpoly_berkowitz
        print(ring.format(charpoly_berkowitz(m).constant_term()))
    return 0


def cmd_validate(args):
    params = ()
    if args.p or args.vars or args.ideal:
        params = tuple(sorted((k, v) for k, v in
                              (("p", args.p), ("vars", args.vars), ("ideal", args.ideal))
                              if v))
    case = bench.BenchCase(args.group, args.n, args.seed, "", params)
    a = bench.generate_matrix(case)
    report = bench.cross_validate(a)
    for e in report.entries:
        if e.status == "ok":
            print("%-20s %s" % (e.algo, e.digest))
        else:
            print("%-20s skipped: %s" % (e.algo, e.status))
    if not report.unanimous:
        print("DISAGREEMENT between %s and %s" % report.disagreement)
        return 2
    print("unanimous: %d algorithms agree" % len(report.ran()))
    return 0


def cmd_bench(args):
    with open(args.config) as fh:
        cfg = bench.parse_config(fh.read())
    records, csv_text, md_text, unanimous = bench.run_benchmark(cfg)
    with open(args.out_csv, "w") as fh:
        fh.write(csv_text)
    with open(args.out_md, "w") as fh:
        fh.write(md_text)
    print("wrote %d records to %s and %s" % (len(records), args.out_csv, args.out_md))
    if not unanimous:
        print("DISAGREEMENT: algorithm digests differ on at least one case")
        return 2
    return 0


def build_parser():
    ap = argparse.ArgumentParser(prog="exactla",
                                 description="exact linear algebra over commutative rings")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("charpoly", help="characteristic polynomial of a matrix file")
    p.add_argument("--algo", default="berkowitz", choices=sorted(registry.ids()))
    p.add_argument("--in", dest="infile", required=True)
    p.set_defaults(fn=cmd_charpoly)

    p = sub.add_parser("det", help="determinant of a matrix file")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--modular", action="store_true",
                   help="CRT pipeline over word-sized primes (integer matrices)")
    p.set_defaults(fn=cmd_det)

    p = sub.add_parser("validate", help="cross-validate all applicable algorithms")
    p.add_argument("--group", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--p", type=int, default=None, help="group-3 prime")
    p.add_argument("--vars", default=None, help="group-3 variables, comma-separated")
    p.add_argument("--ideal", default=None, help="group-3 ideal literals, ';'-separated")
    p.set_defaults(fn=cmd_validate)

    p = sub.add_parser("bench", help="run the benchmark protocol")
    p.add_argument("--config", required=True)
    p.add_argument("--out-csv", required=True)
    p.add_argument("--out-md", required=True)
    p.set_defaults(fn=cmd_bench)
    return ap


def main(argv=None):
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return 1 if e.code not in (0, None) else 0
    try:
        return args.fn(args)
    except ExactLAError as e:
        print("error: %s" % e, file=sys.stderr)
        return 1
    except OSError as e:
        print("error: %s" % e, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

"""Benchmark harness: the five deterministic matrix families, cross-
validation across algorithms, and instrumented timing/op-count runs.

Operation counting instruments the innermost scalar ring (Z coefficients
for the integer and Z[x] families); for the multivariate families
(groups 2 and 3) the counters record entry-ring operations instead,
since their coefficient arithmetic is not ring-routed.
"""

import time
from dataclasses import dataclass, field

from . import registry
from .errors import ConfigError, InvalidGroupParams
from .matrix import DenseMatrix
from .rings import (QQ, ZZ, CountingRing, MultiPolynomialRing, OpStats,
                    PolynomialRing, QuotientRing)
from .rng import Rng


@dataclass(frozen=True)
class BenchCase:
    group: int
    n: int
    seed: int
    algo: str = ""
    params: tuple = ()        # sorted (key, value) pairs for ring parameters

    def param(self, key, default=None):
        for k, v in self.params:
            if k == key:
                return v
        return default


@dataclass
class BenchRecord:
    case: BenchCase
    ring_name: str
    ms: float
    stats: OpStats
    max_bits: int
    digest: str


def _case_rng(case):
    return Rng((case.seed << 16) ^ (case.group << 8) ^ case.n)


def group_ring(case):
    g = case.group
    if g in (1, 5):
        return ZZ
    if g == 2:
        return MultiPolynomialRing(None, ("x", "y"))
    if g == 3:
        p = int(case.param("p", 7))
        varnames = [v.strip() for v in str(case.param("vars", "x")).split(",")]
        helper = MultiPolynomialRing(p, varnames)
        ideal_lit = str(case.param("ideal", "1*x^3+-1"))
        gens = [helper.parse(t) for t in ideal_lit.split(";")]
        return QuotientRing(p, varnames, gens)
    if g == 4:
        return PolynomialRing(ZZ, "x")
    raise InvalidGroupParams("group must be 1..5, got %r" % (g,))


def generate_matrix(case, ring=None):
    """Deterministic matrix for a case; same case, same bits anywhere."""
    if ring is None:
        ring = group_ring(case)
    n = case.n
    if n < 1:
        raise InvalidGroupParams("matrix order must be positive")
    rng = _case_rng(case)
    g = case.group
    if g == 1:
        return DenseMatrix(ring, n, n, [rng.int_between(-99, 99) for _ in range(n * n)])
    if g == 2:
        return DenseMatrix(ring, n, n,
                           [ring.random_element(rng, total_degree=5, bound=99)
                            for _ in range(n * n)])
    if g == 3:
        return DenseMatrix(ring, n, n, [ring.random_element(rng) for _ in range(n * n)])
    if g == 4:
        return jou_matrix(n, ring)
    if g == 5:
        nonzeros = int(case.param("nonzeros", 2 * n))
        entries = [0] * (n * n)
        placed = 0
        while placed < min(nonzeros, n * n):
            pos = rng.below(n * n)
            if entries[pos] == 0:
                val = 0
                while val == 0:
                    val = rng.int_between(-99, 99)
                entries[pos] = val
                placed += 1
        return DenseMatrix(ring, n, n, entries)
    raise InvalidGroupParams("group must be 1..5, got %r" % (g,))


def jou_matrix(n, ring=None):
    """[Jou]_ij = x + x^2 (x - ij)^2 + (x^2 + j)(x + i)^2; rank <= 3."""
    if ring is None:
        ring = PolynomialRing(ZZ, "x")
    entries = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            coeffs = (i * i * j,
                      2 * i * j + 1,
                      i * i * j * j + i * i + j,
                      2 * i - 2 * i * j,
                      2)
            entries.append(tuple(ring.base.from_int(c) for c in coeffs))
    return DenseMatrix(ring, n, n, entries)


@dataclass
class ValidationEntry:
    algo: str
    status: str          # "ok" or a skip reason
    digest: str = ""
    charpoly: object = None


@dataclass
class ValidationReport:
    entries: list = field(default_factory=list)
    unanimous: bool = True
    disagreement: tuple = ()

    def ran(self):
        return [e for e in self.entries if e.status == "ok"]


def cross_validate(a, algos=None):
    """Run every applicable algorithm; disagreement is reported, not raised."""
    ring = a.ring
    n = a.rows
    report = ValidationReport()
    reference = None
    for algo_id in (algos or registry.ids()):
        algo = registry.get(algo_id)
        mat = a
        reason = algo.applicable(ring, n)
        if reason is not None and algo.id == "hessenberg" and ring is ZZ:
            mat, reason = _lift_to_q(a), None
        if reason is not None:
            report.entries.append(ValidationEntry(algo_id, reason))
            continue
        try:
            cp = algo.run(mat)
        except NotImplementedError as e:
            # declared applicable but outside this build's support
            # (e.g. the Frobenius block fallback over a multivariate ring)
            report.entries.append(ValidationEntry(algo_id, "unsupported: %s" % e))
            continue
        digest = cp.digest() if mat is a else _digest_in_base(cp, ring)
        report.entries.append(ValidationEntry(algo_id, "ok", digest, cp))
        if reference is None:
            reference = (algo_id, digest)
        elif digest != reference[1] and report.unanimous:
            report.unanimous = False
            report.disagreement = (reference[0], algo_id)
    return report


def _lift_to_q(a):
    from fractions import Fraction
    return a.with_ring(QQ, Fraction)


def _digest_in_base(cp, base_ring):
    """Digest of a lifted (rational) result, retracted to the base ring."""
    from .charpoly import CharPoly
    back = []
    for c in cp.coeffs:
        if c.denominator != 1:
            return "non-integral:" + cp.digest()
        back.append(c.numerator)
    return CharPoly(base_ring, back).digest()


def run_case(case):
    """Instrumented single run; returns a BenchRecord."""
    entry_ring = group_ring(case)
    if case.group in (1, 5):
        counted = CountingRing(ZZ, track_bits=True)
        ring = counted
        a = generate_matrix(case, ring)
    elif case.group == 4:
        counted = CountingRing(ZZ, track_bits=True)
        ring = PolynomialRing(counted, "x")
        a = generate_matrix(case, ring)
    else:
        counted = CountingRing(entry_ring, track_bits=True)
        ring = counted
        a = generate_matrix(case, ring)
    algo = registry.get(case.algo)
    reason = algo.applicable(entry_ring, case.n)
    mat = a
    if reason is not None and case.algo == "hessenberg" and case.group in (1, 5):
        mat = _lift_to_q_counted(a)
        counted = mat.ring
        reason = None
    if reason is not None:
        raise InvalidGroupParams("%s not applicable: %s" % (case.algo, reason))
    t0 = time.perf_counter()
    cp = algo.run(mat)
    ms = (time.perf_counter() - t0) * 1000.0
    digest = cp.digest() if mat is a else _digest_in_base(cp, ZZ)
    return BenchRecord(case, entry_ring.name, ms, counted.stats, counted.max_bits, digest)


def _lift_to_q_counted(a):
    from fractions import Fraction
    counted = CountingRing(QQ, track_bits=True)
    return a.with_ring(counted, lambda x: Fraction(x))


CSV_COLUMNS = "group,n,seed,algo,ring,ms,adds,subs,muls,divs,exact_divs,max_bits,digest"


def parse_config(text):
    """key=value lines; lists are comma-separated; '#' starts a comment."""
    out = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError("line %d: expected key=value" % lineno)
        key, _, val = line.partition("=")
        out[key.strip()] = val.strip()
    return out


def _intlist(cfg, key, default):
    raw = cfg.get(key, default)
    if not raw:
        return []
    try:
        return [int(x) for x in raw.split(",") if x.strip()]
    except ValueError:
        raise ConfigError("bad integer list for %r" % key)


def run_benchmark(cfg):
    """Config dict -> (records, csv_text, markdown_text, unanimous)."""
    groups = _intlist(cfg, "groups", "1")
    sizes = _intlist(cfg, "sizes", "8")
    seeds = _intlist(cfg, "seeds", "1")
    algos = [a.strip() for a in cfg.get("algos", "berkowitz").split(",") if a.strip()]
    params = tuple(sorted((k, cfg[k]) for k in ("p", "vars", "ideal", "nonzeros")
                          if k in cfg))
    records = []
    unanimous = True
    for g in groups:
        for n in sizes:
            for seed in seeds:
                digests = {}
                for algo in algos:
                    case = BenchCase(g, n, seed, algo, params)
                    entry_ring = group_ring(case)
                    if registry.get(algo).applicable(entry_ring, n) is not None \
                            and not (algo == "hessenberg" and g in (1, 5)):
                        continue
                    rec = run_case(case)
                    records.append(rec)
                    digests.setdefault(rec.digest, []).append(algo)
                if len(digests) > 1:
                    unanimous = False
    csv_text = render_csv(records)
    md_text = render_markdown(records)
    return records, csv_text, md_text, unanimous


def render_csv(records):
    lines = [CSV_COLUMNS]
    for r in records:
        s = r.stats
        ring = '"%s"' % r.ring_name if "," in r.ring_name else r.ring_name
        lines.append("%d,%d,%d,%s,%s,%.3f,%d,%d,%d,%d,%d,%d,%s" % (
            r.case.group, r.case.n, r.case.seed, r.case.algo, ring,
            r.ms, s.adds, s.subs, s.muls, s.divs, s.exact_divs,
            r.max_bits, r.digest))
    return "\n".join(lines) + "\n"


def render_markdown(records):
    """One table per group: rows = n, columns = algorithms (like the
    experimental comparison tables: time above, op total below)."""
    by_group = {}
    for r in records:
        by_group.setdefault(r.case.group, []).append(r)
    out = []
    for g in sorted(by_group):
        rows = by_group[g]
        algos = sorted({r.case.algo for r in rows})
        sizes = sorted({r.case.n for r in rows})
        out.append("## Group %d (%s)\n" % (g, rows[0].ring_name))
        out.append("| n | " + " | ".join(algos) + " |")
        out.append("|---" * (len(algos) + 1) + "|")
        for n in sizes:
            cells = []
            for algo in algos:
                sel = [r for r in rows if r.case.n == n and r.case.algo == algo]
                if not sel:
                    cells.append("n/a")
                else:
                    ms = sum(r.ms for r in sel) / len(sel)
                    ops = sum(r.stats.total for r in sel) // len(sel)
                    cells.append("%.1f ms / %d ops" % (ms, ops))
            out.append("| %d | " % n + " | ".join(cells) + " |")
        out.append("")
    return "\n".join(out) + "\n"

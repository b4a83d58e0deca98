"""Replay the census table and the structural claims about its members."""

from dataclasses import dataclass, field

from .census import enumerate_census
from .geometry import check_canonical
from .homology import homology_h1
from .isosig import decode_signature
from .turaev_viro import TVParams, tv_value

EXPECTED_COUNTS = {
    2: {(2, 0): 8},
    3: {(3, 0): 74, (2, 1): 1},
    4: {(4, 0): 2340, (3, 1): 12, (2, 2): 1},
}

TV_LEVELS = (3, 4, 5)


@dataclass
class RegressionReport:
    n_max: int
    checks: list = field(default_factory=list)   # (name, ok, detail)

    def add(self, name, ok, detail=""):
        self.checks.append((name, bool(ok), detail))

    @property
    def passed(self):
        return all(ok for _, ok, _ in self.checks)

    @property
    def failures(self):
        return [name for name, ok, _ in self.checks if not ok]

    def lines(self):
        for name, ok, detail in self.checks:
            yield f"{'PASS' if ok else 'FAIL'}  {name}" + (f"  ({detail})" if detail else "")


def run_regression(n_max, jobs=1, tv_levels=TV_LEVELS, tables=None):
    """Enumerate n = 2..n_max and check counts, H_1, canonicality and TV.

    ``tables`` may supply precomputed census tables keyed by ``n``.
    """
    if n_max not in EXPECTED_COUNTS and n_max > max(EXPECTED_COUNTS):
        raise ValueError(f"no reference counts beyond n={max(EXPECTED_COUNTS)}")
    report = RegressionReport(n_max)
    tables = dict(tables or {})
    for n in range(2, n_max + 1):
        table = tables.get(n) or enumerate_census(n, jobs=jobs)
        counts = table.counts()
        report.add(f"counts n={n}", counts == EXPECTED_COUNTS[n],
                   ", ".join(f"#M_{{{g},{k}}}={c}" for (g, k), c in counts.items()))

        bad_h1 = []
        for sig, g, k in table.records():
            h = homology_h1(decode_signature(sig))
            if h.rank != g + k or h.torsion:
                bad_h1.append(sig)
        report.add(f"H_1 free of rank g+k n={n}", not bad_h1,
                   f"{len(bad_h1)} exceptions" if bad_h1 else "")

        for (g, k) in counts:
            ok, r = check_canonical(g, k)
            report.add(f"canonical ({g},{k})", ok, f"r={r}" if ok else "no r found")

        for level in tv_levels:
            params = TVParams(level)
            for (g, k), sigs in table.cells.items():
                vals = [tv_value(decode_signature(s), params) for s in sigs]
                spread = max(vals) - min(vals)
                report.add(f"TV constant ({g},{k}) r={level}", spread <= 1e-9,
                           f"value={vals[0]:.12f} spread={spread:.1e}")
    return report

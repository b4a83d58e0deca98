import os
import random

import pytest

from mgk import perm as P
from mgk.census import enumerate_census
from mgk.triangulation import Triangulation, TriangulationError

FIGURE_EIGHT_TEXT = """\
1:1302 1:2031 1:0321 1:2103
0:1302 0:2031 0:0321 0:2103
"""

_TABLES = {}


def census_table(n):
    """Census tables are expensive at n=4, so each n is built once per run."""
    if n not in _TABLES:
        _TABLES[n] = enumerate_census(n)
    return _TABLES[n]


@pytest.fixture(scope="session")
def census():
    return census_table


@pytest.fixture
def figure_eight():
    return Triangulation.from_text(FIGURE_EIGHT_TEXT)


def random_triangulation(n, rng, orientable=None, tries=1000):
    """A random connected gluing of ``n`` tetrahedra.

    With ``orientable=True`` only orientation-reversing face maps are drawn
    (using a random orientation of each tetrahedron), with ``False`` at
    least one gluing breaks orientability.
    """
    for _ in range(tries):
        faces = [(t, f) for t in range(n) for f in range(4)]
        rng.shuffle(faces)
        eps = [rng.choice((1, -1)) for _ in range(n)]
        pairs = []
        for i in range(0, len(faces), 2):
            (t, f), (t2, f2) = faces[i], faces[i + 1]
            choices = [p for p in P.S4 if p[f] == f2]
            if orientable is True:
                choices = [p for p in choices if eps[t] * eps[t2] * P.sign(p) == -1]
            pairs.append((t, f, t2, rng.choice(choices)))
        try:
            T = Triangulation.from_pairs(n, pairs)
        except TriangulationError:
            continue
        from mgk.triangulation import is_orientable
        if orientable is False and is_orientable(T):
            continue
        return T
    raise RuntimeError("could not draw a connected triangulation")


@pytest.fixture
def rng():
    return random.Random(20240611)


def stretch_enabled():
    return os.environ.get("MGK_STRETCH", "") not in ("", "0")


def pytest_terminal_summary(terminalreporter):
    """One line per acceptance criterion, whatever the verbosity."""
    lines = {}
    for outcome in ("passed", "failed", "skipped"):
        for rep in terminalreporter.stats.get(outcome, []):
            props = dict(getattr(rep, "user_properties", ()))
            if "criterion" not in props:
                continue
            num, title = props["criterion"]
            status = {"passed": "PASS", "failed": "FAIL", "skipped": "SKIP"}[outcome]
            if rep.when == "call" or outcome != "passed":
                lines[(num, title)] = status
    if lines:
        terminalreporter.section("acceptance criteria")
        for (num, title), status in sorted(lines.items()):
            terminalreporter.write_line(f"{status}  criterion {num:>2}: {title}")

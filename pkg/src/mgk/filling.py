"""Slopes on the cusp tori and the classification of Dehn fillings.

Slopes are written in the basis in which the three loops of the
theta-shaped graph on each cusp torus have slopes 0, 1 and infinity.
The classification does not look at any triangulation: it is uniform over
every member of M_{g,k}.
"""

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations


class SlopeError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Slope:
    """Reduced ``p/q`` with ``q >= 0``; infinity is ``1/0``."""

    p: int
    q: int

    def __post_init__(self):
        p, q = self.p, self.q
        if p == 0 and q == 0:
            raise SlopeError("0/0 is not a slope")
        if q < 0 or (q == 0 and p < 0):
            p, q = -p, -q
        d = math.gcd(p, q)
        object.__setattr__(self, "p", p // d)
        object.__setattr__(self, "q", q // d)

    @classmethod
    def parse(cls, text):
        """Accept ``p/q``, an integer, or ``inf``/``oo``/``∞``/``1/0``."""
        s = str(text).strip().replace(" ", "")
        if s.lower() in ("inf", "infinity", "oo", "∞"):
            return cls(1, 0)
        m = re.fullmatch(r"([+-]?\d+)(?:/([+-]?\d+))?", s)
        if not m:
            raise SlopeError(f"cannot read slope {text!r}")
        p = int(m.group(1))
        q = int(m.group(2)) if m.group(2) is not None else 1
        return cls(p, q)

    @property
    def is_infinite(self):
        return self.q == 0

    def __str__(self):
        if self.q == 0:
            return "inf"
        if self.q == 1:
            return str(self.p)
        return f"{self.p}/{self.q}"


def S(text):
    return Slope.parse(text)


INFINITY = Slope(1, 0)


def farey_distance(a, b):
    """Geometric intersection number ``|p s - q r|`` of ``p/q`` and ``r/s``."""
    return abs(a.p * b.q - a.q * b.p)


# the six exceptional slopes on every cusp
TYPE_D = frozenset(S(x) for x in ("0", "1", "inf"))
TYPE_A = frozenset(S(x) for x in ("-1", "1/2", "2"))
# fillings along these stay inside the census families
CENSUS_SLOPES = frozenset(S(x) for x in ("-2", "-1/2", "1/3", "2/3", "3/2", "3"))


def exceptional_slopes():
    """``(D, A)``: boundary-reducible and annular slopes."""
    return TYPE_D, TYPE_A


def max_distance(X, Y):
    return max(farey_distance(a, b) for a in X for b in Y if a != b)


def delta_neg_table():
    """Largest distances realised between and within the two types."""
    D, A = exceptional_slopes()
    return {
        ("D", "D"): max_distance(D, D),
        ("D", "A"): max_distance(D, A),
        ("A", "A"): max_distance(A, A),
    }


def unimodular_image(slope, matrix):
    """Apply an integer matrix of determinant +-1 to a slope."""
    (a, b), (c, d) = matrix
    if abs(a * d - b * c) != 1:
        raise SlopeError("matrix is not unimodular")
    return Slope(a * slope.p + b * slope.q, c * slope.p + d * slope.q)


@dataclass(frozen=True)
class FillingVerdict:
    kind: str
    g: int
    k_remaining: int
    heegaard_genus: int = None

    @property
    def hyperbolic(self):
        return self.kind in ("HyperbolicGeneric", "CensusMember")

    def __str__(self):
        extra = f", heegaard_genus={self.heegaard_genus}" if self.heegaard_genus else ""
        return f"{self.kind}({self.g}, {self.k_remaining}{extra})"


def HandlebodyLike(g, k):
    return FillingVerdict("HandlebodyLike", g, k)


def AnnularNonHyperbolic(g, k):
    return FillingVerdict("AnnularNonHyperbolic", g, k)


def HyperbolicGeneric(g, k):
    return FillingVerdict("HyperbolicGeneric", g, k, g + 1)


def CensusMember(g, k):
    return FillingVerdict("CensusMember", g, k)


def classify_filling(g, k, slopes):
    """Classify ``M(slopes)`` for ``M`` in M_{g,k}.

    ``slopes`` is a list of ``(cusp index, Slope)`` with distinct indices
    in ``1..k``.  A slope in {0, 1, inf} gives the drilled handlebody
    H_{g,k-h} whatever the other slopes are; otherwise a slope in
    {-1, 1/2, 2} gives an annular manifold; otherwise the result is
    hyperbolic, and in the census when every slope is one of the six
    census slopes.
    """
    from .geometry import is_nonempty

    if not is_nonempty(g, k):
        raise SlopeError(f"M_{{{g},{k}}} is empty")
    slopes = [(int(i), s if isinstance(s, Slope) else Slope.parse(s)) for i, s in slopes]
    idx = [i for i, _ in slopes]
    if len(slopes) > k:
        raise SlopeError(f"cannot fill {len(slopes)} cusps of a manifold with {k}")
    if len(set(idx)) != len(idx):
        raise SlopeError("repeated cusp index")
    if any(not 1 <= i <= k for i in idx):
        raise SlopeError(f"cusp indices must lie in 1..{k}")
    rest = k - len(slopes)
    values = {s for _, s in slopes}
    if values & TYPE_D:
        return HandlebodyLike(g, rest)
    if values & TYPE_A:
        return AnnularNonHyperbolic(g, rest)
    if values <= CENSUS_SLOPES:
        return CensusMember(g, rest)
    return HyperbolicGeneric(g, rest)


def parse_slope_list(text):
    """Read ``"1=p/q,2=r/s"`` into ``[(1, Slope), (2, Slope)]``."""
    out = []
    for item in filter(None, (x.strip() for x in text.split(","))):
        i, sep, s = item.partition("=")
        if not sep:
            raise SlopeError(f"expected cusp=slope, got {item!r}")
        out.append((int(i), Slope.parse(s)))
    return out


def as_fraction(slope):
    return None if slope.is_infinite else Fraction(slope.p, slope.q)


def pairwise_distances(slopes):
    return {(a, b): farey_distance(a, b) for a, b in combinations(slopes, 2)}

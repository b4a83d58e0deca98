"""Turaev-Viro state sums on ideal triangulations.

Colours are half-integers ``0, 1/2, ..., (r-2)/2``; internally every
colour is stored doubled so that all arithmetic on them is integral.
Normalisation: each edge coloured ``j`` contributes the quantum dimension
``(-1)^(2j) [2j+1]`` and each tetrahedron its tetrahedrally symmetric
quantum 6j-symbol, so the all-zero state has weight 1.  Ideal vertices
carry no factor.
"""

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .triangulation import edge_index, edge_classes

MAX_STATES = 10 ** 6


class TVError(ValueError):
    pass


@dataclass(frozen=True)
class TVParams:
    r: int
    root: int = 1

    def __post_init__(self):
        if self.r < 3:
            raise TVError("r must be at least 3")
        if math.gcd(self.root, 2 * self.r) != 1:
            raise TVError(f"root index {self.root} is not coprime to {2 * self.r}")

    @property
    def q(self):
        return cmath.exp(1j * math.pi * self.root / self.r)

    @property
    def colours(self):
        """Doubled colours ``0 .. r-2``."""
        return range(self.r - 1)


@lru_cache(maxsize=None)
def _qint_table(r, root):
    # [n] = sin(n pi root / r) / sin(pi root / r), real for every root
    s = math.sin(math.pi * root / r)
    ints = [math.sin(n * math.pi * root / r) / s for n in range(2 * r)]
    facts = [1.0]
    for n in range(1, 2 * r):
        facts.append(facts[-1] * ints[n])
    return ints, facts


def qint(n, params):
    return _qint_table(params.r, params.root)[0][n]


def qfact(n, params):
    return _qint_table(params.r, params.root)[1][n]


def admissible(a, b, c, r):
    """Doubled colours ``a, b, c`` form an admissible triple at level ``r``."""
    return ((a + b + c) % 2 == 0 and a <= b + c and b <= a + c and c <= a + b
            and a + b + c <= 2 * (r - 2))


def edge_weight(j, params):
    """Quantum dimension of doubled colour ``j``."""
    return (-1) ** j * qint(j + 1, params)


def _delta(a, b, c, params):
    f = _qint_table(params.r, params.root)[1]
    num = f[(a + b - c) // 2] * f[(a - b + c) // 2] * f[(-a + b + c) // 2]
    return cmath.sqrt(num / f[(a + b + c) // 2 + 1])


def sixj(a, b, c, d, e, f, params):
    """Symmetric quantum 6j-symbol of doubled colours.

    The triples ``(a,b,c), (a,e,f), (d,b,f), (d,e,c)`` are the faces of the
    tetrahedron; ``d, e, f`` sit opposite ``a, b, c``.
    """
    r = params.r
    triples = ((a, b, c), (a, e, f), (d, b, f), (d, e, c))
    for t in triples:
        if not admissible(*t, r):
            raise TVError(f"inadmissible triple {tuple(x / 2 for x in t)}")
    return _sixj(a, b, c, d, e, f, params.r, params.root)


@lru_cache(maxsize=None)
def _sixj(a, b, c, d, e, f, r, root):
    params = TVParams(r, root)
    fact = _qint_table(r, root)[1]
    t1 = (a + b + c) // 2
    t2 = (a + e + f) // 2
    t3 = (d + b + f) // 2
    t4 = (d + e + c) // 2
    q1 = (a + b + d + e) // 2
    q2 = (a + c + d + f) // 2
    q3 = (b + c + e + f) // 2
    total = 0.0
    for z in range(max(t1, t2, t3, t4), min(q1, q2, q3) + 1):
        den = (fact[z - t1] * fact[z - t2] * fact[z - t3] * fact[z - t4]
               * fact[q1 - z] * fact[q2 - z] * fact[q3 - z])
        total += (-1) ** z * fact[z + 1] / den
    pref = (_delta(a, b, c, params) * _delta(a, e, f, params)
            * _delta(d, b, f, params) * _delta(d, e, c, params))
    return pref * total


# tetrahedron edges as (a, b, c, d, e, f): face 012 first, then opposites
_TET_EDGES = ((0, 1), (0, 2), (1, 2), (2, 3), (1, 3), (0, 3))


def tv_value(T, params, max_states=MAX_STATES):
    """Turaev-Viro state sum of ``T`` at ``params``.

    Sums over all colourings of the edge classes whose faces are all
    admissible, in lexicographic order of colourings.
    """
    index = edge_index(T)
    nedges = len(edge_classes(T))
    states = (params.r - 1) ** nedges
    if states > max_states:
        raise TVError(f"{states} colourings exceed the bound {max_states}")
    tets = [tuple(index[(t, a, b)] for a, b in _TET_EDGES) for t in range(T.n)]
    faces = set()
    for t in tets:
        a, b, c, d, e, f = t
        faces |= {tuple(sorted(x)) for x in ((a, b, c), (a, e, f), (d, b, f), (d, e, c))}
    incidence = [0] * nedges
    for ec_i, ec in enumerate(edge_classes(T)):
        incidence[ec_i] = ec.incidence
    total = 0j
    for col in product(params.colours, repeat=nedges):
        if not all(admissible(col[i], col[j], col[k], params.r) for i, j, k in faces):
            continue
        term = 1 + 0j
        for j in col:
            term *= edge_weight(j, params)
        for a, b, c, d, e, f in tets:
            term *= _sixj(col[a], col[b], col[c], col[d], col[e], col[f],
                          params.r, params.root)
        total += term
    if abs(total.imag) > 1e-10 * max(1.0, abs(total.real)):
        raise TVError(f"state sum has imaginary part {total.imag!r}")
    return total.real

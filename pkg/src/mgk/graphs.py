"""Connected 4-valent multigraphs (face-pairing graphs).

A face-pairing graph has one vertex per tetrahedron and one edge per pair
of glued faces; loops are allowed and count twice towards the degree.
"""

import math
import os
from dataclasses import dataclass
from itertools import permutations

import numpy as np

DEFAULT_CEILING = 6


class ResourceGuardError(RuntimeError):
    """Raised when a request exceeds the configured enumeration ceiling."""


def ceiling(default=DEFAULT_CEILING):
    value = os.environ.get("MGK_CEILING")
    return int(value) if value else default


@dataclass(frozen=True)
class FacePairingGraph:
    n: int
    edges: tuple

    def degree(self, v):
        return sum((a == v) + (b == v) for a, b in self.edges)

    def adjacency(self):
        A = [[0] * self.n for _ in range(self.n)]
        for a, b in self.edges:
            A[a][b] += 1
            if a != b:
                A[b][a] += 1
        return A

    def is_connected(self):
        return _connected(self.n, self.edges)

    def __str__(self):
        return " ".join(f"{a}-{b}" for a, b in self.edges)


def _connected(n, edges):
    adj = {v: set() for v in range(n)}
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    seen = {0}
    todo = [0]
    while todo:
        v = todo.pop()
        for w in adj[v] - seen:
            seen.add(w)
            todo.append(w)
    return len(seen) == n


def _edges_from_matrix(A):
    n = len(A)
    out = []
    for i in range(n):
        for j in range(i, n):
            out += [(i, j)] * int(A[i][j])
    return tuple(out)


class _Canonizer:
    """Canonical adjacency matrices by brute force over vertex orders."""

    def __init__(self, n):
        self.n = n
        self.perms = np.array(list(permutations(range(n))), dtype=np.intp)
        iu = np.triu_indices(n)
        self.iu = iu

    def canonical(self, A):
        A = np.asarray(A, dtype=np.int64)
        P = self.perms
        permuted = A[P[:, :, None], P[:, None, :]]
        flat = permuted[:, self.iu[0], self.iu[1]]
        # lexicographically largest upper triangle
        order = np.lexsort(flat.T[::-1])
        best = flat[order[-1]]
        return tuple(int(x) for x in best)

    def matrix(self, key):
        n = self.n
        A = [[0] * n for _ in range(n)]
        for (i, j), x in zip(zip(*self.iu), key):
            A[i][j] = x
            A[j][i] = x
        return A


def _labelled_matrices(n):
    """Every symmetric matrix of a 4-regular multigraph on ``n`` vertices.

    Diagonal entries count loops (each loop adds 2 to the degree).
    Vertex 0 is required to have the most loops, which cuts down the
    labelled search without losing any isomorphism class.
    """
    A = [[0] * n for _ in range(n)]
    deg = [0] * n
    cells = [(i, j) for i in range(n) for j in range(i, n)]

    def rec(k):
        if k == len(cells):
            if all(d == 4 for d in deg):
                yield [row[:] for row in A]
            return
        i, j = cells[k]
        if i == j:
            limit = (4 - deg[i]) // 2
            if i > 0:
                limit = min(limit, A[0][0])
            choices = range(limit, -1, -1)
        else:
            limit = min(4 - deg[i], 4 - deg[j])
            choices = range(limit, -1, -1)
        for x in choices:
            A[i][j] = A[j][i] = x
            if i == j:
                deg[i] += 2 * x
            else:
                deg[i] += x
                deg[j] += x
            # row i is complete once its last cell is placed
            if not (j == n - 1 and deg[i] != 4):
                yield from rec(k + 1)
            if i == j:
                deg[i] -= 2 * x
            else:
                deg[i] -= x
                deg[j] -= x
        A[i][j] = A[j][i] = 0

    yield from rec(0)


def enumerate_graphs(n, limit=None):
    """All connected 4-valent multigraphs on ``n`` vertices up to isomorphism.

    Graphs are returned in decreasing order of their canonical adjacency
    key, which makes the output deterministic.
    """
    if n < 1:
        raise ValueError("need at least one vertex")
    limit = ceiling() if limit is None else limit
    if n > limit:
        raise ResourceGuardError(f"n={n} exceeds the graph ceiling {limit}")
    canon = _Canonizer(n)
    keys = set()
    for A in _labelled_matrices(n):
        edges = _edges_from_matrix(A)
        if not _connected(n, edges):
            continue
        keys.add(canon.canonical(A))
    return [FacePairingGraph(n, _edges_from_matrix(canon.matrix(k)))
            for k in sorted(keys, reverse=True)]


def count_graphs_by_germ_pairing(n):
    """Independent count of ``#G_n`` by pairing the ``4n`` edge germs.

    Every perfect matching of the germs gives a multigraph; connected ones
    are reduced to isomorphism classes by sorting edge lists under every
    vertex permutation.  Only practical for ``n <= 3``.
    """
    germs = list(range(4 * n))
    classes = set()
    vperms = list(permutations(range(n)))

    def matchings(rest):
        if not rest:
            yield []
            return
        a = rest[0]
        for i in range(1, len(rest)):
            b = rest[i]
            for m in matchings(rest[1:i] + rest[i + 1:]):
                yield [(a, b)] + m

    for m in matchings(germs):
        edges = [tuple(sorted((a // 4, b // 4))) for a, b in m]
        if not _connected(n, edges):
            continue
        form = min(tuple(sorted(tuple(sorted((p[a], p[b]))) for a, b in edges))
                   for p in vperms)
        classes.add(form)
    return len(classes)


def double_factorial(k):
    if k <= 0:
        return 1
    return math.prod(range(k, 0, -2))


@dataclass(frozen=True)
class GrowthReport:
    n: int
    upper: int
    count: int
    lower_numerator: int
    lower_denominator: int

    @property
    def lower(self):
        """The lower bound as an exact fraction ``(num, den)``."""
        return self.lower_numerator, self.lower_denominator

    @property
    def holds(self):
        return (self.upper >= self.count
                and self.count * self.lower_denominator >= self.lower_numerator)


def growth_bounds_check(n, count=None):
    """Check ``(4n-1)!! >= #G_n >= (4n-2)!! / (24^n n!)`` exactly."""
    if count is None:
        count = len(enumerate_graphs(n))
    return GrowthReport(
        n=n,
        upper=double_factorial(4 * n - 1),
        count=count,
        lower_numerator=double_factorial(4 * n - 2),
        lower_denominator=24 ** n * math.factorial(n),
    )

"""Enumeration of the minimal triangulations of the families M_{g,k}.

For every face-pairing graph on ``n`` vertices, faces are attached to the
graph's edge germs in a fixed way and every orientation-reversing choice
of gluing permutation is explored depth first.  Edge classes are tracked
with a union-find that can be rolled back; a branch dies as soon as an
edge class closes up with an incidence that no member of any
``M_{g, n-g}`` can have.  Survivors are checked with
:func:`admissible_filter` and deduplicated by isomorphism signature.
"""

import logging
from dataclasses import dataclass, field
from itertools import product
from multiprocessing import get_context

from . import perm as P
from .graphs import ResourceGuardError, ceiling, enumerate_graphs
from .isosig import iso_signature
from .triangulation import (EDGES, Triangulation, boundary_profile,
                            edge_classes, is_orientable)

log = logging.getLogger(__name__)

DEFAULT_CENSUS_CEILING = 4

_EDGE_SLOT = {}
for _i, (_a, _b) in enumerate(EDGES):
    _EDGE_SLOT[(_a, _b)] = _EDGE_SLOT[(_b, _a)] = _i


def admissible_filter(T):
    """Return ``(g, k)`` if ``T`` is a minimal triangulation of some M_{g,k}.

    The conditions are: orientable; boundary exactly one surface of genus
    ``g >= 2`` plus ``k`` tori; ``n = g + k`` and ``g >= k``; exactly
    ``k + 1`` edge classes, one of incidence ``6g`` with both ends on the
    genus-``g`` surface and ``k`` of incidence 6, each joining that
    surface to a different torus.  Otherwise return None.
    """
    if not is_orientable(T):
        return None
    links, profile = boundary_profile(T)
    if not profile.is_census_shape:
        return None
    g, k = profile.g, profile.tori
    if T.n != g + k or g < k:
        return None
    classes = edge_classes(T)
    if len(classes) != k + 1 or not all(c.valid for c in classes):
        return None
    big = [s.vertex_class for s in links if s.orientable and s.genus == g]
    tori = {s.vertex_class for s in links if s.is_torus}
    sigma = big[0]
    long_edges = 0
    reached = set()
    for c in classes:
        ends = set(c.endpoints)
        if c.incidence == 6 * g and ends == {sigma}:
            long_edges += 1
        elif c.incidence == 6 and sigma in ends and len(ends) == 2:
            reached |= ends - {sigma}
        else:
            return None
    if long_edges != 1 or reached != tori or len(reached) != k:
        return None
    return g, k


@dataclass
class CensusTable:
    n: int
    cells: dict = field(default_factory=dict)

    def counts(self):
        return {key: len(v) for key, v in sorted(self.cells.items())}

    def records(self):
        """``(signature, g, k)`` triples sorted by signature."""
        out = [(sig, g, k) for (g, k), sigs in self.cells.items() for sig in sigs]
        return sorted(out)


def face_pairs(graph):
    """Attach faces to germs: returns ``[((t, f), (t2, f2)), ...]``."""
    next_face = [0] * graph.n
    pairs = []
    for a, b in graph.edges:
        fa = next_face[a]
        next_face[a] += 1
        fb = next_face[b]
        next_face[b] += 1
        pairs.append(((a, fa), (b, fb)))
    return pairs


def _allowed_incidence(n):
    """Incidences a closed edge class may have, mapped to their genus."""
    out = {}
    for g in range(max(2, (n + 1) // 2), n + 1):
        out[6 * g] = g
    return out


def _heavy_gain(w1, w2):
    w = w1 + w2
    return (w if w > 6 else 0) - (w1 if w1 > 6 else 0) - (w2 if w2 > 6 else 0)


class _Search:
    """Depth-first search over the gluing permutations of one graph."""

    def __init__(self, graph, target=None):
        self.graph = graph
        self.n = graph.n
        self.pairs = face_pairs(graph)
        self.big = _allowed_incidence(self.n)
        if target is not None:
            g, _k = target
            self.big = {w: h for w, h in self.big.items() if h == g}
        self.leaves = 0
        self.candidates = 0

    def run(self):
        n = self.n
        found = {}
        for signs in product((1, -1), repeat=n - 1):
            eps = (1,) + signs
            options = []
            for (t, f), (t2, f2) in self.pairs:
                parity = -eps[t] * eps[t2]
                opts = []
                for p in P.face_maps(f, f2, parity):
                    slots = []
                    for a, b in EDGES:
                        if f in (a, b):
                            continue
                        slots.append((6 * t + _EDGE_SLOT[(a, b)],
                                      6 * t2 + _EDGE_SLOT[(p[a], p[b])]))
                    opts.append((p, slots))
                options.append(opts)
            self._search(options, found)
        return found

    def _search(self, options, found):
        n = self.n
        size = 6 * n
        parent = list(range(size))
        weight = [1] * size
        opened = [2] * size
        # "heavy" is the total weight of classes above incidence 6; they can
        # only end up merged into the single long edge
        state = {"small": 0, "big": 0, "genus": 0, "heavy": 0}
        big_allowed = self.big
        max_weight = max(big_allowed, default=6)
        max_small = n // 2
        chosen = [None] * len(options)
        undo = []

        def find(x):
            while parent[x] != x:
                x = parent[x]
            return x

        def close(r):
            w = weight[r]
            if w == 6:
                state["small"] += 1
                undo.append(("small",))
            elif w in big_allowed:
                state["big"] += 1
                state["genus"] = big_allowed[w]
                undo.append(("big",))
            else:
                return False
            if state["small"] > max_small or state["big"] > 1:
                return False
            # k incidence-6 edges need genus n - k
            return not state["big"] or state["small"] <= n - state["genus"]

        def rollback(mark):
            while len(undo) > mark:
                item = undo.pop()
                kind = item[0]
                if kind == "open":
                    opened[item[1]] += 1
                elif kind == "union":
                    _, r1, r2 = item
                    parent[r2] = r2
                    state["heavy"] -= _heavy_gain(weight[r1] - weight[r2], weight[r2])
                    weight[r1] -= weight[r2]
                    opened[r1] -= opened[r2]
                elif kind == "small":
                    state["small"] -= 1
                elif kind == "big":
                    state["big"] -= 1
                    state["genus"] = 0

        def dfs(k):
            if k == len(options):
                self.leaves += 1
                # one long edge plus k = n - g edges of incidence 6
                if state["big"] == 1 and state["small"] == n - state["genus"]:
                    self._leaf(chosen, found)
                return
            for p, slots in options[k]:
                mark = len(undo)
                ok = True
                for s1, s2 in slots:
                    r1 = find(s1)
                    opened[r1] -= 1
                    undo.append(("open", r1))
                    r2 = find(s2)
                    opened[r2] -= 1
                    undo.append(("open", r2))
                    if r1 != r2:
                        if weight[r1] < weight[r2]:
                            r1, r2 = r2, r1
                        parent[r2] = r1
                        w1, w2 = weight[r1], weight[r2]
                        weight[r1] = w1 + w2
                        opened[r1] += opened[r2]
                        state["heavy"] += _heavy_gain(w1, w2)
                        undo.append(("union", r1, r2))
                        if state["heavy"] > max_weight:
                            ok = False
                            break
                    if opened[r1] == 0 and not close(r1):
                        ok = False
                        break
                if ok:
                    chosen[k] = p
                    dfs(k + 1)
                rollback(mark)

        dfs(0)

    def _leaf(self, chosen, found):
        gl = [(t, f, t2, p) for ((t, f), (t2, _)), p in zip(self.pairs, chosen)]
        T = Triangulation.from_pairs(self.n, gl)
        self.candidates += 1
        sig = iso_signature(T)
        if sig not in found:
            # admissibility is an isomorphism invariant: test once per class
            found[sig] = admissible_filter(T)


def census_for_graph(graph, target=None):
    """Admissible signatures with face-pairing graph ``graph``, sorted.

    ``target=(g, k)`` restricts the search to one cell.
    """
    search = _Search(graph, target)
    found = {sig: cell for sig, cell in search.run().items()
             if cell is not None and (target is None or cell == tuple(target))}
    log.debug("graph %s: %d leaves, %d admissible, %d classes",
              graph, search.leaves, search.candidates, len(found))
    return sorted((sig, g, k) for sig, (g, k) in found.items())


def enumerate_census(n, jobs=1, limit=None):
    """Build the census table for ``n`` tetrahedra.

    Work is split over face-pairing graphs; results are merged and sorted,
    so the table does not depend on ``jobs``.
    """
    limit = ceiling(DEFAULT_CENSUS_CEILING) if limit is None else limit
    if n < 2:
        raise ValueError("census needs n >= 2")
    if n > limit:
        raise ResourceGuardError(f"n={n} exceeds the census ceiling {limit}; "
                                 "raise it with --ceiling or MGK_CEILING")
    graphs = enumerate_graphs(n, limit=max(limit, n))
    if jobs > 1:
        with get_context("spawn").Pool(jobs) as pool:
            parts = pool.map(census_for_graph, graphs, chunksize=1)
    else:
        parts = [census_for_graph(g) for g in graphs]
    merged = {}
    for part in parts:
        for sig, g, k in part:
            merged[sig] = (g, k)
    table = CensusTable(n)
    for sig in sorted(merged):
        table.cells.setdefault(merged[sig], []).append(sig)
    table.cells = {key: tuple(v) for key, v in sorted(table.cells.items())}
    return table


def enumerate_cell(g, k, jobs=1):
    """Signatures of the single cell M_{g,k}, searched directly.

    Only one long edge of incidence ``6g`` is allowed, which prunes far
    harder than the full census; this makes cells beyond the census
    ceiling reachable.  No ceiling applies: the caller opts in.
    """
    n = g + k
    graphs = enumerate_graphs(n, limit=n)
    if jobs > 1:
        with get_context("spawn").Pool(jobs) as pool:
            parts = pool.starmap(census_for_graph, [(G, (g, k)) for G in graphs], chunksize=1)
    else:
        parts = [census_for_graph(G, (g, k)) for G in graphs]
    return sorted({sig for part in parts for sig, _, _ in part})

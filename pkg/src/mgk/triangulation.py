"""Ideal triangulations stored as gluing tables.

Tetrahedra are numbered ``0..n-1`` and their vertices ``0..3``; face ``i``
of a tetrahedron is the face opposite vertex ``i``.  The gluing of face
``f`` of tetrahedron ``t`` is a pair ``(t2, p)`` where ``p`` is a
permutation of the vertex labels: vertex ``v`` of ``t`` is identified with
vertex ``p[v]`` of ``t2``, so that face ``f`` lands on face ``p[f]``.
"""

from collections import deque
from dataclasses import dataclass, field

from . import perm as P

EDGES = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))


class TriangulationError(ValueError):
    pass


class Triangulation:
    """A closed-up gluing of ``n`` tetrahedra with every face paired.

    ``gluings[t][f]`` is ``(t2, p)`` as described in the module docstring.
    The table is validated on construction and never mutated afterwards.
    """

    __slots__ = ("gluings", "_cache")

    def __init__(self, gluings):
        table = tuple(tuple((int(t2), tuple(int(x) for x in p)) for t2, p in row)
                      for row in gluings)
        _validate(table)
        self.gluings = table
        self._cache = {}

    @property
    def n(self):
        return len(self.gluings)

    def __len__(self):
        return len(self.gluings)

    def __eq__(self, other):
        return isinstance(other, Triangulation) and self.gluings == other.gluings

    def __hash__(self):
        return hash(self.gluings)

    def __repr__(self):
        return f"Triangulation(n={self.n})"

    # text form -------------------------------------------------------------

    def to_text(self):
        """One line per tetrahedron, tokens ``t:pqrs`` for faces 0..3."""
        lines = []
        for row in self.gluings:
            lines.append(" ".join(f"{t2}:{''.join(map(str, p))}" for t2, p in row))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text):
        rows = []
        for line in text.splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            tokens = line.split()
            if len(tokens) != 4:
                raise TriangulationError(f"expected 4 tokens per line, got {line!r}")
            row = []
            for tok in tokens:
                t2, _, digits = tok.partition(":")
                if len(digits) != 4 or not digits.isdigit() or not t2.isdigit():
                    raise TriangulationError(f"bad gluing token {tok!r}")
                row.append((int(t2), tuple(int(c) for c in digits)))
            rows.append(row)
        return cls(rows)

    @classmethod
    def from_pairs(cls, n, pairs):
        """Build from one side of each gluing: ``(t, f, t2, p)`` tuples."""
        rows = [[None] * 4 for _ in range(n)]
        for t, f, t2, p in pairs:
            p = tuple(p)
            rows[t][f] = (t2, p)
            rows[t2][p[f]] = (t, P.inverse(p))
        if any(x is None for row in rows for x in row):
            raise TriangulationError("some faces are left unglued")
        return cls(rows)

    # relabelling ------------------------------------------------------------

    def relabel(self, tet_map, vertex_perms):
        """Return the isomorphic triangulation obtained by renaming.

        Tetrahedron ``t`` becomes ``tet_map[t]`` and its vertex ``v``
        becomes ``vertex_perms[t][v]``.
        """
        n = self.n
        new = [[None] * 4 for _ in range(n)]
        for t in range(n):
            rt = vertex_perms[t]
            for f in range(4):
                t2, p = self.gluings[t][f]
                q = P.compose(P.compose(vertex_perms[t2], p), P.inverse(rt))
                new[tet_map[t]][rt[f]] = (tet_map[t2], q)
        return Triangulation(new)

    def cached(self, key, fn):
        if key not in self._cache:
            self._cache[key] = fn(self)
        return self._cache[key]


def _validate(table):
    n = len(table)
    if n == 0:
        raise TriangulationError("empty triangulation")
    for t, row in enumerate(table):
        if len(row) != 4:
            raise TriangulationError(f"tetrahedron {t} does not have 4 faces")
        for f, (t2, p) in enumerate(row):
            if not 0 <= t2 < n:
                raise TriangulationError(f"face ({t},{f}) glued to missing tetrahedron {t2}")
            if sorted(p) != [0, 1, 2, 3]:
                raise TriangulationError(f"face ({t},{f}) has non-permutation {p}")
            if t2 == t and p[f] == f:
                raise TriangulationError(f"face ({t},{f}) glued to itself")
            back_t, back_p = table[t2][p[f]]
            if back_t != t or P.compose(back_p, p) != P.IDENTITY:
                raise TriangulationError(f"gluing of face ({t},{f}) is not involutive")
    seen = {0}
    todo = [0]
    while todo:
        t = todo.pop()
        for t2, _ in table[t]:
            if t2 not in seen:
                seen.add(t2)
                todo.append(t2)
    if len(seen) != n:
        raise TriangulationError("face-pairing graph is disconnected")


# ---------------------------------------------------------------------------
# union-find over hashable keys


class _UnionFind:
    def __init__(self, keys):
        self.parent = {k: k for k in keys}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra

    def classes(self):
        out = {}
        for k in self.parent:
            out.setdefault(self.find(k), []).append(k)
        return [sorted(v) for _, v in sorted(out.items())]


# ---------------------------------------------------------------------------
# vertices and edges


def vertex_classes(T):
    """Map each corner ``(t, v)`` to the index of its vertex class."""
    def build(T):
        uf = _UnionFind([(t, v) for t in range(T.n) for v in range(4)])
        for t in range(T.n):
            for f in range(4):
                t2, p = T.gluings[t][f]
                for v in range(4):
                    if v != f:
                        uf.union((t, v), (t2, p[v]))
        index = {}
        for i, cls in enumerate(uf.classes()):
            for corner in cls:
                index[corner] = i
        return index
    return T.cached("vertex_classes", build)


@dataclass(frozen=True)
class EdgeClass:
    """An orbit of tetrahedron edges.

    ``members`` lists ``(tet, (a, b), sign)`` in the cyclic order met when
    walking around the edge; ``(a, b)`` is the edge as seen in that
    tetrahedron, oriented coherently with the first member, and ``sign`` is
    +1 when that orientation agrees with increasing labels.  ``crossings``
    holds the ``(tet, face)`` through which the walk leaves each member.
    """

    members: tuple
    crossings: tuple
    endpoints: tuple
    valid: bool = True

    @property
    def incidence(self):
        return len(self.members)


def edge_classes(T):
    """Edge classes of ``T`` in order of first appearance."""
    return T.cached("edge_classes", _edge_classes)


def _edge_classes(T):
    vc = vertex_classes(T)
    seen = set()
    out = []
    for t in range(T.n):
        for a, b in EDGES:
            if (t, a, b) in seen:
                continue
            c, d = [x for x in range(4) if x != a and x != b]
            start = (t, a, b, c, d)
            state = start
            members, crossings = [], []
            valid = True
            while True:
                tt, aa, bb, cc, dd = state
                key = (tt, min(aa, bb), max(aa, bb))
                if key in seen and state != start:
                    # revisiting a slot with the other orientation: the
                    # edge is identified with itself in reverse
                    valid = False
                seen.add(key)
                members.append((tt, (aa, bb), 1 if aa < bb else -1))
                crossings.append((tt, dd))
                t2, p = T.gluings[tt][dd]
                state = (t2, p[aa], p[bb], p[dd], p[cc])
                if state == start:
                    break
                if (state[0], state[2], state[1], state[3], state[4]) == start:
                    valid = False
                    break
            endpoints = (vc[(t, a)], vc[(t, b)])
            out.append(EdgeClass(tuple(members), tuple(crossings), endpoints, valid))
    return out


def edge_index(T):
    """Map ``(tet, a, b)`` with ``a < b`` to its edge-class index."""
    def build(T):
        index = {}
        for i, ec in enumerate(edge_classes(T)):
            for t, (a, b), _ in ec.members:
                index[(t, min(a, b), max(a, b))] = i
        return index
    return T.cached("edge_index", build)


# ---------------------------------------------------------------------------
# orientation


def orientation(T):
    """Return a list of tetrahedron orientations (+1/-1), or None.

    Every face gluing must reverse the induced orientation, which in terms
    of labels means ``eps[t] * eps[t2] * sign(p) == -1``.
    """
    eps = [0] * T.n
    eps[0] = 1
    queue = deque([0])
    while queue:
        t = queue.popleft()
        for t2, p in T.gluings[t]:
            want = -eps[t] * P.SIGN[P.INDEX[p]]
            if eps[t2] == 0:
                eps[t2] = want
                queue.append(t2)
            elif eps[t2] != want:
                return None
    return eps


def is_orientable(T):
    return orientation(T) is not None


# ---------------------------------------------------------------------------
# vertex links


@dataclass(frozen=True)
class LinkSurface:
    vertex_class: int
    euler_characteristic: int
    orientable: bool
    genus: int
    corners: tuple

    @property
    def is_torus(self):
        return self.orientable and self.euler_characteristic == 0


@dataclass(frozen=True)
class BoundaryProfile:
    g: int
    tori: int
    other: tuple = field(default_factory=tuple)

    @property
    def is_census_shape(self):
        return self.g >= 2 and not self.other


def link_surfaces(T):
    """The surfaces formed by the corner triangles around each vertex."""
    return T.cached("links", _link_surfaces)


def _link_surfaces(T):
    vc = vertex_classes(T)
    corners_by_class = {}
    for corner, i in vc.items():
        corners_by_class.setdefault(i, []).append(corner)

    # points where an edge end meets the link
    uf = _UnionFind([(t, v, w) for t in range(T.n) for v in range(4)
                     for w in range(4) if v != w])
    for t in range(T.n):
        for f in range(4):
            t2, p = T.gluings[t][f]
            for v in range(4):
                for w in range(4):
                    if len({v, w, f}) == 3:
                        uf.union((t, v, w), (t2, p[v], p[w]))
    link_vertices = {}
    for key in uf.parent:
        link_vertices.setdefault(vc[key[:2]], set()).add(uf.find(key))

    out = []
    for i in sorted(corners_by_class):
        corners = sorted(corners_by_class[i])
        F = len(corners)
        E = 3 * F // 2
        V = len(link_vertices[i])
        chi = V - E + F
        orientable = _link_orientable(T, corners)
        genus = (2 - chi) // 2 if orientable else 2 - chi
        out.append(LinkSurface(i, chi, orientable, genus, tuple(corners)))
    return out


def _link_orientable(T, corners):
    # same parity rule as for tetrahedra, restricted to the corners of one link
    eps = {corners[0]: 1}
    queue = deque([corners[0]])
    while queue:
        t, v = queue.popleft()
        for f in range(4):
            if f == v:
                continue
            t2, p = T.gluings[t][f]
            nxt = (t2, p[v])
            want = -eps[(t, v)] * P.SIGN[P.INDEX[p]]
            if nxt not in eps:
                eps[nxt] = want
                queue.append(nxt)
            elif eps[nxt] != want:
                return False
    return True


def boundary_profile(T):
    """Return ``(links, profile)`` describing the boundary of ``T``.

    The profile records the genus of the single component of genus at
    least 2 and the number of tori; anything else (spheres, non-orientable
    links, a second higher-genus component) goes to ``other``.
    """
    links = link_surfaces(T)
    higher = [s for s in links if s.orientable and s.genus >= 2]
    tori = [s for s in links if s.is_torus]
    other = [s for s in links if not s.orientable or s.genus == 0]
    g = 0
    if higher:
        g = higher[0].genus
        other.extend(higher[1:])
    other.sort(key=lambda s: s.vertex_class)
    return links, BoundaryProfile(g, len(tori), tuple(other))

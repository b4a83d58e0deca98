"""First homology from the spine dual to an ideal triangulation.

The dual spine has one vertex per tetrahedron, one edge per face pair and
one 2-cell per edge class, attached along the walk around that edge.
``H_1`` is ``ker d1 / im d2`` of that cellular chain complex; it is read
off from integer Smith normal forms.
"""

from dataclasses import dataclass

from .triangulation import edge_classes


@dataclass(frozen=True)
class HomologyResult:
    rank: int
    torsion: tuple = ()

    def __str__(self):
        parts = [f"Z^{self.rank}"] if self.rank else []
        parts += [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) or "0"


def smith_diagonal(matrix):
    """Diagonal of the Smith normal form of an integer matrix.

    Works on a copy with Python ints.  Returns the nonzero invariant
    factors, each dividing the next.
    """
    A = [list(map(int, row)) for row in matrix]
    rows = len(A)
    cols = len(A[0]) if rows else 0
    diag = []
    top = 0
    while top < rows and top < cols:
        # pick the smallest nonzero entry of the remaining block as pivot
        pivot = None
        for i in range(top, rows):
            for j in range(top, cols):
                if A[i][j] and (pivot is None or abs(A[i][j]) < abs(A[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        pi, pj = pivot
        A[top], A[pi] = A[pi], A[top]
        for row in A:
            row[top], row[pj] = row[pj], row[top]
        while True:
            p = A[top][top]
            dirty = False
            for i in range(top + 1, rows):
                if A[i][top]:
                    q = A[i][top] // p
                    if q:
                        A[i] = [x - q * y for x, y in zip(A[i], A[top])]
                    if A[i][top]:
                        A[top], A[i] = A[i], A[top]
                        dirty = True
                        break
            if dirty:
                continue
            for j in range(top + 1, cols):
                if A[top][j]:
                    q = A[top][j] // p
                    if q:
                        for row in A:
                            row[j] -= q * row[top]
                    if A[top][j]:
                        for row in A:
                            row[top], row[j] = row[j], row[top]
                        dirty = True
                        break
            if dirty:
                continue
            # pivot must divide the rest of the block
            bad = None
            for i in range(top + 1, rows):
                for j in range(top + 1, cols):
                    if A[i][j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            A[top] = [x + y for x, y in zip(A[top], A[bad])]
        diag.append(abs(A[top][top]))
        top += 1
    return diag


def homology_from_boundaries(d1, d2, n_cells1):
    """``H_1`` of a chain complex given ``d1`` (C1 -> C0) and ``d2`` (C2 -> C1).

    Matrices are lists of rows; ``d1`` has one column per 1-cell and ``d2``
    one row per 1-cell.
    """
    r1 = len(smith_diagonal(d1)) if d1 else 0
    inv2 = smith_diagonal(d2) if d2 and d2[0] else []
    rank = n_cells1 - r1 - len(inv2)
    torsion = tuple(d for d in inv2 if d > 1)
    return HomologyResult(rank, torsion)


def spine_chain_complex(T):
    """Boundary matrices ``(d1, d2)`` of the spine dual to ``T``.

    The dual edge of a face pair is oriented away from its smaller
    ``(tet, face)`` side.
    """
    face_index = {}
    sides = []
    for t in range(T.n):
        for f in range(4):
            t2, p = T.gluings[t][f]
            other = (t2, p[f])
            if other in face_index:
                face_index[(t, f)] = face_index[other]
            else:
                face_index[(t, f)] = len(sides)
                sides.append(((t, f), other))
    m = len(sides)
    d1 = [[0] * m for _ in range(T.n)]
    for j, ((t, _), (t2, _)) in enumerate(sides):
        d1[t2][j] += 1
        d1[t][j] -= 1
    classes = edge_classes(T)
    d2 = [[0] * len(classes) for _ in range(m)]
    for c, ec in enumerate(classes):
        for t, f in ec.crossings:
            j = face_index[(t, f)]
            d2[j][c] += 1 if sides[j][0] == (t, f) else -1
    return d1, d2


def homology_h1(T):
    """First integral homology of the manifold triangulated by ``T``."""
    def build(T):
        d1, d2 = spine_chain_complex(T)
        return homology_from_boundaries(d1, d2, len(d2))
    return T.cached("h1", build)

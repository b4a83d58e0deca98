"""Permutations of the four vertex labels of a tetrahedron.

A permutation is a length-4 tuple ``p`` with ``p[i]`` the image of ``i``.
All 24 of them are precomputed in a fixed order so that they can be
referred to by index (the index is what the isomorphism signature stores).
"""

from itertools import permutations

S4 = tuple(permutations(range(4)))
INDEX = {p: i for i, p in enumerate(S4)}
IDENTITY = (0, 1, 2, 3)


def sign(p):
    """Return +1 for an even permutation and -1 for an odd one."""
    s = 1
    for i in range(4):
        for j in range(i + 1, 4):
            if p[i] > p[j]:
                s = -s
    return s


def inverse(p):
    q = [0] * 4
    for i, x in enumerate(p):
        q[x] = i
    return tuple(q)


def compose(p, q):
    """Return ``p o q`` (apply ``q`` first)."""
    return (p[q[0]], p[q[1]], p[q[2]], p[q[3]])


SIGN = tuple(sign(p) for p in S4)
INVERSE = tuple(INDEX[inverse(p)] for p in S4)
COMPOSE = tuple(tuple(INDEX[compose(p, q)] for q in S4) for p in S4)


def face_maps(src, dst, parity=None):
    """All permutations sending face ``src`` to face ``dst``.

    Face ``i`` is the face opposite vertex ``i``, so this is the set of
    ``p`` with ``p[src] == dst``.  ``parity`` restricts to even (+1) or
    odd (-1) permutations.
    """
    out = [p for p in S4 if p[src] == dst]
    if parity is not None:
        out = [p for p in out if sign(p) == parity]
    return out

"""Canonical text signatures for triangulations up to isomorphism.

A signature is ``mgk1_`` followed by characters from :data:`ALPHABET`:
the tetrahedron count, then for every tetrahedron (in canonical order) and
every face 0..3 a pair of characters giving the destination tetrahedron
and the index (into :data:`mgk.perm.S4`) of the gluing permutation.

The canonical order comes from a breadth-first relabelling started at
every tetrahedron with every one of the 24 vertex labellings; the
lexicographically smallest resulting gluing sequence wins.  Relabelling
``T`` therefore does not change the signature, and since the sequence is
the full gluing table, different isomorphism classes never collide.
"""

from . import perm as P
from .triangulation import Triangulation

PREFIX = "mgk1_"
ALPHABET = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789+-"
_VALUE = {c: i for i, c in enumerate(ALPHABET)}

assert len(ALPHABET) == 64


class SignatureError(ValueError):
    pass


def _indexed_gluings(T):
    return [[(t2, P.INDEX[p]) for t2, p in row] for row in T.gluings]


def _sequence_from(glue, start, root, best=None):
    """Gluing sequence of ``T`` relabelled by BFS from ``(start, root)``.

    ``glue`` is the gluing table with permutation indices.  ``root`` is a
    permutation index: old vertex ``v`` of the start tetrahedron becomes
    ``S4[root][v]``.  Newly reached tetrahedra are labelled so that the
    gluing that reaches them reads as the identity.  If ``best`` is given,
    return None as soon as the sequence is known to exceed it.
    """
    n = len(glue)
    compose = P.COMPOSE
    inverse = P.INVERSE
    S4 = P.S4
    new_index = [-1] * n
    labelling = [0] * n         # perm index: old vertex -> new vertex
    order = [start]
    new_index[start] = 0
    labelling[start] = root
    seq = []
    tied = best is not None
    i = 0
    while i < len(order):
        t = order[i]
        lab = labelling[t]
        inv = inverse[lab]
        inv_p = S4[inv]
        row = glue[t]
        for nf in range(4):
            t2, p = row[inv_p[nf]]
            if new_index[t2] < 0:
                new_index[t2] = len(order)
                order.append(t2)
                labelling[t2] = compose[lab][inverse[p]]
            a = new_index[t2]
            b = compose[compose[labelling[t2]][p]][inv]
            if tied:
                k = len(seq)
                if a != best[k]:
                    if a > best[k]:
                        return None
                    tied = False
                elif b != best[k + 1]:
                    if b > best[k + 1]:
                        return None
                    tied = False
            seq.append(a)
            seq.append(b)
        i += 1
    return seq


def canonical_sequence(T):
    return T.cached("canonical_sequence", _canonical_sequence)


def _canonical_sequence(T):
    glue = _indexed_gluings(T)
    best = None
    for start in range(T.n):
        for root in range(24):
            seq = _sequence_from(glue, start, root, best)
            if seq is not None and (best is None or seq < best):
                best = seq
    return best


def iso_signature(T):
    """Return the canonical signature string of ``T``."""
    def build(T):
        if T.n >= len(ALPHABET):
            raise SignatureError("too many tetrahedra for a one-character count")
        seq = canonical_sequence(T)
        return PREFIX + ALPHABET[T.n] + "".join(ALPHABET[x] for x in seq)
    return T.cached("isosig", build)


def decode_signature(sig):
    """Rebuild a triangulation (in canonical labelling) from a signature."""
    if not sig.startswith(PREFIX):
        raise SignatureError(f"signature must start with {PREFIX!r}")
    body = sig[len(PREFIX):]
    try:
        values = [_VALUE[c] for c in body]
    except KeyError as exc:
        raise SignatureError(f"bad character {exc.args[0]!r} in signature") from None
    if not values:
        raise SignatureError("empty signature")
    n = values[0]
    rest = values[1:]
    if len(rest) != 8 * n:
        raise SignatureError(f"signature length does not match {n} tetrahedra")
    rows = []
    for t in range(n):
        row = []
        for f in range(4):
            t2, pi = rest[8 * t + 2 * f], rest[8 * t + 2 * f + 1]
            if pi >= 24:
                raise SignatureError("permutation index out of range")
            row.append((t2, P.S4[pi]))
        rows.append(row)
    try:
        return Triangulation(rows)
    except ValueError as exc:
        raise SignatureError(str(exc)) from None


def is_isomorphic(T1, T2):
    """Brute-force isomorphism test, independent of the signature code.

    Tries every tetrahedron bijection and vertex labelling forced by a
    starting choice, following gluings outward.
    """
    if T1.n != T2.n:
        return False
    n = T1.n
    for start in range(n):
        for root in P.S4:
            tet_map = [-1] * n
            vmap = [None] * n
            tet_map[0] = start
            vmap[0] = root
            stack = [0]
            ok = True
            while stack and ok:
                t = stack.pop()
                for f in range(4):
                    t2, p = T1.gluings[t][f]
                    u, r = tet_map[t], vmap[t]
                    u2, q = T2.gluings[u][r[f]]
                    # r2 o p = q o r  =>  r2 = q o r o p^-1
                    r2 = P.compose(P.compose(q, r), P.inverse(p))
                    if tet_map[t2] < 0:
                        if u2 in tet_map:
                            ok = False
                            break
                        tet_map[t2] = u2
                        vmap[t2] = r2
                        stack.append(t2)
                    elif tet_map[t2] != u2 or vmap[t2] != r2:
                        ok = False
                        break
            if ok:
                return True
    return False

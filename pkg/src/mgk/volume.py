"""Volumes of the two families of partially truncated tetrahedra.

Conventions: vertex ``i`` is opposite face ``i``; the dihedral angle
between faces ``i`` and ``j`` sits on the edge joining the other two
vertices.  The Gram matrix has ones on the diagonal and ``-cos`` of the
dihedral angles elsewhere; a vertex is finite, ideal or hyperideal as the
corresponding diagonal cofactor is positive, zero or negative.

Two independent routes are provided:

* :func:`block_volume` integrates the Schlafli formula
  ``dV = -1/2 sum(length * dangle)`` from the regular ideal tetrahedron,
  with lengths of truncated edges read off the Gram cofactors;
* :func:`closed_form_volume` evaluates the Murakami-Yano dilogarithm
  formula (valid for truncated tetrahedra by Ushijima's extension).
"""

import math

import mpmath
import numpy as np
from scipy import integrate

from .geometry import THIRD_PI, DomainError, solve_angles


def lobachevsky(theta):
    """Lobachevsky function ``-int_0^theta log|2 sin t| dt``."""
    return float(mpmath.im(mpmath.polylog(2, mpmath.expj(2 * theta))) / 2)


def ideal_tetrahedron_volume(a, b, c):
    """Volume of the ideal tetrahedron with dihedral angles ``a + b + c = pi``."""
    return lobachevsky(a) + lobachevsky(b) + lobachevsky(c)


IDEAL_REGULAR_VOLUME = 3 * lobachevsky(math.pi / 3)


# dihedral angle patterns ----------------------------------------------------

# face pairs (i, j); the edge carrying angle[i][j] joins the other two vertices
FACE_PAIRS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))


def block_angles(kind, angle):
    """6 dihedral angles keyed by face pair.

    ``reg``: every angle equal.  ``id``: vertex 0 is ideal, the three
    edges at it (faces 1,2,3 pairwise) carry pi/3, the others ``angle``.
    """
    if kind == "reg":
        return {fp: angle for fp in FACE_PAIRS}
    if kind == "id":
        return {fp: (angle if 0 in fp else THIRD_PI) for fp in FACE_PAIRS}
    raise DomainError(f"unknown block kind {kind!r}")


def gram_matrix(angles):
    G = np.eye(4)
    for (i, j), theta in angles.items():
        G[i, j] = G[j, i] = -math.cos(theta)
    return G


def cofactors(G):
    C = np.empty((4, 4))
    for i in range(4):
        for j in range(4):
            minor = np.delete(np.delete(G, i, axis=0), j, axis=1)
            C[i, j] = (-1) ** (i + j) * np.linalg.det(minor)
    return C


def truncated_edge_length(G, i, j):
    """Length of the edge joining hyperideal vertices ``i`` and ``j``.

    Measured between the two truncation planes:
    ``cosh(l) = c_ij / sqrt(c_ii c_jj)``.
    """
    C = cofactors(G)
    if C[i, i] >= 0 or C[j, j] >= 0:
        raise DomainError("edge length is only finite between hyperideal vertices")
    return math.acosh(C[i, j] / math.sqrt(C[i, i] * C[j, j]))


def block_edge_length(kind, angle):
    """Length of one edge whose dihedral angle varies with the block."""
    _check_block_angle(angle)
    G = gram_matrix(block_angles(kind, angle))
    # vertices 2 and 3 are truncated in both kinds; faces 0 and 1 meet there
    return truncated_edge_length(G, 2, 3)


def varying_edge_count(kind):
    return 6 if kind == "reg" else 3


def _check_block_angle(angle):
    if not 0 < angle < THIRD_PI:
        raise DomainError(f"angle {angle!r} must lie strictly between 0 and pi/3")


def block_volume(kind, angle):
    """Volume by Schlafli integration from the regular ideal tetrahedron.

    Both families tend to the regular ideal tetrahedron as the varying
    angle goes to pi/3, and only the varying edges contribute, so
    ``V(angle) = V_ideal + m/2 * int_angle^{pi/3} l(t) dt`` with ``m``
    varying edges.  The length has a logarithmic singularity at pi/3,
    which adaptive quadrature handles.
    """
    _check_block_angle(angle)
    m = varying_edge_count(kind)
    value, _err = integrate.quad(lambda t: block_edge_length(kind, t), angle, THIRD_PI,
                                 epsabs=1e-13, epsrel=1e-13, limit=400)
    return IDEAL_REGULAR_VOLUME + 0.5 * m * value


def closed_form_volume(angles, dps=30):
    """Murakami-Yano volume of a (generalised) hyperbolic tetrahedron.

    ``angles`` maps face pairs to dihedral angles.  A, B, C are the angles
    on the edges at vertex 0 (edges 01, 02, 03); D, E, F on the opposite
    edges 23, 13, 12.
    """
    # edge vw carries the angle between the faces opposite the other two vertices
    def at(v, w):
        i, j = sorted(set(range(4)) - {v, w})
        return angles[(i, j)]

    with mpmath.workdps(dps):
        A, B, C = at(0, 1), at(0, 2), at(0, 3)
        D, E, F = at(2, 3), at(1, 3), at(1, 2)
        a, b, c, d, e, f = (mpmath.expj(x) for x in (A, B, C, D, E, F))
        G = mpmath.matrix(4, 4)
        for i in range(4):
            G[i, i] = 1
        for (i, j), theta in angles.items():
            G[i, j] = G[j, i] = -mpmath.cos(theta)
        detG = mpmath.det(G)
        root = mpmath.sqrt(mpmath.mpc(detG))
        s = (mpmath.sin(A) * mpmath.sin(D) + mpmath.sin(B) * mpmath.sin(E)
             + mpmath.sin(C) * mpmath.sin(F))
        denom = (a * d + b * e + c * f + a * b * f + a * c * e + b * c * d
                 + d * e * f + a * b * c * d * e * f)
        z_minus = -2 * (s - root) / denom
        z_plus = -2 * (s + root) / denom

        def U(z):
            L = lambda x: mpmath.polylog(2, x)  # noqa: E731
            return (L(z) + L(a * b * d * e * z) + L(a * c * d * f * z)
                    + L(b * c * e * f * z) - L(-a * b * c * z) - L(-a * e * f * z)
                    - L(-b * d * f * z) - L(-c * d * e * z)) / 2

        vol = mpmath.im(U(z_minus) - U(z_plus)) / 2
    return float(vol)


def closed_form_block_volume(kind, angle):
    _check_block_angle(angle)
    return closed_form_volume(block_angles(kind, angle))


def cusp_triangle_angles(alpha):
    """Angles of the Euclidean cusp triangle of the one-ideal-vertex block.

    Returns the three dihedral angles at the ideal vertex together with the
    diagonal cofactor of that vertex (zero for an ideal vertex).
    """
    angles = block_angles("id", alpha)
    G = gram_matrix(angles)
    c00 = cofactors(G)[0, 0]
    at_ideal = tuple(angles[fp] for fp in FACE_PAIRS if 0 not in fp)
    return at_ideal, c00


class VolumeResult:
    def __init__(self, g, k, vol_id_block, vol_reg_block):
        self.g = g
        self.k = k
        self.vol_id_block = vol_id_block
        self.vol_reg_block = vol_reg_block
        self.total = 2 * k * (vol_id_block or 0.0) + (g - k) * (vol_reg_block or 0.0)

    def __repr__(self):
        return (f"VolumeResult(g={self.g}, k={self.k}, vol_id_block={self.vol_id_block}, "
                f"vol_reg_block={self.vol_reg_block}, total={self.total})")


def manifold_volume(g, k, method=block_volume):
    """``2k Vol(id block) + (g - k) Vol(regular block)`` at the solved angles."""
    sol = solve_angles(g, k)
    vid = method("id", sol.alpha) if k > 0 else None
    vreg = method("reg", sol.beta) if k < g else None
    return VolumeResult(g, k, vid, vreg)

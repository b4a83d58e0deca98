"""Hyperbolic structure of the census manifolds.

A member of M_{g,k} is built from ``2k`` blocks with one ideal vertex
(dihedral angle pi/3 at the ideal vertex, ``alpha`` elsewhere) and
``g - k`` fully truncated regular blocks (all angles ``beta``).  The
structure exists when boundary edge lengths match and the angles around
every edge add up to ``2 pi``.
"""

import math
from dataclasses import dataclass, field

THIRD_PI = math.pi / 3


class DomainError(ValueError):
    pass


class GeometryFailure(RuntimeError):
    """A numerical check that should never fail has failed."""


def _check_angle(x, name):
    if not 0 < x < THIRD_PI:
        raise DomainError(f"{name}={x!r} must lie strictly between 0 and pi/3")


def length_gap(alpha, beta):
    """Boundary-length mismatch between the two block types.

    Zero exactly when a truncation edge of the one-ideal-vertex block at
    angle ``alpha`` has the same length as one of the regular block at
    angle ``beta``.
    """
    _check_angle(alpha, "alpha")
    _check_angle(beta, "beta")
    ca, sa = math.cos(alpha), math.sin(alpha)
    cb, sb = math.cos(beta), math.sin(beta)
    return (ca * ca + 0.5) / (sa * sa) - (cb * cb + cb) / (sb * sb)


def is_nonempty(g, k):
    """M_{g,k} is non-empty iff ``g > k``, or ``g == k`` with ``g`` even."""
    return g >= 2 and k >= 0 and (g > k or (g == k and g % 2 == 0))


@dataclass(frozen=True)
class AngleSolution:
    g: int
    k: int
    alpha: float = None
    beta: float = None
    residual_length: float = 0.0
    residual_angle: float = 0.0


def _beta_of_alpha(alpha, g, k):
    return (math.pi - 3 * k * alpha) / (3 * (g - k))


def _phi(alpha, g, k):
    return length_gap(alpha, _beta_of_alpha(alpha, g, k))


def solve_angles(g, k, iterations=200):
    """Solve the length and total-angle equations for ``(g, k)``.

    Closed forms for ``k == 0`` and ``k == g``; otherwise bisection on
    ``alpha`` over ``(0, pi/3k)`` with ``beta`` eliminated through the
    angle equation.
    """
    if not is_nonempty(g, k):
        raise DomainError(f"M_{{{g},{k}}} is empty")
    if k == 0:
        beta = math.pi / (3 * g)
        resid = abs(6 * g * beta - 2 * math.pi)
        return AngleSolution(g, k, None, beta, 0.0, resid)
    if k == g:
        alpha = math.pi / (3 * g)
        resid = abs(6 * k * alpha - 2 * math.pi)
        return AngleSolution(g, k, alpha, None, 0.0, resid)

    lo, hi = 0.0, math.pi / (3 * k)
    # stay inside the open domain of both angles
    span = hi - lo
    a, b = lo + span * 1e-12, hi - span * 1e-12
    while _beta_of_alpha(a, g, k) >= THIRD_PI:
        a += span * 1e-9
    fa, fb = _phi(a, g, k), _phi(b, g, k)
    if not (fa > 0 > fb):
        raise GeometryFailure(f"no sign change of the length equation for ({g},{k})")
    for _ in range(iterations):
        mid = 0.5 * (a + b)
        fm = _phi(mid, g, k)
        if fm == 0:
            a = b = mid
            break
        if fm > 0:
            a = mid
        else:
            b = mid
        if b - a <= 4 * math.ulp(mid):
            break
    alpha = 0.5 * (a + b)
    beta = _beta_of_alpha(alpha, g, k)
    return AngleSolution(
        g, k, alpha, beta,
        residual_length=abs(length_gap(alpha, beta)),
        residual_angle=abs(6 * k * alpha + 6 * (g - k) * beta - 2 * math.pi),
    )


def sign_changes_on_grid(g, k, points=10_000):
    """Count sign changes of the reduced length equation on a uniform grid."""
    hi = math.pi / (3 * k)
    changes = 0
    prev = None
    for i in range(1, points + 1):
        alpha = hi * i / (points + 1)
        if _beta_of_alpha(alpha, g, k) >= THIRD_PI:
            continue
        s = _phi(alpha, g, k) > 0
        if prev is not None and s != prev:
            changes += 1
        prev = s
    return changes


# tilts ---------------------------------------------------------------------


def tilt_ideal_base(alpha, r):
    """Tilt of the face opposite the ideal vertex of the ideal block."""
    return r / (2 * math.cos(alpha)) - math.sqrt(4 * math.cos(alpha) ** 2 - 1)


def tilt_ideal_side(r):
    """Tilt of a face through the ideal vertex."""
    return -r / 2


def tilt_regular(beta):
    c = math.cos(beta)
    return -math.sqrt((3 * c - 1) * (2 * c - 1) / (c + 1))


@dataclass(frozen=True)
class TiltReport:
    r: float
    pairs: tuple = field(default_factory=tuple)

    @property
    def canonical(self):
        return all(total < 0 for _, total in self.pairs)


def tilts(g, k, r):
    """Tilt sums for every kind of face pairing a member of M_{g,k} can have.

    Faces through a cusp only meet faces through the same cusp; the
    remaining faces (bases of ideal blocks, faces of regular blocks) can
    meet in any combination present for ``(g, k)``.
    """
    if r <= 0:
        raise DomainError("r must be positive")
    sol = solve_angles(g, k)
    pairs = []
    if k > 0:
        _check_angle(sol.alpha, "alpha")
        base = tilt_ideal_base(sol.alpha, r)
        side = tilt_ideal_side(r)
        pairs.append(("id:side|id:side", 2 * side))
        pairs.append(("id:base|id:base", 2 * base))
    if k < g:
        reg = tilt_regular(sol.beta)
        pairs.append(("reg|reg", 2 * reg))
        if k > 0:
            pairs.append(("id:base|reg", base + reg))
    return TiltReport(r, tuple(pairs))


def check_canonical(g, k, floor_exponent=40):
    """Look for a cusp height ``r = 2^-j`` making every tilt sum negative.

    Returns ``(True, r)`` for the first working ``r``; ``(False, None)`` if
    none down to ``2^-floor_exponent`` works.
    """
    for j in range(floor_exponent + 1):
        r = 2.0 ** -j
        if tilts(g, k, r).canonical:
            return True, r
    return False, None

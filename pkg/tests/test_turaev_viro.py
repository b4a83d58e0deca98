import random
from itertools import product

import pytest
from sympy import Rational
from sympy.physics.wigner import wigner_6j

from mgk import perm as P
from mgk.isosig import decode_signature
from mgk.turaev_viro import (TVError, TVParams, admissible, edge_weight, qint, sixj,
                             tv_value)


def _sj(cols, params):
    try:
        return sixj(*cols, params)
    except TVError:
        return 0


def _symmetries(a, b, c, d, e, f):
    """The 24 images of a 6j-symbol under the symmetries of the tetrahedron."""
    gens = [lambda a, b, c, d, e, f: (b, a, c, e, d, f),
            lambda a, b, c, d, e, f: (a, c, b, d, f, e),
            lambda a, b, c, d, e, f: (d, e, c, a, b, f)]
    seen = {(a, b, c, d, e, f)}
    todo = [(a, b, c, d, e, f)]
    while todo:
        x = todo.pop()
        for g in gens:
            y = g(*x)
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return seen


def test_params_validation():
    with pytest.raises(TVError):
        TVParams(2)
    with pytest.raises(TVError):
        TVParams(4, 2)
    assert list(TVParams(5).colours) == [0, 1, 2, 3]


def test_quantum_integers():
    p = TVParams(5)
    assert qint(1, p) == pytest.approx(1)
    assert qint(5, p) == pytest.approx(0, abs=1e-15)
    # [2] = q + 1/q
    assert qint(2, p) == pytest.approx((p.q + 1 / p.q).real)
    assert edge_weight(0, p) == pytest.approx(1)


def test_trivial_symbol():
    assert sixj(0, 0, 0, 0, 0, 0, TVParams(4)) == pytest.approx(1)


def test_inadmissible_rejected():
    assert not admissible(1, 1, 1, 5)
    assert not admissible(0, 2, 4, 5)
    assert not admissible(3, 3, 2, 4)   # exceeds the level
    with pytest.raises(TVError):
        sixj(1, 1, 1, 0, 0, 0, TVParams(5))


def test_tetrahedral_symmetry_all_tuples():
    p = TVParams(4)
    cols = list(p.colours)
    orbit_sizes = set()
    for t in product(cols, repeat=6):
        images = _symmetries(*t)
        orbit_sizes.add(len(images))
        v = _sj(t, p)
        for u in images:
            assert abs(_sj(u, p) - v) <= 1e-12
    assert 24 in {len(_symmetries(0, 1, 2, 3, 4, 5))}


def _be_tuples(r):
    cols = list(TVParams(r).colours)
    if r == 4:
        yield from product(cols, repeat=9)     # exhaustive, 3^9 tuples
        return
    rng = random.Random(r)
    for _ in range(20000):
        yield tuple(rng.choice(cols) for _ in range(9))


@pytest.mark.parametrize("r", [4, 5])
def test_biedenharn_elliott(r):
    p = TVParams(r)
    cols = list(p.colours)
    nontrivial = 0
    for a, b, c, d, e, f, x1, x2, x3 in _be_tuples(r):
        rhs = _sj((x1, x2, x3, e, a, d), p) * _sj((x1, x2, x3, f, b, c), p)
        lhs = 0
        for x in cols:
            tot = a + b + c + d + e + f + x1 + x2 + x3 + x
            if tot % 2:
                continue
            lhs += ((-1) ** (tot // 2) * qint(x + 1, p) * _sj((a, b, x, c, d, x1), p)
                    * _sj((c, d, x, e, f, x2), p) * _sj((e, f, x, b, a, x3), p))
        assert abs(lhs - rhs) <= 1e-10
        nontrivial += rhs != 0
    assert nontrivial > 20


def test_classical_limit():
    # as q -> 1 the quantum symbol tends to the Wigner 6j-symbol
    p = TVParams(4000)
    tuples = [t for t in product(range(5), repeat=6)
              if all(admissible(x, y, z, 4000) for x, y, z in
                     ((t[0], t[1], t[2]), (t[0], t[4], t[5]), (t[3], t[1], t[5]), (t[3], t[4], t[2])))]
    for t in tuples[::37]:
        expect = float(wigner_6j(*[Rational(x, 2) for x in t]))
        assert sixj(*t, p) == pytest.approx(expect, abs=1e-5)


def test_orthogonality():
    # sum_x [2x+1][2c+1] {a b x; d e c}{a b x; d e c'} = delta(c, c')
    p = TVParams(6)
    cols = list(p.colours)
    for a, b, d, e in [(1, 1, 1, 1), (2, 1, 1, 2), (2, 2, 2, 2)]:
        for c1, c2 in product(cols, repeat=2):
            s = sum(qint(x + 1, p) * qint(c1 + 1, p) * _sj((a, b, x, d, e, c1), p)
                    * _sj((a, b, x, d, e, c2), p) for x in cols)
            ok = admissible(a, e, c1, 6) and admissible(d, b, c1, 6)
            assert s == pytest.approx(1.0 if (c1 == c2 and ok) else 0.0, abs=1e-10)


@pytest.mark.parametrize("n", [2, 3])
def test_constant_within_cells(census, n):
    for r in (3, 4, 5):
        for cell, sigs in census(n).cells.items():
            vals = [tv_value(decode_signature(s), TVParams(r)) for s in sigs]
            assert max(vals) - min(vals) <= 1e-9, (cell, r)


def test_relabelling_and_conjugate_root(census):
    rng = random.Random(11)
    sig = census(3).cells[(2, 1)][0]
    T = decode_signature(sig)
    U = T.relabel([2, 0, 1], [rng.choice(P.S4) for _ in range(3)])
    for r in (4, 5):
        base = tv_value(T, TVParams(r))
        assert tv_value(U, TVParams(r)) == pytest.approx(base, abs=1e-12)
        assert tv_value(T, TVParams(r, 2 * r - 1)) == pytest.approx(base, abs=1e-12)


def test_resource_guard(figure_eight):
    with pytest.raises(TVError):
        tv_value(figure_eight, TVParams(50), max_states=100)

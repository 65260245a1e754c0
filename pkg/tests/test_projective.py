import itertools

import numpy as np
import pytest

from paley4.errors import CapExceeded, ZeroVector
from paley4.field import field_make
from paley4.projective import (
    PglElement,
    det_pair,
    pgl_apply,
    pgl_enumerate,
    pgl_permutations,
    proj_normalize,
    proj_point,
    proj_points,
    random_pgl,
    s_index,
    s_value,
)


def test_normalize_examples(gf7):
    e = gf7.element
    assert proj_normalize(e(3), e(3)) == proj_point(gf7, 1)
    assert proj_normalize(e(2), e(0)) == proj_point(gf7, 7)
    assert 6 * 4 % 7 == 3 and 2 * 4 % 7 == 1
    assert proj_normalize(e(6), e(2)) == proj_point(gf7, 3)
    with pytest.raises(ZeroVector):
        proj_normalize(e(0), e(0))


def test_det_examples(gf7):
    e = gf7.element
    for x in range(7):
        assert det_pair((e(x), e(1)), (e(1), e(0))) == e(-1)
    u = (e(2), e(5))
    assert det_pair(u, u) == gf7.zero()
    assert det_pair((e(2), e(1)), (e(3), e(1))) == e(6)


def test_det_antisymmetric_bilinear(gf7):
    rng = np.random.default_rng(0)
    for _ in range(100):
        u, v, w = [(gf7.element(int(a)), gf7.element(int(b))) for a, b in rng.integers(0, 7, (3, 2))]
        lam = gf7.element(int(rng.integers(0, 7)))
        assert det_pair(u, v) == -det_pair(v, u)
        uw = (u[0] + lam * w[0], u[1] + lam * w[1])
        assert det_pair(uw, v) == det_pair(u, v) + lam * det_pair(w, v)


def test_s_value_example(gf7):
    P = lambda i: proj_point(gf7, i)  # noqa: E731
    # D factors (-1, -1, 1, 3); product 3 is a non-square mod 7
    assert s_value(P(0), P(1), P(7), P(3)) == -1


def test_s_value_degenerate(gf7):
    P = lambda i: proj_point(gf7, i)  # noqa: E731
    for a, b, c in itertools.permutations(range(8), 3):
        assert s_value(P(a), P(b), P(a), P(c)) == 0
        assert s_value(P(a), P(a), P(b), P(c)) == 0
        assert s_value(P(a), P(b), P(c), P(a)) == 0


def test_three_s_identity_exhaustive_q7(gf7):
    pts = proj_points(gf7)
    for a, b, c, d in itertools.permutations(pts, 4):
        assert s_value(a, b, c, d) * s_value(a, b, d, c) == -s_value(a, c, b, d)


def test_three_s_identity_random_q11(gf11):
    pts = proj_points(gf11)
    rng = np.random.default_rng(11)
    for _ in range(200):
        a, b, c, d = (pts[i] for i in rng.choice(12, 4, replace=False))
        assert s_value(a, b, c, d) * s_value(a, b, d, c) == -s_value(a, c, b, d)


def test_cyclic_invariance_q7(gf7):
    for a, b, c, d in itertools.permutations(proj_points(gf7), 4):
        v = s_value(a, b, c, d)
        assert v in (1, -1)
        assert v == s_value(b, c, d, a)


def _rescaled(spec, pt, lam):
    return (lam * pt.a, lam * pt.b)


def test_representative_invariance_q7(gf7):
    pts = proj_points(gf7)
    scalars = gf7.elements[1:]
    for quad in itertools.permutations(pts, 4):
        base = s_value(*quad)
        for pos in range(4):
            for lam in scalars:
                args = list(quad)
                args[pos] = _rescaled(gf7, quad[pos], lam)
                assert s_value(*args) == base


@pytest.mark.parametrize("p", [11, 19])
def test_representative_invariance_random(p):
    spec = field_make(p)
    pts = proj_points(spec)
    rng = np.random.default_rng(p)
    for _ in range(200):
        quad = [pts[i] for i in rng.choice(p + 1, 4, replace=False)]
        lams = [spec.element(int(x)) for x in rng.integers(1, p, 4)]
        assert s_value(*[_rescaled(spec, q, l) for q, l in zip(quad, lams)]) == s_value(*quad)


def test_double_cover_identity_q7(gf7):
    for a, b, c, d, e in itertools.permutations(proj_points(gf7), 5):
        prod = s_value(a, b, c, d) * s_value(b, c, e, d) * s_value(a, d, b, e) \
            * s_value(a, e, d, c) * s_value(a, b, e, c)
        assert prod == 1


def test_s_index_matches_s_value(gf27):
    pts = proj_points(gf27)
    rng = np.random.default_rng(27)
    for _ in range(300):
        idx = [int(i) for i in rng.choice(28, 4, replace=False)]
        assert s_index(gf27, *idx) == s_value(*(pts[i] for i in idx))


def test_pgl_identity_fixes_points(gf7):
    ident = PglElement.make(gf7.one(), 0, 0, 1)
    for pt in proj_points(gf7):
        assert pgl_apply(ident, pt) == pt


def test_pgl_translation(gf7):
    A = PglElement.make(gf7.one(), 1, 0, 1)
    assert pgl_apply(A, proj_point(gf7, 0)) == proj_point(gf7, 1)


def _brute_pgl_order(p):
    invertible = sum((a * d - b * c) % p != 0 for a, b, c, d in itertools.product(range(p), repeat=4))
    return invertible // (p - 1)


@pytest.mark.parametrize("p,expected", [(3, 24), (7, 336), (11, 1320)])
def test_pgl_enumerate_counts(p, expected):
    assert _brute_pgl_order(p) == expected
    spec = field_make(p)
    group = pgl_enumerate(spec)
    assert len(group) == expected
    assert len({(A.a, A.b, A.c, A.d) for A in group}) == expected
    # the action is faithful, so distinct classes give distinct permutations
    perms = pgl_permutations(spec)
    assert len({tuple(row) for row in perms}) == expected
    for row in perms:
        assert sorted(row) == list(range(p + 1))


def test_pgl_cap():
    with pytest.raises(CapExceeded):
        pgl_enumerate(field_make(37))
    with pytest.raises(CapExceeded):
        pgl_enumerate(field_make(11), cap=7)


def test_pgl_make_normalizes(gf7):
    A = PglElement.make(gf7.element(3), 1, 2, 5)
    B = PglElement.make(gf7.element(6), 2, 4, 10)
    assert A == B and A.a == gf7.one()


def test_pgl_preserves_s_all_group_q7(gf7):
    perms = pgl_permutations(gf7)
    quads = [q for q in itertools.permutations(range(8), 4) if q[0] == min(q)]
    for perm in perms:
        for q in quads:
            assert s_index(gf7, *(int(perm[i]) for i in q)) == s_index(gf7, *q)


def test_pgl_preserves_s_value_random_q7(gf7):
    rng = np.random.default_rng(7)
    pts = proj_points(gf7)
    for _ in range(10):
        A = random_pgl(gf7, rng)
        for quad in itertools.permutations(pts, 4):
            assert s_value(*(pgl_apply(A, x) for x in quad)) == s_value(*quad)


def test_pgl_preserves_s_random_q19():
    spec = field_make(19)
    rng = np.random.default_rng(19)
    pts = proj_points(spec)
    for _ in range(100):
        A = random_pgl(spec, rng)
        quad = [pts[i] for i in rng.choice(20, 4, replace=False)]
        assert s_value(*(A(x) for x in quad)) == s_value(*quad)


def test_three_transitive_q7(gf7):
    perms = pgl_permutations(gf7)
    orbit = {tuple(int(perm[i]) for i in (0, 1, 7)) for perm in perms}
    assert orbit == set(itertools.permutations(range(8), 3))

"""The projective line over GF(q), the determinant pairing and PGL(2, q).

Vertex indexing: the point [x:1] has the canonical index of x, and
the point at infinity [1:0] has index q.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import CapExceeded, ZeroVector
from .field import FieldElement, FieldSpec, chi

DEFAULT_PGL_CAP = 31


@dataclass(frozen=True)
class ProjPoint:
    a: FieldElement
    b: FieldElement

    @property
    def spec(self) -> FieldSpec:
        return self.a.spec

    @property
    def index(self) -> int:
        return self.a.index if self.b else self.spec.q

    @property
    def rep(self) -> tuple[FieldElement, FieldElement]:
        return self.a, self.b

    def __repr__(self):
        return f"[{self.a!r}:{self.b!r}]"


def proj_normalize(a: FieldElement, b: FieldElement) -> ProjPoint:
    """Canonical representative of [a:b]: (a/b, 1) or (1, 0)."""
    if b:
        return ProjPoint(a / b, b.spec.one())
    if a:
        return ProjPoint(a.spec.one(), a.spec.zero())
    raise ZeroVector("(0, 0) is not a point of the projective line")


def proj_point(spec: FieldSpec, index: int) -> ProjPoint:
    if index == spec.q:
        return ProjPoint(spec.one(), spec.zero())
    return ProjPoint(spec.from_index(index), spec.one())


def proj_points(spec: FieldSpec) -> list[ProjPoint]:
    return [proj_point(spec, i) for i in range(spec.q + 1)]


def det_pair(u, v) -> FieldElement:
    """D(u, v) = u1*v2 - u2*v1 for pairs or projective points."""
    u1, u2 = u.rep if isinstance(u, ProjPoint) else u
    v1, v2 = v.rep if isinstance(v, ProjPoint) else v
    return u1 * v2 - u2 * v1


def s_value(a, b, c, d) -> int:
    """chi(D(a,b) D(b,c) D(c,d) D(d,a)); 0 if any two arguments coincide.

    Arguments may be ProjPoints or raw representative pairs; the value
    does not depend on the representatives chosen.
    """
    pts = [p if isinstance(p, ProjPoint) else proj_normalize(*p) for p in (a, b, c, d)]
    if len({p.index for p in pts}) < 4:
        return 0
    a, b, c, d = (p.rep if isinstance(p, ProjPoint) else p for p in (a, b, c, d))
    return chi(det_pair(a, b) * det_pair(b, c) * det_pair(c, d) * det_pair(d, a))


@lru_cache(maxsize=None)
def chi_det_matrix(spec: FieldSpec) -> np.ndarray:
    """M[i, j] = chi(D(P_i, P_j)) over canonical representatives, (q+1) x (q+1).

    Since chi is multiplicative, S(a,b,c,d) = M[a,b] M[b,c] M[c,d] M[d,a]
    for distinct vertex indices.
    """
    pts = proj_points(spec)
    n = len(pts)
    m = np.zeros((n, n), dtype=np.int8)
    for i, j in itertools.combinations(range(n), 2):
        m[i, j] = chi(det_pair(pts[i], pts[j]))
        m[j, i] = chi(det_pair(pts[j], pts[i]))
    m.setflags(write=False)
    return m


def s_index(spec: FieldSpec, a: int, b: int, c: int, d: int) -> int:
    """s_value on vertex indices, via the cached character matrix."""
    if len({a, b, c, d}) < 4:
        return 0
    m = chi_det_matrix(spec)
    return int(m[a, b]) * int(m[b, c]) * int(m[c, d]) * int(m[d, a])


@dataclass(frozen=True)
class PglElement:
    """Scalar class of an invertible 2x2 matrix [[a, b], [c, d]].

    Stored with the first nonzero entry scaled to 1.
    """

    a: FieldElement
    b: FieldElement
    c: FieldElement
    d: FieldElement

    @classmethod
    def make(cls, a, b, c, d) -> PglElement:
        entries = [a, b, c, d]
        spec = next(e.spec for e in entries if isinstance(e, FieldElement))
        entries = [spec.element(e) if isinstance(e, int) else e for e in entries]
        det = entries[0] * entries[3] - entries[1] * entries[2]
        if not det:
            raise ValueError("matrix is singular")
        lead = next(e for e in entries if e).inv()
        return cls(*(e * lead for e in entries))

    @property
    def det(self) -> FieldElement:
        return self.a * self.d - self.b * self.c

    def __call__(self, x: ProjPoint) -> ProjPoint:
        return pgl_apply(self, x)

    def permutation(self) -> np.ndarray:
        """The induced permutation of vertex indices 0..q."""
        spec = self.a.spec
        return np.array([pgl_apply(self, proj_point(spec, i)).index for i in range(spec.q + 1)])


def pgl_apply(A: PglElement, x: ProjPoint) -> ProjPoint:
    """[u1:u2] -> [a u1 + b u2 : c u1 + d u2]."""
    u1, u2 = x.rep
    return proj_normalize(A.a * u1 + A.b * u2, A.c * u1 + A.d * u2)


def pgl_enumerate(spec: FieldSpec, cap: int = DEFAULT_PGL_CAP) -> list[PglElement]:
    """Every element of PGL(2, q), each scalar class once."""
    if spec.q > cap:
        raise CapExceeded(f"q = {spec.q} exceeds the enumeration cap {cap}")
    els = spec.elements
    zero, one = spec.zero(), spec.one()
    out = []
    # first nonzero entry normalized to 1
    for b, c, d in itertools.product(els, repeat=3):
        if one * d - b * c:
            out.append(PglElement(one, b, c, d))
    for c, d in itertools.product(els, repeat=2):
        if zero * d - one * c:
            out.append(PglElement(zero, one, c, d))
    return out


def pgl_permutations(spec: FieldSpec, cap: int = DEFAULT_PGL_CAP) -> np.ndarray:
    """Vertex permutations induced by all of PGL(2, q), one row per element."""
    return np.array([A.permutation() for A in pgl_enumerate(spec, cap)])


def random_pgl(spec: FieldSpec, rng: np.random.Generator) -> PglElement:
    while True:
        a, b, c, d = (spec.from_index(int(i)) for i in rng.integers(0, spec.q, size=4))
        if a * d - b * c:
            return PglElement.make(a, b, c, d)

"""Pointwise geometry of spacelike immersions in Minkowski 4-space.

Given an immersion z(u, v) evaluable in jet arithmetic, this module
computes, per point: the induced metric E, F, G; an orthonormal normal
frame {n1, n2} with <n1,n1> = 1 and <n2,n2> = -1; the normal coefficients
c_ij^k of the second partial derivatives; the form functions L, M, N
and the derived invariants k (asymptotic-tangent discriminant) and
kappa_normal (curvature of the normal connection); the Gauss curvature K;
and the mean curvature vector H with its frame components.

Conventions.  The normal frame satisfies <n1,n1> = 1, <n2,n2> = -1,
<n1,n2> = 0, the quadruple {z_u, z_v, n1, n2} is positively oriented, and
n2 is future-pointing (<n2, e4> < 0).  These two sign choices make the
frame-dependent quantities reproducible; k, K, H and |kappa_normal| do not
depend on them.  A surface family may install its own preferred frame on
the patch (see :class:`SurfacePatch.frame`); the canonical construction
projects e4 (always timelike in the normal space of a spacelike tangent
plane) and the best of e3, e1, e2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Optional, Union

from .errors import DegenerateFrame, DomainError, NotSpacelike
from .jets import Jet2, Jet2Vec4
from .minkowski import (E1, E2, E3, E4, CausalCharacter, Vec4M,
                        causal_character, inner)


@dataclass(frozen=True, slots=True)
class Interval:
    lo: float
    hi: float

    def __post_init__(self):
        if not (self.lo < self.hi):
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @property
    def width(self) -> float:
        return self.hi - self.lo

    def contains(self, x: float) -> bool:
        return self.lo <= x <= self.hi

    def linspace(self, n: int, inset: float = 0.0) -> list[float]:
        """n evenly spaced samples, optionally inset from both ends.

        ``inset`` is a fraction of the width removed at each end.  The
        endpoint values are exact so samples never leave the interval.
        """
        if n < 2:
            raise ValueError("need at least 2 samples")
        a = self.lo + inset * self.width
        b = self.hi - inset * self.width
        step = (b - a) / (n - 1)
        return [a + i * step for i in range(n - 1)] + [b]

    def clipped(self, lo: float, hi: float) -> "Interval":
        return Interval(max(self.lo, lo), min(self.hi, hi))


@dataclass(frozen=True, slots=True)
class Rect:
    u: Interval
    v: Interval


FrameFn = Callable[[float, float], tuple[Vec4M, Vec4M]]


@dataclass(frozen=True)
class SurfacePatch:
    """An immersion over a rectangle, evaluable in jet arithmetic.

    ``immersion`` receives jets seeded in u and v and returns the four
    coordinate jets.  ``kind`` labels the construction family
    ("parabolic", "elliptic", "hyperbolic" or "generic"); verifiers use it
    to reject inputs they are not meant for.  ``frame``, when present, is
    the family's preferred normal frame and takes precedence over the
    canonical construction in :func:`point_data`.
    """

    immersion: Callable[[Jet2, Jet2], Jet2Vec4]
    domain: Rect
    label: str = ""
    kind: str = "generic"
    frame: Optional[FrameFn] = None


def jet_eval_surface(patch: SurfacePatch, u: float, v: float) -> Jet2Vec4:
    """Evaluate the immersion with (u, v) seeded as jet variables."""
    if not patch.domain.u.contains(u):
        raise DomainError("surface-eval", u,
                          f"u in [{patch.domain.u.lo}, {patch.domain.u.hi}]")
    if not patch.domain.v.contains(v):
        raise DomainError("surface-eval", v,
                          f"v in [{patch.domain.v.lo}, {patch.domain.v.hi}]")
    return patch.immersion(Jet2.seed_u(u), Jet2.seed_v(v))


def _det4(a: Vec4M, b: Vec4M, c: Vec4M, d: Vec4M) -> float:
    """Determinant of the 4x4 matrix with columns a, b, c, d."""
    m = (a.coords(), b.coords(), c.coords(), d.coords())

    def minor3(rows, cols):
        (r0, r1, r2) = rows
        (c0, c1, c2) = cols
        return (m[c0][r0] * (m[c1][r1] * m[c2][r2] - m[c1][r2] * m[c2][r1])
                - m[c1][r0] * (m[c0][r1] * m[c2][r2] - m[c0][r2] * m[c2][r1])
                + m[c2][r0] * (m[c0][r1] * m[c1][r2] - m[c0][r2] * m[c1][r1]))

    det = 0.0
    sign = 1.0
    for col in range(4):
        cols = tuple(c for c in range(4) if c != col)
        det += sign * m[col][0] * minor3((1, 2, 3), cols)
        sign = -sign
    return det


def normal_frame(z_u: Vec4M, z_v: Vec4M,
                 tol: float = 1e-12) -> tuple[Vec4M, Vec4M]:
    """Orthonormal normal frame of a spacelike tangent plane.

    n2 is the normalized normal projection of e4; for a spacelike tangent
    plane that projection is always timelike and automatically
    future-pointing.  n1 comes from the largest of the normal projections
    of e3, e1, e2 after removing the n2 component; its sign is fixed by
    requiring det[z_u | z_v | n1 | n2] > 0.
    """
    e = inner(z_u, z_u)
    f = inner(z_u, z_v)
    g = inner(z_v, z_v)
    det2 = e * g - f * f
    if e <= 0.0 or det2 <= 0.0:
        raise NotSpacelike(f"tangent plane not spacelike: E={e!r}, EG-F^2={det2!r}")

    def project_normal(w: Vec4M) -> Vec4M:
        wu = inner(w, z_u)
        wv = inner(w, z_v)
        alpha = (g * wu - f * wv) / det2
        beta = (e * wv - f * wu) / det2
        return w - z_u.scale(alpha) - z_v.scale(beta)

    nu = project_normal(E4)
    q = inner(nu, nu)
    if q >= -tol:
        raise DegenerateFrame(
            f"normal space contains no timelike direction (<nu,nu>={q!r})")
    n2 = nu.scale(1.0 / math.sqrt(-q))

    best: Vec4M | None = None
    best_sq = -math.inf
    for w in (E3, E1, E2):
        mu = project_normal(w)
        mu = mu + n2.scale(inner(mu, n2))
        sq = inner(mu, mu)
        if sq > best_sq:
            best, best_sq = mu, sq
    if best is None or best_sq <= tol:
        raise DegenerateFrame("no spacelike normal direction found")
    n1 = best.scale(1.0 / math.sqrt(best_sq))
    if _det4(z_u, z_v, n1, n2) < 0.0:
        n1 = -n1
    return n1, n2


@dataclass(frozen=True)
class PointData:
    """All pointwise geometry of an immersion at one (u, v)."""

    u: float
    v: float
    z: Vec4M
    z_u: Vec4M
    z_v: Vec4M
    z_uu: Vec4M
    z_uv: Vec4M
    z_vv: Vec4M
    E: float
    F: float
    G: float
    W: float
    x: Vec4M
    y: Vec4M
    n1: Vec4M
    n2: Vec4M
    c11_1: float
    c12_1: float
    c22_1: float
    c11_2: float
    c12_2: float
    c22_2: float
    L: float
    M: float
    N: float
    k: float
    kappa_normal: float
    K: float
    H: Vec4M
    H1: float
    H2: float

    def h_dot_h(self) -> float:
        """<H, H> from the frame components; exact for H in span{n1, n2}."""
        return self.H1 * self.H1 - self.H2 * self.H2


FrameLike = Union[FrameFn, tuple[Vec4M, Vec4M], None]


def _resolve_frame(patch: SurfacePatch, u: float, v: float,
                   z_u: Vec4M, z_v: Vec4M, e: float, g: float,
                   frame: FrameLike, frame_tol: float) -> tuple[Vec4M, Vec4M]:
    chosen = frame if frame is not None else patch.frame
    if chosen is None:
        return normal_frame(z_u, z_v)
    n1, n2 = chosen(u, v) if callable(chosen) else chosen
    su = math.sqrt(e)
    sv = math.sqrt(g)
    residuals = (
        abs(inner(n1, n1) - 1.0), abs(inner(n2, n2) + 1.0),
        abs(inner(n1, n2)),
        abs(inner(n1, z_u)) / su, abs(inner(n1, z_v)) / sv,
        abs(inner(n2, z_u)) / su, abs(inner(n2, z_v)) / sv,
    )
    worst = max(residuals)
    if worst > frame_tol:
        raise DegenerateFrame(
            f"supplied frame is not orthonormal-normal (residual {worst:.3e})")
    return n1, n2


def point_data(patch: SurfacePatch, u: float, v: float,
               frame: FrameLike = None, frame_tol: float = 1e-8) -> PointData:
    """Compute all pointwise geometry at an interior point.

    ``frame`` overrides the normal frame (a callable or an (n1, n2) pair);
    it is validated for orthonormality and normality but not for
    orientation, so sign-flipped frames can be probed deliberately.
    """
    jets = jet_eval_surface(patch, u, v)

    def resolver(z_u, z_v, e, g):
        return _resolve_frame(patch, u, v, z_u, z_v, e, g, frame, frame_tol)

    return point_data_from_derivatives(
        u, v, jets.value(), jets.d_u(), jets.d_v(),
        jets.d_uu(), jets.d_uv(), jets.d_vv(), _frame_resolver=resolver)


def point_data_from_derivatives(u: float, v: float, z: Vec4M,
                                z_u: Vec4M, z_v: Vec4M, z_uu: Vec4M,
                                z_uv: Vec4M, z_vv: Vec4M,
                                frame: FrameLike = None,
                                _frame_resolver=None) -> PointData:
    """Pointwise geometry from already-computed derivative vectors.

    Lets a caller feed derivatives obtained by any means (for instance a
    finite-difference scheme) through the exact same formula path as
    :func:`point_data`.
    """
    e = inner(z_u, z_u)
    f = inner(z_u, z_v)
    g = inner(z_v, z_v)
    det2 = e * g - f * f
    if e <= 0.0 or det2 <= 0.0:
        raise NotSpacelike(
            f"not spacelike at (u,v)=({u!r},{v!r}): E={e!r}, EG-F^2={det2!r}")
    w = math.sqrt(det2)

    if _frame_resolver is not None:
        n1, n2 = _frame_resolver(z_u, z_v, e, g)
    elif frame is not None:
        n1, n2 = frame(u, v) if callable(frame) else frame
    else:
        n1, n2 = normal_frame(z_u, z_v)

    c11_1 = inner(z_uu, n1)
    c12_1 = inner(z_uv, n1)
    c22_1 = inner(z_vv, n1)
    c11_2 = inner(z_uu, n2)
    c12_2 = inner(z_uv, n2)
    c22_2 = inner(z_vv, n2)

    big_l = (2.0 / w) * (c11_1 * c12_2 - c12_1 * c11_2)
    big_m = (1.0 / w) * (c11_1 * c22_2 - c22_1 * c11_2)
    big_n = (2.0 / w) * (c12_1 * c22_2 - c22_1 * c12_2)

    k = (big_l * big_n - big_m * big_m) / det2
    kappa_normal = (e * big_n + g * big_l - 2.0 * f * big_m) / (2.0 * det2)

    # Gauss equation in a flat ambient space, on the normal components of
    # the second derivatives: <s11, s22> - <s12, s12> over EG - F^2, with
    # s_ij = c_ij^1 n1 - c_ij^2 n2 and <n2, n2> = -1.
    gauss_k = (c11_1 * c22_1 - c11_2 * c22_2
               - c12_1 * c12_1 + c12_2 * c12_2) / det2

    # Mean curvature vector: normal projection of the metric trace of the
    # second derivatives.
    trace = (z_uu.scale(g) - z_uv.scale(2.0 * f) + z_vv.scale(e)).scale(
        1.0 / (2.0 * det2))
    tu = inner(trace, z_u)
    tv = inner(trace, z_v)
    alpha = (g * tu - f * tv) / det2
    beta = (e * tv - f * tu) / det2
    h_vec = trace - z_u.scale(alpha) - z_v.scale(beta)
    h1 = inner(h_vec, n1)
    h2 = -inner(h_vec, n2)

    # Orthonormal tangent frame (first leg along z_u).
    x = z_u.scale(1.0 / math.sqrt(e))
    y = (z_v - z_u.scale(f / e)).scale(math.sqrt(e / det2))

    return PointData(u=u, v=v, z=z, z_u=z_u, z_v=z_v,
                     z_uu=z_uu, z_uv=z_uv, z_vv=z_vv,
                     E=e, F=f, G=g, W=w, x=x, y=y, n1=n1, n2=n2,
                     c11_1=c11_1, c12_1=c12_1, c22_1=c22_1,
                     c11_2=c11_2, c12_2=c12_2, c22_2=c22_2,
                     L=big_l, M=big_m, N=big_n,
                     k=k, kappa_normal=kappa_normal, K=gauss_k,
                     H=h_vec, H1=h1, H2=h2)


class PointKind(Enum):
    FLAT_POINT = "flat-point"
    REGULAR = "regular"


@dataclass(frozen=True, slots=True)
class PointClass:
    kind: PointKind
    asymptotic_tangents: Optional[int]  # None at flat points


def classify_point(p: PointData, tol: float = 1e-10) -> PointClass:
    """Flat-point test and asymptotic-tangent count by the sign of k."""
    if max(abs(p.L), abs(p.M), abs(p.N)) <= tol:
        return PointClass(PointKind.FLAT_POINT, None)
    if p.k < -tol:
        count = 2
    elif p.k > tol:
        count = 0
    else:
        count = 1
    return PointClass(PointKind.REGULAR, count)


def is_marginally_trapped(p: PointData, tol: float = 1e-9) -> bool:
    """True iff the mean curvature vector is lightlike (nonzero included)."""
    return causal_character(p.H, tol) is CausalCharacter.LIGHTLIKE

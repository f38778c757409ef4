"""Constructors for meridian surfaces and their generating curves.

A rotational hypersurface in Minkowski 4-space has a timelike, spacelike or
lightlike axis; restricting its two rotation parameters to a curve
w1 = w1(v), w2 = w2(v) produces a two-dimensional surface swept by a
one-parameter system of meridians.  The three cases are built here as
elliptic, hyperbolic and parabolic meridian surfaces.  The parabolic
(lightlike-axis) family

    z(u, v) = f*phi*cos(v) e1 + f*phi*sin(v) e2
              + (f*phi^2/2 + g) xi1 + f xi2,

with profile pair (f, g) satisfying f > 0, -f'*g' > 0 and generating
profile phi(v) with phi'^2 + phi^2 > 0, is the main subject: this module
also provides the two closed-form subfamilies whose mean curvature vector
is lightlike everywhere (a cone family with straight meridians, and a
general family whose meridian profile solves an explicit ODE), the
lightlike-axis paraboloid that carries every generating curve, and its
constant-curvature plane sections.

Profile functions are callables on :class:`~minksurf.jets.Jet2` values, so
every geometric quantity below is differentiated exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Optional

from . import jets
from .errors import AdmissibilityError, CurvatureMismatch, ParamError
from .jets import Jet2, Jet2Vec4, vec_from_null_jets
from .minkowski import XI1, NullFrameCoords, Vec4M, from_null_frame, inner
from .surface import Interval, Rect, SurfacePatch

ProfileFn = Callable[[Jet2], Jet2]


@dataclass(frozen=True)
class ProfilePair:
    """Meridian profile (f, g) on an interval; f > 0 and -f'*g' > 0 there."""

    f: ProfileFn
    g: ProfileFn
    domain: Interval


@dataclass(frozen=True)
class ProfileCurvePhi:
    """Generating profile phi(v) on an interval; phi'^2 + phi^2 > 0 there."""

    phi: ProfileFn
    domain: Interval


class SignBranch(Enum):
    PLUS = 1.0
    MINUS = -1.0


class RootBranch(Enum):
    PLUS = 1.0
    MINUS = -1.0


def profile_u(fn: ProfileFn, u: float) -> Jet2:
    """Evaluate a one-variable profile with u seeded as the first variable."""
    return fn(Jet2.seed_u(u))


def profile_v(fn: ProfileFn, v: float) -> Jet2:
    """Evaluate a one-variable profile with v seeded as the second variable."""
    return fn(Jet2.seed_v(v))


# ---------------------------------------------------------------------------
# curvature of the parametric lines
# ---------------------------------------------------------------------------

def kappa_m(fp: ProfilePair, u: float) -> float:
    """Curvature of the meridian line: (f'g'' - g'f'') / (-2f'g')^(3/2)."""
    fj = profile_u(fp.f, u)
    gj = profile_u(fp.g, u)
    p = -2.0 * fj.du * gj.du
    if p <= 0.0:
        raise AdmissibilityError("-f'*g' > 0", "u", u)
    return (fj.du * gj.duu - gj.du * fj.duu) / p ** 1.5


def kappa_bar(phi: ProfileCurvePhi, v: float) -> float:
    """Curvature of the generating curve:
    (phi*phi'' - 2 phi'^2 - phi^2) / (phi'^2 + phi^2)^(3/2)."""
    pj = profile_v(phi.phi, v)
    q = pj.dv * pj.dv + pj.val * pj.val
    if q <= 0.0:
        raise AdmissibilityError("phi'^2 + phi^2 > 0", "v", v)
    return (pj.val * pj.dvv - 2.0 * pj.dv * pj.dv - pj.val * pj.val) / q ** 1.5


# ---------------------------------------------------------------------------
# admissibility checks (sampled)
# ---------------------------------------------------------------------------

_CHECK_SAMPLES = 41


def _check_parabolic_profiles(fp: ProfilePair, n: int = _CHECK_SAMPLES) -> None:
    for u in fp.domain.linspace(n):
        fj = profile_u(fp.f, u)
        gj = profile_u(fp.g, u)
        if not fj.val > 0.0:
            raise AdmissibilityError("f > 0", "u", u)
        if not -fj.du * gj.du > 0.0:
            raise AdmissibilityError("-f'*g' > 0", "u", u)


def _check_phi(phi: ProfileCurvePhi, n: int = _CHECK_SAMPLES) -> None:
    for v in phi.domain.linspace(n):
        pj = profile_v(phi.phi, v)
        if not pj.dv * pj.dv + pj.val * pj.val > 0.0:
            raise AdmissibilityError("phi'^2 + phi^2 > 0", "v", v)


# ---------------------------------------------------------------------------
# the parabolic meridian surface
# ---------------------------------------------------------------------------

def parabolic_normal_frame(fp: ProfilePair, phi: ProfileCurvePhi):
    """The family-adapted orthonormal normal frame of the parabolic surface.

    In this frame the second fundamental form degenerates (L = N = 0) and
    the closed-form invariants take their reduced shape.  It satisfies the
    same orientation conventions as the canonical frame: positively
    oriented with the tangents, n2 future-pointing.
    """

    def frame(u: float, v: float) -> tuple[Vec4M, Vec4M]:
        fj = profile_u(fp.f, u)
        gj = profile_u(fp.g, u)
        pj = profile_v(phi.phi, v)
        p = -fj.du * gj.du
        if p <= 0.0:
            raise AdmissibilityError("-f'*g' > 0", "u", u)
        q = pj.dv * pj.dv + pj.val * pj.val
        if q <= 0.0:
            raise AdmissibilityError("phi'^2 + phi^2 > 0", "v", v)
        sv, cv = math.sin(v), math.cos(v)
        # Flipping n1 with the sign of f' keeps {z_u, z_v, n1, n2}
        # positively oriented on both admissibility branches.
        r = math.copysign(1.0, fj.du) / math.sqrt(q)
        n1 = from_null_frame(NullFrameCoords(
            (pj.dv * sv + pj.val * cv) * r,
            (-pj.dv * cv + pj.val * sv) * r,
            pj.val * pj.val * r,
            0.0))
        d = math.sqrt(-fj.du / (2.0 * gj.du))
        n2 = from_null_frame(NullFrameCoords(
            pj.val * cv * d,
            pj.val * sv * d,
            (fj.du * pj.val * pj.val - 2.0 * gj.du) / (2.0 * fj.du) * d,
            d))
        return n1, n2

    return frame


def build_parabolic(fp: ProfilePair, phi: ProfileCurvePhi,
                    label: str = "") -> SurfacePatch:
    """Meridian surface of a rotational hypersurface with lightlike axis.

    The profile inequalities are checked on a sample grid up front;
    violations raise :class:`AdmissibilityError` naming the inequality and
    the offending parameter value.  The resulting patch carries the
    family-adapted normal frame.
    """
    _check_parabolic_profiles(fp)
    _check_phi(phi)

    def immersion(ju: Jet2, jv: Jet2) -> Jet2Vec4:
        fj = fp.f(ju)
        gj = fp.g(ju)
        pj = phi.phi(jv)
        cv = jets.cos(jv)
        sv = jets.sin(jv)
        fphi = fj * pj
        return vec_from_null_jets(
            fphi * cv,
            fphi * sv,
            fj * (pj * pj) * 0.5 + gj,
            fj,
        )

    return SurfacePatch(
        immersion=immersion,
        domain=Rect(fp.domain, phi.domain),
        label=label or "parabolic meridian surface",
        kind="parabolic",
        frame=parabolic_normal_frame(fp, phi),
    )


@dataclass(frozen=True)
class ParabolicFamily:
    """A parabolic meridian family with its profiles kept accessible."""

    fp: ProfilePair
    phi: ProfileCurvePhi
    label: str = ""

    def patch(self) -> SurfacePatch:
        return build_parabolic(self.fp, self.phi, label=self.label)


@dataclass(frozen=True, slots=True)
class ClosedForms:
    """Reduced expressions for the parabolic family at one point."""

    E: float
    F: float
    G: float
    L: float
    M: float
    N: float
    k: float
    kappa_normal: float
    K: float
    H1: float
    H2: float


def parabolic_closed_forms(fp: ProfilePair, phi: ProfileCurvePhi,
                           u: float, v: float) -> ClosedForms:
    """Evaluate the reduced invariant formulas of the parabolic family.

    These are the independent counterparts of the numbers produced by
    :func:`minksurf.surface.point_data` with the family-adapted frame:

        E = -2 f' g',  F = 0,  G = f^2 (phi'^2 + phi^2),
        L = N = 0,     M = kappa_m kappa_bar W / f,
        k = -kappa_m^2 kappa_bar^2 / f^2,     kappa_normal = 0,
        K = -f' kappa_m / (f sqrt(-2 f' g')),
        H1 = sign(f') kappa_bar / (2 f),
        H2 = (sign(f') kappa_m + |f'| / (f sqrt(-2 f' g'))) / 2.
    """
    fj = profile_u(fp.f, u)
    gj = profile_u(fp.g, u)
    pj = profile_v(phi.phi, v)
    e = -2.0 * fj.du * gj.du
    if e <= 0.0:
        raise AdmissibilityError("-f'*g' > 0", "u", u)
    q = pj.dv * pj.dv + pj.val * pj.val
    if q <= 0.0:
        raise AdmissibilityError("phi'^2 + phi^2 > 0", "v", v)
    f = fj.val
    g = f * f * q
    w = math.sqrt(e * g)
    km = kappa_m(fp, u)
    kb = kappa_bar(phi, v)
    sgn = math.copysign(1.0, fj.du)
    root_e = math.sqrt(e)
    return ClosedForms(
        E=e, F=0.0, G=g,
        L=0.0,
        M=km * kb * w / f,
        N=0.0,
        k=-(km * km) * (kb * kb) / (f * f),
        kappa_normal=0.0,
        K=-fj.du * km / (f * root_e),
        H1=sgn * kb / (2.0 * f),
        H2=0.5 * (sgn * km + abs(fj.du) / (f * root_e)),
    )


# ---------------------------------------------------------------------------
# elliptic and hyperbolic meridian surfaces
# ---------------------------------------------------------------------------

def _check_rotation_params(w1: ProfileFn, w2: ProfileFn,
                           v_domain: Interval) -> None:
    for v in v_domain.linspace(_CHECK_SAMPLES):
        w1j = profile_v(w1, v)
        w2j = profile_v(w2, v)
        if not w1j.dv * w1j.dv + w2j.dv * w2j.dv > 0.0:
            raise AdmissibilityError("w1'^2 + w2'^2 > 0", "v", v)


def _check_spacelike_samples(patch: SurfacePatch) -> None:
    for u in patch.domain.u.linspace(9, inset=0.01):
        for v in patch.domain.v.linspace(9, inset=0.01):
            j = patch.immersion(Jet2.seed_u(u), Jet2.seed_v(v))
            zu, zv = j.d_u(), j.d_v()
            e = inner(zu, zu)
            det2 = e * inner(zv, zv) - inner(zu, zv) ** 2
            if e <= 0.0 or det2 <= 0.0:
                raise AdmissibilityError("spacelike condition EG - F^2 > 0",
                                         "(u,v)", (u, v))


def build_elliptic(fp: ProfilePair, w1: ProfileFn, w2: ProfileFn,
                   v_domain: Interval, label: str = "") -> SurfacePatch:
    """Meridian surface on the rotational hypersurface with timelike axis.

    Rotation of the profile about the e4 axis; requires f > 0 and
    f'^2 - g'^2 > 0.
    """
    for u in fp.domain.linspace(_CHECK_SAMPLES):
        fj = profile_u(fp.f, u)
        gj = profile_u(fp.g, u)
        if not fj.val > 0.0:
            raise AdmissibilityError("f > 0", "u", u)
        if not fj.du * fj.du - gj.du * gj.du > 0.0:
            raise AdmissibilityError("f'^2 - g'^2 > 0", "u", u)
    _check_rotation_params(w1, w2, v_domain)

    def immersion(ju: Jet2, jv: Jet2) -> Jet2Vec4:
        fj = fp.f(ju)
        gj = fp.g(ju)
        w1j = w1(jv)
        w2j = w2(jv)
        c1, s1 = jets.cos(w1j), jets.sin(w1j)
        c2, s2 = jets.cos(w2j), jets.sin(w2j)
        return Jet2Vec4(fj * c1 * c2, fj * c1 * s2, fj * s1, gj)

    patch = SurfacePatch(immersion=immersion,
                         domain=Rect(fp.domain, v_domain),
                         label=label or "elliptic meridian surface",
                         kind="elliptic")
    _check_spacelike_samples(patch)
    return patch


def build_hyperbolic(fp: ProfilePair, w1: ProfileFn, w2: ProfileFn,
                     v_domain: Interval, label: str = "") -> SurfacePatch:
    """Meridian surface on the rotational hypersurface with spacelike axis.

    Rotation of the profile about the e1 axis; requires f > 0 and
    f'^2 + g'^2 > 0.
    """
    for u in fp.domain.linspace(_CHECK_SAMPLES):
        fj = profile_u(fp.f, u)
        gj = profile_u(fp.g, u)
        if not fj.val > 0.0:
            raise AdmissibilityError("f > 0", "u", u)
        if not fj.du * fj.du + gj.du * gj.du > 0.0:
            raise AdmissibilityError("f'^2 + g'^2 > 0", "u", u)
    _check_rotation_params(w1, w2, v_domain)

    def immersion(ju: Jet2, jv: Jet2) -> Jet2Vec4:
        fj = fp.f(ju)
        gj = fp.g(ju)
        w1j = w1(jv)
        w2j = w2(jv)
        ch, sh = jets.cosh(w1j), jets.sinh(w1j)
        c2, s2 = jets.cos(w2j), jets.sin(w2j)
        return Jet2Vec4(gj, fj * ch * c2, fj * ch * s2, fj * sh)

    patch = SurfacePatch(immersion=immersion,
                         domain=Rect(fp.domain, v_domain),
                         label=label or "hyperbolic meridian surface",
                         kind="hyperbolic")
    _check_spacelike_samples(patch)
    return patch


# ---------------------------------------------------------------------------
# the lightlike-H families
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PlaneSection:
    """Coefficients of a plane cutting the lightlike-axis paraboloid.

    The plane w1^2/2 + (A cos w2 + B sin w2) w1 + C = 0 meets the
    paraboloid in a constant-curvature curve whenever A^2 + B^2 - 2C > 0.
    """

    A: float
    B: float
    C: float
    root_branch: RootBranch = RootBranch.PLUS


@dataclass(frozen=True)
class MTFamilyParams:
    """Parameters selecting a lightlike-H meridian surface.

    ``a`` is the (constant) curvature of the generating curve, ``b`` a
    translation constant, ``c`` the integration constant of the profile
    ODE, ``sign_branch`` the sign choice inside that ODE.  ``section``,
    when given, must generate a curve whose curvature equals ``a``.
    """

    a: float
    b: float
    c: float
    sign_branch: SignBranch = SignBranch.PLUS
    section: Optional[PlaneSection] = None

    def __post_init__(self):
        if self.a == 0.0:
            raise ParamError("a must be nonzero (a != 0)")
        if self.c == 0.0:
            raise ParamError("c must be nonzero (c != 0)")
        if self.section is not None:
            target = plane_section_curvature(
                self.section.A, self.section.B, self.section.C,
                self.section.root_branch)
            if abs(target - self.a) > 1e-12 * max(1.0, abs(self.a)):
                raise ParamError(
                    f"section curvature {target!r} does not match a={self.a!r}")


def mt_general_profile(params: MTFamilyParams,
                       u_max: float = 10.0) -> ProfilePair:
    """Profile pair (f = u, g) of the general lightlike-H family.

    g' equals -u^2 / (2 (c -+ a u)^2), the closed-form solution of the
    profile ODE.  The returned domain is the largest interval of u > 0 on
    which c -+ a u stays positive (there the signed ODE holds branch-wise),
    shrunk away from u = 0 and from the pole u* where c -+ a u = 0 by
    max(1e-6, 1e-3 |u*|).  When no such interval exists the profile is
    still perfectly smooth on all of u > 0 (the linear factor is negative
    throughout); that full range is returned instead.
    """
    a, b, c = params.a, params.b, params.c
    s = params.sign_branch.value
    u_star = c / (s * a)
    slope = -s * a
    floor = 1e-6
    if u_star > 0.0:
        delta = max(1e-6, 1e-3 * abs(u_star))
        if slope > 0.0:
            lo = u_star + delta
            hi = max(u_max, 2.0 * lo)
        else:
            lo = floor
            hi = u_star - delta
    else:
        lo = floor
        hi = u_max
    if not lo < hi:
        raise ParamError(
            f"empty admissible u-interval for a={a!r}, c={c!r}, branch={params.sign_branch}")

    scale = s / (2.0 * a ** 3)

    def g(ju: Jet2) -> Jet2:
        q = c - (s * a) * ju
        n = (a * a) * (ju * ju) - (2.0 * s * a * c) * ju
        return scale * (n / q - (2.0 * c) * jets.log_abs(q) + b)

    return ProfilePair(f=lambda ju: ju, g=g, domain=Interval(lo, hi))


def mt_general_gprime(params: MTFamilyParams, u: float) -> float:
    """Closed form of the general family's g': -u^2 / (2 (c -+ a u)^2)."""
    q = params.c - params.sign_branch.value * params.a * u
    if q == 0.0:
        raise ParamError(f"u = {u!r} is the profile pole")
    return -u * u / (2.0 * q * q)


def mt_cone_patch(a: float, b: float, phi: ProfileCurvePhi,
                  u_range: Interval = Interval(0.05, 5.0),
                  curvature_tol: float = 1e-9,
                  samples: int = 201,
                  label: str = "") -> SurfacePatch:
    """Straight-meridian (cone) family: f = u, g = a u + b with a < 0.

    Requires the generating curve's squared curvature to equal -1/(2a)
    everywhere, which is exactly the condition for the mean curvature
    vector to be lightlike on the whole cone.
    """
    if a >= 0.0:
        raise ParamError(f"a must be negative, got {a!r}")
    target = -1.0 / (2.0 * a)
    worst = 0.0
    for v in phi.domain.linspace(samples):
        kb = kappa_bar(phi, v)
        worst = max(worst, abs(kb * kb - target))
    if worst > curvature_tol:
        raise CurvatureMismatch(worst)
    fp = ProfilePair(f=lambda ju: ju,
                     g=lambda ju: a * ju + b,
                     domain=u_range)
    return build_parabolic(fp, phi,
                           label=label or f"cone family (a={a}, b={b})")


# ---------------------------------------------------------------------------
# the paraboloid and its plane sections
# ---------------------------------------------------------------------------

def paraboloid_point(w1: float, w2: float) -> Vec4M:
    """Point of the lightlike-axis paraboloid; self inner product is 0."""
    return from_null_frame(NullFrameCoords(
        w1 * math.cos(w2), w1 * math.sin(w2), w1 * w1 / 2.0, 1.0))


def _theta_jet(a: float, b: float, jv: Jet2) -> Jet2:
    return a * jets.cos(jv) + b * jets.sin(jv)


def plane_section_phi(A: float, B: float, C: float,
                      root_branch: RootBranch = RootBranch.PLUS,
                      eps: float = 1e-12) -> ProfileCurvePhi:
    """Generating profile cut out of the paraboloid by a plane.

    Solves w1^2/2 + theta(v) w1 + C = 0 for w1 = phi(v), where
    theta(v) = A cos v + B sin v; requires A^2 + B^2 - 2C > 0.

    Branch and domain conventions:

    * C > 0: the section splits into two arcs over the v-intervals where
      theta^2 >= 2C.  The returned domain is the arc around the maximum
      of theta (theta > 0), shrunk so theta^2 - 2C >= eps; the two roots
      give the two arcs' profiles there.
    * C < 0: both roots are admissible for every v; one period is
      returned.
    * C = 0: the quadratic degenerates into phi = 0 (a single point of
      the paraboloid, inadmissible) and phi = -2 theta; the latter is
      returned for either branch, valid on a full period.
    """
    s_branch = root_branch.value
    span = A * A + B * B - 2.0 * C
    if span <= 0.0:
        raise ParamError(f"A^2 + B^2 - 2C = {span!r} must be > 0")
    radius = math.hypot(A, B)
    v0 = math.atan2(B, A)

    if C == 0.0:
        def phi_fn(jv: Jet2) -> Jet2:
            return -2.0 * _theta_jet(A, B, jv)
        domain = Interval(v0, v0 + 2.0 * math.pi)
    elif C < 0.0:
        def phi_fn(jv: Jet2) -> Jet2:
            th = _theta_jet(A, B, jv)
            return -th + s_branch * jets.sqrt(th * th - 2.0 * C)
        domain = Interval(v0, v0 + 2.0 * math.pi)
    else:
        # theta = radius * cos(v - v0); keep theta^2 - 2C >= eps.
        ratio = math.sqrt(2.0 * C + eps) / radius
        if ratio >= 1.0:
            raise ParamError(
                f"admissible arc is empty for A={A!r}, B={B!r}, C={C!r}")
        half_width = math.acos(ratio)

        def phi_fn(jv: Jet2) -> Jet2:
            th = _theta_jet(A, B, jv)
            return -th + s_branch * jets.sqrt(th * th - 2.0 * C)
        domain = Interval(v0 - half_width, v0 + half_width)

    return ProfileCurvePhi(phi=phi_fn, domain=domain)


def plane_section_curvature(A: float, B: float, C: float,
                            root_branch: RootBranch = RootBranch.PLUS) -> float:
    """Constant curvature of the plane-section profile of
    :func:`plane_section_phi`, with matching branch and domain conventions.

    The magnitude is 1 / sqrt(A^2 + B^2 - 2C).  On the returned domains
    the sign works out to -1 for C <= 0 (either branch) and to the branch
    sign for C > 0; the pairing is asserted against :func:`kappa_bar` by
    the test suite.
    """
    span = A * A + B * B - 2.0 * C
    if span <= 0.0:
        raise ParamError(f"A^2 + B^2 - 2C = {span!r} must be > 0")
    root = 1.0 / math.sqrt(span)
    if C > 0.0:
        return root_branch.value * root
    return -root


def section_constraint_residual(A: float, B: float, C: float,
                                phi: ProfileCurvePhi, v: float) -> float:
    """|phi^2/2 + theta(v) phi + C| -- how well phi solves the section."""
    p = profile_v(phi.phi, v).val
    theta = A * math.cos(v) + B * math.sin(v)
    return abs(p * p / 2.0 + theta * p + C)


# ---------------------------------------------------------------------------
# the generating curve on the paraboloid
# ---------------------------------------------------------------------------

def cbar_frenet(phi: ProfileCurvePhi, v: float) -> tuple[Vec4M, Vec4M, float]:
    """Position, unit tangent and curvature of the generating curve.

    The curve z(v) = phi cos v e1 + phi sin v e2 + phi^2/2 xi1 + xi2 lies
    on the paraboloid (its position vector is lightlike) and is spacelike;
    its curvature equals :func:`kappa_bar`.
    """
    jv = Jet2.seed_v(v)
    pj = phi.phi(jv)
    cv, sv = jets.cos(jv), jets.sin(jv)
    zbar = vec_from_null_jets(pj * cv, pj * sv, pj * pj * 0.5,
                              Jet2.constant(1.0))
    tangent = zbar.d_v()
    speed_sq = inner(tangent, tangent)
    if speed_sq <= 0.0:
        raise AdmissibilityError("phi'^2 + phi^2 > 0", "v", v)
    t_unit = tangent.scale(1.0 / math.sqrt(speed_sq))
    return zbar.value(), t_unit, kappa_bar(phi, v)


def meridian_plane(phi: ProfileCurvePhi, v0: float) -> tuple[Vec4M, Vec4M]:
    """Spanning pair (xi1, zbar(v0)) of the lightlike 2-plane containing
    the meridian at v = v0."""
    p = profile_v(phi.phi, v0).val
    return XI1, paraboloid_point(p, v0)


@dataclass(frozen=True)
class ParaboloidCurve:
    """A generating curve on the lightlike-axis paraboloid.

    Bundles the profile with jet-evaluable position and per-sample Frenet
    data.  Positions are lightlike vectors, tangents are unit spacelike.
    """

    phi: ProfileCurvePhi

    def point(self, v: float) -> Vec4M:
        return paraboloid_point(profile_v(self.phi.phi, v).val, v)

    def frenet(self, v: float) -> tuple[Vec4M, Vec4M, float]:
        return cbar_frenet(self.phi, v)

    def normal(self, v: float, tol: float = 1e-12) -> Vec4M:
        """Unit Frenet normal: dt/ds = kappa * n; needs kappa != 0."""
        kb = kappa_bar(self.phi, v)
        if abs(kb) <= tol:
            raise AdmissibilityError("kappa_bar != 0", "v", v)
        jv = Jet2.seed_v(v)
        pj = self.phi.phi(jv)
        cv, sv = jets.cos(jv), jets.sin(jv)
        zbar = vec_from_null_jets(pj * cv, pj * sv, pj * pj * 0.5,
                                  Jet2.constant(1.0))
        w = zbar.d_v()
        acc = zbar.d_vv()
        speed_sq = inner(w, w)
        speed = math.sqrt(speed_sq)
        # dt/dv for t = w/|w|, then divide by |w| for the arc-length rate.
        speed_rate = inner(w, acc) / speed
        t_rate = (acc.scale(speed) - w.scale(speed_rate)).scale(1.0 / speed_sq)
        return t_rate.scale(1.0 / (speed * kb))

"""Grid-based certificates for the geometric claims about meridian surfaces.

Every checker walks a deterministic sample grid, reduces a residual with
max (or stdev where constancy is the claim) and returns a
:class:`VerificationReport`; the report passes iff the residual stays
within its threshold.  Claims are certified numerically at grid
resolution, not symbolically; with exact jet derivatives the residuals are
limited only by rounding, so thresholds around 1e-9 .. 1e-10 leave three
to six orders of margin over the observed noise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import jets as _j
from .errors import ParamError, UsageError
from .jets import Jet2
from .minkowski import XI1, Vec4M, inner
from .surface import (Interval, SurfacePatch, is_marginally_trapped,
                      jet_eval_surface, point_data)
from .meridian import (MTFamilyParams, ParabolicFamily, ProfileCurvePhi,
                       ProfilePair, RootBranch, build_parabolic, kappa_bar,
                       mt_cone_patch, mt_general_gprime, mt_general_profile,
                       parabolic_closed_forms, paraboloid_point,
                       plane_section_curvature, plane_section_phi,
                       profile_u, profile_v)


@dataclass(frozen=True, slots=True)
class GridSpec:
    """Sample counts and ranges for a rectangular verification grid."""

    u_samples: int
    v_samples: int
    u_range: Interval
    v_range: Interval

    def __post_init__(self):
        if self.u_samples < 2 or self.v_samples < 2:
            raise ParamError("grids need at least 2 samples per axis")

    def points(self):
        for u in self.u_range.linspace(self.u_samples):
            for v in self.v_range.linspace(self.v_samples):
                yield u, v

    @staticmethod
    def for_patch(patch: SurfacePatch, nu: int, nv: int,
                  inset: float = 0.02) -> "GridSpec":
        return GridSpec(nu, nv,
                        Interval(*_inset(patch.domain.u, inset)),
                        Interval(*_inset(patch.domain.v, inset)))


def _inset(iv: Interval, frac: float) -> tuple[float, float]:
    return iv.lo + frac * iv.width, iv.hi - frac * iv.width


@dataclass(frozen=True)
class VerificationReport:
    claim_id: str
    max_residual: float
    threshold: float
    worst_point: tuple[float, float]
    samples: int
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.max_residual <= self.threshold

    def text_block(self) -> str:
        lines = [
            f"claim: {self.claim_id}",
            f"passed: {self.passed}",
            f"max_residual: {self.max_residual:.6e}",
            f"threshold: {self.threshold:.6e}",
            f"worst_point: ({self.worst_point[0]:.17g}, {self.worst_point[1]:.17g})",
            f"samples: {self.samples}",
        ]
        for key in sorted(self.details):
            lines.append(f"{key}: {self.details[key]:.6e}")
        return "\n".join(lines)


class _Worst:
    """Running max-residual reducer with its witness point."""

    def __init__(self):
        self.value = 0.0
        self.point = (math.nan, math.nan)
        self.count = 0

    def update(self, residual: float, point: tuple[float, float]):
        self.count += 1
        if residual > self.value:
            self.value = residual
            self.point = point


def _require_parabolic(patch: SurfacePatch, op: str) -> None:
    if patch.kind != "parabolic":
        raise UsageError(f"{op} applies to parabolic meridian patches, "
                         f"got kind={patch.kind!r}")


def verify_flat_normal_connection(patch: SurfacePatch, grid: GridSpec,
                                  tol: float = 1e-10) -> VerificationReport:
    """max |kappa_normal| over the grid; zero for every admissible family."""
    _require_parabolic(patch, "verify_flat_normal_connection")
    worst = _Worst()
    for u, v in grid.points():
        p = point_data(patch, u, v)
        worst.update(abs(p.kappa_normal), (u, v))
    return VerificationReport("flat-normal-connection", worst.value, tol,
                              worst.point, worst.count)


def verify_second_fundamental_form(family: ParabolicFamily, grid: GridSpec,
                                   tol: float = 1e-10) -> VerificationReport:
    """L and N vanish; M matches its reduced closed form (relative)."""
    patch = family.patch()
    worst = _Worst()
    for u, v in grid.points():
        p = point_data(patch, u, v)
        cf = parabolic_closed_forms(family.fp, family.phi, u, v)
        res = max(abs(p.L), abs(p.N),
                  abs(p.M - cf.M) / max(abs(cf.M), 1.0))
        worst.update(res, (u, v))
    return VerificationReport("second-form-degenerate", worst.value, tol,
                              worst.point, worst.count)


def verify_closed_form_invariants(family: ParabolicFamily, grid: GridSpec,
                                  tol: float = 1e-9) -> VerificationReport:
    """k, K, H1, H2 from jets against the reduced formulas (relative)."""
    patch = family.patch()
    worst = _Worst()
    for u, v in grid.points():
        p = point_data(patch, u, v)
        cf = parabolic_closed_forms(family.fp, family.phi, u, v)
        res = max(
            abs(p.k - cf.k) / max(abs(cf.k), 1.0),
            abs(p.K - cf.K) / max(abs(cf.K), 1.0),
            abs(p.H1 - cf.H1) / max(abs(cf.H1), 1.0),
            abs(p.H2 - cf.H2) / max(abs(cf.H2), 1.0),
        )
        worst.update(res, (u, v))
    return VerificationReport("closed-form-invariants", worst.value, tol,
                              worst.point, worst.count)


def verify_marginally_trapped(patch: SurfacePatch, grid: GridSpec,
                              tol: float = 1e-9,
                              floor: float = 1e-30) -> VerificationReport:
    """Normalized |<H,H>| over the grid, and the smallest |H| observed.

    The residual at a point is |<H,H>| / max(H1^2 + H2^2, floor); the
    report also carries min (H1^2 + H2^2)^(1/2) so callers can assert
    H != 0 separately.
    """
    worst = _Worst()
    min_h = math.inf
    for u, v in grid.points():
        p = point_data(patch, u, v)
        scale = p.H1 * p.H1 + p.H2 * p.H2
        res = abs(p.h_dot_h()) / max(scale, floor)
        worst.update(res, (u, v))
        min_h = min(min_h, math.sqrt(scale))
    return VerificationReport("lightlike-mean-curvature", worst.value, tol,
                              worst.point, worst.count,
                              details={"min_H_norm": min_h})


def verify_ode_chain(params: MTFamilyParams, n_samples: int = 200,
                     tol: float = 1e-9) -> VerificationReport:
    """Residuals of the profile ODE chain for the general family.

    Three sub-residuals over the profile domain: the curvature ODE
    -u g'' + 2 g' = s a (-2g')^(3/2), the substituted linear equation
    h' + h/u + s a/u = 0 with h = 1/sqrt(-2g'), and the closed form of g'.
    Each residual is measured relative to the largest term of its equation
    (floored at 1), so domains approaching the u = 0 singularity do not
    inflate pure-rounding noise.
    """
    prof = mt_general_profile(params)
    s = params.sign_branch.value
    a = params.a
    worst = _Worst()
    subs = {"ode_residual": 0.0, "linear_residual": 0.0,
            "gprime_residual": 0.0}
    for u in prof.domain.linspace(n_samples, inset=0.01):
        gj = profile_u(prof.g, u)
        g1, g2 = gj.du, gj.duu
        rhs = s * a * (-2.0 * g1) ** 1.5
        scale = max(1.0, abs(u * g2), abs(2.0 * g1), abs(rhs))
        r_ode = abs(-u * g2 + 2.0 * g1 - rhs) / scale
        h = 1.0 / math.sqrt(-2.0 * g1)
        h_prime = g2 * (-2.0 * g1) ** -1.5
        scale = max(1.0, abs(h_prime), abs(h / u), abs(a / u))
        r_lin = abs(h_prime + h / u + s * a / u) / scale
        want = mt_general_gprime(params, u)
        r_gp = abs(g1 - want) / max(1.0, abs(want))
        subs["ode_residual"] = max(subs["ode_residual"], r_ode)
        subs["linear_residual"] = max(subs["linear_residual"], r_lin)
        subs["gprime_residual"] = max(subs["gprime_residual"], r_gp)
        worst.update(max(r_ode, r_lin, r_gp), (u, 0.0))
    return VerificationReport("profile-ode-chain", worst.value, tol,
                              worst.point, worst.count, details=subs)


def verify_constant_section_curvature(A: float, B: float, C: float,
                                      root_branch: RootBranch,
                                      samples: int = 1000,
                                      tol: float = 1e-9,
                                      inset: float = 0.02) -> VerificationReport:
    """stdev of the section curve's curvature plus its offset from the
    closed-form constant."""
    phi = plane_section_phi(A, B, C, root_branch)
    expected = plane_section_curvature(A, B, C, root_branch)
    values = [kappa_bar(phi, v)
              for v in phi.domain.linspace(samples, inset=inset)]
    mean = math.fsum(values) / len(values)
    var = math.fsum((x - mean) ** 2 for x in values) / len(values)
    stdev = math.sqrt(var)
    residual = stdev + abs(mean - expected)
    worst_v = max(values, key=lambda x: abs(x - mean))
    return VerificationReport("section-curvature-constant", residual, tol,
                              (0.0, worst_v), len(values),
                              details={"stdev": stdev, "mean": mean,
                                       "expected": expected})


def verify_case1_hyperplane(phi: ProfileCurvePhi, fp: ProfilePair,
                            grid: GridSpec, tol: float = 1e-10,
                            kappa_tol: float = 1e-11) -> VerificationReport:
    """For a zero-curvature generating profile the surface sits in a fixed
    hyperplane and is nowhere marginally trapped.

    Checks (i) constancy of the first normal leg over the grid, (ii) that
    <z, n1> is constant, (iii) that no sampled point has a lightlike mean
    curvature vector unless H vanishes there.
    """
    for v in phi.domain.linspace(101):
        kb = kappa_bar(phi, v)
        if abs(kb) > kappa_tol:
            raise UsageError(
                f"generating-curve curvature is not zero (kappa={kb!r} at v={v!r})")
    patch = build_parabolic(fp, phi)
    worst = _Worst()
    n1_ref: Optional[Vec4M] = None
    plane_ref = 0.0
    trapped = 0
    for u, v in grid.points():
        p = point_data(patch, u, v)
        if n1_ref is None:
            n1_ref = p.n1
            plane_ref = inner(p.z, n1_ref)
        dev_frame = (p.n1 - n1_ref).euclidean_norm()
        dev_plane = abs(inner(p.z, n1_ref) - plane_ref)
        worst.update(max(dev_frame, dev_plane), (u, v))
        if is_marginally_trapped(p):
            trapped += 1
    report = VerificationReport("zero-curvature-hyperplane", worst.value, tol,
                                worst.point, worst.count,
                                details={"trapped_points": float(trapped)})
    if trapped:
        # Force failure: a marginally trapped point contradicts the claim.
        report = VerificationReport(report.claim_id, math.inf, tol,
                                    report.worst_point, report.samples,
                                    report.details)
    return report


def verify_meridian_planarity(patch: SurfacePatch, phi: ProfileCurvePhi,
                              v0: float, n_u_samples: int = 12,
                              tol: float = 1e-10) -> VerificationReport:
    """Meridian at v0 stays inside the lightlike 2-plane spanned by xi1
    and the generating curve's position vector (rank-2 test, sigma3/sigma1)."""
    _require_parabolic(patch, "verify_meridian_planarity")
    p0 = profile_v(phi.phi, v0).val
    zbar = paraboloid_point(p0, v0)
    us = patch.domain.u.linspace(n_u_samples, inset=0.01)
    z_ref = jet_eval_surface(patch, us[0], v0).value()
    cols = [XI1.coords(), zbar.coords()]
    for u in us[1:]:
        cols.append((jet_eval_surface(patch, u, v0).value() - z_ref).coords())
    sv = np.linalg.svd(np.array(cols).T, compute_uv=False)
    ratio = float(sv[2] / sv[0])
    return VerificationReport("meridian-planarity", ratio, tol,
                              (us[-1], v0), len(us),
                              details={"sigma1": float(sv[0]),
                                       "sigma3": float(sv[2])})


def verify_cone_lightlike_hyperplane(patch: SurfacePatch, grid: GridSpec,
                                     tol: float = 1e-10) -> VerificationReport:
    """The straight-meridian family spans a fixed hyperplane whose normal
    direction is lightlike.

    Recorded as rank-3 deviation (sigma4/sigma1) plus |<l, l>| of the unit
    normal of the span.
    """
    _require_parabolic(patch, "verify_cone_lightlike_hyperplane")
    pts = []
    z_ref = None
    for u, v in grid.points():
        z = jet_eval_surface(patch, u, v).value()
        if z_ref is None:
            z_ref = z
            continue
        pts.append((z - z_ref).coords())
    m = np.array(pts).T
    u_mat, sv, _ = np.linalg.svd(m)
    rank_res = float(sv[3] / sv[0])
    ell = u_mat[:, 3]
    # The SVD null direction l satisfies l . x = 0 (Euclidean); the
    # Minkowski normal of the same hyperplane flips the fourth component.
    normal = Vec4M(float(ell[0]), float(ell[1]), float(ell[2]), -float(ell[3]))
    light_res = abs(inner(normal, normal))
    return VerificationReport("cone-lightlike-hyperplane",
                              max(rank_res, light_res), tol,
                              (grid.u_range.lo, grid.v_range.lo), len(pts),
                              details={"rank3_residual": rank_res,
                                       "normal_lightlike_residual": light_res})


# ---------------------------------------------------------------------------
# the full claim suite
# ---------------------------------------------------------------------------

def claim_suite(tol: float = 1e-9) -> list[VerificationReport]:
    """Run one certificate per claim; all should pass at default settings."""
    two_pi = 2.0 * math.pi
    reports: list[VerificationReport] = []

    fp_gen = ProfilePair(f=lambda j: j, g=lambda j: -(j * j) * 0.5,
                         domain=Interval(0.5, 2.0))
    phi_gen = ProfileCurvePhi(phi=lambda j: 2.0 + _j.cos(j),
                              domain=Interval(0.0, two_pi))
    family = ParabolicFamily(fp_gen, phi_gen, label="generic parabolic family")
    patch = family.patch()
    grid = GridSpec.for_patch(patch, 50, 50)

    reports.append(verify_flat_normal_connection(patch, grid, min(tol, 1e-10)))
    reports.append(verify_second_fundamental_form(family, grid, min(tol, 1e-10)))
    reports.append(verify_closed_form_invariants(family, grid, tol))

    mt_params = MTFamilyParams(a=-1.0, b=0.0, c=1.0)
    mt_prof = mt_general_profile(mt_params)
    phi_unit = ProfileCurvePhi(phi=lambda j: Jet2.constant(1.0),
                               domain=Interval(0.0, two_pi))
    mt_patch = build_parabolic(mt_prof, phi_unit, label="general lightlike-H family")
    mt_grid = GridSpec(100, 20, Interval(0.2, 3.0), Interval(0.0, two_pi))
    general = verify_marginally_trapped(mt_patch, mt_grid, tol)
    reports.append(VerificationReport("general-family-lightlike-H",
                                      general.max_residual, general.threshold,
                                      general.worst_point, general.samples,
                                      general.details))

    phi_cos = ProfileCurvePhi(phi=lambda j: -2.0 * _j.cos(j),
                              domain=Interval(1.7, 4.5))
    cone = mt_cone_patch(-0.5, 0.0, phi_cos, u_range=Interval(0.2, 4.0))
    cone_grid = GridSpec.for_patch(cone, 40, 40)
    cone_rep = verify_marginally_trapped(cone, cone_grid, tol)
    reports.append(VerificationReport("cone-family-lightlike-H",
                                      cone_rep.max_residual, cone_rep.threshold,
                                      cone_rep.worst_point, cone_rep.samples,
                                      cone_rep.details))

    reports.append(verify_ode_chain(mt_params, tol=tol))
    reports.append(verify_constant_section_curvature(3.0, 4.0, 0.0,
                                                     RootBranch.PLUS, tol=tol))

    phi_sec = ProfileCurvePhi(phi=lambda j: _j.reciprocal(_j.cos(j)),
                              domain=Interval(-1.2, 1.2))
    fp_flat = ProfilePair(f=lambda j: j, g=lambda j: -j,
                          domain=Interval(0.5, 2.0))
    case1_grid = GridSpec(40, 40, Interval(0.55, 1.95), Interval(-1.15, 1.15))
    reports.append(verify_case1_hyperplane(phi_sec, fp_flat, case1_grid,
                                           tol=max(1e-10, tol * 0.1)))

    reports.append(verify_meridian_planarity(mt_patch, phi_unit, 0.5,
                                             tol=min(tol, 1e-10)))

    reports.append(verify_cone_lightlike_hyperplane(
        cone, GridSpec.for_patch(cone, 8, 12), tol=max(1e-10, tol * 0.1)))

    return reports


def render_reports(reports: list[VerificationReport]) -> str:
    blocks = [r.text_block() for r in reports]
    passed = sum(r.passed for r in reports)
    footer = f"passed {passed} of {len(reports)} claims"
    return "\n\n".join(blocks) + "\n\n" + footer + "\n"

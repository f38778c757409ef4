"""Finite-difference oracle for the jet-based geometry engine.

First derivatives come from 5-point central differences of plain surface
evaluations with step 1e-5.  Second derivatives cannot reach the target
accuracy from values alone in binary64 (rounding noise scales like
eps/h^2), so two independent routes are provided:

* ``fd_derivatives``: differences of the engine's *first* derivatives at
  step 1e-5.  This validates the second-order propagation rules against
  the (separately FD-validated) first-order ones.
* ``fd_derivatives_pure``: value-only 5-point second differences at a
  wider step (5e-4), fully independent of the jet engine, accurate to
  about 1e-8.
"""

from minksurf.minkowski import Vec4M
from minksurf.surface import (PointData, SurfacePatch, jet_eval_surface,
                              point_data_from_derivatives)

FD_STEP = 1e-5
FD_STEP_SECOND = 5e-4


def _c5(values, h):
    """5-point central first difference from f(x-2h)..f(x+2h)."""
    m2, m1, _, p1, p2 = values
    return (-p2 + 8.0 * p1 - 8.0 * m1 + m2) / (12.0 * h)


def _c5_second(values, h):
    """5-point central second difference from f(x-2h)..f(x+2h)."""
    m2, m1, c, p1, p2 = values
    return (-p2 + 16.0 * p1 - 30.0 * c + 16.0 * m1 - m2) / (12.0 * h * h)


def _vec_stencil(fn, x0, h):
    return [fn(x0 + k * h) for k in (-2, -1, 0, 1, 2)]


def _vec_c5(vectors, h) -> Vec4M:
    return Vec4M(*(_c5([v.coords()[i] for v in vectors], h) for i in range(4)))


def _vec_c5_second(vectors, h) -> Vec4M:
    return Vec4M(*(_c5_second([v.coords()[i] for v in vectors], h)
                   for i in range(4)))


def fd_derivatives(patch: SurfacePatch, u: float, v: float,
                   h: float = FD_STEP):
    """(z, z_u, z_v, z_uu, z_uv, z_vv) with FD values / FD-of-first-derivs."""

    def value(uu, vv):
        return jet_eval_surface(patch, uu, vv).value()

    def d_u(uu, vv):
        return jet_eval_surface(patch, uu, vv).d_u()

    def d_v(uu, vv):
        return jet_eval_surface(patch, uu, vv).d_v()

    z = value(u, v)
    z_u = _vec_c5(_vec_stencil(lambda t: value(t, v), u, h), h)
    z_v = _vec_c5(_vec_stencil(lambda t: value(u, t), v, h), h)
    z_uu = _vec_c5(_vec_stencil(lambda t: d_u(t, v), u, h), h)
    z_vv = _vec_c5(_vec_stencil(lambda t: d_v(u, t), v, h), h)
    z_uv = _vec_c5(_vec_stencil(lambda t: d_u(u, t), v, h), h)
    return z, z_u, z_v, z_uu, z_uv, z_vv


def fd_derivatives_pure(patch: SurfacePatch, u: float, v: float,
                        h1: float = FD_STEP, h2: float = FD_STEP_SECOND):
    """Same tuple computed from surface values only."""

    def value(uu, vv):
        return jet_eval_surface(patch, uu, vv).value()

    z = value(u, v)
    z_u = _vec_c5(_vec_stencil(lambda t: value(t, v), u, h1), h1)
    z_v = _vec_c5(_vec_stencil(lambda t: value(u, t), v, h1), h1)
    z_uu = _vec_c5_second(_vec_stencil(lambda t: value(t, v), u, h2), h2)
    z_vv = _vec_c5_second(_vec_stencil(lambda t: value(u, t), v, h2), h2)
    # Mixed partial: cross stencil d/dv of (first differences in u).
    cross = _vec_stencil(
        lambda t: _vec_c5(_vec_stencil(lambda s: value(s, t), u, h2), h2),
        v, h2)
    z_uv = _vec_c5(cross, h2)
    return z, z_u, z_v, z_uu, z_uv, z_vv


def fd_point_data(patch: SurfacePatch, u: float, v: float,
                  pure: bool = False) -> PointData:
    """PointData computed from finite-difference derivatives.

    Shares only the per-point formula path with the engine; every
    derivative entering it was produced by differencing.
    """
    fd = fd_derivatives_pure if pure else fd_derivatives
    z, z_u, z_v, z_uu, z_uv, z_vv = fd(patch, u, v)
    return point_data_from_derivatives(u, v, z, z_u, z_v, z_uu, z_uv, z_vv)

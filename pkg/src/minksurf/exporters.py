"""CSV and polygonal-mesh export of sampled surface geometry.

All reals are serialized with 17 significant digits, which round-trips
binary64 exactly; identical inputs therefore produce byte-identical files.
"""

from __future__ import annotations

import math
from typing import Sequence

import numpy as np

from .errors import SingularProjection
from .surface import SurfacePatch, jet_eval_surface, point_data
from .verify import GridSpec

CSV_HEADER = "u,v,x1,x2,x3,x4,E,F,G,L,M,N,k,kappa,K,H1,H2,H3,H4,HdotH"

POSITIONS_HEADER = "u,v,x1,x2,x3,x4"

DEFAULT_PROJECTION: tuple[tuple[float, ...], ...] = (
    (1.0, 0.0, 0.0, 0.0),
    (0.0, 1.0, 0.0, 0.0),
    (0.0, 0.0, 1.0, 0.0),
)


def fmt(x: float) -> str:
    return f"{x:.17g}"


def export_grid_csv(patch: SurfacePatch, grid: GridSpec, path: str) -> int:
    """Write the full invariant table, one row per grid point.

    Rows are in row-major order (u outer, v inner).  H1..H4 are the
    orthonormal coordinates of the mean curvature vector; HdotH is its
    self inner product.  Returns the number of data rows.
    """
    rows = 0
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(CSV_HEADER + "\n")
        for u, v in grid.points():
            p = point_data(patch, u, v)
            values = (u, v, *p.z.coords(), p.E, p.F, p.G, p.L, p.M, p.N,
                      p.k, p.kappa_normal, p.K, *p.H.coords(), p.h_dot_h())
            fh.write(",".join(fmt(x) for x in values) + "\n")
            rows += 1
    return rows


def export_positions_csv(patch: SurfacePatch, grid: GridSpec, path: str) -> int:
    """Write sampled positions only (u, v, x1..x4); returns the row count."""
    rows = 0
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(POSITIONS_HEADER + "\n")
        for u, v in grid.points():
            z = jet_eval_surface(patch, u, v).value()
            fh.write(",".join(fmt(x) for x in (u, v, *z.coords())) + "\n")
            rows += 1
    return rows


def export_obj(patch: SurfacePatch, grid: GridSpec,
               projection: Sequence[Sequence[float]] = DEFAULT_PROJECTION,
               path: str = "surface.obj") -> tuple[int, int]:
    """Project samples to 3-space and write a triangulated `v`/`f` mesh.

    The projection is a full-rank 3x4 matrix (default: drop x4).  Each
    grid cell becomes two triangles; returns (vertex count, face count).
    """
    proj = np.asarray(projection, dtype=float)
    if proj.shape != (3, 4):
        raise SingularProjection(f"projection must be 3x4, got {proj.shape}")
    sv = np.linalg.svd(proj, compute_uv=False)
    if not sv[2] > 1e-12 * sv[0]:
        raise SingularProjection(
            f"projection matrix has rank < 3 (singular values {sv})")

    nu, nv = grid.u_samples, grid.v_samples
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        for u, v in grid.points():
            z = np.array(jet_eval_surface(patch, u, v).value().coords())
            x, y, w = proj @ z
            if not (math.isfinite(x) and math.isfinite(y) and math.isfinite(w)):
                raise SingularProjection(
                    f"non-finite projected vertex at (u,v)=({u},{v})")
            fh.write(f"v {fmt(x)} {fmt(y)} {fmt(w)}\n")
        faces = 0
        for i in range(nu - 1):
            for j in range(nv - 1):
                a = i * nv + j + 1
                b = a + 1
                c = a + nv
                d = c + 1
                fh.write(f"f {a} {b} {d}\n")
                fh.write(f"f {a} {d} {c}\n")
                faces += 2
    return nu * nv, faces

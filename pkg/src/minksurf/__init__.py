"""Differential invariants and lightlike-H certificates for spacelike
surfaces in Minkowski 4-space, built around meridian surfaces of
rotational hypersurfaces with lightlike axis."""

from .errors import (AdmissibilityError, CurvatureMismatch, DegenerateFrame,
                     DomainError, Error, ExprError, NotSpacelike, ParamError,
                     SingularProjection, UsageError)
from .minkowski import (E1, E2, E3, E4, XI1, XI2, CausalCharacter,
                        NullFrameCoords, Vec4M, causal_character,
                        from_null_frame, inner, to_null_frame)
from .jets import Jet2, Jet2Vec4, jet_apply, vec_from_null_jets
from .surface import (Interval, PointClass, PointData, PointKind, Rect,
                      SurfacePatch, classify_point, is_marginally_trapped,
                      jet_eval_surface, normal_frame, point_data,
                      point_data_from_derivatives)
from .meridian import (ClosedForms, MTFamilyParams, ParabolicFamily,
                       ParaboloidCurve, PlaneSection, ProfileCurvePhi,
                       ProfilePair, RootBranch,
                       SignBranch, build_elliptic, build_hyperbolic,
                       build_parabolic, cbar_frenet, kappa_bar, kappa_m,
                       meridian_plane, mt_cone_patch, mt_general_gprime,
                       mt_general_profile, parabolic_closed_forms,
                       parabolic_normal_frame, paraboloid_point,
                       plane_section_curvature, plane_section_phi,
                       profile_u, profile_v, section_constraint_residual)
from .verify import (GridSpec, VerificationReport, claim_suite,
                     render_reports, verify_case1_hyperplane,
                     verify_closed_form_invariants,
                     verify_cone_lightlike_hyperplane,
                     verify_constant_section_curvature,
                     verify_flat_normal_connection,
                     verify_marginally_trapped, verify_meridian_planarity,
                     verify_ode_chain, verify_second_fundamental_form)

__version__ = "0.1.0"

"""Monodromy zeta functions of families of polynomials by localization.

Local zeta functions of germ deformations are computed from Newton
diagrams and integrated with respect to the Euler characteristic over a
stratification of the zero set, affine part and part at infinity.
"""

from .errors import DegenerateInputError, ParseError, PreconditionError
from .germ import Case, LocalZetaResult, family_zeta_at_point, hat_family_zeta, milnor_zeta, pair_zeta0, pair_zeta0_by_subset
from .localize import (
    StratifiedProblem,
    Stratum,
    assemble_global,
    chi_complete_intersection,
    chi_projective_space,
    chi_smooth_hypersurface,
    chi_transversal_complement,
    format_strata,
    integrate,
    parse_strata,
)
from .newton import (
    Covector,
    FaceData,
    diagram_vertices,
    face_of,
    kouchnirenko_mu,
    m_value,
    mixed_volume_sum,
    mixed_volumes,
    normalized_volume,
    pair_face_normals,
    pair_faces,
)
from .poly import (
    GermFamily,
    Poly,
    chart,
    constant,
    format_poly,
    homogenize,
    monomial,
    parse_poly,
    restrict_to_subset,
    set_var_zero,
    simplex_poly,
    support,
    translate,
)
from .zeta import CycloProd, cyclo, degree, div, expand_series, format_zeta, mul, one, parse_zeta, power

__version__ = "0.1.0"

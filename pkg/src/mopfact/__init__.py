"""Exact bidiagonal factorisation of the recurrence matrices of multiple
orthogonal polynomial systems, by three independent methods."""

from .alphas import AlphaSequence
from .closedforms import (
    closed_form_alphas,
    decompose_index,
    jp_alpha_bcf,
    jp_alpha_type1,
    jp_limit,
    laguerre_alpha,
)
from .errors import (
    AlphaIndexOutOfRange,
    DegenerateParameters,
    InsufficientOrder,
    InternalInconsistency,
    MomentTableExhausted,
    MopfactError,
    NoBidiagonalFactorisation,
    NonzeroConstantTerm,
    SingularLeadingMinor,
    ZeroDivisor,
)
from .eulergauss import euler_gauss
from .gaussborel import (
    LUPair,
    MomentMatrixSet,
    alphas_from_lu,
    alphas_from_minors,
    hessenberg_from_lu,
    lu_factorise,
    valid_alpha_count,
    window_size,
)
from .hessenberg import (
    BidiagonalFactors,
    HessenbergBands,
    PolynomialTable,
    assemble,
    bands_matrix,
    char_poly_check,
    cyclic_product,
    factor_product,
    gamma_expand,
    polynomials,
    verify_orthogonality,
)
from .lattice import (
    PathWeightOracle,
    generalised_sr,
    modified_sr,
    production_check,
    sr_polynomial,
)
from .rationals import Scalar, format_rational, parse_rational, pochhammer
from .series import TruncatedSeries, series_divide_by_ct, series_sub
from .systems import (
    CustomMoments,
    JacobiPineiro,
    LaguerreFirstKind,
    ShiftedSystem,
    StripedMomentMatrix,
    SystemSpec,
    build_moment_matrix,
    load_custom_system,
    moment,
    shifted_moment,
)

__version__ = "0.1.0"

"""helmbem: a staggered-grid Nystrom boundary-element toolkit for the 2D
Helmholtz equation.

The package assembles the four discrete boundary operators (single layer,
double layer, adjoint double layer, hypersingular) on a pair of offset
parameter grids, evaluates the matching discrete layer potentials, and wires
them into direct, indirect, transmission and combined-field solvers, all of
second order for the default grid offset eps = 1/6.

Hot kernels run in a compiled Cython backend when available and fall back to
vectorized NumPy otherwise (see helmbem.backends).
"""

from .geometry import (
    DEFAULT_EPS,
    GridGeometry,
    ParametrizedCurve,
    builtin_curve,
    parse_curve_spec,
    sample_grids,
)
from .linsolve import LUFactor, SingularMatrixError, lu_factor, lu_solve
from .operators import (
    AssemblyError,
    OperatorSet,
    assemble_J,
    assemble_K,
    assemble_V,
    assemble_W,
    assemble_all,
    dump_matrix,
)
from .potentials import (
    ClearanceError,
    Density,
    IncidentField,
    boundary_distances,
    eval_D,
    eval_S,
    eval_representation,
    incident_traces,
    plane_wave,
    point_source,
    write_field_csv,
)
from .solvers import (
    EXTERIOR_METHODS,
    Solution,
    TransmissionSolution,
    normalize_method,
    solve_burton_miller,
    solve_exterior,
    solve_transmission,
)
from .specfun import (
    backend_name,
    bessel_j0,
    bessel_j1,
    bessel_y0,
    bessel_y1,
    hankel1_0,
    hankel1_1,
)
from .study import (
    ConvergenceReport,
    StudyConfig,
    StudyError,
    calderon_residuals,
    normalize_study_method,
    run_study,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_EPS",
    "GridGeometry",
    "ParametrizedCurve",
    "builtin_curve",
    "parse_curve_spec",
    "sample_grids",
    "AssemblyError",
    "OperatorSet",
    "assemble_V",
    "assemble_K",
    "assemble_J",
    "assemble_W",
    "assemble_all",
    "dump_matrix",
    "ClearanceError",
    "Density",
    "IncidentField",
    "point_source",
    "plane_wave",
    "eval_S",
    "eval_D",
    "eval_representation",
    "incident_traces",
    "write_field_csv",
    "LUFactor",
    "SingularMatrixError",
    "lu_factor",
    "lu_solve",
    "EXTERIOR_METHODS",
    "Solution",
    "TransmissionSolution",
    "normalize_method",
    "solve_exterior",
    "solve_transmission",
    "solve_burton_miller",
    "StudyConfig",
    "StudyError",
    "ConvergenceReport",
    "calderon_residuals",
    "normalize_study_method",
    "run_study",
    "backend_name",
    "boundary_distances",
    "bessel_j0",
    "bessel_j1",
    "bessel_y0",
    "bessel_y1",
    "hankel1_0",
    "hankel1_1",
    "__version__",
]

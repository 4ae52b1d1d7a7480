"""Composition of formal power series of order >= 2.

Truncated series over an exact cyclotomic-rational field or complex
floating point, with Boettcher coordinates, transition groups, solvers
for the compositional functional equations, decomposition equivalence
classes, symmetric-series structure, and conjugation of right-reversible
semigroups to monomials.
"""

__version__ = "0.1.0"

from .boettcher import BoettcherData, all_boettcher, boettcher, normalize
from .decompose import (
    Decomposition,
    canonical_decomposition,
    enumerate_classes,
    equivalence_witness,
    engstrom_refine,
    ordered_factorizations,
)
from .errors import (
    CompositionUndefined,
    ConductorTooSmall,
    NegativeResult,
    NoFactor,
    NoSolution,
    NotADoubleDecomposition,
    NotConjugate,
    NotEquivalent,
    NotSymmetric,
    OrderMismatch,
    RootNotRepresentable,
    SeriesError,
    ToleranceAmbiguous,
    ZeroInput,
)
from .field import ApproxField, ExactField, RootOfUnity
from .semigroup import (
    MonomialImage,
    commute_check,
    commute_series,
    monomialize,
    reversibility_probe,
    shared_boettcher_scale,
)
from .series import (
    TruncatedSeries,
    parse_series,
    series_nth_root,
    split_symmetric,
    symmetric_mate,
)
from .solvers import (
    SolutionFamily,
    common_right_factor,
    factor_through,
    semiconjugacy_family,
    solve_joint,
    solve_left,
    solve_right,
)
from .symmetry import (
    SymmetryProfile,
    boettcher_symmetry,
    decompose_symmetric,
    detect_symmetry,
    is_symmetric,
    recover_symmetric_conjugator,
    reznick_check,
    symmetric_right_factor,
    transition_symmetry,
)
from .transition import (
    TransitionGroup,
    cancel_right,
    conjugate_group,
    element_order,
    iterate_group,
    series_from_transition,
    subgroup_test,
    transition_group,
)

"""Exact computations in the linear symplectic category.

Spaces, Lagrangian correspondences and their geometric composition over Q,
sequences of correspondences up to embedded composition, grading shifts and
signs, and a combinatorial calculus of quilted surfaces.
"""

from sympsharp.category import (
    Admissibility,
    GeneralizedCorrespondence,
    NormalForm,
    Verdict,
    check_axioms,
    concat,
    equivalent,
    normalize,
    pi_invariant,
)
from sympsharp.correspondence import (
    CompositionReport,
    LagrangianCorrespondence,
    compose,
    diagonal,
    from_point,
    geometric_compose,
    graph,
    is_embedded,
    product_of_lagrangians,
    relation_compose,
    transpose,
)
from sympsharp.errors import (
    AmbientMismatch,
    DirectionMismatch,
    EndpointMismatch,
    NotAStrip,
    NotComposable,
    NotEmbedded,
    NotLagrangian,
    NotSymplectic,
    NotSymplectomorphism,
    QuiltError,
    ShapeMismatch,
    SignatureMismatch,
    SympError,
)
from sympsharp.grading import (
    Degree,
    EndConfiguration,
    FormalGradedMorphism,
    GradedPair,
    GradingContext,
    degree_shift,
    gluing_sign_second,
    koszul_sign,
    product_compose,
    reorder_sign,
    strip_shrink_shift,
)
from sympsharp.linalg import Matrix, Subspace, column_echelon, intersect, kernel, rank
from sympsharp.quilt import (
    BoundaryLabel,
    Direction,
    End,
    Patch,
    QuiltedSurface,
    Seam,
    functor_quilt,
    glue,
    isomorphic,
    pair_of_pants,
    quilted_cap,
    quilted_cylinder,
    shrink_strip,
    validate,
)
from sympsharp.symplectic import (
    POINT,
    LagrangianSubspace,
    SymplecticSpace,
    dual,
    is_isotropic,
    is_lagrangian,
    is_linear_symplectomorphism,
    product,
    standard_space,
    symplectic_complement,
)

__version__ = "0.1.0"

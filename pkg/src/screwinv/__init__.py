"""Exact polynomial invariants of rigid-motion actions on multi-screws.

Everything is computed over the rationals with no floating point in any
identity: polynomial arithmetic, term orders and subduction live in
:mod:`screwinv.poly` and :mod:`screwinv.sagbi`; exact group elements, the
adjoint action and the two invariance oracles in :mod:`screwinv.group`;
twists, catalogs and Denavit-Hartenberg pair invariants in
:mod:`screwinv.screw`.  The ``screwinv`` CLI fronts all of it, and
``screwinv verify --suite paper`` runs the reproduction suite.
"""

from ._kernel import backend
from .group import (
    ActionKind,
    Counterexample,
    EuclideanElement,
    PullbackSystem,
    RationalQuaternion,
    Rotation,
    SampledCheck,
    adjoint_matrix,
    apply_adjoint,
    check_invariant_sampled,
    check_invariant_symbolic,
    format_group_sample,
    parse_group_element,
    pullback,
    rotation_from_quaternion,
    transform_twist,
    translation_invariant_basis,
)
from .parsing import ParseError, UnknownVariableError, format_poly, parse
from .poly import Polynomial, TermOrder, VariableSet
from .sagbi import (
    Certificate,
    GeneratorSet,
    MembershipResult,
    SagbiResult,
    SubductionResult,
    TeteATete,
    eliminate,
    is_member,
    read_basis_file,
    sagbi_construct,
    subduct,
    tete_a_tetes,
    verify_sagbi,
    write_basis_file,
)
from .screw import (
    Catalog,
    DhPairReport,
    ExactRadical,
    JointType,
    MultiScrew,
    Pitch,
    Twist,
    dh_invariants,
    format_multiscrew,
    gram_minor,
    joint_type,
    parse_multiscrew,
    pitch,
    pitch_invariance_check,
    screw_varset,
    se3_generator_catalog,
    so3_sagbi_catalog,
    so3_vector_invariants,
    translation_sagbi_catalog,
    vector_varset,
    z_poly,
)

__version__ = "0.1.0"

__all__ = [
    "ActionKind",
    "Catalog",
    "Certificate",
    "Counterexample",
    "DhPairReport",
    "EuclideanElement",
    "ExactRadical",
    "GeneratorSet",
    "JointType",
    "MembershipResult",
    "MultiScrew",
    "ParseError",
    "Pitch",
    "Polynomial",
    "PullbackSystem",
    "RationalQuaternion",
    "Rotation",
    "SagbiResult",
    "SampledCheck",
    "SubductionResult",
    "TermOrder",
    "TeteATete",
    "Twist",
    "UnknownVariableError",
    "VariableSet",
    "adjoint_matrix",
    "apply_adjoint",
    "backend",
    "check_invariant_sampled",
    "check_invariant_symbolic",
    "dh_invariants",
    "eliminate",
    "format_group_sample",
    "format_multiscrew",
    "format_poly",
    "gram_minor",
    "is_member",
    "joint_type",
    "parse",
    "parse_group_element",
    "parse_multiscrew",
    "pitch",
    "pitch_invariance_check",
    "pullback",
    "read_basis_file",
    "rotation_from_quaternion",
    "sagbi_construct",
    "screw_varset",
    "se3_generator_catalog",
    "so3_sagbi_catalog",
    "so3_vector_invariants",
    "subduct",
    "tete_a_tetes",
    "transform_twist",
    "translation_invariant_basis",
    "translation_sagbi_catalog",
    "vector_varset",
    "verify_sagbi",
    "write_basis_file",
    "z_poly",
]

"""Exact symbolic computation with the centerless super-Virasoro algebras
and their non-weight modules Omega_R(lambda, alpha), Omega_NS(lambda, alpha)."""

from .algebra import (
    AlgebraElement,
    Family,
    G,
    Generator,
    L,
    bracket,
    check_super_jacobi,
    embed_sigma,
    twist_sigma_lambda,
)
from .errors import (
    DegreeOverflow,
    FamilyMismatch,
    NotInSubmodule,
    ParseError,
    SuperVirError,
    ZeroQ,
)
from .modules import (
    ModuleSpec,
    NSVector,
    RamondVector,
    act,
    act_ns,
    act_ramond,
    check_module_axioms,
    parity_flip,
)
from .morphisms import (
    LinearMap,
    apply_map,
    big_phi,
    intertwiner_search,
    psi,
    small_phi,
    verify_intertwiner,
)
from .poly import HalfInt, VarPoly, VarTag, mul_linear, retag, shift
from .report import VerificationReport
from .scalar import A, Q, W, QuadRat, Scalar, SpecPoint, alpha, q_power, specialize
from .structure import (
    GAMMA,
    XI,
    SpanBasis,
    check_closure,
    cyclic_span,
    freeness_check,
    membership,
    probe_simplicity,
)
from .syntax import parse_expression

__version__ = "0.1.0"

"""Exact Lefschetz numbers of simplicial self-maps, computed four independent ways."""

from .chains import Chain, ChainOperator, boundary_operator, restriction_operator
from .complex import (
    Complex,
    OpenSimplex,
    boundary_complex,
    build_complex,
    closed_simplex,
    enumerate_subcomplexes,
    euler_characteristic,
    lattice_intersection,
    lattice_union,
    open_simplex_decomposition,
)
from .engine import (
    LefschetzReport,
    hopf_axiom_value,
    is_hopf_simplicial,
    lefschetz_axiomatic,
    lefschetz_open_sum,
    lefschetz_report,
    simplex_axiom_value,
)
from .errors import (
    ConsistencyError,
    DomainError,
    InvalidSubdivision,
    LefschetzError,
    MalformedInput,
    PreconditionError,
)
from .fixedpoints import FixedPointCertificate, fixed_point_certificates
from .homology import (
    HomologyBasis,
    InducedHomologyMap,
    betti_numbers,
    homological_lefschetz,
    homology_basis,
    induced_homology_map,
)
from .linalg import BACKEND
from .maps import (
    MapPair,
    SimplicialMap,
    chain_lefschetz,
    chain_trace,
    induced_chain_map,
    lefschetz_chain_operator,
    simplex_coefficient,
)
from .subdivision import (
    BarycentricPoint,
    SubdividedComplex,
    barycentric_subdivide,
    custom_subdivision,
    identity_subdivision,
    subdivision_operator,
)
from .valuation import SimplexAssignment, extend_valuation, mobius_weights, verify_valuation

__version__ = "0.1.0"

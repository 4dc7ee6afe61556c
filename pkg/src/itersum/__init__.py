"""Exact cardinalities of iterated sumsets hA for small point sets A in Z^d.

Closed forms for |A| = d+2 and, for |A| = d+3 with simplicial hull, an
exact count under a monoid-membership condition plus two-sided bounds in
general. A brute-force enumerator checks all of them.
"""

from .cone import (
    DecompositionReport,
    FundamentalDomain,
    MinimalElement,
    fundamental_domain_points,
    minimal_elements,
    residue_of,
    verify_decomposition,
)
from .d2 import InstanceD2, RadonData, affine_dependency, card_d2, radon_point
from .d3 import (
    BoundsReport,
    InstanceD3,
    LatticeInvariants,
    MembershipCert,
    analyze_lattice,
    card_d3_bounds,
    card_d3_exact,
    compute_m_w,
    equality_condition,
    pos_span_membership,
)
from .geometry import (
    BarycentricCoords,
    HullClassification,
    PointSet,
    barycentric_in_simplex,
    classify_hull,
    hull_membership,
    hull_volume_dfact,
)
from .linalg import det_int, lattice_index, solve_rational
from .sumsets import (
    CardinalitySequence,
    KhovanskiiFit,
    SumsetLayer,
    cardinality_sequence,
    iterated_sumset,
    khovanskii_fit,
)

__version__ = "0.1.0"

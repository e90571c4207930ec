"""Exact singularity content of cyclic quotient surface singularities and
Fano polygons: residues, degrees, Hilbert series and mutation orbits."""

from singcontent.lattice import (
    DualVector,
    LatticePoint,
    Rational,
    UnimodularMap,
    apply_map,
    gcd,
    is_primitive,
    lattice_height,
    lattice_length,
)
from singcontent.cones import (
    Cone2,
    ConeProfile,
    ConeSingularityContent,
    QuotientSingularityType,
    cone_to_type,
    decompose,
    is_T_singularity,
    milnor_number,
    profile,
    residue,
    type_to_cone,
)
from singcontent.hj import HJExpansion, a_correction, hj_data, hj_expand
from singcontent.dedekind import (
    DedekindTable,
    PeriodicCorrection,
    dedekind_sums,
    periodic_correction,
)
from singcontent.polygon import (
    FanoPolygon,
    HilbertSeries,
    PolygonError,
    PolygonSingularityContent,
    RationalPolygon,
    validate,
)
from singcontent.mutation import (
    Factor,
    MutationGraph,
    NormalForm,
    candidate_factors,
    explore_orbit,
    mutate,
    normal_form,
    same_content,
)

__version__ = "0.1.0"

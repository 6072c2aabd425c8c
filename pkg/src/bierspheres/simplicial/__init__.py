"""Abstract simplicial complexes: vectors, constructions, shellings, homology, canonical forms."""

from .canonical import CanonicalForm, canonicalize, is_isomorphic
from .complex import (
    SimplicialComplex,
    alexander_dual,
    bistellar_flip,
    boundary_of_simplex,
    complex_from_facets,
    cycle_complex,
    deleted_join,
    flip_index,
    flip_partner,
    format_complex,
    full_simplex,
    ground_complex,
    ground_from_masks,
    ground_masks,
    parse_complex,
    read_complex,
    signed_universe,
    stellar_subdivide,
)
from .homology import homology_gf2, is_pseudomanifold, sphere_checks
from .shelling import ShellingCheck, find_shelling, h_from_restrictions, is_shelling
from .vectors import (
    cascade,
    colex_unrank,
    f_from_h,
    f_vector,
    flip_g_change,
    g_from_h,
    g_of_complex,
    h_from_f,
    kk_compressed_complex,
    kk_is_ksequence,
    shadow_bound,
)

"""Bier posets, Bier spheres and the combinatorics around them."""

from .bier_poset import (
    TOP,
    BierPoset,
    Interval,
    bier_meet,
    bier_order_complex,
    bier_poset,
    bier_rank,
    identify_vertex,
    subdivision_batches,
    verify_subdivision_theorem,
)
from .enumeration import (
    all_complexes,
    all_family_masks,
    count_bier_isoclasses,
    random_complex,
)
from .errors import BierError
from .poset import (
    Poset,
    all_proper_ideals,
    boolean_lattice,
    build_poset,
    chain,
    face_lattice,
    is_eulerian,
    order_complex,
    polygon,
    rank_function,
)
from .report import BierReport, Check
from .sphere import (
    BierSphere,
    FacetAX,
    add_face_flip,
    bier_complex,
    bier_facets,
    chi,
    cs_construct,
    delta_prime,
    g_bier,
    h_via_restriction,
    lbc_status,
    locate,
    prec,
    realize_ksequence,
    restriction,
    shelling_order,
    symmetry_checks,
)

__version__ = "0.1.0"

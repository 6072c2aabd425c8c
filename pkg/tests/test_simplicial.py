import random
from itertools import combinations, permutations
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bierspheres.errors import (
    BAlreadyPresent,
    LengthMismatch,
    LinkNotSimplexBoundary,
    NotAKSequence,
    NotAPermutation,
    TooLarge,
    VoidComplex,
)
from bierspheres.simplicial import (
    SimplicialComplex,
    alexander_dual,
    bistellar_flip,
    boundary_of_simplex,
    canonicalize,
    cascade,
    colex_unrank,
    complex_from_facets,
    cycle_complex,
    deleted_join,
    f_from_h,
    find_shelling,
    flip_g_change,
    format_complex,
    full_simplex,
    g_from_h,
    g_of_complex,
    ground_complex,
    ground_masks,
    h_from_f,
    homology_gf2,
    is_isomorphic,
    is_pseudomanifold,
    is_shelling,
    kk_compressed_complex,
    kk_is_ksequence,
    parse_complex,
    shadow_bound,
    sphere_checks,
    stellar_subdivide,
)
from bierspheres.simplicial.homology import gf2_rank

from .conftest import complexes


def test_closure_and_pruning():
    K = complex_from_facets([1, 2, 3], [[1, 2], [3]])
    assert len(K.facets) == 2 and len(K.faces) == 5
    K = complex_from_facets([1, 2, 3], [[1, 2], [3], []])
    assert len(K.faces) == 5  # the empty face is already there
    assert complex_from_facets([1, 2], [[1], [1, 2]]).facet_labels() == [(1, 2)]
    V = complex_from_facets([1, 2], [])
    assert V.is_void
    with pytest.raises(VoidComplex):
        V.f_vector()


def test_f_vectors():
    assert ground_complex(4, [[1], [2], [3]]).f_vector(4) == (1, 3, 0, 0, 0)
    assert boundary_of_simplex([1, 2, 3]).f_vector(3) == (1, 3, 3, 0)
    assert full_simplex([1, 2, 3]).f_vector() == (1, 3, 3, 1)


def test_h_and_g():
    assert h_from_f((1, 7, 15, 10), 4) == (1, 4, 4, 1)
    assert g_from_h((1, 4, 4, 1)) == (1, 3)
    assert h_from_f((1, 3, 3, 0), 3) == (1, 1, 1) and g_from_h((1, 1, 1)) == (1, 0)
    assert h_from_f((1, 6, 6), 3) == (1, 4, 1) and g_from_h((1, 4, 1)) == (1, 3)
    with pytest.raises(LengthMismatch):
        h_from_f((1, 2), 4)


@given(st.lists(st.integers(0, 50), min_size=1, max_size=7))
def test_h_f_inverse(h):
    assert h_from_f(f_from_h(h), len(h)) == tuple(h)


def test_alexander_dual():
    assert alexander_dual(ground_complex(2, [[1], [2]]), 2).faces == frozenset({0})
    D = ground_complex(2, [[1]])
    assert alexander_dual(D, 2) == D


@given(complexes(max_n=6))
def test_dual_is_involution(case):
    faces, n = case
    D = ground_complex(n, [[v + 1 for v in range(n) if F >> v & 1] for F in faces])
    assert alexander_dual(alexander_dual(D, n), n) == D


def test_deleted_join():
    D = ground_complex(2, [[1]])
    J = deleted_join(D, alexander_dual(D, 2), 2)
    assert J.facet_labels() == [((1, "-"),), ((1, "+"),)]
    E = ground_complex(3, [[]])
    hexagon = ground_complex(3, [[1], [2], [3]])
    assert ground_masks(SimplicialComplex(range(1, 4), [0]), 3) == frozenset({0})
    J = deleted_join(E, hexagon, 3)
    assert J.facet_labels() == [((v, "+"),) for v in (1, 2, 3)]
    J = deleted_join(hexagon, alexander_dual(hexagon, 3), 3)
    assert is_isomorphic(J, cycle_complex(6))


def test_stellar_subdivision():
    H = stellar_subdivide(cycle_complex(6), [1, 2], "v")
    assert is_isomorphic(H, cycle_complex(7))
    assert is_isomorphic(stellar_subdivide(boundary_of_simplex([1, 2, 3]), [1, 2], "v"), cycle_complex(4))
    T = stellar_subdivide(boundary_of_simplex([1, 2, 3, 4]), [1, 2, 3], "v")
    assert T.f_vector() == (1, 5, 9, 6)
    assert T.reduced_euler_characteristic() == 1


def test_bistellar_flip():
    tri = boundary_of_simplex([1, 2, 3])
    sq = bistellar_flip(tri, [1, 2], new_vertex=4)
    assert is_isomorphic(sq, cycle_complex(4))
    assert g_of_complex(tri) == (1, 0) and g_of_complex(sq) == (1, 1)
    octahedron = complex_from_facets(range(1, 7), [(a, b, c) for a in (1, 2) for b in (3, 4) for c in (5, 6)])
    with pytest.raises(LinkNotSimplexBoundary):
        bistellar_flip(octahedron, [1])  # its link is a square
    pentagon = bistellar_flip(cycle_complex(6), [1])
    assert is_isomorphic(pentagon, cycle_complex(5))
    # the partner of an edge flip in the boundary of a 3-simplex is already a face
    with pytest.raises(BAlreadyPresent):
        bistellar_flip(boundary_of_simplex([1, 2, 3, 4]), [1, 2])


def test_flip_g_change_rule():
    assert flip_g_change(0, 1) == (0, 1)
    assert flip_g_change(0, 2) == (0, 1)
    assert flip_g_change(1, 2) == (0, 0)
    assert flip_g_change(2, 2) == (0, -1)
    assert flip_g_change(1, 4) == (0, 0, 1)


def test_shelling():
    hexagon = cycle_complex(6)
    order = [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 1)]
    check = is_shelling(hexagon, order)
    assert check.valid
    bad = is_shelling(hexagon, [(1, 2), (4, 5), (2, 3), (3, 4), (5, 6), (6, 1)])
    assert not bad.valid and bad.failed_at == 1
    assert is_shelling(full_simplex([1, 2, 3]), [(1, 2, 3)]).valid
    with pytest.raises(NotAPermutation):
        is_shelling(hexagon, order[:5])


def test_shelling_restrictions_give_h():
    K = boundary_of_simplex([1, 2, 3, 4, 5])
    order = find_shelling(K)
    check = is_shelling(K, order)
    h = [0] * 5
    for R in check.restrictions:
        h[R.bit_count()] += 1
    assert tuple(h) == h_from_f(K.f_vector(4), 5) == (1, 1, 1, 1, 1)


def test_homology():
    assert homology_gf2(cycle_complex(6)) == (0, 1)
    assert homology_gf2(boundary_of_simplex([1, 2, 3, 4])) == (0, 0, 1)
    assert homology_gf2(ground_complex(2, [[1], [2]])) == (1,)
    assert gf2_rank([0b11, 0b110, 0b101]) == 2


def test_torus_homology():
    # seven-vertex torus
    tri = [(i, (i + 1) % 7, (i + 3) % 7) for i in range(7)] + [(i, (i + 2) % 7, (i + 3) % 7) for i in range(7)]
    T = complex_from_facets(range(7), tri)
    assert homology_gf2(T) == (0, 2, 1)
    assert is_pseudomanifold(T)[0]


def test_sphere_checks():
    assert sphere_checks(cycle_complex(6), 1).ok
    disk = ground_complex(4, [[1, 2, 3], [2, 3, 4]]).facets
    two = SimplicialComplex(range(1, 5), disk)
    rep = sphere_checks(two, 1)
    assert not rep["pseudomanifold"].passed
    assert sphere_checks(boundary_of_simplex([1, 2, 3, 4]), 2).ok
    assert sphere_checks(boundary_of_simplex([1, 2, 3, 4, 5]), 3).ok
    assert not sphere_checks(boundary_of_simplex([1, 2, 3, 4, 5]), 2).ok


def test_canonical_forms():
    hexagon = cycle_complex(6)
    perm = [3, 6, 1, 5, 2, 4]
    relabelled = hexagon.relabel({v: perm[v - 1] for v in range(1, 7)})
    assert canonicalize(hexagon) == canonicalize(relabelled)
    two_triangles = ground_complex(6, [[1, 2], [2, 3], [1, 3], [4, 5], [5, 6], [4, 6]])
    assert not is_isomorphic(hexagon, two_triangles)
    assert not is_isomorphic(cycle_complex(5), hexagon)
    with pytest.raises(TooLarge):
        canonicalize(cycle_complex(20))


def _brute_isomorphic(K, L):
    kv = [K.universe[i] for i in range(len(K.universe)) if K.vertex_mask >> i & 1]
    lv = [L.universe[i] for i in range(len(L.universe)) if L.vertex_mask >> i & 1]
    if len(kv) != len(lv):
        return False
    target = {frozenset(F) for F in L.facet_labels()}
    return any({frozenset(p[kv.index(v)] for v in F) for F in K.facet_labels()} == target
               for p in permutations(lv))


def _random_complex(rng, m):
    facets = [F for F in combinations(range(1, m + 1), 3) if rng.random() < 0.35]
    facets += [F for F in combinations(range(1, m + 1), 2) if rng.random() < 0.2]
    return ground_complex(m, facets or [(1, 2)])


@given(st.integers(0, 2**32), st.integers(4, 6))
def test_canonical_form_agrees_with_brute_force_isomorphism(seed, m):
    rng = random.Random(seed)
    K, L = _random_complex(rng, m), _random_complex(rng, m)
    perm = list(range(1, m + 1))
    rng.shuffle(perm)
    P = K.relabel({v: perm[v - 1] for v in range(1, m + 1)})
    assert canonicalize(K) == canonicalize(P)
    assert (canonicalize(K) == canonicalize(L)) == _brute_isomorphic(K, L)


def test_kruskal_katona():
    assert kk_is_ksequence((1, 4, 3))
    K = kk_compressed_complex((1, 4, 3), 4)
    assert sorted(F for F in K.facet_labels() if len(F) == 2) == [(1, 2), (1, 3), (2, 3)]
    assert K.f_vector() == (1, 4, 3)
    assert not kk_is_ksequence((1, 2, 4))
    assert all(kk_is_ksequence((1, n)) for n in range(10))
    with pytest.raises(NotAKSequence):
        kk_compressed_complex((1, 2, 4), 5)
    assert cascade(10, 2) == [(5, 2)]
    assert shadow_bound(10, 2) == 10  # C(5,2) pairs carry at most C(5,3) triples
    assert shadow_bound(3, 1) == 3
    assert [colex_unrank(r, 2) for r in range(4)] == [(1, 2), (1, 3), (2, 3), (1, 4)]


@st.composite
def ksequences(draw):
    n = draw(st.integers(1, 7))
    f = [1, draw(st.integers(0, n))]
    for i in range(1, draw(st.integers(1, 4))):
        f.append(draw(st.integers(0, shadow_bound(f[i], i))))
    return f, n


@given(ksequences())
def test_compressed_complex_hits_target(case):
    f, n = case
    assert kk_is_ksequence(f)
    # the constructor closes the faces downward, so any missing shadow shows up in the counts
    K = kk_compressed_complex(f, n)
    assert K.f_vector(len(f) - 1)[: len(f)] == tuple(f)


@given(st.integers(0, 400), st.integers(1, 6))
def test_cascade_sums_back(m, i):
    assert sum(comb(a, k) for a, k in cascade(m, i)) == m


def test_parse_and_format_roundtrip():
    text = "# hexagon\nn=6\n1 2\n2 3\n3 4\n4 5\n5 6\n1 6\n"
    K, n = parse_complex(text)
    assert n == 6 and K.f_vector() == (1, 6, 6)
    K2, _ = parse_complex(format_complex(K, n))
    assert K2 == K
    E, n = parse_complex("n=3\n.\n")
    assert E.facets == (0,) and n == 3

from itertools import combinations
from math import comb

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from bierspheres.errors import (
    ImproperComplex,
    IndexOutOfRange,
    IndexTooLarge,
    InvalidChoice,
    NotAddable,
    NotAKSequence,
    NotAnInterval,
)
from bierspheres.simplicial import (
    alexander_dual,
    boundary_of_simplex,
    canonicalize,
    cycle_complex,
    deleted_join,
    g_from_h,
    h_from_f,
    is_isomorphic,
    sphere_checks,
)
from bierspheres.sphere import (
    FacetAX,
    add_face_flip,
    as_complex,
    as_ideal,
    bier_complex,
    bier_elements,
    bier_facets,
    bier_leq,
    check_partition,
    chi,
    restriction_below,
    cs_construct,
    delta_prime,
    delta_prime_trace,
    format_facet,
    g_bier,
    h_via_restriction,
    h_via_reversed,
    interval_rank,
    lbc_status,
    level_counts,
    locate,
    parse_facet,
    prec,
    prec_matrix,
    is_acyclic,
    realize_ksequence,
    remove_face_flip,
    restriction,
    restriction_statistic,
    set_to_mask,
    shelling_order,
    symmetry_checks,
    verify_shelling,
)

from .conftest import brute_faces, complexes

SINGLETONS3 = [[1], [2], [3]]


def F(A, x, n):
    return FacetAX.of(A, x, n)


def labelled(K):
    return sorted(tuple(sorted(f"{v}{s}" for v, s in face)) for face in K.facet_labels())


# -- facets -----------------------------------------------------------------


def test_facets_examples():
    fs = bier_facets(SINGLETONS3, 3)
    assert sorted((f.A, f.x) for f in fs) == sorted(((v,), w) for v in (1, 2, 3) for w in (1, 2, 3) if v != w)
    assert [(f.A, f.x) for f in bier_facets([[1]], 2)] == [((), 2), ((1,), 2)]
    assert [(f.A, f.x) for f in bier_facets([[]], 3)] == [((), 1), ((), 2), ((), 3)]


def test_facet_oracle_against_bier_poset_definition():
    # a facet is a maximal interval: rank n-1, i.e. C = B + one element
    faces = as_ideal([[1, 2], [3], [4]], 4)
    expect = sorted((B, C) for B, C in bier_elements(faces, 4) if interval_rank(B, C, 4) == 3)
    got = sorted((f.mask, f.support) for f in bier_facets(faces, 4))
    assert got == expect


def test_improper_inputs():
    with pytest.raises(ImproperComplex):
        bier_facets([[1, 2, 3]], 3)
    with pytest.raises(ImproperComplex):
        bier_facets(frozenset(), 3)
    with pytest.raises(ImproperComplex):
        bier_facets(frozenset({0, 3}), 2)  # {1,2} without {1}


def test_text_form():
    assert format_facet(F([1, 3], 2, 4)) == "1 3 | 2"
    assert format_facet(F([], 2, 4)) == "- | 2"
    assert parse_facet("1 3 | 2", 4) == F([1, 3], 2, 4)
    assert parse_facet("- | 2", 4) == F([], 2, 4)


# -- the complex ----------------------------------------------------------------


def test_hexagon_labels():
    K = bier_complex(SINGLETONS3, 3).complex
    cycle = ["1-", "3+", "2-", "1+", "3-", "2+"]
    edges = sorted(tuple(sorted((cycle[i], cycle[(i + 1) % 6]))) for i in range(6))
    assert labelled(K) == edges


def test_triangle_and_paper_example():
    K = bier_complex([[]], 3).complex
    assert labelled(K) == [("1+", "2+"), ("1+", "3+"), ("2+", "3+")]
    S = bier_complex(SINGLETONS3, 4)
    assert S.complex.f_vector() == (1, 7, 15, 10)


def test_small_n():
    S1 = bier_complex([[]], 1)
    assert S1.complex.facets == (0,) and S1.complex.f_vector() == (1,)
    S2 = bier_complex([[1]], 2)
    assert labelled(S2.complex) == [("1+",), ("1-",)]


@given(complexes(max_n=5))
def test_vertex_count(case):
    faces, n = case
    f = level_counts(faces, n)
    assert bier_complex(faces, n).num_vertices == f[1] + n - f[n - 1]


@given(complexes(max_n=5))
def test_equals_deleted_join(case):
    faces, n = case
    D = as_complex(faces, n)
    assert bier_complex(faces, n).complex == deleted_join(D, alexander_dual(D, n), n)


@given(complexes(max_n=5))
def test_is_sphere(case):
    faces, n = case
    assert sphere_checks(bier_complex(faces, n).complex, n - 2, shelling=False).ok


# -- restriction, locate, chi, prec -------------------------------------------------


def test_restriction_examples():
    R = restriction(F([1, 3], 2, 5))
    assert R == (set_to_mask([3]), set_to_mask([1, 2, 3, 4, 5]))
    f = F([1], 2, 3)
    assert restriction(f) == (0, 0b111) and restriction_statistic(f) == 0
    g = F([3, 4], 1, 4)
    assert restriction(g) == (set_to_mask([3, 4]), 0b1111) and restriction_statistic(g) == 2


def test_locate_examples():
    d = [[1, 2], [3], [4]]
    assert locate(d, 4, [], [1, 2, 3]) == F([1, 2], 3, 4)
    assert locate(SINGLETONS3, 3, [], [2, 3]) == F([2], 3, 3)
    with pytest.raises(NotAnInterval):
        locate(SINGLETONS3, 3, [1, 2], [1, 2, 3])
    with pytest.raises(NotAnInterval):
        locate(SINGLETONS3, 3, [], [1])


@given(complexes(max_n=5))
def test_locate_fixes_facets(case):
    faces, n = case
    for f in bier_facets(faces, n):
        assert locate(faces, n, f.mask, f.support) == f


@given(complexes(max_n=5))
def test_locate_witness_by_brute_force(case):
    faces, n = case
    fs = bier_facets(faces, n)
    for e in bier_elements(faces, n):
        hosts = [f for f in fs if bier_leq(restriction(f), e) and bier_leq(e, (f.mask, f.support))]
        assert hosts == [locate(faces, n, *e)]


def test_chi_examples():
    assert chi(F([1, 4], 2, 4)) == (-1, -1, 0, 1)
    assert chi(F([1], 2, 3)) == (-1, -1, 0)
    assert chi(F([2], 1, 3)) == (-1, 1, 0)


@given(complexes(max_n=5))
def test_chi_determines_facet(case):
    faces, n = case
    fs = bier_facets(faces, n)
    assert len({chi(f) for f in fs}) == len(fs)
    for f in fs:
        c = chi(f)
        assert {i + 1 for i, v in enumerate(c) if v} == set(f.A) | {f.x}
        assert max(i + 1 for i, v in enumerate(c) if v == -1) == f.x


def test_prec_examples():
    assert prec(F([1], 2, 3), F([1], 3, 3))
    f = F([1], 2, 3)
    assert not prec(f, f)


def test_three_cycle_under_restriction_test_only():
    cyc = [F([1, 4], 2, 4), F([1, 4], 3, 4), F([4], 1, 4)]
    steps = list(zip(cyc, cyc[1:] + cyc[:1]))
    assert all(restriction_below(a, b) for a, b in steps)
    assert not all(prec(a, b) for a, b in steps)


@given(complexes(max_n=5))
def test_restriction_below_matches_bier_order(case):
    faces, n = case
    fs = bier_facets(faces, n)
    for a in fs:
        for b in fs:
            assert restriction_below(a, b) == bier_leq(restriction(a), (b.mask, b.support))


@given(complexes(max_n=5))
def test_mutual_domination_rigidity(case):
    faces, n = case
    fs = bier_facets(faces, n)
    for a in fs:
        for b in fs:
            if restriction_below(a, b) and restriction_below(b, a):
                assert a == b


@given(complexes(max_n=6))
def test_prec_matrix_matches_scalar(case):
    faces, n = case
    fs = bier_facets(faces, n)
    M = prec_matrix(fs)
    expect = np.array([[prec(a, b) for b in fs] for a in fs], dtype=bool).reshape(M.shape)
    assert (M == expect).all()
    assert is_acyclic(M)


def test_is_acyclic():
    assert is_acyclic(np.array([[0, 1], [0, 0]], dtype=bool))
    assert not is_acyclic(np.array([[0, 1], [1, 0]], dtype=bool))


# -- shelling and h ------------------------------------------------------------------


def test_shelling_order_examples():
    order = shelling_order(SINGLETONS3, 3)
    assert [(f.A, f.x) for f in order] == [((1,), 2), ((1,), 3), ((3,), 1), ((2,), 1), ((2,), 3), ((3,), 2)]
    assert [(f.A, f.x) for f in shelling_order([[]], 3)] == [((), 1), ((), 2), ((), 3)]
    assert verify_shelling([[]], 3).ok


@given(complexes(max_n=6))
def test_shelling_and_partition(case):
    faces, n = case
    assert verify_shelling(faces, n).ok
    assert check_partition(faces, n) == (True, "")
    last = shelling_order(faces, n)[-1]
    assert restriction_statistic(last) == n - 1


def test_h_examples():
    assert h_via_restriction(SINGLETONS3, 4) == (1, 4, 4, 1)
    assert h_via_restriction(SINGLETONS3, 3) == (1, 4, 1)
    assert h_via_restriction([[]], 3) == (1, 1, 1)


@given(complexes(max_n=6))
def test_h_identities(case):
    faces, n = case
    h = h_via_restriction(faces, n)
    K = bier_complex(faces, n).complex
    if n > 1:
        assert h == h_from_f(K.f_vector(n - 1), n)
    assert h == h[::-1]
    assert h == h_via_reversed(faces, n)
    assert g_bier(faces, n) == g_from_h(h)


@given(complexes(max_n=5))
def test_h_extension_to_one_more_element(case):
    faces, n = case
    f = level_counts(faces, n)
    h, h_up = h_via_restriction(faces, n), h_via_restriction(faces, n + 1)
    assert all(h_up[i] == (h[i - 1] if i else 0) + f[i] for i in range(n + 1))


# -- g, delta prime, K-sequences -----------------------------------------------------------


def test_g_examples():
    assert g_bier(SINGLETONS3, 4) == (1, 3)
    d = [[1, 2, 3], [4]]
    assert level_counts(as_ideal(d, 4), 4) == (1, 4, 3, 1, 0)
    assert g_bier(d, 4) == (1, 3)
    assert g_bier(list(combinations(range(1, 6), 2)), 5) == (1, 5, 10)


def test_delta_prime_examples():
    faces, passes = delta_prime_trace([[1, 2], [3]], 3)
    assert passes[0].pairs == ((3, 1),)
    assert passes[0].removed == frozenset({set_to_mask([1]), set_to_mask([1, 2])})
    assert faces == frozenset({0, set_to_mask([2]), set_to_mask([3])})
    small = as_ideal([[1], [2], [3], [4], [5]], 5)
    assert delta_prime_trace(small, 5) == (small, [])
    everything = frozenset(range(15))
    assert delta_prime(everything, 4).facets == (0,)


@given(complexes(max_n=6))
def test_delta_prime_counts(case):
    faces, n = case
    sub, passes = delta_prime_trace(faces, n)
    f, fp = level_counts(faces, n), level_counts(sub, n)
    assert sub <= faces
    assert fp == tuple(f[i] - f[n - i] if 2 * i < n else 0 for i in range(n + 1))
    sizes = [len(faces)] + [len(faces) - sum(len(p.removed) for p in passes[: k + 1]) for k in range(len(passes))]
    assert all(a > b for a, b in zip(sizes, sizes[1:]))
    assert g_bier(faces, n) == fp[: len(g_bier(faces, n))]


def test_realize_examples():
    D = realize_ksequence((1, 3), 4)
    assert D.f_vector(4) == (1, 3, 0, 0, 0) and g_bier(D, 4) == (1, 3)
    D = realize_ksequence((1, 7, 3), 7)
    assert g_bier(D, 7) == (1, 7, 3, 0)
    with pytest.raises(NotAKSequence):
        realize_ksequence((1, 2, 4), 9)
    with pytest.raises(IndexTooLarge):
        realize_ksequence((1, 3, 1), 4)


# -- flips and the lower bound --------------------------------------------------------------


def test_add_face_flip_pentagon():
    res = add_face_flip(SINGLETONS3, 3, [1, 2])
    assert res.face == ((3, "+"),) and res.partner == ((1, "-"), (2, "-"))
    assert labelled(res.complex) == sorted(
        [("1-", "2+"), ("1+", "2-"), ("2+", "3-"), ("1+", "3-"), ("1-", "2-")])
    assert is_isomorphic(res.complex, cycle_complex(5))
    assert res.report.ok


def test_add_face_flip_vertex_split():
    res = add_face_flip([[]], 4, [1])
    assert res.index == 0 and res.partner == ((1, "-"),)
    assert is_isomorphic(bier_complex([[]], 4).complex, boundary_of_simplex([1, 2, 3, 4]))
    assert res.report.ok


def test_add_face_flip_guard():
    with pytest.raises(NotAddable):
        add_face_flip([[1]], 3, [1, 2])
    with pytest.raises(NotAddable):
        add_face_flip(SINGLETONS3, 3, [1])


@given(complexes(max_n=5), st.data())
def test_remove_inverts_add(case, data):
    faces, n = case
    addable = [G for G in range((1 << n) - 1) if G not in faces and all(G & ~(1 << b) in faces for b in range(n) if G >> b & 1)]
    if not addable:
        return
    G = data.draw(st.sampled_from(addable))
    up = add_face_flip(faces, n, G)
    down = remove_face_flip(up.delta, n, G)
    assert up.report.ok and down.report.ok
    assert down.complex == bier_complex(faces, n).complex


def test_lbc_examples():
    st_ = lbc_status([[1], [2], [3], [4], [5]], 5, 2)
    assert st_.g_k_zero and st_.cond2
    assert [s.action for s in st_.certificate] == ["add"] * 5
    assert all(s.index == 0 for s in st_.certificate) and st_.report.ok
    st_ = lbc_status([[1, 2], [3], [4], [5]], 5, 2)
    assert not st_.g_k_zero and not st_.cond2 and st_.certificate is None
    with pytest.raises(IndexOutOfRange):
        lbc_status([[1]], 4, 2)


def test_lbc_seven():
    d = as_ideal(combinations(range(1, 8), 4), 7)
    f = level_counts(d, 7)
    assert f[4] == comb(7, 4) and g_bier(d, 7)[3] == 0
    st_ = lbc_status(d, 7, 3, verify=False)
    assert st_.g_k_zero and st_.cond2
    assert all(s.index <= 1 for s in st_.certificate)


# -- symmetry -----------------------------------------------------------------------------


def test_symmetry_examples():
    two = list(combinations(range(1, 6), 2))
    s = symmetry_checks(two, 5, 2)
    assert s == (True, True, True, True)
    K = bier_complex(two, 5).complex
    pairs = [(a, b) for a in K.universe for b in K.universe if a < b and a[0] != b[0]]
    assert len(pairs) == 40 and all(K.mask_of(p) in K for p in pairs)
    s = symmetry_checks([[1, 2], [1, 3], [1, 4]], 4)
    assert s.centrally_symmetric and s.complex_centrally_symmetric
    assert symmetry_checks(SINGLETONS3, 3).centrally_symmetric
    assert not symmetry_checks([[1]], 3).centrally_symmetric
    with pytest.raises(IndexOutOfRange):
        symmetry_checks(two, 5, 3)


@given(complexes(max_n=6))
def test_central_symmetry_is_self_duality(case):
    faces, n = case
    D = as_complex(faces, n)
    s = symmetry_checks(faces, n)
    assert s.centrally_symmetric == s.complex_centrally_symmetric == (alexander_dual(D, n) == D)


def test_cs_construct():
    assert cs_construct(4, [[1, 2], [1, 3], [1, 4]]).facet_labels() == [(1, 2), (1, 3), (1, 4)]
    assert sorted(cs_construct(5).facet_labels()) == list(combinations(range(1, 6), 2))
    with pytest.raises(InvalidChoice):
        cs_construct(4, [[1, 2], [3, 4]])
    with pytest.raises(InvalidChoice):
        cs_construct(4, [[1, 2], [1, 3]])


def test_brute_closure_oracle():
    assert as_ideal([[1, 2], [3]], 3) == brute_faces([[1, 2], [3]], 3)

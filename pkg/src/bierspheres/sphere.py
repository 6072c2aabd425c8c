"""Bier spheres Bier(B_n, Delta) of simplicial complexes on the ground set 1..n.

Subsets of ``1..n`` are bitmasks with bit ``v-1`` standing for ``v``.  A
complex ``Delta`` can be passed as a :class:`SimplicialComplex` on integer
labels, as a set of masks (must be downward closed), or as any iterable of
faces (its downward closure is taken).

A facet of the sphere is written ``(A; x)``: the interval ``[A, A + x]`` of
the Bier poset, with A in Delta and A + x outside.  Its vertex set is
``{a- : a in A} u {b+ : b not in A + x}`` on the signed universe
``1-, 1+, 2-, 2+, ...``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .errors import (
    BadParameter,
    ImproperComplex,
    IndexOutOfRange,
    IndexTooLarge,
    InvalidChoice,
    NotAddable,
    NotAKSequence,
    NotAnInterval,
)
from .report import BierReport
from .simplicial.canonical import is_isomorphic
from .simplicial.complex import (
    SimplicialComplex,
    bistellar_flip,
    bits,
    flip_partner,
    ground_from_masks,
    ground_masks,
    signed_universe,
    spread,
    submasks,
)
from .simplicial.shelling import is_shelling
from .simplicial.vectors import flip_g_change, g_of_complex, kk_compressed_complex, kk_is_ksequence

MAX_N = 32


# -- complexes on the ground set ------------------------------------------------


def as_ideal(delta, n: int) -> frozenset[int]:
    """Normalise ``delta`` to a frozenset of face masks on ``1..n``; must be proper."""
    if not 1 <= n <= MAX_N:
        raise BadParameter(f"n must lie in 1..{MAX_N}")
    full = (1 << n) - 1
    if isinstance(delta, SimplicialComplex):
        faces = ground_masks(delta, n)
    elif isinstance(delta, (set, frozenset)) and all(isinstance(F, int) for F in delta):
        faces = frozenset(delta)
        for F in faces:
            if F < 0 or F & ~full:
                raise ImproperComplex(f"face mask {F:#x} outside 1..{n}")
            for b in bits(F):
                if F & ~(1 << b) not in faces:
                    raise ImproperComplex(f"{mask_to_set(F)} present without {mask_to_set(F & ~(1 << b))}")
    else:
        gens = []
        for face in delta:
            m = 0
            for v in face:
                if not 1 <= v <= n:
                    raise ImproperComplex(f"vertex {v} outside 1..{n}")
                m |= 1 << (v - 1)
            gens.append(m)
        out: set[int] = set()
        for m in gens:
            if m not in out:
                out.update(submasks(m))
        faces = frozenset(out)
    if 0 not in faces or full in faces:
        raise ImproperComplex("Delta must be nonvoid and must not be the full simplex")
    return faces


def mask_to_set(mask: int) -> tuple[int, ...]:
    return tuple(b + 1 for b in bits(mask))


def set_to_mask(elements: Iterable[int]) -> int:
    m = 0
    for v in elements:
        m |= 1 << (v - 1)
    return m


def level_counts(faces: Iterable[int], n: int) -> tuple[int, ...]:
    """f_0 .. f_n of a family of subsets of 1..n."""
    f = [0] * (n + 1)
    for F in faces:
        f[F.bit_count()] += 1
    return tuple(f)


def as_complex(faces: Iterable[int], n: int) -> SimplicialComplex:
    return ground_from_masks(n, faces)


# -- facets, chi-vectors and the restriction operator ------------------------------


@dataclass(frozen=True, order=True)
class FacetAX:
    """Facet ``(A; x)``: ``mask`` encodes A, ``x`` is the root element."""

    mask: int
    x: int
    n: int

    @classmethod
    def of(cls, A: Iterable[int], x: int, n: int) -> "FacetAX":
        m = set_to_mask(A)
        if not 1 <= x <= n or m >> (x - 1) & 1 or m >> n:
            raise BadParameter(f"({sorted(A)}; {x}) is not a pair A, x with x outside A in 1..{n}")
        return cls(m, x, n)

    @property
    def A(self) -> tuple[int, ...]:
        return mask_to_set(self.mask)

    @property
    def support(self) -> int:
        return self.mask | 1 << (self.x - 1)

    def face(self) -> int:
        """Vertex mask on the signed universe."""
        return interval_face(self.mask, self.support, self.n)

    def text(self) -> str:
        return format_facet(self)

    def __repr__(self):
        return f"({set(self.A) or '{}'}; {self.x})"


def format_facet(F: FacetAX) -> str:
    return (" ".join(map(str, F.A)) if F.mask else "-") + f" | {F.x}"


def parse_facet(text: str, n: int) -> FacetAX:
    left, sep, right = text.partition("|")
    if not sep:
        raise BadParameter(f"facet {text!r} lacks '|'")
    left = left.strip()
    A = [] if left == "-" else [int(t) for t in left.split()]
    return FacetAX.of(A, int(right), n)


def interval_face(B: int, C: int, n: int) -> int:
    """Face ``{b- : b in B} u {c+ : c not in C}`` of the interval ``(B, C)``."""
    full = (1 << n) - 1
    return spread(B, 0) | spread(full & ~C, 1)


def _gt(x: int, n: int) -> int:
    # elements x+1..n
    return ((1 << n) - 1) & ~((1 << x) - 1)


def _ge(x: int, n: int) -> int:
    return ((1 << n) - 1) & ~((1 << (x - 1)) - 1)


def _lt(x: int) -> int:
    return (1 << (x - 1)) - 1


def _le(x: int) -> int:
    return (1 << x) - 1


def bier_facets(delta, n: int) -> list[FacetAX]:
    """All ``(A; x)`` with A in Delta, x outside A and A + x outside Delta."""
    faces = as_ideal(delta, n)
    return _facets(faces, n)


def _facets(faces: frozenset[int], n: int) -> list[FacetAX]:
    out = []
    for A in sorted(faces):
        for x in range(1, n + 1):
            xb = 1 << (x - 1)
            if not A & xb and (A | xb) not in faces:
                out.append(FacetAX(A, x, n))
    return out


def restriction(F: FacetAX) -> tuple[int, int]:
    """``R(A; x) = (A n (x, n], A u [x, n])`` as a pair of masks."""
    return F.mask & _gt(F.x, F.n), F.mask | _ge(F.x, F.n)


def interval_rank(B: int, C: int, n: int) -> int:
    return B.bit_count() + n - C.bit_count()


def restriction_statistic(F: FacetAX) -> int:
    """``|A n (x, n]| + |[1, x) - A|``, the rank of ``R(A; x)``."""
    return (F.mask & _gt(F.x, F.n)).bit_count() + (_lt(F.x) & ~F.mask).bit_count()


def reversed_statistic(F: FacetAX) -> int:
    """``|A n [1, x)| + |(x, n] - A|``: the same statistic on the reversed ground set."""
    return (F.mask & _lt(F.x)).bit_count() + (_gt(F.x, F.n) & ~F.mask).bit_count()


def chi(F: FacetAX) -> tuple[int, ...]:
    """-1 on the support up to x, +1 on the support above x, 0 elsewhere."""
    S = F.support
    return tuple(0 if not S >> (a - 1) & 1 else (-1 if a <= F.x else 1) for a in range(1, F.n + 1))


def bier_leq(b1: tuple[int, int], b2: tuple[int, int]) -> bool:
    """``(B, C) <= (B', C')`` in the Bier order: B within B' and C' within C."""
    return b1[0] & ~b2[0] == 0 and b2[1] & ~b1[1] == 0


def restriction_below(F: FacetAX, G: FacetAX) -> bool:
    """``(A+x)_{>x}`` inside A' and ``(A'+x')_{<x}`` inside A."""
    return (F.support & _gt(F.x, F.n) & ~G.mask) == 0 and (G.support & _lt(F.x) & ~F.mask) == 0


def sides_differ(F: FacetAX, G: FacetAX) -> bool:
    """``(A+x)_{<=x}`` not inside A' and ``(A'+x')_{>=x}`` not inside A."""
    return (F.support & _le(F.x) & ~G.mask) != 0 and (G.support & _ge(F.x, F.n) & ~F.mask) != 0


def prec(F: FacetAX, G: FacetAX) -> bool:
    """The precedence step ``F -> G`` between distinct facets."""
    return F != G and restriction_below(F, G) and sides_differ(F, G)


def prec_matrix(facets: Sequence[FacetAX]) -> np.ndarray:
    """Boolean matrix ``M[i, j] = prec(facets[i], facets[j])``."""
    if not facets:
        return np.zeros((0, 0), dtype=bool)
    n = facets[0].n
    A = np.array([F.mask for F in facets], dtype=np.int64)
    S = np.array([F.support for F in facets], dtype=np.int64)
    gt = np.array([_gt(F.x, n) for F in facets], dtype=np.int64)
    ge = np.array([_ge(F.x, n) for F in facets], dtype=np.int64)
    lt = np.array([_lt(F.x) for F in facets], dtype=np.int64)
    le = np.array([_le(F.x) for F in facets], dtype=np.int64)
    notA = ~A
    c5a = ((S & gt)[:, None] & notA[None, :]) == 0
    c5b = ((S[None, :] & lt[:, None]) & notA[:, None]) == 0
    c6a = ((S & le)[:, None] & notA[None, :]) != 0
    c6b = ((S[None, :] & ge[:, None]) & notA[:, None]) != 0
    M = c5a & c5b & c6a & c6b
    np.fill_diagonal(M, False)
    return M


def is_acyclic(M: np.ndarray) -> bool:
    """Kahn's algorithm on the digraph with adjacency matrix ``M``."""
    indeg = M.sum(axis=0).astype(np.int64)
    ready = list(np.flatnonzero(indeg == 0))
    seen = 0
    while ready:
        i = ready.pop()
        seen += 1
        for j in np.flatnonzero(M[i]):
            indeg[j] -= 1
            if indeg[j] == 0:
                ready.append(j)
    return seen == M.shape[0]


def locate(delta, n: int, B, C) -> FacetAX:
    """The facet ``(A; x)`` whose restriction interval contains ``(B, C)``.

    ``B`` and ``C`` are masks or collections of elements.
    """
    faces = as_ideal(delta, n)
    B = B if isinstance(B, int) else set_to_mask(B)
    C = C if isinstance(C, int) else set_to_mask(C)
    return _locate(faces, n, B, C)


def _locate(faces: frozenset[int], n: int, B: int, C: int) -> FacetAX:
    if B not in faces or C in faces or B & ~C:
        raise NotAnInterval(f"({mask_to_set(B)}, {mask_to_set(C)}) is not an element of the Bier poset")
    free = [y for y in range(1, n + 1) if (C & ~B) >> (y - 1) & 1]
    x_min = next(y for y in free if (B | (C & _le(y))) not in faces)
    x_max = max(y for y in free if (B | (C & _lt(y))) in faces)
    if x_min != x_max:
        raise AssertionError(f"locate formulas disagree: {x_min} vs {x_max}")
    return FacetAX(B | (C & _lt(x_min)), x_min, n)


def bier_elements(faces: frozenset[int], n: int) -> list[tuple[int, int]]:
    """Proper part plus bottom: all ``(B, C)`` with B in Delta, C outside, B within C."""
    full = (1 << n) - 1
    out = []
    for B in sorted(faces):
        rest = full & ~B
        for t in submasks(rest):
            C = B | t
            if C not in faces:
                out.append((B, C))
    return sorted(out)


def check_partition(delta, n: int) -> tuple[bool, str]:
    """Every Bier element lies in exactly one ``[R(F), F]`` and ``locate`` finds it."""
    faces = as_ideal(delta, n)
    elements = bier_elements(faces, n)
    hits: dict[tuple[int, int], FacetAX] = {}
    for F in _facets(faces, n):
        RB, RC = restriction(F)
        top_c = F.support
        for s in submasks(F.mask & ~RB):
            for t in submasks(RC & ~top_c):
                e = (RB | s, top_c | t)
                if e in hits:
                    return False, f"{_fmt_elem(e)} lies in the intervals of {hits[e]!r} and {F!r}"
                hits[e] = F
    for e in elements:
        if e not in hits:
            return False, f"{_fmt_elem(e)} is covered by no interval"
        if _locate(faces, n, *e) != hits[e]:
            return False, f"locate{_fmt_elem(e)} disagrees with the partition"
    if len(hits) != len(elements):
        return False, "an interval contains a non-element"
    return True, ""


def _fmt_elem(e: tuple[int, int]) -> str:
    return f"({set(mask_to_set(e[0])) or '{}'}, {set(mask_to_set(e[1]))})"


# -- the sphere -------------------------------------------------------------------


@dataclass
class BierSphere:
    n: int
    delta: frozenset[int]
    facets: list[FacetAX]
    complex: SimplicialComplex
    f_delta: tuple[int, ...] = field(default=())

    @property
    def delta_complex(self) -> SimplicialComplex:
        return as_complex(self.delta, self.n)

    @property
    def num_vertices(self) -> int:
        return self.complex.num_vertices


def bier_complex(delta, n: int) -> BierSphere:
    faces = as_ideal(delta, n)
    facets = _facets(faces, n)
    K = SimplicialComplex(signed_universe(n), [F.face() for F in facets])
    return BierSphere(n, faces, facets, K, level_counts(faces, n))


def label_to_int(label) -> int:
    """File label of a signed vertex: ``v-`` is ``2v - 1`` and ``v+`` is ``2v``."""
    v, s = label
    return 2 * v - (1 if s == "-" else 0)


def shelling_order(delta, n: int) -> list[FacetAX]:
    """Facets sorted lexicographically by chi-vector (-1 < 0 < +1)."""
    return sorted(bier_facets(delta, n), key=chi)


def verify_shelling(delta, n: int) -> BierReport:
    """The chi-lex order shells the sphere; restriction faces and h-vector agree."""
    S = bier_complex(delta, n)
    order = sorted(S.facets, key=chi)
    rep = BierReport(f"shell n={n}")
    rep.values["order"] = [format_facet(F) for F in order]
    check = is_shelling(S.complex, [F.face() for F in order])
    rep.add("chi-lex order is a shelling", check.valid,
            "" if check.valid else f"step {check.failed_at} ({format_facet(order[check.failed_at])})")
    if check.valid:
        bad = [F for F, R in zip(order, check.restrictions) if R != interval_face(*restriction(F), n)]
        rep.add("restriction faces match R(A;x)", not bad, "" if not bad else f"facet {format_facet(bad[0])}")
        h_shell = [0] * n
        for R in check.restrictions:
            h_shell[R.bit_count()] += 1
        h_res = h_via_restriction(S.delta, n)
        rep.values["h"] = h_res
        rep.add("restriction ranks reproduce h", tuple(h_shell) == h_res,
                "" if tuple(h_shell) == h_res else f"{tuple(h_shell)} vs {h_res}")
        M = prec_matrix(order)
        ii, jj = np.nonzero(M)
        backwards = [(int(i), int(j)) for i, j in zip(ii, jj) if i > j]
        rep.add("precedence agrees with the order", not backwards,
                "" if not backwards else f"{format_facet(order[backwards[0][0]])} precedes "
                                         f"{format_facet(order[backwards[0][1]])}")
    return rep


# -- h- and g-vectors -----------------------------------------------------------------


def h_via_restriction(delta, n: int) -> tuple[int, ...]:
    h = [0] * n
    for F in bier_facets(delta, n):
        h[restriction_statistic(F)] += 1
    return tuple(h)


def h_via_reversed(delta, n: int) -> tuple[int, ...]:
    h = [0] * n
    for F in bier_facets(delta, n):
        h[reversed_statistic(F)] += 1
    return tuple(h)


def g_bier(delta, n: int) -> tuple[int, ...]:
    """``g_i = f_i(Delta) - f_(n-i)(Delta)`` for ``0 <= i <= (n-1)//2``."""
    f = level_counts(as_ideal(delta, n), n)
    return tuple(f[i] - f[n - i] for i in range((n - 1) // 2 + 1))


def d_vector(delta, n: int) -> tuple[int, ...]:
    """``f_i - f_(n-i)`` up to ``n//2``, zero above (length n + 1)."""
    f = level_counts(as_ideal(delta, n), n)
    return tuple(f[i] - f[n - i] if i <= n // 2 else 0 for i in range(n + 1))


# -- the subcomplex Delta' ----------------------------------------------------------------


class PrimePass(NamedTuple):
    C: int
    pairs: tuple[tuple[int, int], ...]  # transpositions of the involution
    removed: frozenset[int]


def delta_prime_trace(delta, n: int) -> tuple[frozenset[int], list[PrimePass]]:
    """Shrink Delta while keeping the d-vector until no face has ``2|C| >= n``."""
    cur = set(as_ideal(delta, n))
    full = (1 << n) - 1
    passes = []
    while True:
        big = [C for C in cur if C and 2 * C.bit_count() >= n]
        if not big:
            break
        C = min(big, key=lambda m: (-m.bit_count(), m))
        outside = [b for b in range(n) if not C >> b & 1]
        inside = [b for b in range(n) if C >> b & 1]
        perm = list(range(n))
        for a, b in zip(outside, inside):
            perm[a], perm[b] = b, a

        def phi(B: int) -> int:
            img = 0
            for t in bits(B):
                img |= 1 << perm[t]
            return full & ~img

        removed = frozenset(B for B in cur if phi(B) in cur)
        cur -= removed
        passes.append(PrimePass(C, tuple((a + 1, b + 1) for a, b in zip(outside, inside)), removed))
    return frozenset(cur), passes


def delta_prime(delta, n: int) -> SimplicialComplex:
    faces, _ = delta_prime_trace(delta, n)
    return as_complex(faces, n)


# -- Kruskal-Katona realisation ---------------------------------------------------------------


def realize_ksequence(seq: Sequence[int], n: int) -> SimplicialComplex:
    """Compressed Delta whose Bier sphere has g-vector ``seq`` (zero padded)."""
    seq = list(seq)
    k = len(seq) - 1
    if k > (n - 1) // 2:
        raise IndexTooLarge(f"length {k} exceeds floor((n-1)/2) = {(n - 1) // 2}")
    if not kk_is_ksequence(seq):
        raise NotAKSequence(f"{tuple(seq)} is not a K-sequence")
    return kk_compressed_complex(seq, n)


# -- bistellar flips ------------------------------------------------------------------------


@dataclass
class FlipResult:
    delta: frozenset[int]  # Delta with the face added or removed
    face: tuple  # labels of the flipped face A
    partner: tuple  # labels of B
    index: int  # i of the bistellar i-flip
    complex: SimplicialComplex
    report: BierReport


def _flip_between(before: BierSphere, A: int, fresh, after_delta: frozenset[int], n: int,
                  expect_B: int, verify: bool, kind: str) -> FlipResult:
    K = before.complex
    B = flip_partner(K, A)
    flipped = bistellar_flip(K, A, new_vertex=fresh)
    partner = (fresh,) if B is None else K.labels_of(B)
    index = len(partner) - 1
    rep = BierReport(kind)
    rep.add("partner is the expected simplex", partner == K.labels_of(expect_B) if B is not None
            else K.labels_of(expect_B) == (fresh,), f"partner {partner}")
    if verify:
        target = bier_complex(after_delta, n).complex
        rep.add("flip equals the Bier sphere of the new complex", flipped == target,
                "" if flipped == target else "labelled facets differ")
        iso = is_isomorphic(flipped, target)
        rep.add("canonical forms agree", iso, "" if iso else "canonical forms differ")
        d = n - 2
        if d >= 0:
            g0, g1 = g_of_complex(K), g_of_complex(flipped)
            change = tuple(b - a for a, b in zip(g0, g1))
            want = flip_g_change(index, d)
            rep.values["g_before"], rep.values["g_after"] = g0, g1
            rep.add("g change matches the flip rule", change == want, f"change {change}, expected {want}")
    return FlipResult(after_delta, K.labels_of(A), partner, index, flipped, rep)


def add_face_flip(delta, n: int, G, verify: bool = True) -> FlipResult:
    """Adding G to Delta is the flip at ``{b+ : b not in G}`` with partner ``G-``."""
    faces = as_ideal(delta, n)
    Gm = G if isinstance(G, int) else set_to_mask(G)
    full = (1 << n) - 1
    if Gm in faces or Gm == full or Gm & ~full or any(Gm & ~(1 << b) not in faces for b in bits(Gm)):
        raise NotAddable(f"{mask_to_set(Gm)} cannot be added to Delta")
    before = bier_complex(faces, n)
    A = spread(full & ~Gm, 1)
    fresh = (bits(Gm)[0] + 1, "-") if Gm.bit_count() == 1 else None
    return _flip_between(before, A, fresh, faces | {Gm}, n, spread(Gm, 0), verify, f"add-face {mask_to_set(Gm)}")


def remove_face_flip(delta, n: int, G, verify: bool = True) -> FlipResult:
    """Removing a maximal face G is the flip at ``G-`` with partner ``{b+ : b not in G}``."""
    faces = as_ideal(delta, n)
    Gm = G if isinstance(G, int) else set_to_mask(G)
    full = (1 << n) - 1
    if Gm == 0 or Gm not in faces or any((Gm | 1 << b) in faces for b in range(n) if not Gm >> b & 1):
        raise NotAddable(f"{mask_to_set(Gm)} is not a removable maximal face")
    before = bier_complex(faces, n)
    missing = full & ~Gm
    fresh = (bits(missing)[0] + 1, "+") if missing.bit_count() == 1 else None
    return _flip_between(before, spread(Gm, 0), fresh, faces - {Gm}, n, spread(missing, 1), verify,
                         f"remove-face {mask_to_set(Gm)}")


class FlipStep(NamedTuple):
    action: str  # "add" or "remove"
    face: tuple[int, ...]
    flip_face: tuple
    index: int


@dataclass
class LBCStatus:
    g_k_zero: bool
    cond2: bool
    certificate: list[FlipStep] | None
    report: BierReport


def lbc_status(delta, n: int, k: int, verify: bool = True) -> LBCStatus:
    """g_k = 0, the face-count condition, and a flip certificate from the simplex boundary.

    With ``f_k = 0`` the faces of Delta are added to ``{{}}`` by increasing
    size; with all (n-k)-sets present the missing faces are removed from
    the full complex by decreasing size.  Each step is checked as a
    bistellar i-flip with ``i <= k - 2``.
    """
    if not 2 <= k <= (n - 1) // 2:
        raise IndexOutOfRange(f"k must satisfy 2 <= k <= {(n - 1) // 2}")
    faces = as_ideal(delta, n)
    f = level_counts(faces, n)
    g = g_bier(faces, n)
    g_zero = g[k] == 0
    cond2 = f[k] == 0 or f[n - k] == comb(n, n - k)
    rep = BierReport(f"lbc n={n} k={k}")
    rep.values["g"] = g
    if not cond2:
        return LBCStatus(g_zero, cond2, None, rep)
    full = (1 << n) - 1
    steps: list[FlipStep] = []
    if f[k] == 0:
        cur = frozenset({0})
        todo = sorted((F for F in faces if F), key=lambda m: (m.bit_count(), m))
        start = bier_complex(cur, n)
        flipper, action = add_face_flip, "add"
    else:
        cur = frozenset(m for m in range(full))
        todo = sorted((F for F in cur if F not in faces), key=lambda m: (-m.bit_count(), m))
        start = bier_complex(cur, n)
        flipper, action = remove_face_flip, "remove"
    boundary = SimplicialComplex(range(n), [full & ~(1 << b) for b in range(n)])
    if verify:
        ok = is_isomorphic(start.complex, boundary)
        rep.add("start is the boundary of the simplex", ok, "" if ok else "start complex differs")
    for G in todo:
        res = flipper(cur, n, G, verify=verify)
        steps.append(FlipStep(action, mask_to_set(G), res.face, res.index))
        rep.add(f"{action} {mask_to_set(G)}: {res.index}-flip with i <= {k - 2}", res.index <= k - 2,
                f"index {res.index}")
        if verify:
            rep.extend(res.report, prefix=f"{action} {mask_to_set(G)}: ")
        cur = res.delta
    if cur != faces:
        rep.add("certificate ends at Delta", False, "final complex differs from Delta")
    return LBCStatus(g_zero, cond2, steps, rep)


# -- central symmetry and neighbourliness ----------------------------------------------------------


class SymmetryStatus(NamedTuple):
    centrally_symmetric: bool
    k_nearly_neighborly: bool | None
    complex_centrally_symmetric: bool
    complex_k_nearly_neighborly: bool | None


def _swap_signs(mask: int, n: int) -> int:
    minus = mask & int("01" * n, 2)
    plus = mask & int("10" * n, 2)
    return minus << 1 | plus >> 1


def symmetry_checks(delta, n: int, k: int | None = None) -> SymmetryStatus:
    """Complement condition, small-face condition, and the same read off the sphere."""
    if k is not None and not 1 < k <= (n - 1) // 2:
        raise IndexOutOfRange(f"k must satisfy 1 < k <= {(n - 1) // 2}")
    faces = as_ideal(delta, n)
    full = (1 << n) - 1
    cond_i = all((A in faces) != ((full ^ A) in faces) for A in range(full + 1))
    K = bier_complex(faces, n).complex
    facet_set = set(K.facets)
    face_preserving = all(_swap_signs(F, n) in facet_set for F in K.facets)
    no_antipodal_edge = all(spread(1 << v, 0) | spread(1 << v, 1) not in K for v in range(n))
    geo_cs = face_preserving and no_antipodal_edge
    if k is None:
        return SymmetryStatus(cond_i, None, geo_cs, None)
    cond_ii = all(B in faces for B in range(full + 1) if B.bit_count() <= k)
    geo_knn = geo_cs and all(
        _antipode_free_faces_present(K, n, size) for size in range(1, k + 1)
    )
    return SymmetryStatus(cond_i, cond_i and cond_ii, geo_cs, geo_knn)


def _antipode_free_faces_present(K: SimplicialComplex, n: int, size: int) -> bool:
    for vs in combinations(range(n), size):
        for signs in range(1 << size):
            m = 0
            for t, v in enumerate(vs):
                m |= 1 << (2 * v + (signs >> t & 1))
            if m not in K:
                return False
    return True


def antipode_free_sets(n: int, size: int) -> int:
    return comb(n, size) * 2 ** size


def cs_choices(n: int):
    """All selections of one n/2-set from each complementary pair (even n)."""
    if n % 2:
        raise BadParameter("choices exist only for even n")
    full = (1 << n) - 1
    pairs = [(A, full ^ A) for A in range(full + 1) if A.bit_count() == n // 2 and A < full ^ A]
    for pick in range(1 << len(pairs)):
        yield [pair[pick >> t & 1] for t, pair in enumerate(pairs)]


def cs_construct(n: int, middle_choice: Iterable | None = None) -> SimplicialComplex:
    """All sets below n/2 plus one set from each complementary middle pair."""
    if n < 1:
        raise BadParameter("n must be positive")
    full = (1 << n) - 1
    base = {A for A in range(full + 1) if 2 * A.bit_count() < n}
    if n % 2:
        if middle_choice:
            raise InvalidChoice("odd n has no middle level to choose from")
        return as_complex(base, n)
    chosen = set()
    for item in middle_choice or ():
        m = item if isinstance(item, int) else set_to_mask(item)
        if m.bit_count() != n // 2 or m & ~full:
            raise InvalidChoice(f"{mask_to_set(m)} is not an {n // 2}-subset of 1..{n}")
        chosen.add(m)
    for A in range(full + 1):
        if A.bit_count() == n // 2 and ((A in chosen) == ((full ^ A) in chosen)):
            raise InvalidChoice(f"exactly one of {mask_to_set(A)} and its complement must be chosen")
    return as_complex(base | chosen, n)

"""Bier posets of bounded posets and the edge-subdivision description of their order complexes."""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, NamedTuple

from .errors import BoundaryElement, FaceNotPresent, ImproperIdeal, NotGraded
from .poset import Poset, is_proper_ideal, order_complex, rank_and_graded
from .report import BierReport
from .simplicial.complex import SimplicialComplex, stellar_subdivide


class Interval(NamedTuple):
    x: int
    y: int


class _Top:
    __slots__ = ()

    def __repr__(self):
        return "TOP"


TOP = _Top()


class OldVertex(NamedTuple):
    x: int


class SubdivisionVertex(NamedTuple):
    x: int
    y: int


class BierPoset(Poset):
    """Intervals ``[x, y]`` with x in the ideal and y outside, reversed inclusion, plus a top."""

    def __init__(self, base: Poset, ideal: frozenset[int], elements: list, down: list[int], labels: list[str]):
        super().__init__(labels, down, check=False)
        self.base = base
        self.ideal = ideal
        self.elements = tuple(elements)
        self._where = {e: i for i, e in enumerate(self.elements)}

    def index_of(self, e) -> int:
        return self._where[e if e is TOP else Interval(*e)]


def _check_ideal(P: Poset, I: Iterable[int]) -> frozenset[int]:
    I = frozenset(I)
    if not is_proper_ideal(P, I):
        raise ImproperIdeal("need a proper ideal containing the bottom and missing the top")
    return I


def bier_poset(P: Poset, I: Iterable[int]) -> BierPoset:
    I = _check_ideal(P, I)
    outside = [y for y in range(len(P)) if y not in I]
    elements: list = [Interval(x, y) for x in sorted(I) for y in outside if P.leq(x, y)]
    down = []
    for a, (x, y) in enumerate(elements):
        m = 0
        for b, (x2, y2) in enumerate(elements):
            if P.leq(x2, x) and P.leq(y, y2):
                m |= 1 << b
        down.append(m)
    top = len(elements)
    elements.append(TOP)
    down.append((1 << (top + 1)) - 1)
    labels = [f"[{P.labels[x]},{P.labels[y]}]" for x, y in elements[:-1]] + ["top"]
    return BierPoset(P, I, elements, down, labels)


def bier_rank(P: Poset, I: Iterable[int], e) -> int:
    """rank_P(x) + n - rank_P(y) for ``[x, y]``; n for the top."""
    graded, rank = rank_and_graded(P)
    if not graded:
        raise NotGraded("Bier ranks need a graded poset")
    n = P.length
    if e is TOP:
        return n
    x, y = e
    return rank[x] + n - rank[y]


def bier_meet(P: Poset, I: Iterable[int], e1, e2):
    """``[x, y] ^ [x', y'] = [x ^ x', y v y']``; the top is neutral."""
    if e1 is TOP:
        return e2
    if e2 is TOP:
        return e1
    return Interval(P.meet(e1[0], e2[0]), P.join(e1[1], e2[1]))


def identify_vertex(P: Poset, I: Iterable[int], e):
    """Vertex of the subdivided order complex that corresponds to a Bier element."""
    if e is TOP:
        raise BoundaryElement("the top has no vertex")
    x, y = e
    if x == P.bottom and y == P.top:
        raise BoundaryElement("the bottom interval has no vertex")
    if y == P.top:
        return OldVertex(x)
    if x == P.bottom:
        return OldVertex(y)
    return SubdivisionVertex(x, y)


def subdivision_batches(P: Poset, I: frozenset[int]) -> list[list[tuple[int, int]]]:
    """Edge batches E_1 .. E_(n-2), each in lexicographic order."""
    n = P.length
    batches: list[list[tuple[int, int]]] = [[] for _ in range(max(n - 2, 0))]
    for x in sorted(I - {P.bottom}):
        for y in range(len(P)):
            if y in I or y == P.top or not P.lt(x, y):
                continue
            k = P.interval_length(x, y)
            batches[k - 1].append((x, y))
    return batches


def _subdivide_all(gamma: SimplicialComplex, batches, reverse: bool, rep: BierReport | None):
    for k, batch in enumerate(batches, 1):
        if rep is not None:
            clash = None
            faces = _FaceTest(gamma)
            for e1, e2 in combinations(batch, 2):
                if {OldVertex(v) for v in e1 + e2} in faces:
                    clash = (e1, e2)
                    break
            rep.add(f"E_{k} edges pairwise independent", clash is None,
                    "" if clash is None else f"edges {clash[0]} and {clash[1]} span a face")
        for x, y in (reversed(batch) if reverse else batch):
            edge = [OldVertex(x), OldVertex(y)]
            if edge not in _FaceTest(gamma):
                raise FaceNotPresent(f"edge {(x, y)} missing before subdivision")
            gamma = stellar_subdivide(gamma, edge, SubdivisionVertex(x, y))
    return gamma


class _FaceTest:
    """``labels in _FaceTest(K)``: membership by labels, False for unknown labels."""

    def __init__(self, K: SimplicialComplex):
        self.K = K

    def __contains__(self, labels) -> bool:
        labels = list(labels)
        if not all(self.K.has_label(v) for v in labels):
            return False
        return self.K.mask_of(labels) in self.K


def bier_order_complex(B: BierPoset) -> SimplicialComplex:
    """Order complex of the proper part of ``B``, vertices identified as subdivision tags."""
    oc = order_complex(B)
    return oc.relabel({e: identify_vertex(B.base, B.ideal, B.elements[e]) for e in oc.universe})


def verify_subdivision_theorem(P: Poset, I: Iterable[int]) -> BierReport:
    """Subdivide the order complex of ``P`` edge batch by edge batch and compare with Bier(P, I)."""
    I = _check_ideal(P, I)
    rep = BierReport("subdivide-verify")
    base = order_complex(P)
    gamma0 = base.relabel({e: OldVertex(e) for e in base.universe})
    batches = subdivision_batches(P, I)
    rep.values["length"] = P.length
    rep.values["batch_sizes"] = tuple(len(b) for b in batches)
    try:
        forward = _subdivide_all(gamma0, batches, False, rep)
        backward = _subdivide_all(gamma0, batches, True, None)
    except FaceNotPresent as exc:
        rep.add("subdivision edges present", False, str(exc))
        return rep
    target = bier_order_complex(bier_poset(P, I))
    rep.values["f_subdivided"] = forward.f_vector()
    rep.values["f_bier_order_complex"] = target.f_vector()
    rep.add("batch order independence", forward == backward,
            "" if forward == backward else _witness(forward, backward))
    rep.add("subdivided complex equals order complex of Bier(P,I)", forward == target,
            "" if forward == target else _witness(forward, target))
    return rep


def _witness(K1: SimplicialComplex, K2: SimplicialComplex) -> str:
    extra = sorted(map(sorted_repr, K1.key - K2.key))
    missing = sorted(map(sorted_repr, K2.key - K1.key))
    if extra:
        return f"facet {extra[0]} only in the subdivided complex"
    return f"facet {missing[0]} only in the Bier order complex"


def sorted_repr(face) -> str:
    return "{" + ", ".join(sorted(map(repr, face))) + "}"

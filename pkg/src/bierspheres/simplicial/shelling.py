"""Shelling verification and a bounded backtracking shelling search."""

from __future__ import annotations

from typing import NamedTuple, Sequence

from ..errors import NotAPermutation, NotPure
from .complex import SimplicialComplex


class ShellingCheck(NamedTuple):
    valid: bool
    restrictions: tuple[int, ...]  # restriction face (mask) of each step checked
    failed_at: int | None  # 0-based step that broke the condition


def restriction_face(F: int, earlier: Sequence[int]) -> int:
    """Vertices v of F whose opposite ridge ``F - v`` already appeared."""
    size = F.bit_count() - 1
    R = 0
    for G in earlier:
        common = F & G
        if common.bit_count() == size:
            R |= F & ~common
    return R


def _attaches(F: int, R: int, earlier: Sequence[int]) -> bool:
    # every earlier intersection must avoid some vertex of R
    return all(F & G & R != R for G in earlier)


def is_shelling(K: SimplicialComplex, order: Sequence) -> ShellingCheck:
    """Check that ``order`` (facet masks or label collections) shells ``K``.

    Step j is valid when ``F_j`` meets the union of the earlier facets in a
    pure complex of codimension one; equivalently the new faces of ``F_j``
    are exactly those containing its restriction face.
    """
    if not K.is_pure:
        raise NotPure("shellings are checked on pure complexes only")
    masks = [K.face_mask(F) for F in order]
    if sorted(masks) != sorted(K.facets) or len(set(masks)) != len(masks):
        raise NotAPermutation("order is not a permutation of the facets")
    restrictions = []
    for j, F in enumerate(masks):
        earlier = masks[:j]
        R = restriction_face(F, earlier)
        restrictions.append(R)
        if j and not _attaches(F, R, earlier):
            return ShellingCheck(False, tuple(restrictions), j)
    return ShellingCheck(True, tuple(restrictions), None)


def h_from_restrictions(restrictions: Sequence[int], length: int) -> tuple[int, ...]:
    h = [0] * length
    for R in restrictions:
        h[R.bit_count()] += 1
    return tuple(h)


def find_shelling(K: SimplicialComplex, budget: int = 200_000) -> list[int] | None:
    """Depth-first search for a shelling order; None if none found within ``budget``.

    Candidates adjacent to the current ball are tried smallest restriction
    face first, which grows the shelled part like a disc and keeps the
    facet closing a sphere for last.
    """
    if not K.is_pure:
        raise NotPure("shellings are searched on pure complexes only")
    facets = list(K.facets)
    if len(facets) <= 1:
        return facets
    size = facets[0].bit_count() - 1
    adjacency = {F: [G for G in facets if G != F and (F & G).bit_count() == size] for F in facets}
    nodes = 0

    def extend(order: list[int], remaining: set[int], R: dict[int, int]) -> list[int] | None:
        nonlocal nodes
        if not remaining:
            return order
        frontier = sorted((F for F in remaining if R.get(F)), key=lambda F: (R[F].bit_count(), F))
        if not frontier:
            # disconnected pieces never shell for dim >= 1; dim 0 attaches along the empty face
            frontier = sorted(remaining) if size == 0 else []
        for F in frontier:
            nodes += 1
            if nodes > budget:
                return None
            RF = R.get(F, 0) if size else F
            if not _attaches(F, RF, order):
                continue
            order.append(F)
            remaining.discard(F)
            touched = []
            for G in adjacency[F]:
                if G in remaining:
                    touched.append((G, R.get(G, 0)))
                    R[G] = R.get(G, 0) | (G & ~F)
            found = extend(order, remaining, R)
            if found is not None:
                return found
            for G, old in touched:
                R[G] = old
            remaining.add(F)
            order.pop()
            if nodes > budget:
                return None
        return None

    for start in facets:
        result = extend([start], set(facets) - {start}, {G: G & ~start for G in adjacency[start]})
        if result is not None:
            return result
        if nodes > budget:
            return None
    return None


def restriction_labels(K: SimplicialComplex, check: ShellingCheck) -> list[tuple]:
    return [K.labels_of(R) for R in check.restrictions]


__all__ = [
    "ShellingCheck",
    "is_shelling",
    "find_shelling",
    "restriction_face",
    "h_from_restrictions",
    "restriction_labels",
]

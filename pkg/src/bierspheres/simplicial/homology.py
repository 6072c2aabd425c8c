"""Reduced homology over GF(2) and combinatorial sphere checks."""

from __future__ import annotations

from ..errors import VoidComplex
from ..report import BierReport
from .complex import SimplicialComplex, bits
from .shelling import find_shelling, is_shelling


def gf2_rank(rows) -> int:
    """Rank of a GF(2) matrix given as integer bit-rows."""
    pivots: dict[int, int] = {}
    for r in rows:
        while r:
            top = r.bit_length() - 1
            p = pivots.get(top)
            if p is None:
                pivots[top] = r
                break
            r ^= p
    return len(pivots)


def _faces_by_size(K: SimplicialComplex) -> list[list[int]]:
    levels: list[list[int]] = [[] for _ in range(K.dim + 2)]
    for F in K.faces:
        levels[F.bit_count()].append(F)
    for lv in levels:
        lv.sort()
    return levels


def homology_gf2(K: SimplicialComplex) -> tuple[int, ...]:
    """Reduced Betti numbers b~_0 .. b~_dim over GF(2).

    The complex ``{{}}`` has dimension -1 and yields ``()``; its only
    nonzero group sits in degree -1 (see :func:`reduced_betti_minus_one`).
    """
    if K.is_void:
        raise VoidComplex("homology of the void complex")
    levels = _faces_by_size(K)
    ranks = [0] * (len(levels) + 1)  # ranks[s]: boundary from size-s faces to size s-1
    for s in range(1, len(levels)):
        index = {F: i for i, F in enumerate(levels[s - 1])}
        rows = []
        for F in levels[s]:
            row = 0
            for b in bits(F):
                row |= 1 << index[F & ~(1 << b)]
            rows.append(row)
        ranks[s] = gf2_rank(rows)
    # degree k lives on faces of size k+1
    return tuple(len(levels[k + 1]) - ranks[k + 1] - ranks[k + 2] for k in range(len(levels) - 1))


def reduced_betti_minus_one(K: SimplicialComplex) -> int:
    return 1 if K.facets == (0,) else 0


def is_pseudomanifold(K: SimplicialComplex) -> tuple[bool, str]:
    """Pure, and every codimension-one face lies in exactly two facets."""
    if not K.is_pure:
        return False, "not pure"
    d = K.dim
    if d < 0:
        return True, ""
    counts: dict[int, int] = {}
    for F in K.facets:
        for b in bits(F):
            r = F & ~(1 << b)
            counts[r] = counts.get(r, 0) + 1
    for r, c in sorted(counts.items()):
        if c != 2:
            return False, f"ridge {K.labels_of(r)} lies in {c} facets"
    return True, ""


def sphere_checks(K: SimplicialComplex, expected_dim: int, shelling_budget: int = 200_000,
                  shelling: bool = True) -> BierReport:
    """Purity, pseudomanifold, Euler characteristic, GF(2) homology, shelling search."""
    rep = BierReport(f"sphere-checks dim={expected_dim}")
    if K.is_void:
        rep.add("nonvoid", False, "void complex")
        return rep
    d = K.dim
    rep.values["f"] = K.f_vector()
    rep.add("dimension", d == expected_dim, "" if d == expected_dim else f"dim {d}")
    rep.add("pure", K.is_pure, "" if K.is_pure else f"facet sizes {sorted({F.bit_count() for F in K.facets})}")
    ok, why = is_pseudomanifold(K)
    rep.add("pseudomanifold", ok, why)
    chi = K.reduced_euler_characteristic()
    want = (-1) ** expected_dim if expected_dim >= 0 else -1
    rep.add("euler", chi == want, "" if chi == want else f"reduced chi {chi}, expected {want}")
    betti = homology_gf2(K)
    rep.values["betti_gf2"] = betti
    if expected_dim < 0:
        hom_ok = reduced_betti_minus_one(K) == 1
    else:
        hom_ok = betti == tuple([0] * expected_dim + [1])
    rep.add("homology", hom_ok, "" if hom_ok else f"reduced Betti {betti}")
    if shelling and K.is_pure:
        order = find_shelling(K, budget=shelling_budget)
        found = order is not None and is_shelling(K, order).valid
        rep.add("shelling", found, "" if found else f"no shelling within budget {shelling_budget}")
    return rep

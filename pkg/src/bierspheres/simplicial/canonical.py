"""Canonical forms of complexes up to vertex relabelling.

The search is exact: it explores vertex orderings and keeps the
lexicographically smallest sorted facet encoding.  Colour refinement
(vertex colour from the multiset of facet colour profiles) restricts the
orderings to those compatible with isomorphism invariants, and
automorphisms discovered at equal leaves prune sibling branches that lie in
one orbit of the pointwise stabiliser of the current path.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import TooLarge
from .complex import SimplicialComplex, bits


@dataclass(frozen=True, order=True)
class CanonicalForm:
    num_vertices: int
    facets: tuple[int, ...]  # sorted masks over canonical vertex positions


def _normalise(sigs: list) -> list[int]:
    order = {s: i for i, s in enumerate(sorted(set(sigs)))}
    return [order[s] for s in sigs]


class _Search:
    def __init__(self, facets: list[tuple[int, ...]], nv: int, budget: int):
        self.facets = facets
        self.nv = nv
        self.inc: list[list[int]] = [[] for _ in range(nv)]
        for fi, F in enumerate(facets):
            for v in F:
                self.inc[v].append(fi)
        self.budget = budget
        self.nodes = 0
        self.best: tuple | None = None
        self.best_perm: list[int] | None = None
        self.first: tuple | None = None
        self.first_perm: list[int] | None = None
        self.autos: list[list[int]] = []

    def refine(self, colors: list[int]) -> list[int]:
        ncol = len(set(colors))
        while True:
            fcol = [tuple(sorted(colors[v] for v in F)) for F in self.facets]
            sigs = [(colors[v], tuple(sorted(fcol[f] for f in self.inc[v]))) for v in range(self.nv)]
            new = _normalise(sigs)
            k = len(set(new))
            if k == ncol:
                return new
            colors, ncol = new, k

    def encode(self, perm: list[int]) -> tuple:
        return tuple(sorted(sum(1 << perm[v] for v in F) for F in self.facets))

    def leaf(self, colors: list[int]) -> None:
        perm = colors  # discrete colouring: vertex -> position
        enc = self.encode(perm)
        for ref, ref_perm in ((self.first, self.first_perm), (self.best, self.best_perm)):
            if ref is not None and enc == ref:
                inv = [0] * self.nv
                for v, p in enumerate(ref_perm):
                    inv[p] = v
                auto = [inv[perm[v]] for v in range(self.nv)]
                if any(auto[v] != v for v in range(self.nv)):
                    self.autos.append(auto)
                return
        if self.first is None:
            self.first, self.first_perm = enc, list(perm)
        if self.best is None or enc < self.best:
            self.best, self.best_perm = enc, list(perm)

    def orbits_fixing(self, path: list[int]) -> list[int]:
        parent = list(range(self.nv))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a in self.autos:
            if all(a[p] == p for p in path):
                for v in range(self.nv):
                    ra, rb = find(v), find(a[v])
                    if ra != rb:
                        parent[ra] = rb
        return [find(v) for v in range(self.nv)]

    def search(self, colors: list[int], path: list[int]) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise TooLarge(f"canonical search exceeded {self.budget} nodes")
        colors = self.refine(colors)
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        if len(cells) == self.nv:
            self.leaf(colors)
            return
        target_color = min((c for c, vs in cells.items() if len(vs) > 1), key=lambda c: (len(cells[c]), c))
        explored: list[int] = []
        for w in cells[target_color]:
            if explored:
                orb = self.orbits_fixing(path)
                if any(orb[w] == orb[u] for u in explored):
                    continue
            child = [2 * c + 1 for c in colors]
            child[w] -= 1
            self.search(child, path + [w])
            explored.append(w)


def canonicalize(K: SimplicialComplex, max_vertices: int = 16, budget: int = 500_000) -> CanonicalForm:
    """Canonical form, invariant under relabelling of the vertices.

    Only vertices that lie in some face matter; unused universe labels are
    ignored.  Raises :class:`TooLarge` above ``max_vertices`` vertices or
    when the search exceeds ``budget`` nodes.
    """
    if K.is_void:
        return CanonicalForm(0, ())
    verts = bits(K.vertex_mask)
    nv = len(verts)
    if nv > max_vertices:
        raise TooLarge(f"{nv} vertices exceed the canonicalisation limit {max_vertices}")
    local = {b: i for i, b in enumerate(verts)}
    facets = [tuple(local[b] for b in bits(F)) for F in K.facets]
    if nv == 0:
        return CanonicalForm(0, (0,))
    s = _Search(facets, nv, budget)
    start = _normalise([tuple(sorted(len(facets[f]) for f in s.inc[v])) for v in range(nv)])
    s.search(start, [])
    return CanonicalForm(nv, s.best)


def is_isomorphic(K1: SimplicialComplex, K2: SimplicialComplex, **kw) -> bool:
    if K1.is_void or K2.is_void:
        return K1.is_void and K2.is_void
    if K1.num_vertices != K2.num_vertices or K1.f_vector() != K2.f_vector():
        return False
    return canonicalize(K1, **kw) == canonicalize(K2, **kw)

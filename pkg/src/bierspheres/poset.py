"""Finite bounded posets on element indices.

The order is stored as its full closure: ``down[i]`` is the bitmask of all
``j <= i`` and ``up[i]`` of all ``j >= i``.  Labels are opaque strings used
for reporting only.
"""

from __future__ import annotations

import json
from functools import cached_property
from itertools import product as _product
from pathlib import Path
from typing import Iterable, Sequence

from .errors import BadParameter, CyclicCovers, NotALattice, NotBounded, NotGraded
from .simplicial.complex import SimplicialComplex, bits, submasks


class Poset:
    """Immutable bounded poset; build it with :func:`build_poset` or :meth:`from_down_sets`."""

    def __init__(self, labels: Sequence[str], down: Sequence[int], *, check: bool = True):
        self.labels = tuple(str(x) for x in labels)
        self.down = tuple(down)
        m = len(self.down)
        if len(self.labels) != m:
            raise BadParameter("labels and relation differ in size")
        up = [0] * m
        for i, d in enumerate(self.down):
            for j in bits(d):
                up[j] |= 1 << i
        self.up = tuple(up)
        if check:
            self._validate()
        mins = [i for i in range(m) if self.down[i] == 1 << i]
        maxs = [i for i in range(m) if self.up[i] == 1 << i]
        if len(mins) != 1 or len(maxs) != 1:
            raise NotBounded(f"{len(mins)} minimal and {len(maxs)} maximal elements")
        self.bottom, self.top = mins[0], maxs[0]

    def _validate(self) -> None:
        for i, d in enumerate(self.down):
            if not d >> i & 1:
                raise BadParameter(f"relation not reflexive at {i}")
            for j in bits(d):
                if j != i and self.down[j] >> i & 1:
                    raise CyclicCovers(f"elements {i} and {j} lie below each other")
                if self.down[j] & ~d:
                    raise BadParameter(f"relation not transitive at {j} <= {i}")

    @classmethod
    def from_down_sets(cls, labels: Sequence[str], down: Sequence[int]) -> "Poset":
        return cls(labels, down)

    # -- basic queries ------------------------------------------------------
    def __len__(self) -> int:
        return len(self.down)

    def leq(self, i: int, j: int) -> bool:
        return bool(self.down[j] >> i & 1)

    def lt(self, i: int, j: int) -> bool:
        return i != j and self.leq(i, j)

    @cached_property
    def linear_extension(self) -> tuple[int, ...]:
        return tuple(sorted(range(len(self)), key=lambda i: (self.down[i].bit_count(), i)))

    @cached_property
    def covers(self) -> tuple[tuple[int, int], ...]:
        out = []
        for j in range(len(self)):
            for i in bits(self.down[j]):
                if i != j and (self.up[i] & self.down[j]).bit_count() == 2:
                    out.append((i, j))
        return tuple(sorted(out))

    @cached_property
    def upper_covers(self) -> tuple[tuple[int, ...], ...]:
        up: list[list[int]] = [[] for _ in range(len(self))]
        for i, j in self.covers:
            up[i].append(j)
        return tuple(tuple(u) for u in up)

    @cached_property
    def _longest(self) -> tuple[tuple[int, ...], ...]:
        # _longest[x][y]: longest chain length from x to y (-1 if x !<= y)
        m = len(self)
        order = self.linear_extension
        table = []
        for x in range(m):
            best = [-1] * m
            best[x] = 0
            for y in order:
                if best[y] < 0:
                    continue
                for z in self.upper_covers[y]:
                    if best[y] + 1 > best[z]:
                        best[z] = best[y] + 1
            table.append(tuple(best))
        return tuple(table)

    def interval_length(self, x: int, y: int) -> int:
        """Length of a longest chain in ``[x, y]``."""
        ell = self._longest[x][y]
        if ell < 0:
            raise BadParameter(f"{x} is not below {y}")
        return ell

    @property
    def length(self) -> int:
        return self._longest[self.bottom][self.top]

    def interval(self, x: int, y: int) -> tuple["Poset", tuple[int, ...]]:
        """The subposet ``[x, y]`` and the host indices of its elements."""
        members = bits(self.up[x] & self.down[y])
        if not members:
            raise BadParameter(f"{x} is not below {y}")
        pos = {e: k for k, e in enumerate(members)}
        down = [sum(1 << pos[e] for e in bits(self.down[i] & self.up[x])) for i in members]
        return Poset([self.labels[i] for i in members], down, check=False), tuple(members)

    def meet(self, x: int, y: int) -> int:
        common = self.down[x] & self.down[y]
        for c in bits(common):
            if self.down[c] == common:
                return c
        raise NotALattice(f"{self.labels[x]} and {self.labels[y]} have no meet")

    def join(self, x: int, y: int) -> int:
        common = self.up[x] & self.up[y]
        for c in bits(common):
            if self.up[c] == common:
                return c
        raise NotALattice(f"{self.labels[x]} and {self.labels[y]} have no join")

    def is_lattice(self) -> bool:
        try:
            for x in range(len(self)):
                for y in range(x + 1, len(self)):
                    self.meet(x, y)
        except NotALattice:
            return False
        return True

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def mask(self, members: Iterable[int]) -> int:
        m = 0
        for e in members:
            m |= 1 << e
        return m

    def __repr__(self):
        return f"Poset({len(self)} elements, length {self.length})"


def build_poset(labels: Sequence[str], cover_pairs: Iterable[Sequence[int]]) -> Poset:
    """Poset generated by ``i < j`` for each pair; bottom and top are inferred."""
    m = len(labels)
    succ: list[set[int]] = [set() for _ in range(m)]
    indeg = [0] * m
    for pair in cover_pairs:
        i, j = (int(t) for t in pair)
        if not (0 <= i < m and 0 <= j < m):
            raise BadParameter(f"cover pair {(i, j)} out of range")
        if i == j:
            raise CyclicCovers(f"self-loop at {i}")
        if j not in succ[i]:
            succ[i].add(j)
            indeg[j] += 1
    order = [i for i in range(m) if indeg[i] == 0]
    for i in order:
        for j in sorted(succ[i]):
            indeg[j] -= 1
            if indeg[j] == 0:
                order.append(j)
    if len(order) != m:
        raise CyclicCovers("cover relation contains a cycle")
    down = [1 << i for i in range(m)]
    for i in order:
        for j in succ[i]:
            down[j] |= down[i]
    return Poset(labels, down, check=False)


# -- standard constructions -------------------------------------------------


def subset_label(mask: int) -> str:
    return "{" + ",".join(str(b + 1) for b in bits(mask)) + "}"


def boolean_lattice(n: int) -> Poset:
    """Subsets of ``1..n`` by inclusion; element index = subset bitmask."""
    if n < 1:
        raise BadParameter("boolean lattice needs n >= 1")
    if n > 12:
        raise BadParameter("boolean lattice capped at n = 12")
    size = 1 << n
    return Poset([subset_label(s) for s in range(size)], list(_down_boolean(n)), check=False)


def _down_boolean(n: int):
    for s in range(1 << n):
        yield sum(1 << t for t in submasks(s))


def chain(length: int) -> Poset:
    """``0 < 1 < ... < length``."""
    if length < 0:
        raise BadParameter("chain length must be >= 0")
    return Poset([str(i) for i in range(length + 1)], [(1 << (i + 1)) - 1 for i in range(length + 1)], check=False)


def polygon(m: int) -> Poset:
    """Face lattice of an m-gon: bottom, vertices v1..vm, edges e1..em, top."""
    if m < 3:
        raise BadParameter("polygon needs m >= 3")
    labels = ["0"] + [f"v{i}" for i in range(1, m + 1)] + [f"e{i}" for i in range(1, m + 1)] + ["1"]
    covers = [(0, i) for i in range(1, m + 1)]
    for i in range(1, m + 1):
        e = m + i
        covers += [(i, e), (i % m + 1, e), (e, 2 * m + 1)]
    return build_poset(labels, covers)


def product(P: Poset, Q: Poset) -> Poset:
    """Componentwise order on pairs; pair (p, q) has index ``p * len(Q) + q``."""
    nq = len(Q)
    labels, down = [], []
    for p, q in _product(range(len(P)), range(nq)):
        labels.append(f"({P.labels[p]},{Q.labels[q]})")
        down.append(sum(1 << (a * nq + b) for a in bits(P.down[p]) for b in bits(Q.down[q])))
    return Poset(labels, down, check=False)


def opposite(P: Poset) -> Poset:
    return Poset(P.labels, P.up, check=False)


def standard_poset(kind: str, *args) -> Poset:
    builders = {"boolean": boolean_lattice, "polygon": polygon, "product": product,
                "opposite": opposite, "chain": chain}
    if kind not in builders:
        raise BadParameter(f"unknown poset kind {kind!r}")
    return builders[kind](*args)


def face_lattice(K: SimplicialComplex) -> tuple[Poset, list[int]]:
    """Faces of ``K`` by inclusion with an adjoined top; also returns the face masks."""
    faces = sorted(K.faces, key=lambda F: (F.bit_count(), F))
    pos = {F: i for i, F in enumerate(faces)}
    down = [sum(1 << pos[G] for G in submasks(F)) for F in faces]
    top = len(faces)
    down.append((1 << (top + 1)) - 1)
    labels = ["{" + ",".join(map(str, K.labels_of(F))) + "}" for F in faces] + ["top"]
    return Poset(labels, down, check=False), faces


# -- ranks, Eulerian, ideals, order complexes ---------------------------------


def rank_and_graded(P: Poset) -> tuple[bool, tuple[int, ...] | None]:
    """Graded iff each element sits at one depth along every saturated chain."""
    m = len(P)
    lo = [None] * m
    hi = [None] * m
    lo[P.bottom] = hi[P.bottom] = 0
    for y in P.linear_extension:
        if lo[y] is None:
            continue
        for z in P.upper_covers[y]:
            lo[z] = lo[y] + 1 if lo[z] is None else min(lo[z], lo[y] + 1)
            hi[z] = hi[y] + 1 if hi[z] is None else max(hi[z], hi[y] + 1)
    if any(lo[i] != hi[i] for i in range(m)):
        return False, None
    return True, tuple(lo)


def rank_function(P: Poset) -> tuple[int, ...]:
    graded, rank = rank_and_graded(P)
    if not graded:
        raise NotGraded("poset is not graded")
    return rank


def is_eulerian(P: Poset) -> bool:
    """Every interval ``[x, y]`` with ``x < y`` has as many odd- as even-rank elements."""
    rank = rank_function(P)
    odd = sum(1 << i for i, r in enumerate(rank) if r % 2)
    for x in range(len(P)):
        for y in bits(P.up[x]):
            if y == x:
                continue
            iv = P.up[x] & P.down[y]
            if 2 * (iv & odd).bit_count() != iv.bit_count():
                return False
    return True


def rank_counts(P: Poset) -> tuple[int, ...]:
    """Number of elements of each rank (the poset f-vector f_0..f_n)."""
    rank = rank_function(P)
    f = [0] * (P.length + 1)
    for r in rank:
        f[r] += 1
    return tuple(f)


def is_ideal(P: Poset, members: Iterable[int]) -> bool:
    S = P.mask(members)
    return all(P.down[e] & ~S == 0 for e in bits(S))


def is_proper_ideal(P: Poset, members: Iterable[int]) -> bool:
    members = list(members)
    S = P.mask(members)
    return is_ideal(P, members) and bool(S >> P.bottom & 1) and not S >> P.top & 1


def all_proper_ideals(P: Poset) -> list[frozenset[int]]:
    """Every proper ideal of a small poset, as frozensets of indices."""
    proper = [e for e in P.linear_extension if e not in (P.bottom, P.top)]
    out: list[frozenset[int]] = []

    def grow(k: int, S: int) -> None:
        if k == len(proper):
            out.append(frozenset(bits(S)))
            return
        e = proper[k]
        grow(k + 1, S)
        if P.down[e] & ~S & ~(1 << e) == 0:
            grow(k + 1, S | 1 << e)

    if len(proper) > 40:
        raise BadParameter("too many elements to enumerate ideals")
    grow(0, 1 << P.bottom)
    return sorted(out, key=lambda s: (len(s), sorted(s)))


def order_complex(P: Poset) -> SimplicialComplex:
    """Chains of the proper part; vertices are the element indices."""
    proper = [e for e in range(len(P)) if e not in (P.bottom, P.top)]
    pos = {e: k for k, e in enumerate(proper)}
    chains: list[int] = []

    def walk(e: int, acc: int) -> None:
        if e == P.top:
            chains.append(acc)
            return
        for z in P.upper_covers[e]:
            walk(z, acc if z == P.top else acc | 1 << pos[z])

    walk(P.bottom, 0)
    return SimplicialComplex(proper, chains)


# -- file format -------------------------------------------------------------


def poset_from_json(data) -> Poset:
    if not isinstance(data, dict) or "elements" not in data or "covers" not in data:
        raise BadParameter('poset JSON needs "elements" and "covers"')
    return build_poset([str(x) for x in data["elements"]], data["covers"])


def read_poset(path) -> Poset:
    return poset_from_json(json.loads(Path(path).read_text(encoding="utf-8")))


def poset_to_json(P: Poset) -> dict:
    return {"elements": list(P.labels), "covers": [list(c) for c in P.covers]}


def read_ideal(path, P: Poset) -> frozenset[int]:
    """Ideal file: a JSON list of element indices, or ``{"members": [...]}``."""
    data = json.loads(Path(path).read_text(encoding="utf-8"))
    if isinstance(data, dict):
        data = data.get("members")
    if not isinstance(data, list) or not all(isinstance(i, int) and 0 <= i < len(P) for i in data):
        raise BadParameter("ideal file must list element indices of the poset")
    return frozenset(data)

"""Abstract simplicial complexes stored as facet bitmasks.

A complex carries an ordered ``universe`` of vertex labels; a face is an
``int`` whose bit ``i`` is set when ``universe[i]`` belongs to the face.
Only the facets are stored, the full face family is derived on demand.
The universe is capped at 64 labels.
"""

from __future__ import annotations

from functools import cached_property
from itertools import combinations
from pathlib import Path
from typing import Hashable, Iterable, Sequence

from ..errors import (
    BadParameter,
    BAlreadyPresent,
    FaceNotPresent,
    GroundSetMismatch,
    ImproperComplex,
    LabelCollision,
    LinkNotSimplexBoundary,
    TooLarge,
    VertexOutOfUniverse,
    VoidComplex,
)

MAX_UNIVERSE = 64


def bits(mask: int) -> list[int]:
    """Positions of the set bits of ``mask``, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def submasks(mask: int):
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def antichain(masks: Iterable[int]) -> tuple[int, ...]:
    """Drop every mask contained in another one; result is sorted."""
    kept: list[int] = []
    for m in sorted(set(masks), key=lambda m: -m.bit_count()):
        if not any(m & k == m for k in kept):
            kept.append(m)
    return tuple(sorted(kept))


class SimplicialComplex:
    """Downward-closed family of subsets of a labelled vertex universe.

    ``facets == ()`` is the void complex (no faces at all) and
    ``facets == (0,)`` is the complex whose only face is the empty set.
    Instances are immutable; equality compares labelled faces, so two
    complexes with differently ordered universes can still be equal.
    """

    __slots__ = ("universe", "facets", "_index", "__dict__")

    def __init__(self, universe: Iterable[Hashable], facets: Iterable[int] = ()):
        self.universe = tuple(universe)
        if len(self.universe) > MAX_UNIVERSE:
            raise TooLarge(f"universe of {len(self.universe)} labels exceeds {MAX_UNIVERSE}")
        self._index = {lab: i for i, lab in enumerate(self.universe)}
        if len(self._index) != len(self.universe):
            raise LabelCollision("duplicate labels in universe")
        full = (1 << len(self.universe)) - 1
        masks = [int(m) for m in facets]
        for m in masks:
            if m < 0 or m & ~full:
                raise VertexOutOfUniverse(f"face mask {m:#x} outside universe")
        self.facets = antichain(masks)

    # -- label plumbing -------------------------------------------------
    def mask_of(self, labels: Iterable[Hashable]) -> int:
        m = 0
        for lab in labels:
            try:
                m |= 1 << self._index[lab]
            except KeyError:
                raise VertexOutOfUniverse(f"label {lab!r} not in universe") from None
        return m

    def labels_of(self, mask: int) -> tuple:
        return tuple(self.universe[i] for i in bits(mask))

    def facet_labels(self) -> list[tuple]:
        return [self.labels_of(F) for F in self.facets]

    def has_label(self, label: Hashable) -> bool:
        return label in self._index

    # -- structure --------------------------------------------------------
    @property
    def is_void(self) -> bool:
        return not self.facets

    @cached_property
    def faces(self) -> frozenset[int]:
        out: set[int] = set()
        for F in self.facets:
            if F in out:
                continue
            out.update(submasks(F))
        return frozenset(out)

    @cached_property
    def vertex_mask(self) -> int:
        m = 0
        for F in self.facets:
            m |= F
        return m

    @property
    def vertices(self) -> tuple:
        return self.labels_of(self.vertex_mask)

    @property
    def num_vertices(self) -> int:
        return self.vertex_mask.bit_count()

    @property
    def dim(self) -> int:
        if self.is_void:
            raise VoidComplex("the void complex has no dimension")
        return max(F.bit_count() for F in self.facets) - 1

    @property
    def is_pure(self) -> bool:
        return len({F.bit_count() for F in self.facets}) <= 1

    def face_mask(self, face) -> int:
        """Accept a mask or a collection of labels."""
        if isinstance(face, int):
            return face
        return self.mask_of(face)

    def __contains__(self, face) -> bool:
        m = self.face_mask(face)
        return any(m & F == m for F in self.facets)

    def f_vector(self, n: int | None = None) -> tuple[int, ...]:
        """Face counts by cardinality, ``f[0] == 1``; padded to index ``n``."""
        if self.is_void:
            raise VoidComplex("f-vector of the void complex is undefined")
        top = self.dim + 1
        size = top + 1 if n is None else max(n + 1, top + 1)
        f = [0] * size
        for m in self.faces:
            f[m.bit_count()] += 1
        if n is not None and top > n:
            raise BadParameter(f"complex has faces of size {top} > {n}")
        return tuple(f)

    def reduced_euler_characteristic(self) -> int:
        return sum((-1) ** (i - 1) * c for i, c in enumerate(self.f_vector()))

    def link(self, face) -> "SimplicialComplex":
        A = self.face_mask(face)
        if A not in self:
            raise FaceNotPresent(f"{self.labels_of(A)} is not a face")
        return SimplicialComplex(self.universe, [F & ~A for F in self.facets if F & A == A])

    def relabel(self, mapping) -> "SimplicialComplex":
        """New complex on ``[mapping[u] for u in universe]``."""
        return SimplicialComplex([mapping[u] for u in self.universe], self.facets)

    def with_universe(self, universe: Sequence[Hashable]) -> "SimplicialComplex":
        """Same labelled complex re-encoded over a different universe."""
        other = SimplicialComplex(universe)
        return SimplicialComplex(universe, [other.mask_of(self.labels_of(F)) for F in self.facets])

    # -- comparison -------------------------------------------------------
    @cached_property
    def key(self) -> frozenset:
        return frozenset(frozenset(self.labels_of(F)) for F in self.facets)

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        shown = ["{" + ",".join(map(_fmt, self.labels_of(F))) + "}" for F in self.facets[:6]]
        more = ", ..." if len(self.facets) > 6 else ""
        return f"SimplicialComplex([{', '.join(shown)}{more}])"


def _fmt(label) -> str:
    if isinstance(label, tuple) and len(label) == 2 and label[1] in ("-", "+"):
        return f"{label[0]}{label[1]}"
    return str(label)


def complex_from_facets(universe: Iterable[Hashable], facet_list: Iterable[Iterable[Hashable]]) -> SimplicialComplex:
    """Build a complex from facets given as label collections (pruned to an antichain)."""
    K = SimplicialComplex(universe)
    return SimplicialComplex(K.universe, [K.mask_of(F) for F in facet_list])


def ground_complex(n: int, faces: Iterable[Iterable[int]]) -> SimplicialComplex:
    """Complex on the ground set ``1..n`` generated by ``faces``."""
    return complex_from_facets(range(1, n + 1), faces)


def ground_masks(delta: SimplicialComplex, n: int) -> frozenset[int]:
    """All faces of ``delta`` as masks over bits ``v-1`` of the ground set ``1..n``."""
    bit = {}
    for i, lab in enumerate(delta.universe):
        if isinstance(lab, int) and 1 <= lab <= n:
            bit[i] = 1 << (lab - 1)
    for i in bits(delta.vertex_mask):
        if i not in bit:
            raise GroundSetMismatch(f"vertex {delta.universe[i]!r} is not in 1..{n}")
    if all(bit.get(i) == 1 << i for i in range(len(delta.universe))):
        return delta.faces
    out = set()
    for F in delta.faces:
        out.add(sum(bit[i] for i in bits(F)))
    return frozenset(out)


def ground_from_masks(n: int, masks: Iterable[int]) -> SimplicialComplex:
    return SimplicialComplex(range(1, n + 1), masks)


def signed_universe(n: int) -> tuple:
    """Labels ``(v, '-')`` and ``(v, '+')`` for v = 1..n, minus first."""
    return tuple((v, s) for v in range(1, n + 1) for s in "-+")


def spread(mask: int, sign: int) -> int:
    """Move ground-set bit ``v-1`` to signed-universe bit ``2(v-1)+sign``."""
    out = 0
    for b in bits(mask):
        out |= 1 << (2 * b + sign)
    return out


# -- classical constructions ----------------------------------------------


def alexander_dual(delta: SimplicialComplex, n: int) -> SimplicialComplex:
    """``{F : [1,n] - F not in delta}`` on the ground set ``1..n``."""
    faces = ground_masks(delta, n)
    full = (1 << n) - 1
    if not faces or full in faces:
        raise ImproperComplex("Alexander dual needs a nonvoid complex other than the full simplex")
    if n > 24:
        raise TooLarge("ground set too large for the dual")
    dual = [F for F in range(full + 1) if (full ^ F) not in faces]
    return ground_from_masks(n, dual)


def deleted_join(delta: SimplicialComplex, other: SimplicialComplex, n: int) -> SimplicialComplex:
    """Faces ``A- u B+`` with A in ``delta``, B in ``other`` and A, B disjoint."""
    if delta.is_void or other.is_void:
        raise VoidComplex("deleted join of a void complex")
    left = ground_masks(delta, n)
    right = ground_masks(other, n)
    spread_r = {B: spread(B, 1) for B in right}
    faces = [spread(A, 0) | spread_r[B] for A in left for B in right if not A & B]
    return SimplicialComplex(signed_universe(n), faces)


def stellar_subdivide(K: SimplicialComplex, face, new_label: Hashable) -> SimplicialComplex:
    """Stellar subdivision of ``K`` at a nonempty face with apex ``new_label``."""
    F = K.face_mask(face)
    if F == 0:
        raise BadParameter("cannot subdivide the empty face")
    if F not in K:
        raise FaceNotPresent(f"{K.labels_of(F)} is not a face")
    if K.has_label(new_label):
        raise LabelCollision(f"label {new_label!r} already in universe")
    universe = K.universe + (new_label,)
    apex = 1 << len(K.universe)
    new = [H for H in K.facets if H & F != F]
    for H in K.facets:
        if H & F == F:
            new.extend((H & ~(1 << b)) | apex for b in bits(F))
    return SimplicialComplex(universe, new)


def flip_partner(K: SimplicialComplex, face) -> int | None:
    """The simplex B with ``link(face) == Bd(B)``, or None when the link is ``{{}}``.

    Raises :class:`LinkNotSimplexBoundary` when the link has another shape.
    """
    A = K.face_mask(face)
    if A == 0 or A not in K:
        raise FaceNotPresent(f"{K.labels_of(A)} is not a nonempty face")
    link = antichain(F & ~A for F in K.facets if F & A == A)
    if link == (0,):
        return None
    B = 0
    for L in link:
        B |= L
    expected = tuple(sorted(B & ~(1 << b) for b in bits(B)))
    if B.bit_count() < 2 or link != expected:
        raise LinkNotSimplexBoundary(f"link of {K.labels_of(A)} is not the boundary of a simplex")
    return B


def bistellar_flip(K: SimplicialComplex, face, new_vertex: Hashable | None = None) -> SimplicialComplex:
    """Replace ``A * Bd(B)`` by ``Bd(A) * B`` where ``link(A) = Bd(B)``.

    When the link of ``A`` is ``{{}}`` (A is a facet), B is the single fresh
    vertex ``new_vertex`` supplied by the caller.
    """
    A = K.face_mask(face)
    B = flip_partner(K, A)
    universe = K.universe
    if B is None:
        if new_vertex is None:
            raise BadParameter("flip at a facet needs a fresh vertex label")
        if K.has_label(new_vertex):
            idx = K.universe.index(new_vertex)
            if K.vertex_mask >> idx & 1:
                raise BAlreadyPresent(f"vertex {new_vertex!r} is already a face")
            B = 1 << idx
        else:
            universe = universe + (new_vertex,)
            B = 1 << len(K.universe)
    elif B in K:
        raise BAlreadyPresent(f"{K.labels_of(B)} is already a face")
    kept = [F for F in K.facets if F & A != A]
    if A.bit_count() == 1:
        added = [B]
    else:
        added = [(A & ~(1 << a)) | B for a in bits(A)]
    return SimplicialComplex(universe, kept + added)


def flip_index(K: SimplicialComplex, face) -> int:
    """``i`` for the bistellar i-flip at ``face`` (``dim B``)."""
    B = flip_partner(K, face)
    return 0 if B is None else B.bit_count() - 1


def boundary_of_simplex(labels: Sequence[Hashable]) -> SimplicialComplex:
    full = (1 << len(labels)) - 1
    return SimplicialComplex(labels, [full & ~(1 << i) for i in range(len(labels))])


def full_simplex(labels: Sequence[Hashable]) -> SimplicialComplex:
    return SimplicialComplex(labels, [(1 << len(labels)) - 1])


def cycle_complex(m: int) -> SimplicialComplex:
    """The m-gon on vertices ``1..m``."""
    return ground_complex(m, [(i, i % m + 1) for i in range(1, m + 1)])


def k_skeleton_of_simplex(n: int, k: int) -> SimplicialComplex:
    """All subsets of ``1..n`` of size at most ``k``."""
    return ground_complex(n, combinations(range(1, n + 1), k)) if k > 0 else ground_complex(n, [()])


# -- text file format -------------------------------------------------------


def parse_complex(text: str) -> tuple[SimplicialComplex, int]:
    """Parse the facet-per-line format; returns the complex and its ground size."""
    header_n = None
    facets = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.replace(" ", "").startswith("n="):
            try:
                header_n = int(line.split("=", 1)[1])
            except ValueError:
                raise BadParameter(f"line {lineno}: bad header {line!r}") from None
            continue
        if line == ".":
            facets.append(())
            continue
        try:
            face = tuple(int(tok) for tok in line.split())
        except ValueError:
            raise BadParameter(f"line {lineno}: expected integers, got {line!r}") from None
        if any(v < 1 for v in face):
            raise BadParameter(f"line {lineno}: vertices must be positive")
        facets.append(face)
    n = header_n if header_n is not None else max((max(F) for F in facets if F), default=0)
    if any(F and max(F) > n for F in facets):
        raise VertexOutOfUniverse(f"vertex exceeds header n={n}")
    return ground_complex(n, facets), n


def read_complex(path) -> tuple[SimplicialComplex, int]:
    return parse_complex(Path(path).read_text(encoding="utf-8"))


def format_complex(K: SimplicialComplex, n: int | None = None, label_map=None) -> str:
    """Facet-per-line text; labels must be positive ints unless ``label_map`` is given."""
    lines = []
    if n is not None:
        lines.append(f"n={n}")
    rows = []
    for F in K.facets:
        labs = K.labels_of(F)
        if label_map is not None:
            labs = tuple(label_map(x) for x in labs)
        rows.append(tuple(sorted(labs)))
    for row in sorted(rows, key=lambda r: (len(r), r)):
        lines.append(" ".join(map(str, row)) if row else ".")
    return "\n".join(lines) + "\n"

"""Exhaustive and random generation of complexes on 1..n, and isomorphism counts of their Bier spheres.

A family of subsets of ``1..n`` is packed into one integer: bit ``S`` is
set when the subset with mask ``S`` belongs to the family.  Down-sets of
``B_n`` are pairs ``(D0, D1)`` of down-sets of ``B_(n-1)`` with ``D1``
inside ``D0``: ``D0`` holds the sets without ``n``, ``D1`` the sets that
contain ``n`` (with ``n`` removed).
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache
from itertools import combinations, permutations
from math import comb

import numpy as np

from .errors import BadParameter, TooLarge
from .simplicial.canonical import canonicalize
from .sphere import bier_complex, cs_choices, set_to_mask

EXHAUSTIVE_CAP = 6
MODES = ("full", "restricted", "cs")


@lru_cache(maxsize=None)
def _downsets(m: int) -> np.ndarray:
    """All down-sets of ``B_m`` (including the empty family), sorted, as uint64 masks."""
    if m == 0:
        return np.array([0, 1], dtype=np.uint64)
    prev = _downsets(m - 1)
    shift = np.uint64(1 << (m - 1))
    out = []
    for d0 in prev:
        d1 = prev[(prev & ~d0) == 0]
        out.append(d0 | (d1 << shift))
    return np.sort(np.concatenate(out))


def all_family_masks(n: int) -> np.ndarray:
    """Packed masks of every proper complex on ``1..n`` (contains the empty face, misses ``1..n``)."""
    if not 1 <= n <= EXHAUSTIVE_CAP:
        raise TooLarge(f"exhaustive enumeration is capped at n = {EXHAUSTIVE_CAP}")
    d = _downsets(n)
    full_bit = np.uint64(1) << np.uint64((1 << n) - 1)
    return d[(d & np.uint64(1)).astype(bool) & ((d & full_bit) == 0)]


def family_to_faces(mask: int, n: int) -> frozenset[int]:
    mask = int(mask)
    return frozenset(S for S in range(1 << n) if mask >> S & 1)


def faces_to_family(faces) -> int:
    return sum(1 << S for S in faces)


def all_complexes(n: int):
    """Every proper complex on ``1..n`` as a frozenset of face masks, in increasing packed order."""
    for m in all_family_masks(n):
        yield family_to_faces(m, n)


def level_masks(n: int) -> list[int]:
    """``level[i]``: packed mask of all i-subsets of ``1..n``."""
    out = [0] * (n + 1)
    for S in range(1 << n):
        out[S.bit_count()] |= 1 << S
    return out


def family_f_vectors(masks: np.ndarray, n: int) -> np.ndarray:
    """Row ``r`` holds ``f_0 .. f_n`` of family ``masks[r]``."""
    levels = level_masks(n)
    cols = [np.bitwise_count(masks & np.uint64(L)).astype(np.int64) for L in levels]
    return np.stack(cols, axis=1)


_SCAN_LIMIT = 1 << 16  # levels larger than this are sampled, not scanned


def random_complex(n: int, seed, density: float = 0.5) -> frozenset[int]:
    """Downward closure of random generators; a proper subset of size s is drawn with probability density**s.

    The closure can be exponentially large, so big n wants a small density.
    """
    if not 1 <= n <= 32:
        raise BadParameter("n must lie in 1..32")
    if not 0.0 <= density <= 1.0:
        raise BadParameter("density must lie in [0, 1]")
    rng = random.Random(seed)
    gens = []
    for s in range(1, n):
        p = density ** s
        total = comb(n, s)
        if total <= _SCAN_LIMIT:
            for A in combinations(range(n), s):
                if rng.random() < p:
                    gens.append(sum(1 << a for a in A))
            continue
        # too many s-sets to scan: draw how many, then which
        want = int(np.random.default_rng(rng.getrandbits(64)).binomial(total, p))
        picked: set[int] = set()
        while len(picked) < want:
            picked.add(sum(1 << a for a in rng.sample(range(n), s)))
        gens.extend(sorted(picked))
    faces = {0}
    for G in sorted(gens, key=lambda m: -m.bit_count()):
        if G in faces:
            continue
        stack = [G]
        while stack:
            F = stack.pop()
            if F in faces:
                continue
            faces.add(F)
            stack.extend(F & ~(1 << b) for b in range(n) if F >> b & 1)
    return frozenset(faces)


# -- orbits under permutations of the ground set ------------------------------------


def _permuted_position(S: int, perm: tuple[int, ...]) -> int:
    out = 0
    for b, pb in enumerate(perm):
        if S >> b & 1:
            out |= 1 << pb
    return out


def orbit_minima(codes: np.ndarray, positions: list[int], n: int) -> np.ndarray:
    """Smallest image of each code under all permutations of ``1..n``.

    ``codes`` pack a family over ``positions`` (bit j stands for subset
    ``positions[j]``); the permutation action is applied with 8-bit lookup
    tables.
    """
    codes = np.asarray(codes, dtype=np.uint64)
    where = {S: j for j, S in enumerate(positions)}
    nchunks = (len(positions) + 7) // 8
    best = codes.copy()
    for perm in permutations(range(n)):
        target = [where[_permuted_position(S, perm)] for S in positions]
        image = np.zeros_like(codes)
        for c in range(nchunks):
            table = np.zeros(256, dtype=np.uint64)
            for byte in range(256):
                v = 0
                for t in range(8):
                    if byte >> t & 1 and 8 * c + t < len(positions):
                        v |= 1 << target[8 * c + t]
                table[byte] = v
            image |= table[((codes >> np.uint64(8 * c)) & np.uint64(255)).astype(np.intp)]
        np.minimum(best, image, out=best)
    return best


# -- isomorphism counts -----------------------------------------------------------


def mode_family(n: int, mode: str) -> tuple[int, list[int], np.ndarray]:
    """``(fixed, positions, codes)``: each family is ``fixed`` plus the positions selected by a code.

    full: every proper complex; restricted: all sets of size at most
    ``(n-1)//2`` plus any selection of the next level; cs: all sets below
    n/2 plus one set from each complementary pair of n/2-sets (even n).
    """
    if mode == "full":
        if n > 5:
            raise TooLarge("full isomorphism counts are capped at n = 5; use mode 'restricted'")
        return 0, list(range(1 << n)), all_family_masks(n)
    if mode == "restricted":
        if not 1 <= n <= EXHAUSTIVE_CAP:
            raise TooLarge(f"restricted counts are capped at n = {EXHAUSTIVE_CAP}")
        m = (n - 1) // 2
        fixed = sum(1 << S for S in range(1 << n) if S.bit_count() <= m)
        positions = [S for S in range(1 << n) if S.bit_count() == m + 1 and m + 1 < n]
        return fixed, positions, np.arange(1 << len(positions), dtype=np.uint64)
    if mode == "cs":
        if n % 2 or not 2 <= n <= EXHAUSTIVE_CAP:
            raise BadParameter("mode 'cs' needs even n in 2..6")
        fixed = sum(1 << S for S in range(1 << n) if 2 * S.bit_count() < n)
        positions = [S for S in range(1 << n) if 2 * S.bit_count() == n]
        where = {S: j for j, S in enumerate(positions)}
        codes = [sum(1 << where[S] for S in choice) for choice in cs_choices(n)]
        return fixed, positions, np.array(sorted(codes), dtype=np.uint64)
    raise BadParameter(f"unknown mode {mode!r}; expected one of {', '.join(MODES)}")


def _decode(code: int, fixed: int, positions: list[int]) -> int:
    fam = fixed
    for j, S in enumerate(positions):
        if code >> j & 1:
            fam |= 1 << S
    return fam


def _canonical_keys(job) -> set:
    n, families = job
    keys = set()
    for fam in families:
        keys.add(canonicalize(bier_complex(family_to_faces(fam, n), n).complex, max_vertices=2 * n))
    return keys


def bier_isoclass_keys(n: int, mode: str = "full", shards: int = 1, workers: int = 1,
                       orbit_reduce: bool = True) -> set:
    """Canonical forms of the Bier spheres of a family of complexes.

    Relabelling the ground set relabels the Bier sphere, so one member per
    orbit suffices when ``orbit_reduce`` is set.  Shards are interleaved
    slices of the (sorted) work list and may run in separate processes.
    """
    if shards < 1 or workers < 1:
        raise BadParameter("shards and workers must be positive")
    fixed, positions, codes = mode_family(n, mode)
    if orbit_reduce:
        codes = np.unique(orbit_minima(codes, positions, n))
    families = [_decode(int(c), fixed, positions) for c in codes]
    jobs = [(n, families[s::shards]) for s in range(shards)]
    keys: set = set()
    if workers == 1:
        for job in jobs:
            keys |= _canonical_keys(job)
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_canonical_keys, jobs):
                keys |= part
    return keys


def count_bier_isoclasses(n: int, mode: str = "full", shards: int = 1, workers: int = 1,
                          orbit_reduce: bool = True) -> int:
    return len(bier_isoclass_keys(n, mode, shards, workers, orbit_reduce))


def count_orbits(n: int, mode: str) -> int:
    """Number of families in ``mode`` up to permutations of the ground set."""
    _, positions, codes = mode_family(n, mode)
    return len(np.unique(orbit_minima(codes, positions, n)))


def family_from_sets(sets, n: int) -> int:
    """Packed mask of the downward closure of ``sets`` (collections of elements)."""
    faces = {0}
    for A in sets:
        m = set_to_mask(A)
        faces.update(S for S in range(m + 1) if S & ~m == 0)
    return faces_to_family(faces)

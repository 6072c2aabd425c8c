"""f-, h- and g-vectors, plus Kruskal-Katona utilities.

Indexing follows cardinality: ``f[i]`` counts faces with ``i`` vertices, so
``f[0] == 1`` for every nonvoid complex.  For a pure complex whose facets
have ``n - 1`` vertices the h-vector has ``n`` entries ``h[0..n-1]``.
"""

from __future__ import annotations

from math import comb
from typing import Sequence

from ..errors import BadParameter, LengthMismatch, NotAKSequence
from .complex import SimplicialComplex, ground_complex


def f_vector(K: SimplicialComplex, n: int | None = None) -> tuple[int, ...]:
    return K.f_vector(n)


def h_from_f(f: Sequence[int], n: int) -> tuple[int, ...]:
    """h_i = sum_j (-1)^(i+j) C(n-1-j, n-1-i) f_j for 0 <= i <= n-1.

    ``f`` has length ``n`` or ``n + 1``; a trailing entry must be zero.
    """
    f = list(f)
    if len(f) == n + 1:
        if f[n] != 0:
            raise LengthMismatch(f"f[{n}] = {f[n]} must vanish for an (n-2)-dimensional complex")
        f = f[:n]
    if len(f) != n:
        raise LengthMismatch(f"expected {n} or {n + 1} entries, got {len(f)}")
    return tuple(
        sum((-1) ** (i + j) * comb(n - 1 - j, n - 1 - i) * f[j] for j in range(n))
        for i in range(n)
    )


def f_from_h(h: Sequence[int]) -> tuple[int, ...]:
    n = len(h)
    return tuple(sum(comb(n - 1 - j, n - 1 - i) * h[j] for j in range(n)) for i in range(n))


def g_from_h(h: Sequence[int]) -> tuple[int, ...]:
    """g_0 = h_0 and g_i = h_i - h_(i-1) up to floor((n-1)/2)."""
    n = len(h)
    if n == 0:
        raise LengthMismatch("empty h-vector")
    return (h[0],) + tuple(h[i] - h[i - 1] for i in range(1, (n - 1) // 2 + 1))


def g_of_complex(K: SimplicialComplex) -> tuple[int, ...]:
    """g-vector of a pure complex, taking ``n = dim + 2``."""
    n = K.dim + 2
    return g_from_h(h_from_f(K.f_vector(n - 1), n))


def flip_g_change(i: int, d: int) -> tuple[int, ...]:
    """Change of the g-vector of a d-sphere under a bistellar i-flip.

    For ``i <= (d-1)//2`` the entry ``g[i+1]`` grows by one; the reverse
    (``d-i``)-flip gives the mirrored decrease; a middle flip changes nothing.
    """
    if not 0 <= i <= d:
        raise BadParameter(f"flip index {i} outside 0..{d}")
    delta = [0] * ((d + 1) // 2 + 1)
    if i <= (d - 1) // 2:
        delta[i + 1] = 1
    elif d - i <= (d - 1) // 2:
        delta[d - i + 1] = -1
    return tuple(delta)


# -- Kruskal-Katona --------------------------------------------------------


def cascade(m: int, i: int) -> list[tuple[int, int]]:
    """i-binomial representation ``m = C(a_i, i) + C(a_(i-1), i-1) + ...``.

    Returned as ``[(a_i, i), (a_(i-1), i-1), ...]`` with strictly decreasing
    tops; empty for ``m == 0``.
    """
    if m < 0 or i < 1:
        raise BadParameter("cascade needs m >= 0 and i >= 1")
    out = []
    t = i
    while m > 0 and t >= 1:
        a = t
        while comb(a + 1, t) <= m:
            a += 1
        out.append((a, t))
        m -= comb(a, t)
        t -= 1
    return out


def shadow_bound(m: int, i: int) -> int:
    """Largest number of (i+1)-sets whose shadow fits in ``m`` i-sets."""
    return sum(comb(a, t + 1) for a, t in cascade(m, i))


def kk_is_ksequence(seq: Sequence[int]) -> bool:
    """Kruskal-Katona test for ``(1, f_1, f_2, ...)``."""
    seq = list(seq)
    if not seq or seq[0] != 1 or any(x < 0 for x in seq):
        return False
    for i in range(1, len(seq) - 1):
        if seq[i + 1] > shadow_bound(seq[i], i):
            return False
    return True


def colex_unrank(r: int, k: int) -> tuple[int, ...]:
    """The r-th (0-based) k-subset of {1, 2, ...} in colex order."""
    out = []
    while k > 0:
        a = k - 1
        while comb(a + 1, k) <= r:
            a += 1
        out.append(a + 1)
        r -= comb(a, k)
        k -= 1
    return tuple(sorted(out))


def kk_compressed_complex(f_target: Sequence[int], n: int) -> SimplicialComplex:
    """Complex on ``1..n`` made of colex-initial segments of each level."""
    f_target = list(f_target)
    if not kk_is_ksequence(f_target):
        raise NotAKSequence(f"{tuple(f_target)} violates Kruskal-Katona")
    if len(f_target) > 1 and f_target[1] > n:
        raise BadParameter(f"{f_target[1]} vertices do not fit on 1..{n}")
    faces = [()]
    for k, count in enumerate(f_target):
        if k == 0:
            continue
        faces.extend(colex_unrank(r, k) for r in range(count))
    return ground_complex(n, faces)

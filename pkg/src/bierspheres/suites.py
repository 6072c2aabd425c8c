"""Exhaustive verification suites over all complexes on 1..n, used by ``enumerate --suite``."""

from __future__ import annotations

from math import comb

import numpy as np

from .enumeration import all_complexes, all_family_masks, family_f_vectors
from .errors import BadParameter, TooLarge
from .report import BierReport
from .simplicial.canonical import is_isomorphic
from .simplicial.complex import alexander_dual, deleted_join
from .simplicial.homology import sphere_checks
from .simplicial.vectors import g_from_h, h_from_f, kk_is_ksequence
from .sphere import (
    as_complex,
    bier_complex,
    check_partition,
    delta_prime_trace,
    g_bier,
    h_via_restriction,
    h_via_reversed,
    is_acyclic,
    lbc_status,
    level_counts,
    mask_to_set,
    prec_matrix,
    chi,
    symmetry_checks,
    verify_shelling,
)


def describe(faces, n: int) -> str:
    """Short witness text: the maximal faces of Delta."""
    maximal = [F for F in faces if not any(F != G and F & ~G == 0 for G in faces)]
    return "Delta generated by " + (" ".join("{" + ",".join(map(str, mask_to_set(F))) + "}" for F in sorted(maximal)))


class _Tally:
    """First failure per property, plus the number of instances checked."""

    def __init__(self):
        self.first: dict[str, str] = {}
        self.names: list[str] = []

    def check(self, name: str, ok: bool, witness) -> None:
        if name not in self.names:
            self.names.append(name)
        if not ok and name not in self.first:
            self.first[name] = witness() if callable(witness) else witness

    def into(self, rep: BierReport) -> BierReport:
        for name in self.names:
            rep.add(name, name not in self.first, self.first.get(name, ""))
        return rep


def _require(n: int, cap: int) -> None:
    if not 1 <= n <= cap:
        raise TooLarge(f"this suite is exhaustive and capped at n = {cap}")


def suite_g(n: int) -> BierReport:
    _require(n, 5)
    t, count = _Tally(), 0
    for faces in all_complexes(n):
        count += 1
        S = bier_complex(faces, n)
        w = lambda: describe(faces, n)  # noqa: E731
        h_res = h_via_restriction(faces, n)
        h_f = h_from_f(S.complex.f_vector(n - 1), n)
        g = g_bier(faces, n)
        t.check("h from restriction equals h from f", h_res == h_f, w)
        t.check("g from face counts equals g from h", g == g_from_h(h_res), w)
        t.check("Dehn-Sommerville symmetry", h_res == h_res[::-1], w)
        t.check("reversed ground set gives the same h", h_via_reversed(faces, n) == h_res, w)
        t.check("g is a K-sequence", kk_is_ksequence(g), w)
    rep = BierReport(f"suite g n={n}", values={"instances": count})
    return t.into(rep)


def suite_shelling(n: int) -> BierReport:
    _require(n, 5)
    t, count = _Tally(), 0
    for faces in all_complexes(n):
        count += 1
        w = lambda: describe(faces, n)  # noqa: E731
        ok, why = check_partition(faces, n)
        t.check("restriction intervals partition the Bier poset", ok, lambda: f"{describe(faces, n)}: {why}")
        r = verify_shelling(faces, n)
        t.check("chi-lex order shells with matching restrictions", r.ok, w)
        fs = bier_complex(faces, n).facets
        M = prec_matrix(fs)
        t.check("precedence is acyclic", is_acyclic(M), w)
        ii, jj = np.nonzero(M)
        t.check("precedence implies chi-lex", all(chi(fs[i]) < chi(fs[j]) for i, j in zip(ii, jj)), w)
    return t.into(BierReport(f"suite shelling n={n}", values={"instances": count}))


def suite_sphere(n: int) -> BierReport:
    _require(n, 5)
    t, count = _Tally(), 0
    for faces in all_complexes(n):
        count += 1
        S = bier_complex(faces, n)
        r = sphere_checks(S.complex, n - 2, shelling=False)
        t.check("sphere checks", r.ok, lambda: f"{describe(faces, n)}: {r.failed()[0].name}")
        D = as_complex(faces, n)
        dj = deleted_join(D, alexander_dual(D, n), n)
        t.check("equals the deleted join with the dual", dj == S.complex and is_isomorphic(dj, S.complex),
                lambda: describe(faces, n))
    return t.into(BierReport(f"suite sphere n={n}", values={"instances": count}))


def suite_delta_prime(n: int) -> BierReport:
    _require(n, 5)
    t, count = _Tally(), 0
    for faces in all_complexes(n):
        count += 1
        sub, _ = delta_prime_trace(faces, n)
        f, fp = level_counts(faces, n), level_counts(sub, n)
        want = tuple(f[i] - f[n - i] if 2 * i < n else 0 for i in range(n + 1))
        t.check("subcomplex of Delta", sub <= faces, lambda: describe(faces, n))
        t.check("f-vector equals the differences", fp == want, lambda: f"{describe(faces, n)}: {fp} vs {want}")
    return t.into(BierReport(f"suite delta-prime n={n}", values={"instances": count}))


def lbc_equivalence(n: int) -> tuple[int, str]:
    """Vectorised check of g_k = 0 iff the face-count condition, all k; returns (instances, witness)."""
    masks = all_family_masks(n)
    f = family_f_vectors(masks, n)
    for k in range(2, (n - 1) // 2 + 1):
        g_zero = f[:, k] == f[:, n - k]
        cond2 = (f[:, k] == 0) | (f[:, n - k] == comb(n, n - k))
        bad = np.flatnonzero(g_zero != cond2)
        if bad.size:
            return len(masks), f"k={k}, packed family {int(masks[bad[0]]):#x}"
    return len(masks), ""


def suite_lbc(n: int, certificates: bool = True) -> BierReport:
    _require(n, 6)
    rep = BierReport(f"suite lbc n={n}")
    count, witness = lbc_equivalence(n)
    rep.values["instances"] = count
    rep.add("g_k = 0 iff the face-count condition", not witness, witness)
    if certificates and n >= 5:
        masks = all_family_masks(n)
        f = family_f_vectors(masks, n)
        t, issued = _Tally(), 0
        for k in range(2, (n - 1) // 2 + 1):
            for r in np.flatnonzero(f[:, k] == f[:, n - k]):
                faces = frozenset(S for S in range(1 << n) if int(masks[r]) >> S & 1)
                st = lbc_status(faces, n, k)
                issued += 1
                t.check("flip certificates verified", st.certificate is not None and st.report.ok,
                        lambda: f"k={k}, {describe(faces, n)}")
        rep.values["certificates"] = issued
        t.into(rep)
    return rep


def suite_symmetry(n: int) -> BierReport:
    _require(n, 5)
    t, hits = _Tally(), []
    k = (n - 1) // 2
    for faces in all_complexes(n):
        s = symmetry_checks(faces, n, k if k >= 2 else None)
        t.check("complement condition matches the antipodal map", s.centrally_symmetric == s.complex_centrally_symmetric,
                lambda: describe(faces, n))
        if k >= 2:
            t.check("neighbourliness matches the face test", s.k_nearly_neighborly == s.complex_k_nearly_neighborly,
                    lambda: describe(faces, n))
            if s.k_nearly_neighborly:
                hits.append(describe(faces, n))
        elif s.centrally_symmetric:
            hits.append(describe(faces, n))
    rep = BierReport(f"suite symmetry n={n}", values={"instances_found": len(hits), "instances": hits})
    return t.into(rep)


SUITES = {
    "g": suite_g,
    "shelling": suite_shelling,
    "sphere": suite_sphere,
    "delta-prime": suite_delta_prime,
    "lbc": suite_lbc,
    "symmetry": suite_symmetry,
}


def run_suite(name: str, n: int) -> BierReport:
    if name not in SUITES:
        raise BadParameter(f"unknown suite {name!r}; expected one of {', '.join(SUITES)}")
    return SUITES[name](n)

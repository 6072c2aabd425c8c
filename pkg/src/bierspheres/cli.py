"""Command-line front end.

Exit codes: 0 when every check passes, 1 when a mathematical check fails,
2 on usage or input errors.  Reports go to standard output, diagnostics to
standard error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bier_poset import bier_poset, verify_subdivision_theorem
from .enumeration import MODES, bier_isoclass_keys, count_orbits
from .errors import BierError, BadParameter
from .poset import face_lattice, is_eulerian, poset_to_json, read_ideal, read_poset
from .report import BierReport
from .simplicial.complex import (
    SimplicialComplex,
    alexander_dual,
    deleted_join,
    format_complex,
    read_complex,
)
from .simplicial.homology import sphere_checks
from .simplicial.vectors import g_from_h, h_from_f, kk_is_ksequence
from .sphere import (
    MAX_N,
    add_face_flip,
    as_complex,
    as_ideal,
    bier_complex,
    delta_prime_trace,
    format_facet,
    g_bier,
    h_via_restriction,
    label_to_int,
    level_counts,
    mask_to_set,
    realize_ksequence,
    symmetry_checks,
    verify_shelling,
)
from .suites import SUITES, run_suite


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _load_delta(args) -> tuple[frozenset[int], int]:
    K, header_n = read_complex(args.file)
    n = args.n if args.n is not None else header_n
    if n is None or n < 1:
        raise BadParameter("ground size unknown; pass -n")
    if n > MAX_N:
        raise BadParameter(f"n = {n} exceeds the cap {MAX_N}")
    return as_ideal(K, n), n


def _signed_file(K: SimplicialComplex, n: int) -> str:
    return format_complex(K, 2 * n, label_map=label_to_int)


def _commented(rep: BierReport) -> str:
    return "".join((line if line.startswith("#") else "# " + line) + "\n" for line in rep.to_text().splitlines())


def _emit(rep: BierReport, args, body: str | None = None, body_key: str = "complex") -> int:
    if args.json:
        doc = rep.to_dict()
        if body is not None:
            doc[body_key] = body
        print(json.dumps(doc, indent=2))
    elif body is None:
        sys.stdout.write(rep.to_text())
    else:
        sys.stdout.write(_commented(rep) + body)
    return 0 if rep.ok else 1


# -- subcommands --------------------------------------------------------------


def cmd_fvec(args) -> int:
    K, header_n = read_complex(args.file)
    rep = BierReport(f"fvec {args.file}")
    if K.is_void:
        raise BadParameter("the void complex has no f-vector here")
    f = K.f_vector(args.n)
    rep.values["f"] = f
    if K.is_pure:
        m = K.dim + 2
        h = h_from_f(K.f_vector(m - 1), m)
        rep.values["h"] = h
        rep.values["g"] = g_from_h(h)
    return _emit(rep, args)


def cmd_bier(args) -> int:
    faces, n = _load_delta(args)
    S = bier_complex(faces, n)
    rep = BierReport(f"bier n={n}")
    rep.values["facets"] = [format_facet(F) for F in S.facets]
    rep.values["f"] = S.complex.f_vector(n - 1) if n > 1 else S.complex.f_vector()
    rep.values["vertices"] = S.num_vertices
    return _emit(rep, args, _signed_file(S.complex, n))


def cmd_bier_poset(args) -> int:
    P = read_poset(args.poset)
    I = read_ideal(args.ideal, P)
    B = bier_poset(P, I)
    print(json.dumps(poset_to_json(B), indent=2))
    return 0


def cmd_dual(args) -> int:
    faces, n = _load_delta(args)
    D = alexander_dual(as_complex(faces, n), n)
    rep = BierReport(f"dual n={n}", values={"f": level_counts(D.faces, n)})
    return _emit(rep, args, format_complex(D, n))


def cmd_djoin(args) -> int:
    faces, n = _load_delta(args)
    D = as_complex(faces, n)
    J = deleted_join(D, alexander_dual(D, n), n)
    rep = BierReport(f"djoin n={n}", values={"f": J.f_vector()})
    return _emit(rep, args, _signed_file(J, n))


def cmd_shell(args) -> int:
    faces, n = _load_delta(args)
    return _emit(verify_shelling(faces, n), args)


def cmd_gvec(args) -> int:
    faces, n = _load_delta(args)
    S = bier_complex(faces, n)
    rep = BierReport(f"gvec n={n}")
    g = g_bier(faces, n)
    h = h_via_restriction(faces, n)
    rep.values["f_delta"] = level_counts(faces, n)
    rep.values["f"] = S.complex.f_vector(n - 1) if n > 1 else S.complex.f_vector()
    rep.values["h"] = h
    rep.values["g"] = g
    kseq = kk_is_ksequence(g)
    rep.values["K-sequence"] = kseq
    rep.add("g from face counts equals g from h", g == g_from_h(h), f"{g} vs {g_from_h(h)}")
    h_f = h_from_f(S.complex.f_vector(n - 1), n) if n > 1 else (1,)
    rep.add("h from the complex matches restriction counts", h_f == h, f"{h_f} vs {h}")
    rep.add("h is symmetric", h == h[::-1], f"h = {h}")
    rep.add("g is a K-sequence", kseq, f"g = {g}")
    return _emit(rep, args)


def cmd_delta_prime(args) -> int:
    faces, n = _load_delta(args)
    sub, passes = delta_prime_trace(faces, n)
    f, fp = level_counts(faces, n), level_counts(sub, n)
    rep = BierReport(f"delta-prime n={n}")
    rep.values["passes"] = [
        f"C={set(mask_to_set(p.C))} swaps={list(p.pairs)} removed {len(p.removed)}" for p in passes
    ]
    rep.values["f_delta"] = f
    rep.values["f_delta_prime"] = fp
    for i in range(n + 1):
        want = f[i] - f[n - i] if 2 * i < n else 0
        proof = f"f_{i}(Delta') = {fp[i]}, expected " + (
            f"f_{i} - f_{n - i} = {f[i]} - {f[n - i]} = {want}" if 2 * i < n else "0")
        rep.add(f"level {i}", fp[i] == want, proof)
    rep.add("Delta' inside Delta", sub <= faces, "" if sub <= faces else "a face of Delta' is missing from Delta")
    return _emit(rep, args, format_complex(as_complex(sub, n), n))


def cmd_realize(args) -> int:
    try:
        seq = [int(t) for t in args.seq.replace(" ", "").split(",") if t]
    except ValueError:
        raise BadParameter(f"cannot parse {args.seq!r} as integers") from None
    if not seq:
        raise BadParameter("empty sequence")
    n = args.n if args.n is not None else (seq[1] if len(seq) > 1 else 1)
    if not 1 <= n <= MAX_N:
        raise BadParameter(f"n must lie in 1..{MAX_N}")
    D = realize_ksequence(seq, n)
    g = g_bier(D, n)
    padded = tuple(seq) + (0,) * (len(g) - len(seq))
    rep = BierReport(f"realize {','.join(map(str, seq))} n={n}", values={"g": g})
    rep.add("g-vector of the Bier sphere equals the input", g == padded, f"g = {g}")
    return _emit(rep, args, format_complex(D, n))


def cmd_flip(args) -> int:
    faces, n = _load_delta(args)
    try:
        G = [int(t) for t in args.face.split()]
    except ValueError:
        raise BadParameter(f"cannot parse face {args.face!r}") from None
    res = add_face_flip(faces, n, G)
    rep = res.report
    rep.command = f"flip n={n} face {' '.join(map(str, G))}"
    rep.values["flip_face"] = " ".join(f"{v}{s}" for v, s in res.face)
    rep.values["partner"] = " ".join(f"{v}{s}" for v, s in res.partner)
    rep.values["index"] = res.index
    return _emit(rep, args, format_complex(as_complex(res.delta, n), n))


def cmd_subdivide_verify(args) -> int:
    P = read_poset(args.poset)
    I = read_ideal(args.ideal, P)
    return _emit(verify_subdivision_theorem(P, I), args)


def cmd_verify(args) -> int:
    faces, n = _load_delta(args)
    K = bier_complex(faces, n).complex
    rep = sphere_checks(K, n - 2, shelling_budget=args.budget)
    rep.command = f"verify n={n}"
    L, _ = face_lattice(K)
    eul = is_eulerian(L)
    rep.add("face poset is Eulerian", eul, "" if eul else "an interval of the face poset violates the Euler relation")
    return _emit(rep, args)


def cmd_neighborly(args) -> int:
    faces, n = _load_delta(args)
    s = symmetry_checks(faces, n, args.k)
    rep = BierReport(f"neighborly n={n}" + (f" k={args.k}" if args.k is not None else ""))
    rep.values["centrally_symmetric"] = s.centrally_symmetric
    rep.values["k_nearly_neighborly"] = s.k_nearly_neighborly
    rep.add("complement condition matches the antipodal map on the sphere",
            s.centrally_symmetric == s.complex_centrally_symmetric,
            f"combinatorial {s.centrally_symmetric}, on the sphere {s.complex_centrally_symmetric}")
    rep.add("small-face condition matches antipode-free faces",
            s.k_nearly_neighborly == s.complex_k_nearly_neighborly,
            f"combinatorial {s.k_nearly_neighborly}, on the sphere {s.complex_k_nearly_neighborly}")
    return _emit(rep, args)


def cmd_enumerate(args) -> int:
    if args.suite:
        return _emit(run_suite(args.suite, args.n), args)
    rep = BierReport(f"enumerate n={args.n} mode={args.mode}")
    keys = bier_isoclass_keys(args.n, args.mode, shards=args.shards, workers=args.workers)
    rep.values["isoclasses"] = len(keys)
    rep.values["families_up_to_relabelling"] = count_orbits(args.n, args.mode)
    return _emit(rep, args)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="bierspheres", description="Bier spheres and Bier posets: constructions and checks.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def add(name, func, file=True, n_required=True, help=None):
        sp = sub.add_parser(name, help=help)
        if file:
            sp.add_argument("file")
            sp.add_argument("-n", type=int, required=n_required and name != "fvec")
        sp.add_argument("--json", action="store_true", help="emit one JSON document")
        sp.set_defaults(func=func)
        return sp

    add("fvec", cmd_fvec, help="f-, h- and g-vector of a complex file")
    add("bier", cmd_bier, help="facets and 2n-labelled complex of the Bier sphere")
    for name, func, what in (("bier-poset", cmd_bier_poset, "Bier poset as a poset file"),
                             ("subdivide-verify", cmd_subdivide_verify, "edge subdivision check")):
        sp = add(name, func, file=False, help=what)
        sp.add_argument("poset")
        sp.add_argument("ideal")
    add("dual", cmd_dual, help="Alexander dual")
    add("djoin", cmd_djoin, help="deleted join with the Alexander dual")
    add("shell", cmd_shell, help="chi-lex shelling with restriction faces")
    add("gvec", cmd_gvec, help="g-vector by face counts and by h")
    add("delta-prime", cmd_delta_prime, help="subcomplex whose f-vector is the g-vector")
    sp = add("realize", cmd_realize, file=False, help="complex realising a K-sequence")
    sp.add_argument("seq")
    sp.add_argument("-n", type=int)
    sp = add("flip", cmd_flip, help="add a face and check the bistellar flip")
    sp.add_argument("--face", required=True)
    sp = add("verify", cmd_verify, help="sphere checks and Eulerian face poset")
    sp.add_argument("--budget", type=int, default=200_000, help="shelling search node budget")
    sp = add("neighborly", cmd_neighborly, help="central symmetry and near neighbourliness")
    sp.add_argument("-k", type=int)
    sp = add("enumerate", cmd_enumerate, file=False, help="isomorphism counts and exhaustive suites")
    sp.add_argument("-n", type=int, required=True)
    group = sp.add_mutually_exclusive_group()
    group.add_argument("--count-iso", action="store_true", help="count Bier spheres up to isomorphism (default)")
    group.add_argument("--suite", choices=sorted(SUITES))
    sp.add_argument("--mode", choices=MODES, default="full")
    sp.add_argument("--shards", type=int, default=1)
    sp.add_argument("--workers", type=int, default=1)
    return p


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (BierError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())

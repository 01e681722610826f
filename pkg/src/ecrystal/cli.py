"""Command line interface.

One executable with subcommands for the core computations, enumeration of
accepted bipartitions, crystal graph export, and the verification suites.
Partitions cross the boundary as JSON arrays, masses as "p/q" strings.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import abacus, crystal, kleshchev, partitions, paths


class UsageError(Exception):
    pass


def _parse_partition(text: str):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed JSON partition {text!r}: {exc}") from exc
    if not isinstance(data, list) or not all(isinstance(x, int) for x in data):
        raise UsageError(f"partition must be a JSON array of integers: {text!r}")
    try:
        return partitions.check_partition(data)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _parse_word(text: str):
    try:
        return tuple(int(x) for x in text.split(",") if x != "")
    except ValueError as exc:
        raise UsageError(f"malformed residue word {text!r}") from exc


def _check_restricted(lam, e):
    if not partitions.is_e_restricted(lam, e):
        raise UsageError(f"{list(lam)} is not {e}-restricted")


def _emit(obj):
    print(json.dumps(obj, separators=(",", ":")))


def _cmd_unary(args) -> int:
    lam = _parse_partition(args.lam)
    fn = {
        "roof": abacus.roof,
        "base": abacus.base,
        "ceil": paths.ceil,
        "floor": paths.floor,
        "mullineux": paths.mullineux,
    }[args.command]
    _check_restricted(lam, args.e)
    _emit(list(fn(lam, args.m, args.e)))
    return 0


def _cmd_lspath(args) -> int:
    lam = _parse_partition(args.lam)
    _check_restricted(lam, args.e)
    _emit(paths.ls_path(lam, args.m, args.e).to_json_dict())
    return 0


def _cmd_tau(args) -> int:
    lam = _parse_partition(args.lam)
    try:
        _emit(list(kleshchev.tau(lam, args.m, args.e)))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    return 0


def _cmd_abacus(args) -> int:
    lam = _parse_partition(args.lam)
    beta = abacus.to_beta(lam, args.m, args.e)
    if args.show:
        print(abacus.render(beta))
    else:
        _emit({"threshold": beta.s, "beads": list(beta.extras), "charge": beta.charge})
    return 0


def _cmd_kleshchev(args) -> int:
    lam = _parse_partition(args.lam)
    mu = _parse_partition(args.mu)
    try:
        verdict = kleshchev.is_kleshchev_bipartition(lam, mu, args.m, args.e)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    out = {"accepted": verdict.accepted}
    if args.explain:
        base_core = abacus.base(lam, 0, args.e)
        roof_core = abacus.roof(mu, args.m, args.e)
        out["explain"] = {
            "lambda_beta": list(abacus.to_beta(lam, 0, args.e).extras),
            "mu_beta": list(abacus.to_beta(mu, args.m, args.e).extras),
            "base_lambda": list(base_core),
            "roof_mu": list(roof_core),
            "tau_base_lambda": list(kleshchev.tau(base_core, args.m, args.e)),
        }
    _emit(out)
    return 0


def _restricted_pairs(e, n):
    for a in range(n + 1):
        for lam in partitions.partitions_of(a):
            if not partitions.is_e_restricted(lam, e):
                continue
            for b in range(n + 1 - a):
                for mu in partitions.partitions_of(b):
                    if partitions.is_e_restricted(mu, e):
                        yield lam, mu


def _cmd_enumerate(args) -> int:
    out = []
    for lam, mu in _restricted_pairs(args.e, args.n):
        if kleshchev.is_kleshchev_bipartition(lam, mu, args.m, args.e).accepted:
            out.append([list(lam), list(mu)])
    _emit(out)
    return 0


def _cmd_crystal_graph(args) -> int:
    charges = _parse_word(args.charges)
    if not charges or any(not 0 <= c < args.e for c in charges):
        raise UsageError(f"charges must be residues in [0,{args.e}): {args.charges}")
    nodes, edges = crystal.crystal_closure(charges, args.e, args.depth)
    if args.dot:
        with open(args.dot, "w") as handle:
            handle.write(crystal.closure_to_dot(nodes, edges) + "\n")
        print(f"wrote {len(nodes)} nodes, {len(edges)} edges to {args.dot}")
    else:
        _emit(sorted((mp.to_json_dict() for mp in nodes), key=json.dumps))
    return 0


def _cmd_demazure(args) -> int:
    lam = _parse_partition(args.lam)
    _check_restricted(lam, args.e)
    word = _parse_word(args.word)
    test = kleshchev.in_demazure_upper if args.upper else kleshchev.in_demazure_lower
    _emit(test(lam, word, args.m, args.e))
    return 0


def _fail(name, detail) -> int:
    print(json.dumps({"suite": name, "counterexample": detail}))
    return 1


def _verify_main(e, n, rng) -> int:
    for m in range(e):
        members = {
            mp.components for mp in crystal.crystal_closure((0, m), e, n)[0]
        }
        for lam, mu in _restricted_pairs(e, n):
            predicted = kleshchev.is_kleshchev_bipartition(lam, mu, m, e).accepted
            actual = (lam, mu) in members
            if predicted != actual:
                return _fail(
                    "main",
                    {"e": e, "m": m, "lambda": list(lam), "mu": list(mu),
                     "criterion": predicted, "closure": actual},
                )
    return 0


def _cores(e, n):
    for lam in partitions.partitions_up_to(n):
        if crystal.is_e_core(lam, e):
            yield lam


def _verify_tau(e, n, rng) -> int:
    for lam in _cores(e, n):
        for m in range(e):
            try:
                image = kleshchev.tau(lam, m, e)  # compares both forms
            except AssertionError:
                return _fail("tau", {"e": e, "m": m, "core": list(lam)})
            if m >= 1:
                ok = (
                    partitions.first_part(image) == partitions.first_part(lam) + e - m
                    and len(image) == len(lam) + m
                )
                if not ok:
                    return _fail(
                        "tau", {"e": e, "m": m, "core": list(lam), "image": list(image)}
                    )
    return 0


def _verify_demazure(e, n, rng) -> int:
    cores = [(lam, crystal.core_to_coset(lam, 0, e)) for lam in _cores(e, n)]
    m = 0
    for lam, y in cores:
        for mu, w in cores:
            geq = partitions.contains(lam, mu)
            upper = kleshchev.in_demazure_upper(lam, w, m, e)
            lower = kleshchev.in_demazure_lower(mu, y, m, e)
            if not (geq == upper == lower):
                return _fail(
                    "demazure",
                    {"e": e, "y": list(y), "w": list(w),
                     "containment": geq, "upper": upper, "lower": lower},
                )
    words = [tuple(rng.randrange(e) for _ in range(k)) for k in range(5) for _ in range(6)]
    small = [lam for lam in partitions.e_restricted_partitions(min(n, 8), e)]
    for y in words:
        reachable = kleshchev.demazure_monomial_closure(y, 0, e)
        product_core = kleshchev.demazure_product_core(y, 0, e)
        reduced = product_core == crystal.coset_to_core(y, 0, e)
        for lam in small:
            member = lam in reachable
            predicted = partitions.contains(product_core, abacus.roof(lam, 0, e))
            direct = kleshchev.in_demazure_lower(lam, y, 0, e)
            if member != predicted or (reduced and member != direct):
                return _fail(
                    "demazure",
                    {"e": e, "word": list(y), "lambda": list(lam),
                     "monomial": member, "criterion": predicted},
                )
    return 0


def _verify_mullineux(e, n, rng) -> int:
    for lam in partitions.e_restricted_partitions(n, e):
        for m in range(e):
            image = paths.mullineux(lam, m, e)
            if paths.mullineux(image, m, e) != lam:
                return _fail("mullineux", {"e": e, "m": m, "lambda": list(lam)})
            for i in range(e):
                if crystal.eps(lam, (m + i) % e, m, e) != crystal.eps(
                    image, (m - i) % e, m, e
                ):
                    return _fail(
                        "mullineux",
                        {"e": e, "m": m, "i": i, "lambda": list(lam), "kind": "eps"},
                    )
            if paths.ceil(image, m, e) != partitions.conjugate(paths.ceil(lam, m, e)):
                return _fail(
                    "mullineux", {"e": e, "m": m, "lambda": list(lam), "kind": "ceil"}
                )
    return 0


_SUITES = {
    "main": _verify_main,
    "tau": _verify_tau,
    "demazure": _verify_demazure,
    "mullineux": _verify_mullineux,
}


def _cmd_verify(args) -> int:
    rng = random.Random(args.seed)
    code = _SUITES[args.suite](args.e, args.max_n, rng)
    if code == 0:
        print(json.dumps({"suite": args.suite, "status": "ok"}))
    return code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ecrystal",
        description="Crystal combinatorics on e-restricted partitions",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, m_flag=True, lam_flag=True):
        p.add_argument("--e", type=int, required=True, help="number of residues, >= 2")
        if m_flag:
            p.add_argument("--m", type=int, default=0, help="charge residue")
        if lam_flag:
            p.add_argument("--lambda", dest="lam", required=True, help="JSON partition")

    for name in ("roof", "base", "ceil", "floor", "mullineux"):
        common(sub.add_parser(name))
    common(sub.add_parser("lspath"))
    common(sub.add_parser("tau"))
    p = sub.add_parser("abacus")
    common(p)
    p.add_argument("--show", action="store_true", help="text rendering of the runners")
    p = sub.add_parser("kleshchev")
    common(p)
    p.add_argument("--mu", required=True, help="JSON partition at charge m")
    p.add_argument("--explain", action="store_true")
    p = sub.add_parser("enumerate-kleshchev")
    common(p, lam_flag=False)
    p.add_argument("--n", type=int, required=True, help="max total size")
    p = sub.add_parser("crystal-graph")
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--charges", required=True, help="comma-separated residues")
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--dot", help="write DOT to this path")
    p = sub.add_parser("demazure")
    common(p)
    p.add_argument("--word", required=True, help="comma-separated residues, leftmost applied last")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--lower", action="store_true", default=True)
    group.add_argument("--upper", action="store_true")
    p = sub.add_parser("verify")
    p.add_argument("--suite", choices=sorted(_SUITES), required=True)
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    return parser


_DISPATCH = {
    "roof": _cmd_unary,
    "base": _cmd_unary,
    "ceil": _cmd_unary,
    "floor": _cmd_unary,
    "mullineux": _cmd_unary,
    "lspath": _cmd_lspath,
    "tau": _cmd_tau,
    "abacus": _cmd_abacus,
    "kleshchev": _cmd_kleshchev,
    "enumerate-kleshchev": _cmd_enumerate,
    "crystal-graph": _cmd_crystal_graph,
    "demazure": _cmd_demazure,
    "verify": _cmd_verify,
}


def run(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    if getattr(args, "e", 2) < 2:
        print("error: e must be >= 2", file=sys.stderr)
        return 2
    try:
        return _DISPATCH[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()

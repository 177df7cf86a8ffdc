"""Command-line frontend: one subcommand per operation cluster.

Exit codes: 0 success / positive decision, 1 negative decision, 2 input
error, 3 search budget exhausted ("unknown").  Output is deterministic
JSON (sorted keys, schema-versioned) or CSV with 9-significant-digit
floats; randomized subcommands require an explicit --seed.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import covers, genus2, lps, magnus, resfin, selfint, torus
from .perms import Partition, Permutation
from .sl2 import Mat2
from .words import Word, random_reduced_word

SCHEMA = 1


def _fmt(x: float) -> str:
    return format(float(x), ".9g")


def _emit(args, text: str) -> None:
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_json(args, payload: dict) -> None:
    payload = {"schema": SCHEMA, **payload}
    _emit(args, json.dumps(payload, sort_keys=True) + "\n")


def _emit_csv(args, header: str, rows: list[str]) -> None:
    _emit(args, "\n".join([header] + rows) + "\n")


def _mat_json(m: Mat2) -> list[list[str]]:
    return json.loads(m.to_json())


def _parse_classes(text: str) -> list[Partition]:
    return [Partition.parse(chunk) for chunk in text.split(";")]


def _parse_root(text: str) -> torus.TraceTriple:
    x, y, z = (float(v) for v in text.split(","))
    return torus.TraceTriple(x, y, z)


def _word(text: str, gens: str) -> Word:
    return Word(text, gens)


def _cmd_census(args) -> int:
    root = _parse_root(args.root)
    if args.counts_at:
        lengths = [float(v) for v in args.counts_at.split(",")]
        rows = []
        for length in lengths:
            n0, n1p, n1f = torus.count_census(root, length)
            rows.append(f"{_fmt(length)},{n0},{n1p},{n1f}")
        _emit_csv(args, "L,N0,N1_paired,N1_full", rows)
        return 0
    records = torus.one_intersection_census(root, args.cutoff, args.mode)
    rows = [
        f"{_fmt(r.trace)},{_fmt(r.length)},{r.family},{torus.slope_str(r.slope)}"
        for r in records
    ]
    _emit_csv(args, "trace,length,family,slope", rows)
    return 0


def _cmd_mcshane(args) -> int:
    root = _parse_root(args.root)
    records = torus.enumerate_simple(root, args.cutoff)
    total = torus.mcshane_sum(root, args.cutoff, args.form)
    _emit_json(
        args,
        {
            "cutoff": args.cutoff,
            "form": args.form,
            "partial_sum": float(_fmt(total)),
            "terms": len(records),
        },
    )
    return 0


def _cmd_mc2(args) -> int:
    root = _parse_root(args.root)
    terms = 2 * len(torus.enumerate_simple(root, args.cutoff / 3.0))
    total = torus.mc2_sum(root, args.cutoff)
    _emit_json(
        args,
        {"cutoff": args.cutoff, "partial_sum": float(_fmt(total)), "terms": terms},
    )
    return 0


def _cmd_selfint(args) -> int:
    w = _word(args.word, "ab")
    _emit_json(args, {"word": w.letters, "self_intersection": selfint.self_intersection(w)})
    return 0


def _cmd_extend(args) -> int:
    spec = covers.CoverSpec(args.genus, tuple(_parse_classes(args.classes)))
    decision = covers.extends_cover(spec, transitive=args.transitive)
    payload = {"extends": decision.extends, "reason": decision.reason}
    if decision.extends and decision.boundaries is not None:
        payload["witness"] = {
            "handles": [[str(a), str(b)] for a, b in decision.handles],
            "boundaries": [str(g) for g in decision.boundaries],
        }
    _emit_json(args, payload)
    return 0 if decision.extends else 1


def _cmd_regular_extend(args) -> int:
    spec = covers.CoverSpec(args.genus, tuple(_parse_classes(args.classes)))
    decision = covers.regular_extends(spec, budget=args.budget)
    payload = {"status": decision.status}
    if decision.witness is not None:
        payload["witness"] = [str(g) for g in decision.witness]
    _emit_json(args, payload)
    return {"extends": 0, "does-not-extend": 1, "unknown": 3}[decision.status]


def _cmd_frobenius(args) -> int:
    classes = _parse_classes(args.classes)
    from .perms import frobenius_count

    _emit_json(
        args,
        {"classes": [str(c) for c in classes], "count": str(frobenius_count(classes))},
    )
    return 0


def _cmd_twocycles(args) -> int:
    sigma = Permutation.parse(args.perm, args.degree)
    c1, c2 = covers.two_n_cycles(sigma)
    alpha, beta = covers.commutator_witness(sigma)
    _emit_json(
        args,
        {
            "sigma": str(sigma),
            "c1": str(c1),
            "c2": str(c2),
            "alpha": str(alpha),
            "beta": str(beta),
        },
    )
    return 0


def _cmd_stripcover(args) -> int:
    sigma = Permutation.parse(args.sigma, args.degree)
    tau = Permutation.parse(args.tau, args.degree)
    cover = covers.strip_cover(sigma, tau)
    _emit_json(
        args,
        {
            "degree": cover.degree,
            "boundary_monodromy": str(cover.boundary),
            "boundary_components": cover.boundary_components,
            "cover_genus": cover.cover_genus,
        },
    )
    return 0


def _cmd_stallings(args) -> int:
    gens = "".join(sorted({ch.lower() for ch in args.word}))
    w = _word(args.word, gens)
    rep = covers.stallings_excluding_subgroup(w)
    _emit_json(
        args,
        {
            "word": w.letters,
            "degree": rep.degree,
            "assignment": {g: str(p) for g, p in sorted(rep.assignment.items())},
        },
    )
    return 0


def _cmd_prime(args) -> int:
    if args.scatter:
        if args.seed is None:
            raise ValueError("--seed is required for --scatter")
        rng = random.Random(args.seed)
        rows = []
        for _ in range(args.samples):
            w = random_reduced_word(rng, args.maxlen)
            witness = resfin.smallest_excluding_prime(w)
            rows.append(f"{witness.word_length},{witness.prime}")
        _emit_csv(args, "length,prime", rows)
        return 0
    w = _word(args.word, "ab")
    witness = resfin.smallest_excluding_prime(w)
    _emit_json(
        args,
        {
            "word": w.letters,
            "prime": witness.prime,
            "matrix_mod_p": _mat_json(witness.image),
        },
    )
    return 0


def _cmd_depth(args) -> int:
    w = _word(args.word, "ab")
    depth = magnus.lcs_depth(w, args.max_k)
    _emit_json(args, {"word": w.letters, "depth": depth if depth is not None else "deeper"})
    return 0


def _cmd_witness(args) -> int:
    w = _word(args.word, "ab")
    k = args.k if args.k is not None else magnus.lcs_depth(w, args.max_k)
    if k is None:
        raise ValueError(f"depth exceeds --max-k {args.max_k}; pass --k explicitly")
    witness = magnus.unipotent_witness(w, k)
    _emit_json(
        args,
        {
            "word": w.letters,
            "depth": witness.depth,
            "modulus": witness.modulus,
            "monomial": witness.monomial,
            "coefficient": str(witness.coefficient),
            "image_mod_m": {m: c for m, c in witness.image_mod_m.coeffs},
            "image_order": witness.image_order,
            "ambient_index": str(witness.ambient_index),
        },
    )
    return 0


def _cmd_expectedprime(args) -> int:
    value = resfin.expected_min_prime(args.terms)
    _emit_json(args, {"terms": args.terms, "value": float(_fmt(value))})
    return 0


def _cmd_avgindex(args) -> int:
    result = resfin.average_index_simulation(args.rank, args.radius, args.samples, args.seed)
    _emit_json(
        args,
        {
            "mean": float(_fmt(result.mean)),
            "samples_used": result.samples_used,
            "excluded_zero_abelianization": result.excluded_zero_abelianization,
            "seed": result.seed,
        },
    )
    return 0


def _cmd_lpsgirth(args) -> int:
    result = lps.lps_girth_check(args.p, args.q)
    _emit_json(
        args,
        {
            "p": result.p,
            "q": result.q,
            "generator_count": result.generator_count,
            "group_order": result.group_order,
            "psl_order": result.psl_order,
            "girth": result.girth,
            "bound": float(_fmt(result.bound)),
            "bound_ceil": result.bound_ceil,
            "passed": result.passed,
        },
    )
    return 0 if result.passed else 1


def _cmd_surface_certify(args) -> int:
    w = _word(args.word, "abcd")
    cert = genus2.certify_nontrivial(w)
    payload = {"word": w.letters, "verdict": cert.verdict}
    if cert.nontrivial:
        payload["witness_free_word"] = cert.witness.letters
        payload["witness_prime"] = cert.prime_witness.prime
        payload["witness_matrix_mod_p"] = _mat_json(cert.prime_witness.image)
    _emit_json(args, payload)
    return 0 if cert.nontrivial else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fig8")
    parser.add_argument("--output", help="write the artifact to this path instead of stdout")
    parser.add_argument("--threads", type=int, default=1, help="worker hint; output is identical")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("census", help="one-double-point geodesic census (CSV)")
    p.add_argument("--cutoff", type=float, default=4.5, help="length cutoff")
    p.add_argument("--mode", choices=["paired", "full"], default="paired")
    p.add_argument("--root", default="3,3,3")
    p.add_argument("--counts-at", help="comma-separated L values: emit (L,N0,N1p,N1f) CSV")
    p.set_defaults(func=_cmd_census)

    p = sub.add_parser("mcshane", help="partial McShane sum over simple geodesics")
    p.add_argument("--cutoff", type=float, required=True, help="trace cutoff")
    p.add_argument("--form", choices=["trace", "length"], default="trace")
    p.add_argument("--root", default="3,3,3")
    p.set_defaults(func=_cmd_mcshane)

    p = sub.add_parser("mc2", help="partial self-intersection identity sum")
    p.add_argument("--cutoff", type=float, required=True, help="trace cutoff")
    p.add_argument("--root", default="3,3,3")
    p.set_defaults(func=_cmd_mc2)

    p = sub.add_parser("selfint", help="self-intersection number on the modular torus")
    p.add_argument("--word", required=True)
    p.set_defaults(func=_cmd_selfint)

    p = sub.add_parser("extend", help="does the boundary covering extend?")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--classes", required=True, help='semicolon-separated partitions, e.g. "2,1;3"')
    p.add_argument("--transitive", action="store_true")
    p.set_defaults(func=_cmd_extend)

    p = sub.add_parser("regular-extend", help="regular-cover extension decision")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--classes", required=True)
    p.add_argument("--budget", type=int, default=8)
    p.set_defaults(func=_cmd_regular_extend)

    p = sub.add_parser("frobenius", help="exact count of identity-product class tuples")
    p.add_argument("--classes", required=True)
    p.set_defaults(func=_cmd_frobenius)

    p = sub.add_parser("twocycles", help="two-n-cycles and commutator factorization")
    p.add_argument("--perm", required=True, help='cycle notation, e.g. "(1 2 3)"')
    p.add_argument("--degree", type=int, required=True)
    p.set_defaults(func=_cmd_twocycles)

    p = sub.add_parser("stripcover", help="strip cover of the once-punctured torus")
    p.add_argument("--sigma", required=True)
    p.add_argument("--tau", required=True)
    p.add_argument("--degree", type=int, required=True)
    p.set_defaults(func=_cmd_stripcover)

    p = sub.add_parser("stallings", help="excluding subgroup by line completion")
    p.add_argument("--word", required=True)
    p.set_defaults(func=_cmd_stallings)

    p = sub.add_parser("prime", help="smallest excluding prime of a free word")
    p.add_argument("--word")
    p.add_argument("--scatter", action="store_true", help="emit (length,prime) CSV for random words")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--maxlen", type=int, default=300)
    p.add_argument("--seed", type=int)
    p.set_defaults(func=_cmd_prime)

    p = sub.add_parser("depth", help="lower-central-series depth via Magnus expansion")
    p.add_argument("--word", required=True)
    p.add_argument("--max-k", type=int, default=8)
    p.set_defaults(func=_cmd_depth)

    p = sub.add_parser("witness", help="unipotent finite-quotient witness")
    p.add_argument("--word", required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--max-k", type=int, default=8)
    p.set_defaults(func=_cmd_witness)

    p = sub.add_parser("expectedprime", help="expected-smallest-prime partial sum")
    p.add_argument("--terms", type=int, required=True)
    p.set_defaults(func=_cmd_expectedprime)

    p = sub.add_parser("avgindex", help="average abelianized excluding prime (simulation)")
    p.add_argument("--rank", type=int, default=2)
    p.add_argument("--radius", type=int, default=20)
    p.add_argument("--samples", type=int, default=10000)
    p.add_argument("--seed", type=int, required=True)
    p.set_defaults(func=_cmd_avgindex)

    p = sub.add_parser("lpsgirth", help="LPS Cayley graph girth vs bound")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.set_defaults(func=_cmd_lpsgirth)

    p = sub.add_parser("surface-certify", help="genus-2 nontriviality certificate")
    p.add_argument("--word", required=True)
    p.set_defaults(func=_cmd_surface_certify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "prime" and not args.scatter and args.word is None:
        parser.error("prime requires --word unless --scatter is given")
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

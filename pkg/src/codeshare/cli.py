"""Command-line front end: ``codeshare <noun> <verb> ...``.

Exit status: 0 success, 1 a mathematical check failed, 2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import access, codes, construction, corpus, scheme
from .access import AccessStructure, BlockPartition
from .codes import LinearCode
from .construction import VectorSpaceConstruction
from .galois import FieldSpec, field_make


class InputError(Exception):
    pass


def _load(path: str) -> dict:
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from None


def _dumps(obj: dict) -> str:
    """One top-level key per line, values compact; key order is preserved."""
    body = ",\n".join(f"  {json.dumps(k)}: {json.dumps(v, separators=(', ', ': '))}" for k, v in obj.items())
    return "{\n" + body + "\n}\n"


def _emit(obj: dict, output: str | None) -> None:
    text = _dumps(obj)
    if output:
        Path(output).write_text(text, encoding="utf-8")
        print(f"wrote {output}")
    else:
        sys.stdout.write(text)


def _int_list(text: str | None) -> list[int]:
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise InputError(f"expected a comma-separated list of integers, got {text!r}") from None


def _partition(args, sizes) -> BlockPartition | None:
    blocks = _int_list(args.blocks)
    if not blocks:
        return None
    part = BlockPartition(tuple(blocks))
    if part.sizes != tuple(sizes):
        raise InputError(f"--blocks {part.sizes} does not match component sizes {tuple(sizes)}")
    return part


def _fmt(s) -> str:
    return "{" + ",".join(map(str, s)) + "}"


# -- handlers -----------------------------------------------------------------------

def cmd_field_new(args) -> int:
    _emit(field_make(args.p, args.m).to_json(), args.output)
    return 0


def cmd_code_minimal(args) -> int:
    C = LinearCode.from_json(_load(args.code))
    sups = codes.minimal_supports(C)
    _emit({"n": C.n, "minimal": [list(s) for s in sups]}, args.output)
    return 0


def cmd_code_dual(args) -> int:
    _emit(codes.dual_code(LinearCode.from_json(_load(args.code))).to_json(), args.output)
    return 0


def cmd_code_rs(args) -> int:
    field = FieldSpec.from_json(_load(args.field))
    points = _int_list(args.points) or None
    _emit(codes.reed_solomon(args.n, args.k, field, points).to_json(), args.output)
    return 0


def cmd_structure_threshold(args) -> int:
    _emit(access.threshold(args.t, args.n).to_json(), args.output)
    return 0


def cmd_structure_compose(args) -> int:
    outer = AccessStructure.from_json(_load(args.outer))
    parts = [AccessStructure.from_json(_load(p)) for p in args.parts]
    part = _partition(args, [g.n for g in parts])
    _emit(access.compose(outer, parts, part, args.max_subsets).to_json(), args.output)
    return 0


def cmd_structure_dual(args) -> int:
    g = AccessStructure.from_json(_load(args.structure))
    _emit(access.dual_structure(g, args.max_subsets).to_json(), args.output)
    return 0


def cmd_structure_of_code(args) -> int:
    _emit(access.structure_of_code(LinearCode.from_json(_load(args.code))).to_json(), args.output)
    return 0


def cmd_construct_normalize(args) -> int:
    res = construction.sum_normalize(LinearCode.from_json(_load(args.code)))
    _emit(res.code.to_json(), args.output)
    if args.witnesses:
        Path(args.witnesses).write_text(_dumps(res.witnesses.to_json()), encoding="utf-8")
        print(f"wrote {args.witnesses}")
    return 0


def cmd_construct_compose(args) -> int:
    phi0 = VectorSpaceConstruction.from_json(_load(args.outer))
    cs = [LinearCode.from_json(_load(p)) for p in args.codes]
    part = _partition(args, [c.n for c in cs])
    _emit(construction.compose_construction(phi0, cs, part).to_json(), args.output)
    return 0


def cmd_construct_code(args) -> int:
    phi = construction.code_construction(LinearCode.from_json(_load(args.code)))
    _emit(phi.to_json(), args.output)
    return 0


def cmd_construct_threshold(args) -> int:
    field = FieldSpec.from_json(_load(args.field))
    _emit(construction.threshold_construction(args.t, args.n, field).to_json(), args.output)
    return 0


def cmd_construct_verify(args) -> int:
    phi = VectorSpaceConstruction.from_json(_load(args.construction))
    g = AccessStructure.from_json(_load(args.structure))
    v = construction.realizes(phi, g, args.max_subsets)
    if v.ok:
        print(f"realizes: true ({v.scanned} subsets scanned)")
        return 0
    print(f"realizes: false; counterexample {_fmt(v.counterexample)} is {v.direction}")
    return 1


def cmd_share_deal(args) -> int:
    phi = VectorSpaceConstruction.from_json(_load(args.construction))
    bundle = scheme.deal(phi, args.secret, args.seed)
    _emit(bundle.to_json(), args.output)
    return 0


def cmd_share_reconstruct(args) -> int:
    phi = VectorSpaceConstruction.from_json(_load(args.construction))
    bundle = scheme.ShareBundle.from_json(_load(args.shares))
    if bundle.construction_digest != scheme.construction_digest(phi):
        raise InputError("share file was dealt for a different construction")
    participants = _int_list(args.participants) or sorted(bundle.shares)
    try:
        secret = scheme.reconstruct(phi, participants, bundle.shares)
    except scheme.UnqualifiedSetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(secret)
    return 0


def cmd_audit_perfect(args) -> int:
    phi = VectorSpaceConstruction.from_json(_load(args.construction))
    A = _int_list(args.participants)
    if any(not 1 <= j <= phi.n for j in A):
        raise InputError(f"participants must lie in 1..{phi.n}")
    report = scheme.perfectness_audit(phi, A)
    expected = "DETERMINED" if phi.reaches_target(A) else "PERFECT"
    print(f"{_fmt(report.participants)}: {report.verdict} ({len(report.buckets)} buckets, expected {expected})")
    if args.output:
        table = [
            {"shares": list(k), "secrets": {str(s): c for s, c in sorted(v.items())}}
            for k, v in sorted(report.buckets.items())
        ]
        _emit({"participants": list(report.participants), "verdict": report.verdict, "buckets": table}, args.output)
    return 0 if report.verdict == expected else 1


def cmd_probe(args) -> int:
    outer = AccessStructure.from_json(_load(args.outer))
    cs = [LinearCode.from_json(_load(p)) for p in args.codes]
    part = _partition(args, [c.n for c in cs])
    rep = access.probe_propositions(outer, cs, part, args.max_subsets)
    status = 0
    for name, v in (("minimal-sets", rep.minimal_sets), ("duality", rep.duality)):
        line = f"{name}: {v.label}"
        if v.counterexample is not None:
            line += f", counterexample {_fmt(v.counterexample)}"
        if v.note:
            line += f" ({v.note})"
        print(line)
        if v.equal is False:
            status = 1
    return status


def cmd_corpus_run(args) -> int:
    only = _int_list(args.suites) or None
    if only and any(i not in corpus.SUITES for i in only):
        raise InputError(f"suites are numbered {min(corpus.SUITES)}..{max(corpus.SUITES)}")
    results = corpus.run_all(only)
    for r in results:
        print(r.line)
    ok = all(r.passed and r.elapsed < r.limit for r in results)
    print(f"{sum(r.passed for r in results)}/{len(results)} suites passed")
    return 0 if ok else 1


# -- parser ------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="codeshare", description="Secret sharing schemes from linear codes.")
    nouns = parser.add_subparsers(dest="noun", required=True)

    def verb(group, name, func, help_text):
        sp = group.add_parser(name, help=help_text)
        sp.set_defaults(func=func)
        return sp

    def out(sp):
        sp.add_argument("-o", "--output", help="write JSON here instead of stdout")

    def bound(sp):
        sp.add_argument("--max-subsets", type=int, default=None, help="override the subset scan bound")

    g = nouns.add_parser("field").add_subparsers(dest="verb", required=True)
    sp = verb(g, "new", cmd_field_new, "field with the smallest irreducible modulus")
    sp.add_argument("p", type=int)
    sp.add_argument("m", type=int, nargs="?", default=1)
    out(sp)

    g = nouns.add_parser("code").add_subparsers(dest="verb", required=True)
    sp = verb(g, "minimal-supports", cmd_code_minimal, "supports of minimal codewords")
    sp.add_argument("code")
    out(sp)
    sp = verb(g, "dual", cmd_code_dual, "dual code")
    sp.add_argument("code")
    out(sp)
    sp = verb(g, "rs", cmd_code_rs, "Reed-Solomon code")
    sp.add_argument("field")
    sp.add_argument("n", type=int)
    sp.add_argument("k", type=int)
    sp.add_argument("--points", help="comma-separated evaluation point encodings")
    out(sp)

    g = nouns.add_parser("structure").add_subparsers(dest="verb", required=True)
    sp = verb(g, "threshold", cmd_structure_threshold, "(t, n) threshold structure")
    sp.add_argument("t", type=int)
    sp.add_argument("n", type=int)
    out(sp)
    sp = verb(g, "compose", cmd_structure_compose, "composite structure")
    sp.add_argument("outer")
    sp.add_argument("parts", nargs="+")
    sp.add_argument("--blocks")
    out(sp)
    bound(sp)
    sp = verb(g, "dual", cmd_structure_dual, "dual structure")
    sp.add_argument("structure")
    out(sp)
    bound(sp)
    sp = verb(g, "of-code", cmd_structure_of_code, "structure generated by codeword supports")
    sp.add_argument("code")
    out(sp)

    g = nouns.add_parser("construct").add_subparsers(dest="verb", required=True)
    sp = verb(g, "normalize", cmd_construct_normalize, "sum-normalize a code")
    sp.add_argument("code")
    sp.add_argument("--witnesses", help="also write the witness table here")
    out(sp)
    sp = verb(g, "compose", cmd_construct_compose, "composite construction")
    sp.add_argument("outer")
    sp.add_argument("codes", nargs="+")
    sp.add_argument("--blocks")
    out(sp)
    sp = verb(g, "code", cmd_construct_code, "construction for a code structure")
    sp.add_argument("code")
    out(sp)
    sp = verb(g, "threshold", cmd_construct_threshold, "Vandermonde threshold construction")
    sp.add_argument("t", type=int)
    sp.add_argument("n", type=int)
    sp.add_argument("field")
    out(sp)
    sp = verb(g, "verify", cmd_construct_verify, "check a construction against a structure")
    sp.add_argument("construction")
    sp.add_argument("structure")
    bound(sp)

    g = nouns.add_parser("share").add_subparsers(dest="verb", required=True)
    sp = verb(g, "deal", cmd_share_deal, "deal shares of a secret")
    sp.add_argument("construction")
    sp.add_argument("--secret", type=int, required=True)
    sp.add_argument("--seed", type=int, required=True)
    out(sp)
    sp = verb(g, "reconstruct", cmd_share_reconstruct, "recover the secret")
    sp.add_argument("construction")
    sp.add_argument("shares")
    sp.add_argument("--participants")

    g = nouns.add_parser("audit").add_subparsers(dest="verb", required=True)
    sp = verb(g, "perfect", cmd_audit_perfect, "exhaustive perfectness audit of a coalition")
    sp.add_argument("construction")
    sp.add_argument("--participants")
    out(sp)

    g = nouns.add_parser("probe").add_subparsers(dest="verb", required=True)
    sp = verb(g, "propositions", cmd_probe, "test the minimal-sets and duality identities")
    sp.add_argument("outer")
    sp.add_argument("codes", nargs="+")
    sp.add_argument("--blocks")
    bound(sp)

    g = nouns.add_parser("corpus").add_subparsers(dest="verb", required=True)
    sp = verb(g, "run", cmd_corpus_run, "run the verification suites")
    sp.add_argument("--suites", help="comma-separated suite numbers (default: all)")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args)
    except (InputError, ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()

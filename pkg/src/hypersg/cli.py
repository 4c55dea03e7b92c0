"""Command-line entry point: ``hsg <verb> ...``.

Exit codes: 0 success/true, 1 property false or nothing found,
2 bad input, 3 search budget exhausted.  Every report ends with a
``result: <token>`` line.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import constructions as C
from .clifford import (
    NotCliffordInverse,
    embed_clifford,
    read_certificate,
    verify_certificate,
    write_certificate,
)
from .hyperspace import classify_subset, power_semigroup
from .library import e3
from .search import FOUND, NONE_BUDGET, SearchBudget, find_embedding
from .semigroup import (
    SemigroupError,
    class_flags,
    class_h_obstructions,
    idempotent_poset,
    parse_semigroup,
    parse_subset_text,
    serialize,
)

EXIT_OK, EXIT_FALSE, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


class Report:
    def __init__(self, out):
        self.out = out

    def line(self, text=""):
        self.out.write(text + "\n")


def _load(path):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise SemigroupError(f"cannot read {path}: {exc.strerror}") from None
    return parse_semigroup(text)


def _emit(text, out_path, rep):
    if out_path:
        Path(out_path).write_text(text, encoding="utf-8")
        rep.line(f"wrote: {out_path}")
    else:
        rep.out.write(text)


def cmd_classify(args, rep):
    S = _load(args.file)
    flags = class_flags(S)
    poset = idempotent_poset(S)
    rep.line(f"elements: {S.n}")
    rep.line(f"flags: {flags.as_line()}")
    rep.line("idempotents: " + " ".join(S.label(e) for e in poset.idempotents))
    pairs = [f"{S.label(e)}<{S.label(f)}" for e, f in sorted(poset.leq) if e != f]
    rep.line("order: " + (" ".join(pairs) if pairs else "(none)"))
    rep.line("result: ok")
    return EXIT_OK


def cmd_exp(args, rep):
    G = _load(args.file)
    P = power_semigroup(G)
    text = serialize(P.sem, comment=f"exp of {Path(args.file).name} order {G.n}")
    _emit(text, args.out, rep)
    if args.classify_elements:
        for i in range(P.sem.n):
            K = P.subset(i)
            c = classify_subset(G, K)
            if c.is_idempotent:
                kind = "idempotent"
            elif c.is_group_element:
                kind = f"group element (coset of {c.coset[0]})"
            elif c.coset is not None:
                kind = f"regular (coset of {c.coset[0]}), not a group element"
            else:
                kind = "not regular"
            inv = f" inverse {c.unique_inverse}" if c.unique_inverse is not None else ""
            rep.line(f"{K}: {kind}{inv}")
    rep.line("result: ok")
    return EXIT_OK


def cmd_embed_clifford(args, rep):
    S = _load(args.file)
    try:
        cert = embed_clifford(S)
    except NotCliffordInverse as exc:
        rep.line(str(exc))
        rep.line("result: not-clifford-inverse")
        return EXIT_FALSE
    _emit(write_certificate(cert), args.out, rep)
    rep.line(f"target order: {cert.target_order}")
    rep.line("result: ok")
    return EXIT_OK


def cmd_verify_cert(args, rep):
    S = _load(args.source)
    try:
        text = Path(args.cert).read_text(encoding="utf-8")
    except OSError as exc:
        raise SemigroupError(f"cannot read {args.cert}: {exc.strerror}") from None
    cert = read_certificate(text, S)
    r = verify_certificate(cert)
    yn = {True: "yes", False: "no"}
    rep.line(f"mode: {r.mode}")
    rep.line(f"homomorphism: {yn[r.homomorphism]}")
    rep.line(f"injective: {yn[r.injective]}")
    if r.witness is not None:
        rep.line(f"witness: {r.witness[0]} {r.witness[1]}")
    if r.tightened is not None:
        rep.line(f"tightened target: {r.tightened}")
    rep.line("result: " + ("pass" if r.passed else "fail"))
    return EXIT_OK if r.passed else EXIT_FALSE


def cmd_obstruct(args, rep):
    S = _load(args.file)
    report = class_h_obstructions(S)
    if not report.applicable:
        rep.line("test not applicable: semigroup is not regular")
        rep.line("result: not-applicable")
        return EXIT_OK
    for v in report.violations:
        rep.line(f"violation {v.kind}: {v.detail}")
    if report.violations:
        rep.line("result: obstructed")
        return EXIT_FALSE
    rep.line("no obstruction found")
    rep.line("result: none-found")
    return EXIT_OK


def cmd_search_embed(args, rep):
    S = _load(args.source)
    T = _load(args.target)
    if args.exp_of_target:
        T = power_semigroup(T).sem
    res = find_embedding(S, T, SearchBudget(args.max_nodes))
    rep.line(f"nodes: {res.nodes}")
    if res.status == FOUND:
        rep.line("map: " + " ".join(f"{S.label(x)}->{T.label(v)}" for x, v in enumerate(res.morphism.map)))
        rep.line("result: found")
        return EXIT_OK
    rep.line(f"result: {res.status}")
    return EXIT_BUDGET if res.status == NONE_BUDGET else EXIT_FALSE


def cmd_construct(args, rep):
    kind, rest = args.kind, args.args

    def need(k):
        if len(rest) != k:
            raise SemigroupError(f"construct {kind} takes {k} argument(s), got {len(rest)}")

    if kind == "e3":
        need(0)
        S = e3()
    elif kind == "brandt":
        need(2)
        try:
            kappa = int(rest[1])
        except ValueError:
            raise SemigroupError("kappa must be an integer") from None
        S = C.brandt(_load(rest[0]), kappa)
    elif kind == "zero":
        need(1)
        S = C.attach_zero(_load(rest[0]))
    elif kind == "holomorph":
        need(1)
        S = C.holomorph(_load(rest[0]))
    elif kind == "product":
        if not rest:
            raise SemigroupError("construct product needs at least one file")
        S = C.direct_product([_load(p) for p in rest])
    elif kind == "semidirect":
        need(3)
        base, G = _load(rest[0]), _load(rest[1])
        try:
            action_text = Path(rest[2]).read_text(encoding="utf-8")
        except OSError as exc:
            raise SemigroupError(f"cannot read {rest[2]}: {exc.strerror}") from None
        S = C.semidirect_product(base, G, C.GroupAction.parse(action_text, G, base))
    elif kind == "rees":
        need(2)
        S = C.rees_quotient(_load(rest[0]), parse_subset_text(rest[1]))
    else:
        raise SemigroupError(f"unknown construction {kind!r}")
    _emit(serialize(S), args.out, rep)
    rep.line(f"elements: {S.n}")
    rep.line("result: ok")
    return EXIT_OK


CONSTRUCT_KINDS = ("brandt", "zero", "semidirect", "holomorph", "product", "e3", "rees")


def build_parser():
    p = argparse.ArgumentParser(prog="hsg", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="verb", required=True)

    s = sub.add_parser("classify", help="class flags and idempotent order")
    s.add_argument("file")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("exp", help="Cayley table of the power semigroup of a group")
    s.add_argument("file")
    s.add_argument("--classify-elements", action="store_true")
    s.add_argument("--out")
    s.set_defaults(func=cmd_exp)

    s = sub.add_parser("embed-clifford", help="embedding certificate for a Clifford inverse semigroup")
    s.add_argument("file")
    s.add_argument("--out")
    s.set_defaults(func=cmd_embed_clifford)

    s = sub.add_parser("verify-cert", help="re-verify an embedding certificate")
    s.add_argument("cert")
    s.add_argument("source")
    s.set_defaults(func=cmd_verify_cert)

    s = sub.add_parser("obstruct", help="necessary-condition report for embeddability")
    s.add_argument("file")
    s.set_defaults(func=cmd_obstruct)

    s = sub.add_parser("search-embed", help="backtracking search for an injective homomorphism")
    s.add_argument("source")
    s.add_argument("target")
    s.add_argument("--max-nodes", type=int, default=SearchBudget().max_nodes)
    s.add_argument("--exp-of-target", action="store_true",
                   help="search into the power semigroup of the target group")
    s.set_defaults(func=cmd_search_embed)

    s = sub.add_parser("construct", help="build a derived semigroup: " + "/".join(CONSTRUCT_KINDS))
    s.add_argument("kind", choices=CONSTRUCT_KINDS)
    s.add_argument("args", nargs="*")
    s.add_argument("--out")
    s.set_defaults(func=cmd_construct)
    return p


def main(argv=None, out=None):
    out = out if out is not None else sys.stdout
    args = build_parser().parse_args(argv)
    rep = Report(out)
    try:
        return args.func(args, rep)
    except SemigroupError as exc:
        rep.line(f"error: {exc}")
        rep.line("result: input-error")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

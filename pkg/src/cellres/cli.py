"""Command-line surface.

Subcommands: check, resolve, complex, betti, enumerate-rules, verify,
gen-corpus.  Exit codes: 0 success, 1 a verified property failed, 2 bad
input.  The GF(p) pre-filter prime is overridden by RESOLVE_PRIME; pass
--no-prefilter to force pure rational arithmetic.
"""

import argparse
import json
import os
import sys

from . import betti as betti_mod
from . import export
from .chain import (
    check_dd_zero,
    check_minimal,
    compare_up_to_degree_signs,
    ht_resolution,
)
from .cointerval import (
    build_hom_complex,
    cointerval_discrepancy,
    dgraph_of_ideal,
    edge_ideal,
    hom_chain_complex,
    homcone_resolution,
    is_cointerval,
    parse_dgraph,
)
from .corpus import gen_corpus
from .ekcells import build_ek_cw, cellular_chain_complex
from .errors import CellresError, InputError
from .exact import DEFAULT_PRIME
from .ideals import OrderedIdeal, check_regularity, parse_ideal
from .monomial import Monomial
from .rules import combinatorial_type, complex_for_rule, enumerate_regular_rules

EXIT_OK = 0
EXIT_PROPERTY = 1
EXIT_INPUT = 2


def _read_input(raw):
    if raw == "-":
        return sys.stdin.read()
    if os.path.exists(raw):
        with open(raw, "r", encoding="utf-8") as fh:
            return fh.read()
    return raw


def _looks_like_dgraph(text):
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        return False
    head = lines[0].split()
    return len(head) == 2 and all(p.isdigit() for p in head)


def load_ideal(raw):
    """Inline text, a file path, JSON {"n":..,"gens":[[..]]}, or a d-graph
    file with a "d n" header."""
    text = _read_input(raw)
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            data = json.loads(stripped)
            return OrderedIdeal(
                int(data["n"]), [Monomial(e) for e in data["gens"]]
            )
        except (KeyError, TypeError, ValueError) as e:
            raise InputError("bad JSON ideal: %s" % e) from None
    if _looks_like_dgraph(stripped):
        graph = parse_dgraph(stripped)
        return edge_ideal(graph, n=max(graph.vertices))
    return parse_ideal(stripped)


def _write(out, text):
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _prime(args):
    if getattr(args, "no_prefilter", False):
        return None, False
    env = os.environ.get("RESOLVE_PRIME")
    if env:
        p = int(env)
        if p <= 1 << 20:
            print("warning: RESOLVE_PRIME should exceed 2^20", file=sys.stderr)
        return p, True
    return DEFAULT_PRIME, True


def _cointerval_state(ideal):
    """(verdict or None, discrepancy dict or None); None when the ideal is
    not a uniform squarefree edge ideal."""
    try:
        graph = dgraph_of_ideal(ideal)
    except InputError:
        return None, None
    return is_cointerval(graph), cointerval_discrepancy(graph)


def cmd_check(args):
    ideal = load_ideal(args.input)
    lines = []
    failure = ideal.linear_quotient_failure()
    lq = failure is None
    if lq:
        lines.append("linear quotients: yes")
        for j in range(1, ideal.k + 1):
            colon = sorted(ideal.colon_by_generator(j), key=lambda m: m.support())
            lines.append(
                "colon j=%d: %s" % (j, ", ".join(map(str, colon)) if colon else "-")
            )
        report = check_regularity(ideal)
        lines.append("regular: %s" % ("yes" if report.regular else "no"))
        if not report.regular:
            lines.append(
                "regularity witnesses: %s"
                % "; ".join("j=%d t=%d" % w for w in report.witnesses)
            )
    else:
        j, witness = failure
        lines.append("linear quotients: no (witness j=%d, %s)" % (j, witness))
        report = None
    verdict, disc = _cointerval_state(ideal)
    if verdict is None:
        lines.append("cointerval: n/a (not a uniform squarefree edge ideal)")
    else:
        lines.append("cointerval: %s" % ("yes" if verdict else "no"))
        if disc and not disc["agree"]:
            lines.append(
                "cointerval exchange reading: %s (disagrees with the recursive "
                "definition; recursive verdict is authoritative)"
                % ("yes" if disc["exchange"] else "no")
            )
    print("\n".join(lines))
    required = {"lq", "regular"} if not args.require else set(args.require)
    ok = True
    if "lq" in required:
        ok = ok and lq
    if "regular" in required:
        ok = ok and bool(report and report.regular)
    if "cointerval" in required:
        ok = ok and bool(verdict)
    return EXIT_OK if ok else EXIT_PROPERTY


def _resolution(ideal, method):
    if method == "ht":
        return ht_resolution(ideal)
    if method == "hom":
        return homcone_resolution(ideal)
    return betti_mod.taylor_complex(ideal)


def cmd_resolve(args):
    ideal = load_ideal(args.input)
    cx = _resolution(ideal, args.method)
    ok, witness = check_dd_zero(cx)
    if not ok:
        print("dd=0 failed at %s" % (witness,), file=sys.stderr)
        return EXIT_PROPERTY
    cx.validate()
    _write(args.out, export.complex_to_json(cx))
    if args.betti_csv:
        table = betti_mod.multigraded_betti(ideal)
        _write(args.betti_csv, export.betti_to_csv(table))
    return EXIT_OK


def cmd_complex(args):
    ideal = load_ideal(args.input)
    prime, prefilter = _prime(args)
    if args.method == "ek":
        X = build_ek_cw(ideal)
        payload = (
            export.ek_complex_to_json(X)
            if args.format == "json"
            else export.ek_complex_to_off(X)
        )
    else:
        graph = dgraph_of_ideal(ideal)
        X = build_hom_complex(graph, ideal.n)
        payload = (
            export.hom_complex_to_json(X, ideal)
            if args.format == "json"
            else export.hom_complex_to_off(X, ideal)
        )
    ok, failing = betti_mod.check_cellular_resolution(
        X, ideal, prime=prime, prefilter=prefilter
    )
    if not ok:
        print("acyclicity failed at multidegree %s" % failing, file=sys.stderr)
        return EXIT_PROPERTY
    _write(args.out, payload)
    return EXIT_OK


def cmd_betti(args):
    ideal = load_ideal(args.input)
    table = betti_mod.multigraded_betti(ideal)
    payload = (
        export.betti_to_csv(table)
        if args.format == "csv"
        else export.betti_to_json(table)
    )
    _write(args.out, payload)
    return EXIT_OK


def cmd_enumerate(args):
    ideal = load_ideal(args.input)
    rules = enumerate_regular_rules(ideal, bound=args.bound)
    entries = []
    types = {}
    for rule in rules:
        X = complex_for_rule(ideal, rule)
        fp = combinatorial_type(X)
        fp_id = types.setdefault(fp, len(types))
        entries.append(
            {
                "table": [
                    {"gen": j, "var": t, "target": g}
                    for (j, t), g in sorted(rule.table.items())
                ],
                "f_vector": list(X.f_vector()),
                "type": fp_id,
            }
        )
    payload = json.dumps(
        {"rules": entries, "distinct_types": len(types)},
        sort_keys=True,
        indent=1,
    ) + "\n"
    _write(args.out, payload)
    return EXIT_OK


def cmd_verify(args):
    ideal = load_ideal(args.input)
    prime, prefilter = _prime(args)
    checks = []

    def record(name, ok):
        checks.append((name, bool(ok)))
        print("%-34s %s" % (name, "ok" if ok else "FAIL"))

    lq = ideal.has_linear_quotients()
    record("linear quotients", lq)
    if not lq:
        return EXIT_PROPERTY
    report = check_regularity(ideal)
    print("regular decomposition function: %s" % ("yes" if report.regular else "no"))
    if not report.regular:
        try:
            ht_resolution(ideal)
            record("irregular b refused by the builder", False)
        except CellresError:
            record("irregular b refused by the builder", True)
    else:
        record("commutation follows containment", report.star_commutes)
    if report.regular:
        alg = ht_resolution(ideal)
        ok, _ = check_dd_zero(alg)
        record("dd = 0 (mapping cone)", ok)
        record("minimal", check_minimal(alg))
        X = build_ek_cw(ideal)
        cellular = cellular_chain_complex(X)
        ok, _ = compare_up_to_degree_signs(cellular, alg)
        record("cellular = algebraic", ok)
        ok, failing = betti_mod.check_cellular_resolution(
            X, ideal, prime=prime, prefilter=prefilter
        )
        record("cell complex strands acyclic", ok)
        if ideal.k <= betti_mod.TAYLOR_BOUND:
            oracle = betti_mod.multigraded_betti(ideal)
            record(
                "Betti table matches Taylor oracle",
                oracle == betti_mod.betti_from_resolution(alg),
            )
    verdict, disc = _cointerval_state(ideal)
    if verdict is not None:
        print("cointerval (recursive): %s" % ("yes" if verdict else "no"))
        if disc and not disc["agree"]:
            print(
                "note: exchange reading disagrees (says %s); recursive "
                "definition is authoritative" % ("yes" if disc["exchange"] else "no")
            )
    if verdict:
        hom = homcone_resolution(ideal)
        ok, _ = check_dd_zero(hom)
        record("dd = 0 (hom complex cone)", ok)
        H = build_hom_complex(dgraph_of_ideal(ideal), ideal.n)
        ok, _ = compare_up_to_degree_signs(hom_chain_complex(H, ideal), hom)
        record("hom cellular = algebraic", ok)
        ok, _ = betti_mod.check_cellular_resolution(
            H, ideal, prime=prime, prefilter=prefilter
        )
        record("hom strands acyclic", ok)
    if ideal.k <= betti_mod.TAYLOR_BOUND:
        ok, _ = betti_mod.check_cellular_resolution(
            betti_mod.TaylorSupport(ideal), ideal, prime=prime, prefilter=prefilter
        )
        record("Taylor strands acyclic", ok)
    return EXIT_OK if all(ok for _, ok in checks) else EXIT_PROPERTY


def cmd_gen_corpus(args):
    items = gen_corpus(
        max_n=args.stable_n,
        max_deg=args.stable_deg,
        max_d=args.cointerval_d,
        cointerval_n=args.cointerval_n,
    )
    _write(args.out, export.corpus_to_jsonl(items))
    print("%d ideals" % len(items), file=sys.stderr)
    return EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(
        prog="cellres",
        description="Cellular mapping-cone resolutions of monomial ideals, "
        "verified with exact arithmetic.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="linear quotients / regularity / cointervality")
    c.add_argument("input")
    c.add_argument(
        "--require",
        action="append",
        choices=["lq", "regular", "cointerval"],
        help="properties the exit code should reflect (default: lq, regular)",
    )
    c.set_defaults(func=cmd_check)

    r = sub.add_parser("resolve", help="build a resolution and export it")
    r.add_argument("input")
    r.add_argument("--method", choices=["ht", "hom", "taylor"], default="ht")
    r.add_argument("--out", default="-")
    r.add_argument("--betti-csv")
    r.set_defaults(func=cmd_resolve)

    x = sub.add_parser("complex", help="build the supporting cell complex")
    x.add_argument("input")
    x.add_argument("--method", choices=["ek", "hom"], default="ek")
    x.add_argument("--format", choices=["json", "off"], default="json")
    x.add_argument("--out", default="-")
    x.add_argument("--no-prefilter", action="store_true")
    x.set_defaults(func=cmd_complex)

    b = sub.add_parser("betti", help="multigraded Betti numbers (Taylor strands)")
    b.add_argument("input")
    b.add_argument("--format", choices=["csv", "json"], default="csv")
    b.add_argument("--out", default="-")
    b.set_defaults(func=cmd_betti)

    e = sub.add_parser("enumerate-rules", help="the family of decomposition rules")
    e.add_argument("input")
    e.add_argument("--bound", type=int, default=100000)
    e.add_argument("--out", default="-")
    e.set_defaults(func=cmd_enumerate)

    v = sub.add_parser("verify", help="run every applicable verification")
    v.add_argument("input")
    v.add_argument("--no-prefilter", action="store_true")
    v.set_defaults(func=cmd_verify)

    g = sub.add_parser("gen-corpus", help="emit the deterministic test corpus")
    g.add_argument("--out", default="-")
    g.add_argument("--stable-n", type=int, default=4)
    g.add_argument("--stable-deg", type=int, default=3)
    g.add_argument("--cointerval-d", type=int, default=3)
    g.add_argument("--cointerval-n", type=int, default=6)
    g.set_defaults(func=cmd_gen_corpus)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as e:
        print("input error: %s" % e, file=sys.stderr)
        return EXIT_INPUT
    except CellresError as e:
        print("property failure: %s: %s" % (type(e).__name__, e), file=sys.stderr)
        return EXIT_PROPERTY


if __name__ == "__main__":
    sys.exit(main())

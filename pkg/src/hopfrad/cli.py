"""Command-line front end.

Exit codes: 0 success, 2 parse/usage error, 3 axiom violation, 4 too large,
5 hypothesis not met, 6 unexpected verdict.
"""

from __future__ import annotations

import argparse
import os
import sys

from .algebra import AlgebraError, TooLarge, ideal_nilpotency_index
from .catalog import SCENARIO_NAMES, catalog, scenario as builtin_scenario
from .document import DocumentError, emit_scenario, load
from .theorems import THEOREM_IDS, HypothesisNotMet, check, format_table, run_all, to_jsonl

EXIT_OK, EXIT_PARSE, EXIT_AXIOM, EXIT_TOO_LARGE, EXIT_HYPOTHESIS, EXIT_UNEXPECTED = 0, 2, 3, 4, 5, 6

RADICAL_KINDS = ("rj", "rb", "rHb", "rHj", "rjH", "rHn", "wH")


class UsageError(Exception):
    pass


def _scenario_from(path, name):
    try:
        return load(path).scenario(name)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from exc


def _print_space(alg, space, out):
    print(f"dim: {space.dim}", file=out)
    print("basis:", file=out)
    for row in space.basis:
        print(f"  {alg.format(row)}", file=out)


def cmd_verify(args, out) -> int:
    doc = load(args.path)
    print(
        f"ok: field {doc.field}; {len(doc.algebras)} algebras, {len(doc.hopf_algebras)} Hopf algebras, "
        f"{len(doc.actions)} actions, {len(doc.cocycles)} cocycles, {len(doc.scenarios)} scenarios",
        file=out,
    )
    return EXIT_OK


def _radical_result(scen, kind):
    from . import hradical as hr
    from .radical import baer_radical, jacobson_radical

    R = scen.R
    if kind in ("rj", "rb"):
        rep = (jacobson_radical if kind == "rj" else baer_radical)(R)
        return rep.value, rep.method, rep.nilpotency_index
    if kind == "rHb":
        val, method = hr.r_Hb(scen.cp), "(r_b(R):H), cross-checked against r_b(R#H) cap R"
    elif kind == "rHj":
        val, method = hr.r_Hj(scen.cp), "r_j(R#H) cap R, cross-checked against (r_j(R):H)"
    elif kind == "rjH":
        val, method = hr.r_jH(scen.bundle), "(r_j(R):H) by linear colon"
    elif kind == "rHn":
        val, method = hr.r_Hn(scen.bundle), "element enumeration of H-regular generated H-ideals"
    else:
        val, method = hr.w_H_oracle(scen.bundle), "H-m-sequence graph with dead-node pruning"
    return val.ideal, method, ideal_nilpotency_index(val.ideal)


def cmd_radical(args, out) -> int:
    scen = _scenario_from(args.path, args.scenario)
    value, method, nil = _radical_result(scen, args.kind)
    print(f"scenario: {scen.name}", file=out)
    print(f"kind: {args.kind}", file=out)
    print(f"method: {method}", file=out)
    print(f"nilpotency_index: {'none' if nil is None else nil}", file=out)
    _print_space(scen.R, value.space, out)
    return EXIT_OK


def cmd_cross(args, out) -> int:
    scen = _scenario_from(args.path, args.scenario)
    alg = (scen.double if args.double else scen.cp).algebra
    f = alg.field
    print(f"algebra: {'(R#H)#H*' if args.double else 'R#H'} of dim {alg.dim} over {f}", file=out)
    print("labels: " + ", ".join(f"{i}={lab}" for i, lab in enumerate(alg.labels)), file=out)
    for i in range(alg.dim):
        for j in range(alg.dim):
            for k in range(alg.dim):
                v = alg.structure[i, j, k]
                if v != 0:
                    print(f"{i} {j} {k} {f.format(v)}", file=out)
    return EXIT_OK


def _resolve_scenario(args):
    if args.doc:
        return _scenario_from(args.doc, args.scenario)
    try:
        return builtin_scenario(args.scenario)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from exc


def cmd_check(args, out) -> int:
    if args.all:
        if args.doc:
            scens = list(load(args.doc).scenarios.values())
        else:
            scens = catalog()
        ids = [args.theorem] if args.theorem else None
        reports = run_all(jobs=args.jobs, scenarios=scens, theorem_ids=ids)
    else:
        if not (args.theorem and args.scenario):
            raise UsageError("check needs --theorem and --scenario, or --all")
        if args.theorem not in THEOREM_IDS and args.theorem != "L1023":
            raise UsageError(f"unknown theorem {args.theorem!r}; known: {', '.join(THEOREM_IDS)}")
        reports = [check(args.theorem, _resolve_scenario(args))]
    if args.json:
        out.write(to_jsonl(reports))
    elif len(reports) == 1 and not args.all:
        r = reports[0]
        status = "(expected)" if r.passed else f"(UNEXPECTED; expected {r.expected})"
        print(f"{r.theorem_id} on {r.scenario}: {r.observed} {status}", file=out)
        if r.witness is not None:
            print(f"witness: {r.witness}", file=out)
    else:
        out.write(format_table(reports))
        bad = sum(not r.passed for r in reports)
        print(f"{len(reports)} checks, {bad} unexpected", file=out)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_UNEXPECTED


def cmd_catalog(args, out) -> int:
    if args.emit:
        os.makedirs(args.emit, exist_ok=True)
        for scen in catalog():
            path = os.path.join(args.emit, f"{scen.name}.json")
            with open(path, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(emit_scenario(scen))
            print(path, file=out)
        return EXIT_OK
    for scen in catalog():
        print(f"{scen.name}  [{', '.join(sorted(scen.tags))}]  {scen.description}", file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hopfrad", description="Radicals of Hopf-algebra crossed products over exact fields.")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="parse a document and verify every axiom")
    v.add_argument("path")
    v.set_defaults(func=cmd_verify)

    r = sub.add_parser("radical", help="compute a radical of a scenario's R")
    r.add_argument("path")
    r.add_argument("--kind", choices=RADICAL_KINDS, required=True)
    r.add_argument("--scenario")
    r.set_defaults(func=cmd_radical)

    c = sub.add_parser("cross", help="structure constants of R#H or (R#H)#H*")
    c.add_argument("path")
    c.add_argument("--scenario")
    c.add_argument("--double", action="store_true")
    c.set_defaults(func=cmd_cross)

    k = sub.add_parser("check", help="run theorem checkers")
    k.add_argument("--theorem", help=f"one of {', '.join(THEOREM_IDS)}")
    k.add_argument("--scenario", help=f"built-in: {', '.join(SCENARIO_NAMES)}")
    k.add_argument("--all", action="store_true", help="every applicable (theorem, scenario) pair")
    k.add_argument("--doc", help="take scenarios from a document instead of the built-in catalog")
    k.add_argument("--jobs", type=int, default=1)
    k.add_argument("--json", action="store_true", help="one JSON record per verdict")
    k.set_defaults(func=cmd_check)

    g = sub.add_parser("catalog", help="list or emit built-in scenarios")
    grp = g.add_mutually_exclusive_group(required=True)
    grp.add_argument("--list", action="store_true")
    grp.add_argument("--emit", metavar="DIR")
    g.set_defaults(func=cmd_catalog)
    return p


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (DocumentError, UsageError, OSError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_PARSE
    except AlgebraError as exc:
        wit = "" if exc.witness is None else f"; witness {exc.witness}"
        print(f"axiom violation: {type(exc).__name__}: {exc}{wit}", file=err)
        return EXIT_AXIOM
    except TooLarge as exc:
        print(f"too large: {exc}", file=err)
        return EXIT_TOO_LARGE
    except HypothesisNotMet as exc:
        print(f"hypothesis not met: {exc}", file=err)
        return EXIT_HYPOTHESIS

"""Command-line entry point: ``entropy-order {order,octo,entropy} ...``.

A short summary goes to stdout; ``--out`` writes the machine-readable report.
The exit status is 0 exactly when every check of the command passed.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from pathlib import Path

from . import entropy_oracle as eo
from . import octogon as oc
from . import order_engine as oe
from .lattice_set import LatticeError, LatticeSet, from_grid, to_grid


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# input helpers


def read_set(path: str) -> LatticeSet:
    """A lattice set from a grid-text file or a JSON file (points or boundary)."""
    p = Path(path)
    if not p.is_file():
        raise UsageError(f"no such file: {path}")
    text = p.read_text()
    if text.lstrip().startswith("{"):
        obj = json.loads(text)
        if "b" in obj:
            return oc.Octogon.from_json(obj).points()
        return LatticeSet.from_json(obj)
    return from_grid(text)


def parse_box(text: str) -> tuple[int, int]:
    try:
        w, h = (int(v) for v in text.lower().split("x"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"box must look like WxH, got {text!r}") from None
    if w < 1 or h < 1:
        raise argparse.ArgumentTypeError("box dimensions must be positive")
    return w, h


def _check_out(path: str | None) -> None:
    if path and not Path(path).resolve().parent.is_dir():
        raise UsageError(f"output directory does not exist: {path}")


def write_report(args, doc, rows=None, columns=None) -> None:
    """Write ``doc`` as JSON, or ``rows`` as CSV when ``--format csv``."""
    if not args.out:
        return
    if args.format == "csv" and rows is not None:
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=list(columns or rows[0].keys()), lineterminator="\n")
        w.writeheader()
        for r in rows:
            w.writerow({k: _fmt(v) for k, v in r.items()})
        Path(args.out).write_text(buf.getvalue())
    else:
        Path(args.out).write_text(json.dumps(doc, indent=1, sort_keys=True) + "\n")


def _fmt(v):
    return repr(v) if isinstance(v, float) else v


# ---------------------------------------------------------------------------
# order


def cmd_order_saturate(args) -> int:
    _check_out(args.out)
    seeds = [read_set(f) for f in args.seed]
    rules = oe.ALL_RULES - set(args.disable)
    if args.box:
        uni = oe.Universe.from_box(*args.box, seeds=seeds, enabled_rules=rules, strict_v=args.strict_v)
    elif seeds:
        uni = oe.Universe.from_sets(seeds, enabled_rules=rules, strict_v=args.strict_v)
    else:
        raise UsageError("give --box or at least one --seed")
    res = oe.saturate(uni)
    print(f"classes: {res.n_classes}  facts: {len(res)}  exhaustive: {res.exhaustive}")
    for rule, n in res.rule_counts().items():
        if n:
            print(f"  {rule}: {n}")
    if args.out:
        res.dump(args.out)
    return 0 if res.exhaustive else 3


def cmd_order_query(args) -> int:
    a, d = read_set(args.a), read_set(args.d)
    if not a or not d:
        raise UsageError("query needs nonempty sets")
    if args.facts:
        known = {(oe.canonicalize(f.lesser)[0], oe.canonicalize(f.greater)[0]): t
                 for f, t in oe.load_facts(args.facts)}
        if oe.equivalent(a, d):
            result = oe.QueryResult("equivalent")
        else:
            t = known.get((oe.canonicalize(a)[0], oe.canonicalize(d)[0]))
            result = oe.QueryResult("ordered", t) if t else oe.QueryResult("unknown")
    else:
        # every derivation of a < d stays inside d, so d alone is an exact host
        res = oe.saturate(oe.Universe.from_sets([d] if len(d) > 1 else [a]))
        result = res.query(a, d)
    print(result)
    if result.trace is not None:
        print(f"rule: {result.trace.rule}")
        for p in result.trace.premises:
            print("premise:\n" + to_grid(p.lesser) + "<\n" + to_grid(p.greater))
    return 0


def cmd_order_independence(args) -> int:
    _check_out(args.out)
    rows = oe.independence_suite()
    per_rule = independence_table(rows)
    print(f"{'rule':5} {'with all':9} {'without':9} verdict")
    for r in per_rule:
        mark = "PASS" if r["passed"] else "FAIL"
        print(f"{r['rule']:5} {str(r['with_all']):9} {str(r['without']):9} {r['verdict']}  {mark}")
    write_report(args, {"rows": per_rule, "passed": all(r["passed"] for r in per_rule)},
                 rows=per_rule)
    return 0 if all(r["passed"] for r in per_rule) else 1


def independence_table(rows: list[oe.IndependenceRow]) -> list[dict]:
    """One row per rule; a rule passes when all of its examples do."""
    out = []
    for rule in oe.RULES:
        mine = [r for r in rows if r.example.rule == rule]
        if not mine:
            continue
        without = any(r.without for r in mine)
        verdict = mine[0].verdict if all(r.verdict == mine[0].verdict for r in mine) else "mixed"
        if rule == "IIb" and all(r.without for r in mine):
            verdict = "derivable-without (Lemma twobe)"
        out.append({
            "rule": rule,
            "examples": len(mine),
            "with_all": all(r.with_all for r in mine),
            "without": without,
            "verdict": verdict,
            "passed": all(r.passed for r in mine),
        })
    return out


# ---------------------------------------------------------------------------
# octo


def cmd_octo_boundary(args) -> int:
    s = read_set(args.file)
    try:
        b = oc.boundary_of(s)
    except oc.NotInO as exc:
        print(f"not in O: {exc}")
        return 1
    print(json.dumps(b.as_list()))
    print(f"circumference: {oc.circumference(b):.6f}")
    return 0


def _octogon(path: str) -> oc.Octogon:
    return oc.Octogon.from_set(read_set(path))


def cmd_octo_order(args) -> int:
    a, d = _octogon(args.a), _octogon(args.d)
    verdict = oc.octogon_order(a, d)
    print(f"{a.boundary} < {d.boundary}: {verdict}")
    return 0


def cmd_octo_decompose(args) -> int:
    a, d = _octogon(args.a), _octogon(args.d)
    chain = oc.decompose(a.boundary, d.boundary)
    cur = a.boundary
    for mol in chain:
        cur = cur + mol.boundary
        print(f"+ {mol.type}@{mol.rotation:<3} -> {cur}")
    return 0


def cmd_octo_molecules(args) -> int:
    mols = oc.molecules()
    for m in mols:
        print(f"{m.type} rot {m.rotation}  b={m.boundary}")
        print(to_grid(m.set))
    print(f"count: {len(mols)}")
    return 0 if len(mols) == 12 else 1


def cmd_octo_crosscheck(args) -> int:
    _check_out(args.out)
    cc = oc.crosscheck(args.maxlen)
    pct = 100.0 * cc.fraction
    print(f"octogons: {len(cc.boundaries)}  pairs: {cc.pairs}  classes: {cc.result.n_classes}")
    print(f"agree: {pct:g}%")
    for a, d, theory, engine in cc.disagreements[:20]:
        print(f"  {a} vs {d}: piecewise-shorter={theory} engine={engine}")
    write_report(args, {
        "maxlen": args.maxlen, "pairs": cc.pairs, "agree": cc.agree,
        "disagreements": [[a.as_list(), d.as_list(), t, e] for a, d, t, e in cc.disagreements],
    })
    return 0 if cc.agree == cc.pairs else 1


# ---------------------------------------------------------------------------
# entropy


def cmd_entropy_run(args) -> int:
    _check_out(args.out)
    path = Path(args.spec)
    if not path.is_file():
        raise UsageError(f"no such file: {args.spec}")
    exp = eo.Experiment.from_json(json.loads(path.read_text()))
    rows = exp.rows()
    for r in rows:
        print(f"{r['region']:>10} beta={r['beta']:<8g} s={r['s']:.12f} n={r['n']} mu={r['mu']} "
              f"err={r['error']:.3e}")
    write_report(args, {"torus": [exp.torus.width, exp.torus.height], "rows": rows},
                 rows=rows, columns=eo.CSV_COLUMNS)
    return 0


def cmd_entropy_counterexamples(args) -> int:
    _check_out(args.out)
    rep = eo.counterexample_suite()
    for c in rep.cases:
        mark = "PASS" if c.passed else "FAIL"
        if isinstance(c, eo.Chain):
            vals = " < ".join(f"{v:.10f}" for v in c.values)
            print(f"({c.name}) torus {c.torus} beta={c.beta}: s(D_N) {vals}  {mark}")
        else:
            print(f"({c.name}) torus {c.torus} counts {c.counts} engine-orderable={c.engine_orderable}  {mark}")
            for beta, b, d in zip(c.betas, c.s_small, c.s_large):
                print(f"     beta={beta:<5g} s(smaller)={b:.10f} s(larger)={d:.10f}")
    print("all PASS" if rep.passed else "FAILED")
    write_report(args, rep.to_json())
    return 0 if rep.passed else 1


def cmd_entropy_audit(args) -> int:
    _check_out(args.out)
    if args.facts:
        if not Path(args.facts).is_file():
            raise UsageError(f"no such file: {args.facts}")
        facts = [f for f, _ in oe.load_facts(args.facts)]
    else:
        facts = eo.audit_facts(args.box)
    rep = eo.monotonicity_audit(facts, trials=args.trials, seed=args.seed)
    print(f"pairs: {rep.pairs}  violations: {len(rep.violations)}  worst gap: {rep.worst_gap:.3e}")
    write_report(args, rep.to_json())
    return 0 if rep.passed else 1


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--out", help="write the report to this file")
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="entropy-order", description=__doc__)
    top = p.add_subparsers(dest="group", required=True)

    order = top.add_parser("order", help="order relation saturation").add_subparsers(dest="cmd", required=True)
    s = order.add_parser("saturate", parents=[common])
    s.add_argument("--seed", action="append", default=[], help="grid or JSON set file (repeatable)")
    s.add_argument("--box", type=parse_box)
    s.add_argument("--disable", action="append", default=[], choices=oe.RULES)
    s.add_argument("--strict-v", action="store_true", help="require incomparability in rule V")
    s.set_defaults(func=cmd_order_saturate)
    q = order.add_parser("query", parents=[common])
    q.add_argument("--a", required=True)
    q.add_argument("--d", required=True)
    q.add_argument("--facts", help="facts file from 'order saturate'; otherwise saturate on the fly")
    q.set_defaults(func=cmd_order_query)
    i = order.add_parser("independence", parents=[common])
    i.set_defaults(func=cmd_order_independence)

    octo = top.add_parser("octo", help="octogon boundary calculus").add_subparsers(dest="cmd", required=True)
    b = octo.add_parser("boundary", parents=[common])
    b.add_argument("file")
    b.set_defaults(func=cmd_octo_boundary)
    for name, func in (("order", cmd_octo_order), ("decompose", cmd_octo_decompose)):
        c = octo.add_parser(name, parents=[common])
        c.add_argument("a")
        c.add_argument("d")
        c.set_defaults(func=func)
    m = octo.add_parser("molecules", parents=[common])
    m.set_defaults(func=cmd_octo_molecules)
    x = octo.add_parser("crosscheck", parents=[common])
    x.add_argument("--maxlen", type=float, default=6.0)
    x.set_defaults(func=cmd_octo_crosscheck)

    ent = top.add_parser("entropy", help="Gibbs-state entropies").add_subparsers(dest="cmd", required=True)
    r = ent.add_parser("run", parents=[common])
    r.add_argument("spec")
    r.set_defaults(func=cmd_entropy_run)
    ce = ent.add_parser("counterexamples", parents=[common])
    ce.set_defaults(func=cmd_entropy_counterexamples)
    a = ent.add_parser("audit", parents=[common])
    a.add_argument("--facts", help="facts file; default: saturate --box")
    a.add_argument("--box", type=parse_box, default=(3, 3))
    a.add_argument("--trials", type=int, default=1000)
    a.add_argument("--seed", type=int, required=True)
    a.set_defaults(func=cmd_entropy_audit)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (UsageError, LatticeError, oc.NotInO, oe.BudgetExceeded, eo.CapExceeded, eo.RegionError,
            json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except oc.DecompositionError as exc:
        print(f"THEOREM CONTRADICTION: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())

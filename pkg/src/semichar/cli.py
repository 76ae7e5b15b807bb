"""Command-line interface: ``semichar SUBCOMMAND --catalog NAME:ARGS ...``.

Exit codes: 0 ok, 2 bad input, 3 budget, 4 precondition, 5 verification.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import catalog
from . import commuting
from . import groups
from . import inverse_rep as ir
from . import io
from . import random_walk as rw
from .errors import BudgetError, InputError, SemicharError, VerificationError
from .semigroup import DEFAULT_BUDGET, d_classes, natural_order


def _semigroup(args):
    cap = args.budget or DEFAULT_BUDGET
    if bool(args.catalog) == bool(args.input):
        raise InputError("give exactly one of --catalog or --input")
    if args.catalog:
        s = catalog.from_spec(args.catalog)
        if len(s) > cap:
            raise BudgetError(
                f"semigroup has {len(s)} elements, budget is {cap}", count=len(s)
            )
        return s
    return io.load_semigroup(args.input, cap=cap)


def _check_group_budget(s, budget):
    budget = budget or groups.DEFAULT_GROUP_BUDGET
    for d in d_classes(s):
        groups.character_table(d.group, budget=budget)


def _emit(args, text: str):
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# subcommands


def cmd_mobius(args):
    s = _semigroup(args)
    po = natural_order(s)
    mu = po.mobius()
    recs = []
    for y in range(len(s)):
        for x, m in sorted(mu.column(y).items()):
            recs.append({"x": s.labels[x], "y": s.labels[y], "mu": m})
    if args.format == "csv":
        return io.records_csv(recs, ["x", "y", "mu"])
    return io.dump_json({"semigroup": s.name, "size": len(s), "entries": recs})


def cmd_dclasses(args):
    s = _semigroup(args)
    dc = d_classes(s)
    recs = [
        {"index": d.index, "base": s.labels[d.base], "n": d.n, "group_order": d.group_order,
         "size": len(d.elements), "idempotents": [s.labels[e] for e in d.idempotents]}
        for d in dc
    ]
    total = dc.total()
    if args.format == "csv":
        rows = [{**r, "idempotents": " ".join(r["idempotents"])} for r in recs]
        return io.records_csv(rows, ["index", "base", "n", "group_order", "size", "idempotents"])
    return io.dump_json({
        "semigroup": s.name, "size": len(s), "classes": recs,
        "sum_n2_G": total, "check": total == len(s),
    })


def cmd_chartable(args):
    s = _semigroup(args)
    _check_group_budget(s, args.budget)
    t = ir.char_tables(s)
    if args.format == "csv":
        return io.char_table_csv(t)
    return io.dump_json(io.char_table_record(t))


def _theta(s, spec: str):
    spec = spec.strip()
    if spec == "rook":
        return ir.fixed_point_character(s)
    if spec.startswith("tensor:"):
        return ir.power_character(ir.fixed_point_character(s), _int_arg(spec))
    if spec.startswith("exterior:"):
        return ir.exterior_character(s, _int_arg(spec))
    path = spec[5:] if spec.startswith("file:") else spec
    if not Path(path).exists():
        raise InputError(f"unknown theta spec {spec!r}; use rook, tensor:p, exterior:p or a file")
    return ir.SemigroupCharacter(s, io.load_character_values(path, len(s)), name=Path(path).name)


def _int_arg(spec):
    try:
        return int(spec.split(":", 1)[1])
    except ValueError:
        raise InputError(f"expected an integer power in {spec!r}") from None


def cmd_mult(args):
    s = _semigroup(args)
    _check_group_budget(s, args.budget)
    theta = _theta(s, args.theta)
    entries = [(lab, ir.intertwine(s, lab, theta)) for lab in ir.labels(s)]
    degrees = {lab: ir.induced_degree(s, lab) for lab in ir.labels(s)}
    recs = io.multiplicity_records(entries, degrees)
    if args.format == "csv":
        return io.records_csv(recs, ["d_class", "group_char", "degree", "multiplicity"])
    return io.dump_json({"semigroup": s.name, "theta": args.theta, "multiplicities": recs})


def cmd_decompose(args):
    s = _semigroup(args)
    _check_group_budget(s, args.budget)
    rep = ir.decompose_transitive(s)
    recs = rep.to_records()
    if args.format == "csv":
        return io.records_csv(recs, ["d_class", "group_char", "multiplicity"])
    return io.dump_json({"semigroup": s.name, "minimal_rank": rep.minimal_rank, "multiplicities": recs})


def cmd_radical(args):
    s = _semigroup(args)
    red = commuting.regular_reduction(s)
    rb = commuting.radical_basis(red)
    rec = rb.to_record()
    if args.format == "csv":
        rows = [
            {"element": b["element"], "coeffs": " ".join(f"{k}:{v}" for k, v in b["coeffs"].items())}
            for b in rec["basis"]
        ]
        return io.records_csv(rows, ["element", "coeffs"])
    return io.dump_json({"semigroup": s.name, "regular": len(red.regular_elements), **rec})


def _weights(s, spec):
    n_orig = len(s)
    m = rw.adjoin_identity_if_needed(s)
    if spec == "uniform":
        return m, rw.ProbabilityMeasure.uniform(n_orig).extended(len(m))
    data = io._read_json(spec)
    if isinstance(data, dict) and "weights" in data:
        data = data["weights"]
    if isinstance(data, dict):
        pi = rw.ProbabilityMeasure.from_mapping(len(m), data)
    elif isinstance(data, list):
        pi = rw.ProbabilityMeasure(data)
        if len(pi) == n_orig:
            pi = pi.extended(len(m))
    else:
        raise InputError("weights file must hold a mapping or a list")
    return m, pi


def cmd_walk(args):
    if not args.catalog and not args.input and args.weights not in (None, "uniform"):
        cfg = io._read_json(args.weights)
        src = cfg.get("semigroup") if isinstance(cfg, dict) else None
        if src is None:
            raise InputError("give --catalog/--input or a walk config with a 'semigroup' entry")
        if Path(str(src)).exists():
            args.input = src
        else:
            args.catalog = src
    s = _semigroup(args)
    m, pi = _weights(s, args.weights or "uniform")
    rep = rw.walk_spectrum(m, pi)
    verdict = rw.numeric_cross_check(rep)
    exact_poly = rw.check_charpoly(rep)
    if args.format == "csv":
        out = io.records_csv(rep.to_records(), io.SPECTRUM_COLUMNS)
    else:
        out = io.dump_json({
            "semigroup": m.name,
            "ideal": [m.labels[x] for x in rep.ideal],
            "ideal_size": rep.ideal_size,
            "entries": rep.to_records(),
            "numeric_check": {"ok": verdict.ok, "max_error": f"{verdict.max_error:.3g}", "message": verdict.message},
            "charpoly_exact": exact_poly,
        })
    if not verdict.ok or not exact_poly:
        _emit(args, out)
        raise VerificationError(verdict.message or "characteristic polynomial mismatch")
    return out


COMMANDS = {
    "mobius": (cmd_mobius, "Möbius function of the natural partial order"),
    "dclasses": (cmd_dclasses, "D-classes with n_i, |G_i| and the size check"),
    "chartable": (cmd_chartable, "semigroup character table matrices C, Y, A, B"),
    "mult": (cmd_mult, "multiplicities of all irreducibles in a character"),
    "decompose": (cmd_decompose, "fixed-point decomposition of a transitive semigroup"),
    "radical": (cmd_radical, "radical basis of a commuting-idempotent semigroup"),
    "walk": (cmd_walk, "random-walk spectrum on a minimal left ideal"),
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="semichar", description="Characters and representations of finite semigroups.")
    sub = p.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("--catalog", metavar="NAME:ARGS", help="catalog semigroup, e.g. rook:3")
        sp.add_argument("--input", metavar="FILE", help="semigroup JSON file")
        sp.add_argument("--format", choices=["json", "csv"], default="json")
        sp.add_argument("--out", metavar="PATH", help="write output here instead of stdout")
        sp.add_argument("--budget", type=int, default=None,
                        help=f"element budget for closures and group orders "
                             f"(defaults {DEFAULT_BUDGET} and {groups.DEFAULT_GROUP_BUDGET})")
        if name == "mult":
            sp.add_argument("--theta", default="rook", help="rook | tensor:p | exterior:p | FILE")
        if name == "walk":
            sp.add_argument("--weights", default=None, help="FILE or uniform")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.budget is not None and args.budget <= 0:
        parser.error("--budget must be positive")
    try:
        out = COMMANDS[args.command][0](args)
        _emit(args, out)
    except SemicharError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    return 0


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface.

    scop lattice gen|verify|complete|export ...
    scop scop build|rank|weights|eigen|super ...
    scop stats ttest --a X.csv --b Y.csv

Exit status: 0 success, 1 input error, 2 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from pathlib import Path

from . import core, fixtures, jsonio
from .completion import dedekind_macneille
from .errors import InputError, ScopError
from .ingest import display_round, pet_scop, rank_exemplars
from .lattice import export_poset, generate_context_lattice, poset_from_dict, verify_axioms
from .stats import paired_t_test

EXIT_OK, EXIT_INPUT, EXIT_VERIFY = 0, 1, 2

_BUILTIN_SCOPS = {
    "garden": fixtures.garden_scop,
    "properties": fixtures.properties_scop,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _split_list(values: list[str] | None) -> list[str]:
    out = []
    for v in values or []:
        out += [x.strip() for x in v.split(",") if x.strip()]
    return out


def _poset_source(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("-g", "--generators", action="append", metavar="G1,G2,...",
                        help="generator names (comma-separated, repeatable)")
    parser.add_argument("-z", "--zero", action="append", default=[], metavar="LIT^LIT",
                        help="declare a zero meet, e.g. e1^e6 or e1'^e2 (repeatable)")
    parser.add_argument("--in", dest="infile", metavar="PATH", help="poset JSON instead of -g/-z")


def _scop_source(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--scop", default="pet", metavar="SRC",
                        help="'pet' (built from the rating tables), 'garden', 'properties' or a SCOP JSON path")
    parser.add_argument("--fixtures", metavar="DIR", help="directory holding the rating-table CSVs")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="scop", description="State-context-property systems and their lattices.")
    top = p.add_subparsers(dest="group", required=True, parser_class=_Parser)

    lat = top.add_parser("lattice", help="orthocomplemented context lattices")
    lsub = lat.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, help_ in (("gen", "generate and export a context lattice"),
                        ("export", "export a poset as JSON or DOT"),
                        ("verify", "check partial-order and orthocomplement axioms"),
                        ("complete", "Dedekind-MacNeille completion")):
        sp = lsub.add_parser(name, help=help_)
        _poset_source(sp)
        if name != "verify":
            sp.add_argument("--format", choices=("json", "dot"), default="json")
        else:
            sp.add_argument("--require-complete", action="store_true",
                            help="also fail when some pair lacks a unique meet or join")
        sp.add_argument("--out", metavar="PATH")

    sc = top.add_parser("scop", help="query a SCOP")
    ssub = sc.add_subparsers(dest="command", required=True, parser_class=_Parser)
    b = ssub.add_parser("build", help="emit a SCOP as JSON")
    _scop_source(b)
    b.add_argument("--computed", action="store_true",
                   help="derive frequencies/weights from ratings instead of the printed columns")
    b.add_argument("--out", metavar="PATH")

    r = ssub.add_parser("rank", help="exemplars by frequency under a context")
    _scop_source(r)
    r.add_argument("--context", required=True)
    w = ssub.add_parser("weights", help="property weights in a state")
    _scop_source(w)
    w.add_argument("--state", required=True)
    w.add_argument("--property")
    e = ssub.add_parser("eigen", help="eigenstates of a context")
    _scop_source(e)
    e.add_argument("--context", required=True)
    e.add_argument("--state")
    s = ssub.add_parser("super", help="is a state a superposition for a set of contexts")
    _scop_source(s)
    s.add_argument("--state", required=True)
    s.add_argument("--contexts", required=True, action="append", metavar="E1,E2,...")
    for sp in (r, w, e, s):
        sp.add_argument("--json", action="store_true", help="full-precision JSON output")
        sp.add_argument("--out", metavar="PATH")

    st = top.add_parser("stats", help="statistics utilities")
    tsub = st.add_subparsers(dest="command", required=True, parser_class=_Parser)
    t = tsub.add_parser("ttest", help="paired t-test on two columns of numbers")
    t.add_argument("--a", required=True, metavar="PATH")
    t.add_argument("--b", required=True, metavar="PATH")
    t.add_argument("--column", type=int, default=0, help="0-based column to read (default 0)")
    t.add_argument("--out", metavar="PATH")
    return p


# -- helpers ----------------------------------------------------------------------

def _load_poset(args):
    if args.infile:
        if args.generators or args.zero:
            raise InputError("use either --in or -g/-z, not both")
        try:
            data = json.loads(Path(args.infile).read_text(encoding="utf-8"))
        except json.JSONDecodeError as exc:
            raise InputError(f"invalid JSON in {args.infile}: {exc}") from None
        return poset_from_dict(data)
    gens = _split_list(args.generators)
    if not gens:
        raise InputError("no generators given (-g) and no --in file")
    return generate_context_lattice(gens, args.zero)


def _load_scop(args, printed: bool = True) -> core.Scop:
    src = args.scop
    if src == "pet":
        return pet_scop(args.fixtures, printed=printed)
    if src in _BUILTIN_SCOPS:
        return _BUILTIN_SCOPS[src]()
    return jsonio.load(src)


def _read_numbers(path: str, column: int) -> list[float]:
    out = []
    with open(path, encoding="utf-8", newline="") as fh:
        for n, row in enumerate(csv.reader(fh), start=1):
            if not row or not any(c.strip() for c in row):
                continue
            if column >= len(row):
                raise InputError(f"{path}:{n}: no column {column}")
            cell = row[column].strip()
            try:
                out.append(float(cell))
            except ValueError:
                if n == 1 and not out:
                    continue  # header line
                raise InputError(f"{path}:{n}: non-numeric value {cell!r}") from None
    return out


def _num(x: float):
    return x if math.isfinite(x) else ("inf" if x > 0 else "-inf")


def _run(args) -> tuple[int, str]:
    if args.group == "lattice":
        poset = _load_poset(args)
        if args.command in ("gen", "export"):
            return EXIT_OK, export_poset(poset, args.format)
        if args.command == "verify":
            report = verify_axioms(poset)
            out = report.to_dict()
            out["size"] = len(poset)
            out["atoms"] = sorted(poset.name(a) for a in poset.atoms())
            failed = not report.axioms_ok or (args.require_complete and not report.complete)
            return (EXIT_VERIFY if failed else EXIT_OK), json.dumps(out, indent=2) + "\n"
        if args.command == "complete":
            comp = dedekind_macneille(poset)
            if args.format == "json":
                return EXIT_OK, json.dumps(comp.to_dict(), indent=2) + "\n"
            lines = ["digraph completion {", "  rankdir=BT;", "  node [shape=box];"]
            for i in range(len(comp)):
                style = "" if comp.principal(i) is not None else ", style=dashed"
                label = comp.label(i).replace('"', '\\"')
                lines.append(f'  c{i} [label="{label}"{style}];')
            lines += [f"  c{i} -> c{j};" for i, j in comp.covers()]
            lines.append("}")
            return EXIT_OK, "\n".join(lines) + "\n"

    if args.group == "scop":
        if args.command == "build":
            return EXIT_OK, jsonio.dumps(_load_scop(args, printed=not args.computed))
        scop = _load_scop(args)
        if args.command == "rank":
            ranked = rank_exemplars(scop, args.context)
            if args.json:
                return EXIT_OK, json.dumps([{"exemplar": x, "frequency": f} for x, f in ranked], indent=2) + "\n"
            return EXIT_OK, "".join(f"{x} {display_round(f)}\n" for x, f in ranked)
        if args.command == "weights":
            props = [args.property] if args.property else list(scop.property_ids)
            weights = {a: core.property_weight(scop, args.state, a) for a in props}
            if args.json:
                return EXIT_OK, json.dumps(weights, indent=2) + "\n"
            return EXIT_OK, "".join(f"{a} {display_round(v)}\n" for a, v in weights.items())
        if args.command == "eigen":
            if args.state:
                value = core.is_eigenstate(scop, args.state, args.context)
                return EXIT_OK, (json.dumps(value) if args.json else str(value).lower()) + "\n"
            states = sorted(core.lambda_map(scop, args.context))
            return EXIT_OK, (json.dumps(states) + "\n") if args.json else "".join(s + "\n" for s in states)
        if args.command == "super":
            value = core.is_superposition_state(scop, args.state, _split_list(args.contexts))
            return EXIT_OK, (json.dumps(value) if args.json else str(value).lower()) + "\n"

    if args.group == "stats" and args.command == "ttest":
        res = paired_t_test(_read_numbers(args.a, args.column), _read_numbers(args.b, args.column))
        out = {"t": _num(res.t_statistic), "df": res.degrees_of_freedom,
               "p": res.p_value, "degenerate": res.degenerate}
        return EXIT_OK, json.dumps(out) + "\n"
    raise InputError(f"unhandled command {args.group} {getattr(args, 'command', '')}")


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code, text = _run(args)
        if args.out:
            Path(args.out).write_text(text, encoding="utf-8")
        else:
            sys.stdout.write(text)
    except (ScopError, OSError) as exc:
        print(f"scop: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

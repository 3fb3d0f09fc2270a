"""Command-line front end.

Subcommands: ``catalog``, ``relations``, ``validate-quandle``, ``colorings``,
``phi``, ``compare``, and ``matrix``.  Default output is human-readable;
``--format json`` emits a machine-readable document (command echo, inputs,
results, exit status) whose numbers round-trip exactly.  Exit codes: 0 on
success (compare verdicts are data, never exit codes), 2 for parse or
validation errors, 3 when an enumeration cap is exceeded, 4 for a non-unit
multiplier.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .catalog import CATALOG, catalog_entry, catalog_names
from .diagram import LinkDiagram, parse_pd_code, parse_relations_file
from .errors import (
    AxiomError,
    CapExceededError,
    DiagramError,
    InputError,
    NotAUnitError,
    QuandleColorError,
    UnknownLinkError,
)
from .invariants import all_colorings, compare, counting_invariant, phi_polynomial
from .presentation import extract
from .quandle import AlexanderParams, FiniteQuandle, alexander, parse_quandle_file
from .solver import DEFAULT_CAP, build_system, system_smith_form


class UsageError(QuandleColorError):
    """Bad flag combination; maps to exit code 2."""


def _resolve_link(target: str) -> tuple[str, LinkDiagram]:
    """A link argument is a catalog name or a path to a relations/PD file."""
    if target in CATALOG:
        return target, CATALOG[target].diagram
    path = Path(target)
    if path.is_file():
        text = path.read_text(encoding="utf-8")
        body = "\n".join(
            line.split("#", 1)[0] for line in text.splitlines()
        ).lstrip()
        if body.startswith(("X(", "x(")):
            return target, parse_pd_code(text)
        return target, parse_relations_file(text)
    raise UnknownLinkError(f"{target!r} is neither a catalog name nor a readable file")


def _resolve_quandle(args) -> tuple[FiniteQuandle, dict]:
    has_params = args.n is not None or args.t is not None
    if args.quandle_file is not None:
        if has_params:
            raise UsageError("give either --n/--t or --quandle-file, not both")
        text = Path(args.quandle_file).read_text(encoding="utf-8")
        return parse_quandle_file(text), {"quandle_file": args.quandle_file}
    if args.n is None or args.t is None:
        raise UsageError("need both --n and --t (or a --quandle-file)")
    return alexander(args.n, args.t), {"n": args.n, "t": args.t}


def _emit(args, doc: dict, human: list[str]) -> None:
    if args.format == "json":
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        for line in human:
            print(line)


def _document(command: str, inputs: dict, results: dict) -> dict:
    return {"command": command, "inputs": inputs, "results": results, "exit_status": 0}


def cmd_catalog(args) -> int:
    rows = []
    human = []
    for name in catalog_names():
        entry = catalog_entry(name)
        d = entry.diagram
        rows.append(
            {
                "name": name,
                "arcs": d.arc_count,
                "crossings": d.crossing_count,
                "components": entry.expected_components,
            }
        )
        human.append(
            f"{name} {d.arc_count} arcs {d.crossing_count} crossings "
            f"{entry.expected_components} components"
        )
    _emit(args, _document("catalog", {}, {"links": rows}), human)
    return 0


def cmd_relations(args) -> int:
    name, diagram = _resolve_link(args.link)
    text = diagram.render_relations()
    doc = _document("relations", {"link": name}, {"relations": text})
    _emit(args, doc, [text.rstrip("\n")])
    return 0


def cmd_validate_quandle(args) -> int:
    text = Path(args.file).read_text(encoding="utf-8")
    q = parse_quandle_file(text)
    involutory = q.is_involutory()
    doc = _document(
        "validate-quandle",
        {"file": args.file},
        {"valid": True, "order": q.order, "involutory": involutory},
    )
    human = [
        f"valid quandle of order {q.order} "
        f"(involutory: {'yes' if involutory else 'no'})"
    ]
    _emit(args, doc, human)
    return 0


def cmd_colorings(args) -> int:
    name, diagram = _resolve_link(args.link)
    p = extract(diagram)
    q, quandle_inputs = _resolve_quandle(args)
    inputs = {"link": name, "cap": args.cap, **quandle_inputs}
    results: dict = {}
    human: list[str] = []
    if args.enumerate:
        colorings = all_colorings(p, q, args.cap)
        count = len(colorings)
        results["colorings"] = [list(c.colors) for c in colorings]
    else:
        count = counting_invariant(p, q, args.cap)
    results["count"] = count
    human.append(f"count: {count}")
    if args.enumerate:
        for c in results["colorings"]:
            human.append(" ".join(str(v) for v in c))
    _emit(args, _document("colorings", inputs, results), human)
    return 0


def cmd_phi(args) -> int:
    name, diagram = _resolve_link(args.link)
    p = extract(diagram)
    if args.n is None or args.t is None:
        raise UsageError("phi needs both --n and --t")
    q = alexander(args.n, args.t)
    poly = phi_polynomial(p, q, args.cap)
    inputs = {"link": name, "n": args.n, "t": args.t, "cap": args.cap}
    results = {"terms": [list(term) for term in poly.terms], "count": poly.total()}
    _emit(args, _document("phi", inputs, results), [str(poly)])
    return 0


def _parse_n_list(text: str) -> list[int]:
    try:
        values = [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise UsageError(f"--n expects integers like '2,3,5,7', got {text!r}") from None
    if not values:
        raise UsageError("--n expects at least one modulus")
    if min(values) < 2:
        raise UsageError("moduli must be >= 2")
    return values


def _parse_t_policy(text: str):
    if text in ("all-units", "involutory"):
        return text
    try:
        return int(text)
    except ValueError:
        raise UsageError(
            f"--t expects 'all-units', 'involutory', or an integer, got {text!r}"
        ) from None


def cmd_compare(args) -> int:
    name_a, diagram_a = _resolve_link(args.link_a)
    name_b, diagram_b = _resolve_link(args.link_b)
    n_values = _parse_n_list(args.n)
    policy = _parse_t_policy(args.t)
    report = compare(
        extract(diagram_a),
        extract(diagram_b),
        n_values,
        t_policy=policy,
        cap=args.cap,
        link_a=name_a,
        link_b=name_b,
    )
    inputs = {
        "link_a": name_a,
        "link_b": name_b,
        "n": n_values,
        "t_policy": str(policy),
        "cap": args.cap,
    }
    human = [f"compare {name_a} vs {name_b}"]
    for cell in report.grid:
        phi_a = "-" if cell.phi_a is None else str(cell.phi_a)
        phi_b = "-" if cell.phi_b is None else str(cell.phi_b)
        human.append(
            f"n={cell.n} t={cell.t} count_a={cell.count_a} count_b={cell.count_b} "
            f"phi_a=({phi_a}) phi_b=({phi_b})"
        )
    human.append(f"verdict: {report.verdict}")
    _emit(args, _document("compare", inputs, report.to_dict()), human)
    return 0


def cmd_matrix(args) -> int:
    name, diagram = _resolve_link(args.link)
    if args.n is None or args.t is None:
        raise UsageError("matrix needs both --n and --t")
    params = AlexanderParams(args.n, args.t)
    system = build_system(extract(diagram), params)
    snf = system_smith_form(system)
    reduced = snf.diagonal_matrix()

    def block(matrix) -> list[str]:
        lines = [f"{system.rows} {system.cols} {params.n} {params.t}"]
        lines.extend(" ".join(str(v) for v in row) for row in matrix)
        return lines

    human = block(system.matrix) + [""] + block(reduced)
    doc = _document(
        "matrix",
        {"link": name, "n": args.n, "t": args.t},
        {
            "rows": system.rows,
            "cols": system.cols,
            "matrix": [list(r) for r in system.matrix],
            "reduced": [list(r) for r in reduced],
            "diagonal": list(snf.diagonal),
        },
    )
    _emit(args, doc, human)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quandlecolor",
        description="Quandle coloring invariants of oriented link diagrams.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_common(sp, link_args=1, quandle=False, phi_style=False, cap=True):
        if link_args == 1:
            sp.add_argument("link", help="catalog name or relations/PD file path")
        elif link_args == 2:
            sp.add_argument("link_a")
            sp.add_argument("link_b")
        if quandle or phi_style:
            sp.add_argument("--n", type=int, default=None, help="modulus of Z_n")
            sp.add_argument("--t", type=int, default=None, help="unit multiplier t")
        if quandle:
            sp.add_argument(
                "--quandle-file", default=None, help="path to a quandle table file"
            )
        if cap:
            sp.add_argument(
                "--cap",
                type=int,
                default=DEFAULT_CAP,
                help=f"enumeration cap (default {DEFAULT_CAP})",
            )
        sp.add_argument(
            "--format",
            choices=("text", "json"),
            default="text",
            help="output format (default text)",
        )

    sp = sub.add_parser("catalog", help="list the built-in links")
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.set_defaults(func=cmd_catalog)

    sp = sub.add_parser("relations", help="print a link's crossing relations")
    add_common(sp, cap=False)
    sp.set_defaults(func=cmd_relations)

    sp = sub.add_parser("validate-quandle", help="check a quandle table file")
    sp.add_argument("file")
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.set_defaults(func=cmd_validate_quandle)

    sp = sub.add_parser("colorings", help="count (and list) colorings of a link")
    add_common(sp, quandle=True)
    sp.add_argument(
        "--enumerate", action="store_true", help="also list the assignments"
    )
    sp.set_defaults(func=cmd_colorings)

    sp = sub.add_parser("phi", help="enhanced coloring polynomial of a link")
    add_common(sp, phi_style=True)
    sp.set_defaults(func=cmd_phi)

    sp = sub.add_parser("compare", help="sweep two links over an (n, t) grid")
    add_common(sp, link_args=2)
    sp.add_argument("--n", required=True, help="comma-separated moduli, e.g. 2,3,5,7")
    sp.add_argument(
        "--t",
        default="all-units",
        help="'all-units', 'involutory', or a fixed integer t (default all-units)",
    )
    sp.set_defaults(func=cmd_compare)

    sp = sub.add_parser("matrix", help="dump the coloring system before/after reduction")
    add_common(sp, phi_style=True, cap=False)
    sp.set_defaults(func=cmd_matrix)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NotAUnitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (InputError, DiagramError, UnknownLinkError, AxiomError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry_point() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry_point()

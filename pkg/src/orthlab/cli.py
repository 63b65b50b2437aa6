"""Command line front end.

Sources are file paths or generator references like ``gen:boolean:4``,
``gen:mo:2``, ``gen:random:6:0.5:42``.  Reports are plain text, one
finding per line, tab separated.  Exit codes: 0 success (and the checked
property holds), 1 a checked property fails, 2 invalid input, 3 budget
or capacity exceeded.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import catalog
from .axioms import (Certificate, check_boolean, check_covering_law, check_irreducible,
                     check_orthomodular, find_compatible_orthocomplementation)
from .closure import LatticeElement
from .dot import export_dot
from .errors import (BudgetExceededError, CapacityError, CouldNotSeparateError,
                     InvalidInstanceError, OrthlabError, ParseError)
from .formats import (format_atom_set, parse_ppl, parse_statespace, sniff_format)
from .products import minimal_product, separated_product
from .search import parse_search_spec, render_report, run_search
from .statespace import PPL, StateSpace, property_lattice, validate_state_space
from .symmetry import DEFAULT_BUDGET, enumerate_symmetries, is_plane_transitive

EXIT_OK = 0
EXIT_PROPERTY_FAILS = 1
EXIT_INVALID_INPUT = 2
EXIT_RESOURCE = 3


def default_budget() -> int:
    env = os.environ.get("ORTHLAB_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


def load_source(src: str, *, validate: bool = True) -> StateSpace | PPL:
    if src.startswith("gen:"):
        return catalog.from_spec(src[4:])
    text = Path(src).read_text()
    kind = sniff_format(text)
    if kind == "statespace":
        return parse_statespace(text, validate=validate)
    if kind == "ppl":
        return parse_ppl(text, validate=validate)
    raise ParseError(f"unrecognized document type {kind!r}", 1, 1)


def as_ppl(obj: StateSpace | PPL) -> PPL:
    return property_lattice(obj) if isinstance(obj, StateSpace) else obj


def _cert_text(cert: Certificate, labels: tuple[str, ...]) -> str:
    cols = [cert.kind]
    for name, val in cert.parts:
        mask = val.atoms.bits if isinstance(val, LatticeElement) else val.bits
        cols.append(f"{name}={format_atom_set(mask, labels)}")
    return "\t".join(cols)


def _axiom_lines(ppl: PPL) -> tuple[list[str], bool]:
    """Report lines for the axiom suite and whether the core axioms hold.

    Orthocomplementation, orthomodularity, and the covering law decide the
    exit status; Booleanness and irreducibility are classification only.
    """
    labels = ppl.labels
    lines = []
    oc = find_compatible_orthocomplementation(ppl)
    core_ok = True
    if isinstance(oc, Certificate):
        core_ok = False
        lines.append(f"orthocomplementation\tfail\t{_cert_text(oc, labels)}")
        lines.append("orthomodular\tskip\tno orthocomplementation")
    else:
        lines.append("orthocomplementation\tpass")
        om = check_orthomodular(ppl, oc)
        if om.holds:
            lines.append("orthomodular\tpass")
        else:
            core_ok = False
            lines.append(f"orthomodular\tfail\t{_cert_text(om.certificate, labels)}")
    cov = check_covering_law(ppl.cs)
    if cov.holds:
        lines.append("covering\tpass")
    else:
        core_ok = False
        lines.append(f"covering\tfail\t{_cert_text(cov.certificate, labels)}")
    if isinstance(oc, Certificate):
        lines.append("boolean\tskip\tno orthocomplementation")
        lines.append("irreducible\tskip\tno orthocomplementation")
    else:
        bo = check_boolean(ppl.cs, oc)
        lines.append("boolean\tpass" if bo.holds
                     else f"boolean\tfail\t{_cert_text(bo.certificate, labels)}")
        ir = check_irreducible(ppl, oc)
        lines.append("irreducible\tpass" if ir.holds
                     else f"irreducible\tfail\t{_cert_text(ir.certificate, labels)}")
    return lines, core_ok


def cmd_validate(args) -> int:
    obj = load_source(args.src, validate=False)
    report = validate_state_space(obj) if isinstance(obj, StateSpace) else obj.validate()
    labels = obj.labels
    for c in report.checks:
        if c.ok:
            print(f"{c.name}\tpass")
        else:
            witness = "\t".join(labels[i] for i in c.witness) if c.witness else ""
            print(f"{c.name}\tfail" + (f"\t{witness}" if witness else ""))
    return EXIT_OK if report.ok else EXIT_PROPERTY_FAILS


def cmd_lattice(args) -> int:
    ppl = as_ppl(load_source(args.src))
    if args.dot:
        sys.stdout.write(export_dot(ppl.cs, ppl.labels))
        return EXIT_OK
    print(f"atoms\t{ppl.n}")
    print(f"elements\t{len(ppl.cs)}")
    for i, m in enumerate(ppl.cs.masks):
        print(f"element\t{i}\t{format_atom_set(m, ppl.labels)}")
    return EXIT_OK


def cmd_axioms(args) -> int:
    ppl = as_ppl(load_source(args.src))
    lines, core_ok = _axiom_lines(ppl)
    for line in lines:
        print(line)
    return EXIT_OK if core_ok else EXIT_PROPERTY_FAILS


def cmd_product(args) -> int:
    a = load_source(args.src1)
    b = load_source(args.src2)
    if args.separated:
        if not (isinstance(a, StateSpace) and isinstance(b, StateSpace)):
            raise ParseError("--separated needs two state spaces", 0, 0)
        ppl = property_lattice(separated_product(a, b))
    else:
        ppl = minimal_product(as_ppl(a), as_ppl(b))
    if args.dot:
        sys.stdout.write(export_dot(ppl.cs, ppl.labels))
        return EXIT_OK
    print(f"atoms\t{ppl.n}")
    print(f"elements\t{len(ppl.cs)}")
    if args.axioms:
        lines, core_ok = _axiom_lines(ppl)
        for line in lines:
            print(line)
        return EXIT_OK if core_ok else EXIT_PROPERTY_FAILS
    return EXIT_OK


def cmd_plane(args) -> int:
    ppl = as_ppl(load_source(args.src))
    report = is_plane_transitive(ppl, budget=args.budget)
    print(f"plane-transitive\t{'true' if report.transitive else 'false'}")
    if report.note:
        print(f"note\t{report.note}")
    if report.transitive and args.witnesses:
        for w in report.witnesses:
            images = " ".join(ppl.labels[t] for t in w.f.perm)
            print(f"witness\t{ppl.labels[w.p]}\t{ppl.labels[w.q]}"
                  f"\t{ppl.labels[w.p1]}\t{ppl.labels[w.p2]}\t{images}")
    if not report.transitive and report.failing_pair is not None:
        p, q = report.failing_pair
        print(f"failing-pair\t{ppl.labels[p]}\t{ppl.labels[q]}")
    return EXIT_OK if report.transitive else EXIT_PROPERTY_FAILS


def cmd_symmetries(args) -> int:
    ppl = as_ppl(load_source(args.src))
    count = 0
    for sym in enumerate_symmetries(ppl, budget=args.budget):
        count += 1
        if not args.count_only:
            print("symmetry\t" + " ".join(ppl.labels[t] for t in sym.perm))
    print(f"count\t{count}")
    return EXIT_OK


def cmd_search(args) -> int:
    spec = parse_search_spec(Path(args.specfile).read_text())
    report = run_search(spec)
    sys.stdout.write(render_report(report))
    return EXIT_PROPERTY_FAILS if report.hits else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orthlab",
        description="finite orthogonality spaces, property lattices, and their symmetries")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check the axioms of a source")
    p.add_argument("src")
    p.set_defaults(fn=cmd_validate)

    p = sub.add_parser("lattice", help="list the closed sets (or emit DOT)")
    p.add_argument("src")
    p.add_argument("--dot", action="store_true")
    p.set_defaults(fn=cmd_lattice)

    p = sub.add_parser("axioms", help="run the lattice axiom suite")
    p.add_argument("src")
    p.set_defaults(fn=cmd_axioms)

    p = sub.add_parser("product", help="build a product of two sources")
    p.add_argument("src1")
    p.add_argument("src2")
    kind = p.add_mutually_exclusive_group(required=True)
    kind.add_argument("--separated", action="store_true")
    kind.add_argument("--minimal", action="store_true")
    p.add_argument("--axioms", action="store_true")
    p.add_argument("--dot", action="store_true")
    p.set_defaults(fn=cmd_product)

    p = sub.add_parser("plane", help="decide plane transitivity")
    p.add_argument("src")
    p.add_argument("--witnesses", action="store_true")
    p.add_argument("--budget", type=int, default=None)
    p.set_defaults(fn=cmd_plane)

    p = sub.add_parser("symmetries", help="enumerate the symmetry group")
    p.add_argument("src")
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--budget", type=int, default=None)
    p.set_defaults(fn=cmd_symmetries)

    p = sub.add_parser("search", help="run a seeded counterexample search")
    p.add_argument("specfile")
    p.set_defaults(fn=cmd_search)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "budget", None) is None and hasattr(args, "budget"):
        args.budget = default_budget()
    try:
        return args.fn(args)
    except (ParseError, InvalidInstanceError, CouldNotSeparateError,
            FileNotFoundError, ValueError) as exc:
        print(f"error\t{exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT
    except (CapacityError, BudgetExceededError) as exc:
        print(f"error\t{exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

"""graphs: enumeration, automorphisms, cuts, validation and canonical forms."""
import argparse

from hopfflow.cli.output import CommandResult
from hopfflow.graphs.canonical import canonicalize
from hopfflow.graphs.combinatorial import validate_graph
from hopfflow.graphs.cuts import apply_cut, enumerate_cuts
from hopfflow.graphs.enumeration import enumerate_graph_classes
from hopfflow.graphs.io import graph_document, load_graph
from hopfflow.graphs.structure import classify


def enumerate_command(args: argparse.Namespace) -> CommandResult:
    forms = enumerate_graph_classes(args.max_edges, args.valence, args.max_classes)
    document = [
        {"key": form.key, "automorphisms": form.automorphisms, "graph": graph_document(form.graph)}
        for form in forms
    ]
    lines = [f"{len(forms)} classes with at most {args.max_edges} edges"]
    lines += [f"  {form.key.decode()}  |Aut| = {form.automorphisms}" for form in forms]
    return CommandResult(document=document, text="\n".join(lines))


def aut_command(args: argparse.Namespace) -> CommandResult:
    form = canonicalize(load_graph(args.input))
    return CommandResult(
        document={"automorphisms": form.automorphisms, "key": form.key},
        text=str(form.automorphisms),
    )


def cuts_command(args: argparse.Namespace) -> CommandResult:
    graph = load_graph(args.input)
    document, lines = [], []
    for cut in enumerate_cuts(graph):
        upper, lower = apply_cut(graph, cut)
        document.append({
            "upper_vertices": sorted(cut.upper_vertices),
            "lower_vertices": sorted(cut.lower_vertices),
            "upper": graph_document(upper),
            "lower": graph_document(lower),
        })
        lines.append(f"  upper {sorted(cut.upper_vertices)} | lower {sorted(cut.lower_vertices)}")
    return CommandResult(document=document, text="\n".join([f"{len(document)} cuts"] + lines))


def validate_command(args: argparse.Namespace) -> CommandResult:
    graph = load_graph(args.input)
    report = validate_graph(graph)
    document = {"valid": report.valid, "violations": [v.model_dump() for v in report.violations]}
    if report.valid:
        document["classification"] = classify(graph).model_dump()
        return CommandResult(document=document, text="valid")
    lines = ["invalid"] + [f"  [{v.code}] {v.message}" for v in report.violations]
    return CommandResult(document=document, text="\n".join(lines), exit_code=1)


def canonical_command(args: argparse.Namespace) -> CommandResult:
    form = canonicalize(load_graph(args.input))
    return CommandResult(
        document={"key": form.key, "automorphisms": form.automorphisms, "graph": graph_document(form.graph)},
        text=form.key.decode(),
    )


def register(subparsers) -> None:
    parser = subparsers.add_parser("graphs", help="Combinatorial graphs")
    commands = parser.add_subparsers(dest="action", required=True)

    p = commands.add_parser("enumerate", help="List isomorphism classes of tail-free graphs")
    p.add_argument("--max-edges", type=int, required=True)
    p.add_argument("--valence", type=int, action="append", help="Allowed vertex valence; repeatable")
    p.add_argument("--max-classes", type=int, default=None)
    p.set_defaults(handler=enumerate_command)

    for name, handler, text in (
        ("aut", aut_command, "Automorphism count"),
        ("cuts", cuts_command, "All cuts of an oriented graph"),
        ("validate", validate_command, "Check the graph invariants"),
        ("canonical", canonical_command, "Canonical key and representative"),
    ):
        p = commands.add_parser(name, help=text)
        p.add_argument("--in", dest="input", required=True)
        p.set_defaults(handler=handler)

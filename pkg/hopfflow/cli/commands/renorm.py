"""renorm: Birkhoff decomposition of a character on chosen graph classes."""
import argparse

from hopfflow.cli.output import CommandResult
from hopfflow.core.exceptions import CharacterError
from hopfflow.graphs.io import load_graph
from hopfflow.hopf.algebra import FAMILIES, HopfElement, get_family
from hopfflow.renorm.birkhoff import birkhoff, regularized_value, verify_birkhoff
from hopfflow.renorm.characters import key_of, make_toy_character
from hopfflow.renorm.laurent import make_algebra
from hopfflow.schemas.character import CharacterFile
from hopfflow.schemas.graph import GraphFile
from hopfflow.schemas.model import ModelFile
from hopfflow.utils.files import load_model
from hopfflow.utils.rationals import format_rational


def birkhoff_command(args: argparse.Namespace) -> CommandResult:
    family = get_family(args.hopf_family)
    graphs = [load_graph(path) for path in args.input or []]
    if args.character:
        document = load_model(args.character, CharacterFile)
        phi = document.to_map()
        degree = args.degree if args.degree is not None else document.degree_bound
        if not graphs:
            graphs = [entry.graph.to_graph() for entry in document.values]
    else:
        model = load_model(args.model, ModelFile).to_model() if args.model else None
        phi = make_toy_character(args.rule, make_algebra(args.scheme), model)
        degree = args.degree
    if not graphs:
        raise CharacterError("No graph classes to decompose; pass --in or list values in the character file")
    for graph in graphs:
        family.require(graph)

    result = birkhoff(phi, degree, family.name)
    rows, lines = [], []
    for graph in graphs:
        x = HopfElement.from_graph(graph, family=family.name)
        value = regularized_value(result.plus, x)
        rows.append({
            "graph": GraphFile.from_graph(graph).to_document(),
            "phi": phi(x).to_document(),
            "minus": result.minus(x).to_document(),
            "plus": result.plus(x).to_document(),
            "regularized": None if value is None else format_rational(value),
        })
        lines.append(f"{len(graph.vertices)} vertices, {len(graph.flags)} flags: "
                     f"phi_- = {result.minus(x)}, phi_+ = {result.plus(x)}, "
                     f"regularized = {'undefined' if value is None else format_rational(value)}")
    report = verify_birkhoff(result, [key_of(g) for g in graphs])
    lines.append("verification: " + ("passed" if report.passed else "FAILED"))
    return CommandResult(
        document={"classes": rows, "verification": {**report.model_dump(), "passed": report.passed}},
        text="\n".join(lines),
        exit_code=0 if report.passed else 1,
    )


def register(subparsers) -> None:
    parser = subparsers.add_parser("renorm", help="Renormalization by Birkhoff decomposition")
    commands = parser.add_subparsers(dest="action", required=True)

    p = commands.add_parser("birkhoff", help="phi = phi_-^{*-1} * phi_+ on the given classes")
    p.add_argument("--hopf-family", choices=sorted(FAMILIES), default="oriented")
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument("--character", help="Character file")
    source.add_argument("--rule", choices=["unit", "edges", "weight"], help="Toy character rule")
    p.add_argument("--model", help="Toy model for the weight rule")
    p.add_argument("--scheme", choices=["laurent", "complementary"], default="laurent")
    p.add_argument("--degree", type=int, default=None)
    p.add_argument("--in", dest="input", action="append", help="Graph file; repeatable")
    p.set_defaults(handler=birkhoff_command)

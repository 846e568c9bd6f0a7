"""hopf: coproduct, antipode and the bialgebra law checks on one graph."""
import argparse

from hopfflow.cli.output import CommandResult
from hopfflow.graphs.io import load_graph
from hopfflow.hopf.algebra import FAMILIES, HopfElement, antipode, coproduct
from hopfflow.hopf.laws import antipode_sides, coassociativity_sides, counit_sides
from hopfflow.schemas.hopf import element_document, tensor_document


def _element(args: argparse.Namespace) -> HopfElement:
    return HopfElement.from_graph(load_graph(args.input), family=args.family)


def coproduct_command(args: argparse.Namespace) -> CommandResult:
    delta = coproduct(_element(args))
    document = tensor_document(delta.items())
    return CommandResult(document=document, text=f"{len(document)} terms in the coproduct")


def antipode_command(args: argparse.Namespace) -> CommandResult:
    s = antipode(_element(args), args.degree)
    document = element_document(s)
    lines = [f"{len(document)} terms in the antipode"]
    lines += [f"  {term['coeff']} x graph with {len(term['graph'].get('vertices', []))} vertices" for term in document]
    return CommandResult(document=document, text="\n".join(lines))


def laws_command(args: argparse.Namespace) -> CommandResult:
    x = _element(args)
    left, right = coassociativity_sides(x)
    counit_left, counit_right = counit_sides(x)
    s_left, s_right, unit_counit = antipode_sides(x, args.degree)
    checks = {
        "coassociativity": left == right,
        "counit": counit_left == x and counit_right == x,
        "antipode": s_left == unit_counit and s_right == unit_counit,
    }
    lines = [f"{name}: {'holds' if ok else 'FAILS'}" for name, ok in checks.items()]
    return CommandResult(document=checks, text="\n".join(lines), exit_code=0 if all(checks.values()) else 1)


def register(subparsers) -> None:
    parser = subparsers.add_parser("hopf", help="Graph Hopf algebra operations")
    commands = parser.add_subparsers(dest="action", required=True)
    for name, handler, text in (
        ("coproduct", coproduct_command, "Cut coproduct of a graph"),
        ("antipode", antipode_command, "Antipode of a graph"),
        ("laws", laws_command, "Check coassociativity, counit and antipode laws on a graph"),
    ):
        p = commands.add_parser(name, help=text)
        p.add_argument("--in", dest="input", required=True)
        p.add_argument("--family", choices=sorted(FAMILIES), default="oriented")
        p.add_argument("--degree", type=int, default=None, help="Degree bound for the antipode recursion")
        p.set_defaults(handler=handler)

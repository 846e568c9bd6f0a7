"""prim: evaluate, validate, normalize and compose flowcharts."""
import argparse
from typing import List

from hopfflow.cli.output import CommandResult
from hopfflow.prim.evaluation import evaluate
from hopfflow.prim.flowchart import validate_flowchart
from hopfflow.prim.transform import compose_programs, flowchart_canonical_form, normalize
from hopfflow.schemas.flowchart import FlowchartFile
from hopfflow.utils.files import load_model


def int_list(text: str) -> List[int]:
    """Parse "4,3" into [4, 3]; an empty string is the empty argument list."""
    try:
        values = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if any(v < 0 for v in values):
        raise argparse.ArgumentTypeError("arguments are natural numbers")
    return values


def _chart(path: str):
    return load_model(path, FlowchartFile).to_flowchart()


def eval_command(args: argparse.Namespace) -> CommandResult:
    values = evaluate(_chart(args.input), args.args, args.budget)
    return CommandResult(document=list(values), text=",".join(str(v) for v in values))


def validate_command(args: argparse.Namespace) -> CommandResult:
    report = validate_flowchart(_chart(args.input))
    document = {"valid": report.valid, "issues": [issue.model_dump() for issue in report.issues]}
    if report.valid:
        return CommandResult(document=document, text="valid")
    lines = ["invalid"] + [f"  [{issue.code}] {issue.message}" for issue in report.issues]
    return CommandResult(document=document, text="\n".join(lines), exit_code=1)


def normalize_command(args: argparse.Namespace) -> CommandResult:
    chart = normalize(_chart(args.input))
    document = FlowchartFile.from_flowchart(chart).to_document()
    return CommandResult(
        document=document,
        text=f"{len(chart.graph.vertices)} vertices after normalization\n{flowchart_canonical_form(chart).decode()}",
    )


def compose_command(args: argparse.Namespace) -> CommandResult:
    chart = compose_programs([_chart(path) for path in args.input])
    document = FlowchartFile.from_flowchart(chart).to_document()
    return CommandResult(document=document, text=f"composed {len(args.input)} programs into "
                                                 f"{len(chart.graph.vertices)} vertices")


def register(subparsers) -> None:
    parser = subparsers.add_parser("prim", help="Prim flowcharts")
    commands = parser.add_subparsers(dest="action", required=True)

    p = commands.add_parser("eval", help="Evaluate a closed flowchart")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--args", type=int_list, required=True, help='Comma-separated naturals, e.g. "4,3"')
    p.add_argument("--budget", type=int, default=None, help="Step budget per call")
    p.set_defaults(handler=eval_command)

    for name, handler, text in (
        ("validate", validate_command, "Check the flowchart invariants"),
        ("normalize", normalize_command, "Contract mergeable c-c and b-b edges"),
    ):
        p = commands.add_parser(name, help=text)
        p.add_argument("--in", dest="input", required=True)
        p.set_defaults(handler=handler)

    p = commands.add_parser("compose", help="Sequential composition, first program innermost")
    p.add_argument("--in", dest="input", action="append", required=True, help="Program file; repeatable")
    p.set_defaults(handler=compose_command)

"""feynman: toy-model partition, connected and tree series, Wick moments."""
import argparse

from hopfflow.cli.output import CommandResult
from hopfflow.feynman.partition import (
    connected_series, partition_series_graphs, partition_series_wick,
)
from hopfflow.feynman.quadrature import numeric_gaussian_check
from hopfflow.feynman.series import difference_report
from hopfflow.feynman.trees import tree_identity_report
from hopfflow.feynman.wick import wick_expansion, wick_moment
from hopfflow.schemas.model import ModelFile
from hopfflow.utils.files import load_model


def _model(args: argparse.Namespace):
    return load_model(args.model, ModelFile).to_model()


def series_command(args: argparse.Namespace) -> CommandResult:
    model = _model(args)
    document = {}
    if args.method in ("graphs", "both"):
        document["graphs"] = partition_series_graphs(model, args.order)
    if args.method in ("wick", "both"):
        document["wick"] = partition_series_wick(model, args.order)
    diff = difference_report(document["graphs"], document["wick"]) if args.method == "both" else None
    lines = [f"{name}: {series}" for name, series in document.items()]
    result = {name: series.to_document() for name, series in document.items()}
    if diff is not None:
        result["diff"] = diff
        lines.append("diff: empty" if not diff else f"diff: {len(diff)} mismatching terms")
        lines += [f"  {d['monomial']} lambda^{d['lambda']}: {d['left']} != {d['right']}" for d in diff]
    return CommandResult(document=result, text="\n".join(lines), exit_code=1 if diff else 0)


def connected_command(args: argparse.Namespace) -> CommandResult:
    series = connected_series(_model(args), args.order)
    return CommandResult(document=series.to_document(), text=str(series))


def trees_command(args: argparse.Namespace) -> CommandResult:
    report = tree_identity_report(_model(args), args.order, args.convention)
    lines = [f"convention {report.adopted}: {'passed' if report.passed else 'FAILED'}"]
    for name, outcome in sorted(report.outcomes.items()):
        lines.append(f"  {name}: critical value identity {outcome.critical_value_identity}, "
                     f"derivative identity {outcome.derivative_identity}")
    return CommandResult(
        document={**report.model_dump(), "passed": report.passed},
        text="\n".join(lines),
        exit_code=0 if report.passed else 1,
    )


def wick_command(args: argparse.Namespace) -> CommandResult:
    model = _model(args)
    indices = [x.strip() for x in args.indices.split(",") if x.strip()]
    moment = wick_moment(indices, model, args.lambda_mode)
    document = {
        "indices": indices,
        "moment": moment.to_document(),
        "expansion": [[list(pair) for pair in term] for term in wick_expansion(indices)],
    }
    lines = [f"<{' '.join(indices)}> = {moment}", f"{len(document['expansion'])} pairings"]
    exit_code = 0
    if args.numeric:
        check = numeric_gaussian_check(indices, model)
        document["numeric"] = check.model_dump()
        lines.append(f"numeric {check.numeric:.12g} vs exact {check.exact:.12g}: "
                     f"{'passed' if check.passed else 'FAILED'}")
        exit_code = 0 if check.passed else 1
    return CommandResult(document=document, text="\n".join(lines), exit_code=exit_code)


def register(subparsers) -> None:
    parser = subparsers.add_parser("feynman", help="Toy-model perturbation series")
    commands = parser.add_subparsers(dest="action", required=True)

    def with_model(name: str, text: str):
        p = commands.add_parser(name, help=text)
        p.add_argument("--model", required=True)
        return p

    p = with_model("series", "Partition function up to a weight")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--method", choices=["graphs", "wick", "both"], default="graphs")
    p.set_defaults(handler=series_command)

    p = with_model("connected", "Connected graph sum, log Z")
    p.add_argument("--order", type=int, required=True)
    p.set_defaults(handler=connected_command)

    p = with_model("trees", "Tree sums against the critical value of the action")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--convention", choices=["unit", "scaled"], default=None)
    p.set_defaults(handler=trees_command)

    p = with_model("wick", "Gaussian moment of a product of field coordinates")
    p.add_argument("--indices", required=True, help='Comma-separated colors, e.g. "a,a,b,b"')
    p.add_argument("--lambda-mode", choices=["formal", "unit"], default="formal")
    p.add_argument("--numeric", action="store_true", help="Cross-check by quadrature")
    p.set_defaults(handler=wick_command)

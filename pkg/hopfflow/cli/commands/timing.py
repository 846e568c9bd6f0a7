"""time: critical-path running time of flowcharts and directed graphs."""
import argparse

from hopfflow.cli.output import CommandResult
from hopfflow.graphs.io import load_graph
from hopfflow.schemas.flowchart import FlowchartFile
from hopfflow.schemas.sequence import CostsFile
from hopfflow.sequences.timing import cut_timing_report, running_time
from hopfflow.utils.files import load_model


def flowchart_command(args: argparse.Namespace) -> CommandResult:
    chart = load_model(args.input, FlowchartFile).to_flowchart()
    costs = load_model(args.costs, CostsFile).costs
    value = running_time(chart, costs).value
    return CommandResult(document={"running_time": value}, text=f"{value:g}")


def graph_command(args: argparse.Namespace) -> CommandResult:
    graph = load_graph(args.input)
    costs = load_model(args.costs, CostsFile).costs
    value = running_time(graph, costs).value
    document = {"running_time": value}
    lines = [f"{value:g}"]
    if args.cuts:
        rows = cut_timing_report(graph, costs)
        document["cuts"] = [{**row.model_dump(), "bounded": row.bounded, "equality": row.equality} for row in rows]
        lines += [f"  upper {row.upper_vertices}: {row.total:g} <= {row.upper:g} + {row.lower:g}"
                  f"{' (equality)' if row.equality else ''}" for row in rows]
    return CommandResult(document=document, text="\n".join(lines))


def register(subparsers) -> None:
    parser = subparsers.add_parser("time", help="Max-plus running time")
    commands = parser.add_subparsers(dest="action", required=True)

    p = commands.add_parser("flowchart", help="Running time of a flowchart")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--costs", required=True)
    p.set_defaults(handler=flowchart_command)

    p = commands.add_parser("graph", help="Running time of a directed graph")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--costs", required=True)
    p.add_argument("--cuts", action="store_true", help="Report T(upper) + T(lower) for every proper cut")
    p.set_defaults(handler=graph_command)

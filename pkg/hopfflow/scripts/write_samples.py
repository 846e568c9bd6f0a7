"""
Write a set of sample input files for the command line.

Usage:
    python -m hopfflow.scripts.write_samples ./samples
"""
import sys
from pathlib import Path

# Add project root to path
project_root = Path(__file__).parent.parent.parent
sys.path.insert(0, str(project_root))

from hopfflow.graphs.io import graph_document
from hopfflow.graphs.library import STANDARD_GRAPHS
from hopfflow.prim.builder import (
    addition_term, build_flowchart, multiplication_term, shifted_addition_term, successor_chart,
)
from hopfflow.schemas.flowchart import FlowchartFile
from hopfflow.sequences.oracles import harmonic_sequence
from hopfflow.utils.files import write_json

MODELS = {
    "c3": {"colors": ["a"], "g": [["1"]], "C": {"a,a,a": "1"}},
    "c1c3": {"colors": ["a"], "g": [["1"]], "C": {"a": "1", "a,a,a": "1"}},
    "two_colors": {"colors": ["a", "b"], "g": [["2", "1"], ["1", "2"]], "C": {"a,b,b": "1/2"}},
}

CHARTS = {
    "successor": successor_chart,
    "addition": lambda: build_flowchart(addition_term()),
    "shifted_addition": lambda: build_flowchart(shifted_addition_term()),
    "multiplication": lambda: build_flowchart(multiplication_term()),
}


def write_samples(directory: Path) -> int:
    """Write every sample under directory; returns the number of files written."""
    count = 0
    for name, model in MODELS.items():
        write_json(directory / "models" / f"{name}.json", model)
        count += 1
    for name, factory in STANDARD_GRAPHS.items():
        write_json(directory / "graphs" / f"{name}.json", graph_document(factory()))
        count += 1
    for name, factory in CHARTS.items():
        write_json(directory / "charts" / f"{name}.json", FlowchartFile.from_flowchart(factory()).to_document())
        count += 1
    write_json(directory / "charts" / "costs.json", {"costs": {"v0": 1, "v1": 2, "v2": 3}})
    write_json(directory / "sequences" / "harmonic.json", harmonic_sequence(100_000).to_document())
    write_json(directory / "sequences" / "ones.json", {"mode": "exact", "entries": ["1/1"] * 8})
    write_json(directory / "polynomials" / "t_plus_gamma.json", ["gamma", "1"])
    write_json(directory / "polynomials" / "t_squared.json", ["0", "0", "1"])
    write_json(directory / "characters" / "edges.json", {
        "degree_bound": 6,
        "values": [
            {"graph": graph_document(STANDARD_GRAPHS["chain"]()), "laurent": {"-1": "1", "0": "1/2"}},
            {"graph": graph_document(STANDARD_GRAPHS["corolla"]()), "laurent": {"-1": "1"}},
        ],
    })
    return count + 6


if __name__ == "__main__":
    if len(sys.argv) < 2:
        print("Usage: python -m hopfflow.scripts.write_samples /path/to/directory")
        sys.exit(2)
    target = Path(sys.argv[1])
    written = write_samples(target)
    print(f"✓ Wrote {written} sample files to {target}")

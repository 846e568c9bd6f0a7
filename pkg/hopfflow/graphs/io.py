"""Reading and writing graph files."""
from pathlib import Path
from typing import Union

from hopfflow.graphs.combinatorial import CombinatorialGraph
from hopfflow.schemas.graph import GraphFile
from hopfflow.utils.files import load_model, write_json


def load_graph(path: Union[str, Path]) -> CombinatorialGraph:
    return load_model(path, GraphFile).to_graph()


def graph_document(graph: CombinatorialGraph) -> dict:
    return GraphFile.from_graph(graph).to_document()


def parse_graph(data: dict) -> CombinatorialGraph:
    return GraphFile.model_validate(data).to_graph()


def save_graph(path: Union[str, Path], graph: CombinatorialGraph) -> None:
    write_json(path, graph_document(graph))

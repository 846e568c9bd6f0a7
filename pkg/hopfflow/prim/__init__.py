"""Prim flowcharts: programs for primitive recursive functions, and pointed-set reductions."""
from hopfflow.prim.functions import BasicFunction, Contract, StepCounter
from hopfflow.prim.flowchart import Flowchart, FlowchartReport, validate_flowchart, ensure_valid_flowchart
from hopfflow.prim.builder import Node, OpenLeaf, build_flowchart, b, c, r
from hopfflow.prim.evaluation import evaluate, op_apply, open_inputs, table_contract
from hopfflow.prim.transform import compose_programs, flowchart_canonical_form, normalize
from hopfflow.prim.pointed import (
    STAR, BijectionReport, GroupLaw, PartialMap, TotalPointedMap,
    bijectivize, compose_partial, cyclic_group, pointed_to_partial, recover_total_map, totalize,
)

__all__ = [
    "BasicFunction", "Contract", "StepCounter",
    "Flowchart", "FlowchartReport", "validate_flowchart", "ensure_valid_flowchart",
    "Node", "OpenLeaf", "build_flowchart", "b", "c", "r",
    "evaluate", "op_apply", "open_inputs", "table_contract",
    "compose_programs", "flowchart_canonical_form", "normalize",
    "STAR", "BijectionReport", "GroupLaw", "PartialMap", "TotalPointedMap",
    "bijectivize", "compose_partial", "cyclic_group", "pointed_to_partial", "recover_total_map", "totalize",
]

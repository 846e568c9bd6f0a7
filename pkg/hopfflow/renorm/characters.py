"""
Linear maps from the graph Hopf algebra to a target algebra.

Maps are evaluated on basis keys. Characters are determined by their values
on connected classes and extend multiplicatively; table maps are arbitrary
elements of G(A) given class by class; derived maps (convolutions, inverses,
Birkhoff factors) compute and memoize their values on demand.
"""
import logging
import threading
from abc import ABC, abstractmethod
from fractions import Fraction
from typing import Callable, Dict, Optional

from hopfflow.core.exceptions import CharacterError
from hopfflow.feynman.model import ModelData
from hopfflow.feynman.weights import graph_weight
from hopfflow.graphs.combinatorial import CombinatorialGraph
from hopfflow.graphs.structure import component_subgraphs
from hopfflow.hopf.algebra import EMPTY_KEY, HopfElement, Key, basis_graph, intern_graph
from hopfflow.renorm.laurent import LaurentValue, MSAlgebra

logger = logging.getLogger(__name__)

Rule = Callable[[CombinatorialGraph], LaurentValue]


def key_of(graph: CombinatorialGraph) -> Key:
    return intern_graph(graph)


class LinearMap(ABC):
    """A linear map H -> A, specified on basis keys."""

    def __init__(self, algebra: MSAlgebra, name: str = "map"):
        self.algebra = algebra
        self.name = name

    @abstractmethod
    def on_key(self, key: Key) -> LaurentValue:
        """Value on one basis class."""

    def on_graph(self, graph: CombinatorialGraph) -> LaurentValue:
        return self.on_key(key_of(graph))

    def __call__(self, x: HopfElement) -> LaurentValue:
        total = self.algebra.zero()
        for key, coeff in x.terms.items():
            total = total + self.on_key(key) * coeff
        return total

    @property
    def multiplicative(self) -> bool:
        return False


class CounitMap(LinearMap):
    """e = u_A o ε: 1 on the empty graph, 0 elsewhere."""

    def __init__(self, algebra: MSAlgebra):
        super().__init__(algebra, "e")

    def on_key(self, key: Key) -> LaurentValue:
        return self.algebra.one() if key == EMPTY_KEY else self.algebra.zero()

    @property
    def multiplicative(self) -> bool:
        return True


class Character(LinearMap):
    """Algebra homomorphism given on connected classes by a table, a rule, or both."""

    def __init__(self, algebra: MSAlgebra, generators: Optional[Dict[Key, LaurentValue]] = None,
                 rule: Optional[Rule] = None, name: str = "phi"):
        super().__init__(algebra, name)
        self.generators = dict(generators or {})
        self.rule = rule
        self._lock = threading.Lock()
        self._cache: Dict[Key, LaurentValue] = {}

    def generator_value(self, graph: CombinatorialGraph) -> LaurentValue:
        key = key_of(graph)
        if key in self.generators:
            return self.generators[key]
        if self.rule is None:
            raise CharacterError(f"Character {self.name} has no value for a connected class with {len(graph.flags)} flags")
        value = self.rule(graph)
        with self._lock:
            self.generators[key] = value
        return value

    def on_key(self, key: Key) -> LaurentValue:
        if key == EMPTY_KEY:
            return self.algebra.one()
        cached = self._cache.get(key)
        if cached is not None:
            return cached
        value = self.algebra.one()
        for component in component_subgraphs(basis_graph(key)):
            value = value * self.generator_value(component)
        with self._lock:
            self._cache[key] = value
        return value

    @property
    def multiplicative(self) -> bool:
        return True


class TableMap(LinearMap):
    """A general element of G(A): explicit values on basis classes, with φ(1) = 1."""

    def __init__(self, algebra: MSAlgebra, values: Dict[Key, LaurentValue], name: str = "phi"):
        super().__init__(algebra, name)
        if EMPTY_KEY in values and values[EMPTY_KEY] != algebra.one():
            raise CharacterError("A map in G(A) must send the empty graph to 1")
        self.values = dict(values)

    def on_key(self, key: Key) -> LaurentValue:
        if key == EMPTY_KEY:
            return self.algebra.one()
        try:
            return self.values[key]
        except KeyError:
            raise CharacterError(f"Table map {self.name} has no value for a class with {len(basis_graph(key).flags)} flags")


class DerivedMap(LinearMap):
    """A map computed on demand by a function of the basis key, memoized per instance."""

    def __init__(self, algebra: MSAlgebra, compute: Callable[[Key], LaurentValue], name: str,
                 multiplicative: bool = False):
        super().__init__(algebra, name)
        self._compute = compute
        self._multiplicative = multiplicative
        self._lock = threading.Lock()
        self.memo: Dict[Key, LaurentValue] = {}

    def on_key(self, key: Key) -> LaurentValue:
        cached = self.memo.get(key)
        if cached is not None:
            return cached
        value = self._compute(key)
        with self._lock:
            self.memo[key] = value
        return value

    @property
    def multiplicative(self) -> bool:
        return self._multiplicative


def make_toy_character(rule: str, algebra: MSAlgebra, model: Optional[ModelData] = None) -> Character:
    """
    Characters from simple rules on connected classes.

    "unit" sends every class to 1, "edges" to z^-|E| and "weight" to
    graph_weight(τ) z^-|E|, with graph_weight evaluated at the model's couplings.
    """
    if rule == "unit":
        return Character(algebra, rule=lambda g: algebra.one(), name="unit")
    if rule == "edges":
        return Character(algebra, rule=lambda g: algebra.z(-len(g.edges)), name="edges")
    if rule == "weight":
        if model is None:
            raise CharacterError("The weight rule needs a toy model")

        def weighted(graph: CombinatorialGraph) -> LaurentValue:
            value = graph_weight(graph, model).evaluate(model.couplings)
            return algebra.z(-len(graph.edges), Fraction(value))

        return Character(algebra, rule=weighted, name="weight")
    raise CharacterError(f"Unknown character rule {rule!r}")

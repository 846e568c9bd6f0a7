"""
The Hopf algebra of isomorphism classes of oriented decorated graphs.

Basis elements are canonical keys of graphs; the product is disjoint union,
the coproduct sums upper ⊗ lower over all cuts and the counit reads off the
coefficient of the empty graph. Values are immutable and exact.
"""
import logging
import threading
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Optional, Tuple

from hopfflow.core.exceptions import (
    CounitError, DegreeOverflowError, FamilyMismatchError, FamilyViolationError,
)
from hopfflow.graphs.canonical import canonicalize
from hopfflow.graphs.combinatorial import CombinatorialGraph, disjoint_union, ensure_valid
from hopfflow.graphs.cuts import apply_cut, enumerate_cuts
from hopfflow.graphs.orientation import is_directed

logger = logging.getLogger(__name__)

Key = bytes
EMPTY_KEY: Key = b"[]"


class AdmissibleFamily:
    """A named membership predicate closed under components, disjoint unions and cut parts."""

    def __init__(self, name: str, predicate: Callable[[CombinatorialGraph], bool], description: str = ""):
        self.name = name
        self.predicate = predicate
        self.description = description

    def contains(self, graph: CombinatorialGraph) -> bool:
        return graph.is_empty or self.predicate(graph)

    def require(self, graph: CombinatorialGraph) -> None:
        if not self.contains(graph):
            raise FamilyViolationError(f"Graph is not in the admissible family {self.name!r}")


FAMILIES: Dict[str, AdmissibleFamily] = {
    "oriented": AdmissibleFamily(
        "oriented", CombinatorialGraph.is_oriented, "every flag carries an orientation",
    ),
    "directed": AdmissibleFamily(
        "directed", lambda g: g.is_oriented() and is_directed(g), "oriented and free of oriented wheels",
    ),
}


def register_family(family: AdmissibleFamily) -> None:
    FAMILIES[family.name] = family


def get_family(name: str) -> AdmissibleFamily:
    try:
        return FAMILIES[name]
    except KeyError:
        raise FamilyMismatchError(f"Unknown admissible family {name!r}; known: {', '.join(sorted(FAMILIES))}")


class _BasisRegistry:
    """Canonical representatives and memoized structure maps, shared across elements."""

    def __init__(self) -> None:
        self._lock = threading.Lock()
        self.graphs: Dict[Key, CombinatorialGraph] = {EMPTY_KEY: CombinatorialGraph.empty()}
        self.products: Dict[Tuple[Key, Key], Key] = {}
        self.coproducts: Dict[Tuple[str, Key], Dict[Tuple[Key, Key], int]] = {}

    def intern(self, graph: CombinatorialGraph) -> Key:
        form = canonicalize(graph)
        with self._lock:
            self.graphs.setdefault(form.key, form.graph)
        return form.key

    def graph(self, key: Key) -> CombinatorialGraph:
        return self.graphs[key]

    def product(self, a: Key, b: Key) -> Key:
        if a == EMPTY_KEY:
            return b
        if b == EMPTY_KEY:
            return a
        pair = (a, b) if a <= b else (b, a)
        cached = self.products.get(pair)
        if cached is None:
            cached = self.intern(disjoint_union(self.graphs[pair[0]], self.graphs[pair[1]]))
            with self._lock:
                self.products[pair] = cached
        return cached

    def coproduct(self, key: Key, family: AdmissibleFamily) -> Dict[Tuple[Key, Key], int]:
        cached = self.coproducts.get((family.name, key))
        if cached is not None:
            return cached
        graph = self.graphs[key]
        terms: Dict[Tuple[Key, Key], int] = {}
        for cut in enumerate_cuts(graph):
            upper, lower = apply_cut(graph, cut)
            family.require(upper)
            family.require(lower)
            pair = (self.intern(upper), self.intern(lower))
            terms[pair] = terms.get(pair, 0) + 1
        with self._lock:
            self.coproducts[(family.name, key)] = terms
        return terms


_REGISTRY = _BasisRegistry()


def basis_graph(key: Key) -> CombinatorialGraph:
    """Canonical representative of a basis key."""
    return _REGISTRY.graph(key)


def intern_graph(graph: CombinatorialGraph) -> Key:
    """Basis key of a graph, registering its canonical representative."""
    return _REGISTRY.intern(graph)


def _clean(terms: Dict) -> Dict:
    return {k: v for k, v in terms.items() if v != 0}


class HopfElement:
    """A finite rational combination of graph classes within one admissible family."""

    __slots__ = ("terms", "family")

    def __init__(self, terms: Optional[Dict[Key, Fraction]] = None, family: str = "oriented"):
        self.terms: Dict[Key, Fraction] = _clean({k: Fraction(v) for k, v in (terms or {}).items()})
        self.family = family

    @classmethod
    def from_graph(cls, graph: CombinatorialGraph, coeff=1, family: str = "oriented") -> "HopfElement":
        ensure_valid(graph)
        get_family(family).require(graph)
        return cls({_REGISTRY.intern(graph): Fraction(coeff)}, family)

    @classmethod
    def from_product(cls, graphs: Iterable[CombinatorialGraph], coeff=1, family: str = "oriented") -> "HopfElement":
        result = cls.unit(family) * Fraction(coeff)
        for graph in graphs:
            result = result * cls.from_graph(graph, family=family)
        return result

    @classmethod
    def unit(cls, family: str = "oriented") -> "HopfElement":
        return cls({EMPTY_KEY: Fraction(1)}, family)

    @classmethod
    def zero(cls, family: str = "oriented") -> "HopfElement":
        return cls({}, family)

    def _check(self, other: "HopfElement") -> None:
        if self.family != other.family:
            raise FamilyMismatchError(f"Cannot combine elements of families {self.family!r} and {other.family!r}")

    def __add__(self, other: "HopfElement") -> "HopfElement":
        self._check(other)
        terms = dict(self.terms)
        for k, v in other.terms.items():
            terms[k] = terms.get(k, Fraction(0)) + v
        return HopfElement(terms, self.family)

    def __neg__(self) -> "HopfElement":
        return HopfElement({k: -v for k, v in self.terms.items()}, self.family)

    def __sub__(self, other: "HopfElement") -> "HopfElement":
        return self + (-other)

    def __mul__(self, other) -> "HopfElement":
        if isinstance(other, HopfElement):
            return product(self, other)
        return HopfElement({k: v * Fraction(other) for k, v in self.terms.items()}, self.family)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, HopfElement) and self.family == other.family and self.terms == other.terms

    def __repr__(self) -> str:
        return f"HopfElement({len(self.terms)} terms, family={self.family!r})"

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, graph: CombinatorialGraph) -> Fraction:
        return self.terms.get(_REGISTRY.intern(graph), Fraction(0))

    def items(self) -> List[Tuple[CombinatorialGraph, Fraction]]:
        return [(basis_graph(k), v) for k, v in sorted(self.terms.items())]


class TensorElement:
    """Rational combination of tuples of graph classes (H ⊗ H or H ⊗ H ⊗ H)."""

    __slots__ = ("terms", "family")

    def __init__(self, terms: Optional[Dict[Tuple[Key, ...], Fraction]] = None, family: str = "oriented"):
        self.terms: Dict[Tuple[Key, ...], Fraction] = _clean({k: Fraction(v) for k, v in (terms or {}).items()})
        self.family = family

    def __add__(self, other: "TensorElement") -> "TensorElement":
        if self.family != other.family:
            raise FamilyMismatchError("Cannot combine tensors of different families")
        terms = dict(self.terms)
        for k, v in other.terms.items():
            terms[k] = terms.get(k, Fraction(0)) + v
        return TensorElement(terms, self.family)

    def __neg__(self) -> "TensorElement":
        return TensorElement({k: -v for k, v in self.terms.items()}, self.family)

    def __sub__(self, other: "TensorElement") -> "TensorElement":
        return self + (-other)

    def __mul__(self, other: "TensorElement") -> "TensorElement":
        """Factorwise product in the tensor algebra."""
        if self.family != other.family:
            raise FamilyMismatchError("Cannot multiply tensors of different families")
        terms: Dict[Tuple[Key, ...], Fraction] = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                key = tuple(_REGISTRY.product(a, b) for a, b in zip(k1, k2))
                terms[key] = terms.get(key, Fraction(0)) + v1 * v2
        return TensorElement(terms, self.family)

    def __eq__(self, other) -> bool:
        return isinstance(other, TensorElement) and self.family == other.family and self.terms == other.terms

    def __repr__(self) -> str:
        return f"TensorElement({len(self.terms)} terms)"

    def is_zero(self) -> bool:
        return not self.terms

    def items(self) -> List[Tuple[Tuple[CombinatorialGraph, ...], Fraction]]:
        return [(tuple(basis_graph(k) for k in key), v) for key, v in sorted(self.terms.items())]

    @classmethod
    def pure(cls, *factors: HopfElement) -> "TensorElement":
        """x ⊗ y (⊗ z) of plain elements."""
        family = factors[0].family
        terms: Dict[Tuple[Key, ...], Fraction] = {(): Fraction(1)}
        for factor in factors:
            if factor.family != family:
                raise FamilyMismatchError("Tensor factors belong to different families")
            terms = {key + (k,): v * c for key, v in terms.items() for k, c in factor.terms.items()}
        return cls(terms, family)


def product(x: HopfElement, y: HopfElement) -> HopfElement:
    """Bilinear extension of disjoint union."""
    x._check(y)
    terms: Dict[Key, Fraction] = {}
    for a, va in x.terms.items():
        for b, vb in y.terms.items():
            key = _REGISTRY.product(a, b)
            terms[key] = terms.get(key, Fraction(0)) + va * vb
    return HopfElement(terms, x.family)


def coproduct(x: HopfElement) -> TensorElement:
    """Sum over cuts of [upper] ⊗ [lower], extended linearly."""
    family = get_family(x.family)
    terms: Dict[Tuple[Key, ...], Fraction] = {}
    for key, coeff in x.terms.items():
        for pair, count in _REGISTRY.coproduct(key, family).items():
            terms[pair] = terms.get(pair, Fraction(0)) + coeff * count
    return TensorElement(terms, x.family)


def counit(x: HopfElement) -> Fraction:
    return x.terms.get(EMPTY_KEY, Fraction(0))


def grading_degree(graph: CombinatorialGraph, mode: str = "flags",
                   weights: Optional[Dict[str, int]] = None) -> int:
    """
    Flag count, or the weighted degree sum over flags (|l(f)| + 1) plus sum over vertices |l(v)|.

    In weighted mode labels missing from weights weigh 0.
    """
    if mode == "flags":
        return len(graph.flags)
    if mode != "weighted":
        raise ValueError(f"Unknown grading mode {mode!r}")
    weights = weights or {}
    dec = graph.decoration
    total = sum(weights.get(dec.flag_label(f).label or "", 0) + 1 for f in graph.flags)
    total += sum(weights.get(dec.vertex_label(v), 0) for v in graph.vertices)
    return total


def element_degree(x: HopfElement, mode: str = "flags", weights: Optional[Dict[str, int]] = None) -> int:
    """Highest degree among the basis classes of x; 0 for zero."""
    return max((grading_degree(basis_graph(k), mode, weights) for k in x.terms), default=0)


def reduced_coproduct(x: HopfElement) -> TensorElement:
    """Δx − x⊗1 − 1⊗x for x in the kernel of the counit."""
    if counit(x) != 0:
        raise CounitError(f"Element has counit {counit(x)}; the reduced coproduct needs counit 0")
    one = HopfElement.unit(x.family)
    return coproduct(x) - TensorElement.pure(x, one) - TensorElement.pure(one, x)


class _AntipodeCache:
    def __init__(self) -> None:
        self._lock = threading.Lock()
        self.values: Dict[Tuple[str, Key], HopfElement] = {}

    def get(self, family: str, key: Key) -> Optional[HopfElement]:
        return self.values.get((family, key))

    def put(self, family: str, key: Key, value: HopfElement) -> None:
        with self._lock:
            self.values[(family, key)] = value


_ANTIPODES = _AntipodeCache()


def _antipode_basis(key: Key, family: str) -> HopfElement:
    cached = _ANTIPODES.get(family, key)
    if cached is not None:
        return cached
    if key == EMPTY_KEY:
        value = HopfElement.unit(family)
    else:
        x = HopfElement({key: Fraction(1)}, family)
        value = -x
        for (left, right), coeff in reduced_coproduct(x).terms.items():
            value = value - _antipode_basis(left, family) * HopfElement({right: coeff}, family)
    _ANTIPODES.put(family, key, value)
    return value


def antipode(x: HopfElement, degree_bound: Optional[int] = None) -> HopfElement:
    """
    S(1) = 1 and S(x) = −x − Σ S(x′) x″ over the reduced coproduct.

    Every proper cut splits the flags, so the recursion descends in the flag
    grading; degree_bound caps the flag degree of the input.
    """
    if degree_bound is not None:
        degree = element_degree(x)
        if degree > degree_bound:
            raise DegreeOverflowError(f"Element has degree {degree}, above the bound {degree_bound}")
    result = HopfElement.zero(x.family)
    for key, coeff in x.terms.items():
        result = result + _antipode_basis(key, x.family) * coeff
    return result


def multiply_tensor(t: TensorElement) -> HopfElement:
    """m: H ⊗ H -> H."""
    terms: Dict[Key, Fraction] = {}
    for (a, b), coeff in t.terms.items():
        key = _REGISTRY.product(a, b)
        terms[key] = terms.get(key, Fraction(0)) + coeff
    return HopfElement(terms, t.family)


def apply_on_factor(t: TensorElement, position: int,
                    fn: Callable[[HopfElement], object]) -> TensorElement:
    """Apply a linear map to one tensor factor; fn returns a HopfElement or a TensorElement."""
    result = TensorElement({}, t.family)
    for key, coeff in t.terms.items():
        image = fn(HopfElement({key[position]: coeff}, t.family))
        image_terms = image.terms if isinstance(image, TensorElement) else {(k,): v for k, v in image.terms.items()}
        terms = {key[:position] + k + key[position + 1:]: v for k, v in image_terms.items()}
        result = result + TensorElement(terms, t.family)
    return result

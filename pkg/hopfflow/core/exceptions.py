"""Exception hierarchy; every error carries a CLI exit code and a human-readable detail."""
from typing import Optional


class HopfflowError(Exception):
    """Base class for all engine errors."""

    exit_code: int = 1

    def __init__(self, detail: str, *, exit_code: Optional[int] = None):
        super().__init__(detail)
        self.detail = detail
        if exit_code is not None:
            self.exit_code = exit_code


class GraphValidationError(HopfflowError, ValueError):
    """Graph violates the combinatorial graph invariants."""


class MissingOrientationError(GraphValidationError):
    """An operation needs an orientation on every flag."""


class InvalidCutError(HopfflowError, ValueError):
    """Vertex bipartition is not a cut of the oriented graph."""


class DirectednessError(HopfflowError, ValueError):
    """Graph contains an oriented wheel where a directed graph is required."""


class ResourceLimitError(HopfflowError):
    """A configured cap (classes, steps) was exceeded."""


class ModelError(HopfflowError, ValueError):
    """Toy-model data (metric, couplings) is invalid."""


class MissingCouplingError(ModelError):
    """A vertex valence exceeds the coupling rank bound."""


class FlowchartError(HopfflowError, ValueError):
    """Flowchart is malformed or cannot be evaluated."""


class ArityMismatchError(FlowchartError):
    """Arity/coarity of functions or chart parts do not chain."""


class DomainError(FlowchartError):
    """Argument outside the positive integers."""


class GroupLawError(HopfflowError, ValueError):
    """Supplied table is not an abelian group law with the basepoint as zero."""


class FamilyMismatchError(HopfflowError, ValueError):
    """Hopf elements from different admissible families were combined."""


class FamilyViolationError(HopfflowError, ValueError):
    """A graph or cut part falls outside the admissible family."""


class CategoryError(HopfflowError, ValueError):
    """Composition table violates the category axioms."""


class CounitError(HopfflowError, ValueError):
    """Element has a nonzero component on the empty graph where none is allowed."""


class DegreeOverflowError(HopfflowError, ValueError):
    """Element exceeds the declared degree bound."""


class TruncationError(HopfflowError, ArithmeticError):
    """Laurent arithmetic would move mass outside the truncation caps."""


class ConvergenceError(HopfflowError, ArithmeticError):
    """An order-by-order fixed point did not settle within its iteration bound."""


class CharacterError(HopfflowError, ValueError):
    """Character or linear map has no value for a requested basis graph."""


class SequenceError(HopfflowError, ValueError):
    """Sequence arguments are incompatible (length, mode, sign)."""


class FitError(HopfflowError, ValueError):
    """Asymptotic fit cannot be performed on the given data."""


class InputFileError(HopfflowError, ValueError):
    """Input file cannot be read, parsed or validated against its schema."""

    exit_code = 2

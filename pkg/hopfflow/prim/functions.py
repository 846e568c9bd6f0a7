"""Basic functions and function contracts over tuples of positive integers."""
from typing import Callable, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from hopfflow.config import settings
from hopfflow.core.exceptions import ArityMismatchError, DomainError, ResourceLimitError

Values = Tuple[int, ...]


class StepCounter:
    """Counts function applications within one evaluation call."""

    def __init__(self, budget: Optional[int] = None):
        self.budget = budget if budget is not None else settings.PRIM_STEP_BUDGET
        self.steps = 0

    def tick(self) -> None:
        self.steps += 1
        if self.steps > self.budget:
            raise ResourceLimitError(f"Evaluation exceeded the step budget of {self.budget}")


def check_arguments(values: Values, arity: int, what: str) -> Values:
    values = tuple(values)
    if len(values) != arity:
        raise ArityMismatchError(f"{what} expects {arity} arguments, got {len(values)}")
    for x in values:
        if isinstance(x, bool) or not isinstance(x, int) or x < 1:
            raise DomainError(f"{what} received {x!r}; arguments must be positive integers")
    return values


class Contract:
    """A function (Z+)^arity -> (Z+)^coarity with argument and result checking."""

    __slots__ = ("arity", "coarity", "name", "_fn", "_counter")

    def __init__(self, arity: int, coarity: int, fn: Callable[[Values], Values], name: str = "f",
                 counter: Optional[StepCounter] = None):
        self.arity = arity
        self.coarity = coarity
        self.name = name
        self._fn = fn
        self._counter = counter

    def bind(self, counter: StepCounter) -> "Contract":
        return Contract(self.arity, self.coarity, self._fn, self.name, counter)

    def __call__(self, *args: int) -> Values:
        values = check_arguments(args, self.arity, self.name)
        if self._counter is not None:
            self._counter.tick()
        result = tuple(self._fn(values))
        return check_arguments(result, self.coarity, f"result of {self.name}")

    def __repr__(self) -> str:
        return f"Contract({self.name}: {self.arity}->{self.coarity})"


class BasicFunction(BaseModel):
    """Successor, projection pr_i^n or constant k of arity n; coarity is always 1."""
    model_config = ConfigDict(frozen=True)

    kind: Literal["succ", "proj", "const"]
    i: Optional[int] = None
    n: Optional[int] = None
    k: Optional[int] = None

    @model_validator(mode="after")
    def check_parameters(self) -> "BasicFunction":
        if self.kind == "proj":
            if self.n is None or self.i is None or not 1 <= self.i <= self.n:
                raise ValueError("Projection needs 1 <= i <= n")
        elif self.kind == "const":
            if self.k is None or self.k < 1:
                raise ValueError("Constant needs a positive value k")
            if self.n is not None and self.n < 0:
                raise ValueError("Constant arity n must be non-negative")
        return self

    @classmethod
    def succ(cls) -> "BasicFunction":
        return cls(kind="succ")

    @classmethod
    def proj(cls, i: int, n: int) -> "BasicFunction":
        return cls(kind="proj", i=i, n=n)

    @classmethod
    def const(cls, k: int, n: int = 1) -> "BasicFunction":
        return cls(kind="const", k=k, n=n)

    @property
    def arity(self) -> int:
        if self.kind == "succ":
            return 1
        if self.kind == "proj":
            return self.n
        return self.n if self.n is not None else 1

    @property
    def coarity(self) -> int:
        return 1

    @property
    def name(self) -> str:
        if self.kind == "succ":
            return "succ"
        if self.kind == "proj":
            return f"pr{self.i}^{self.n}"
        return f"const{self.k}^{self.arity}"

    def code(self) -> str:
        """Stable text code used in canonical forms."""
        return f"{self.kind}:{self.i or 0}:{self.arity}:{self.k or 0}"

    def contract(self) -> Contract:
        if self.kind == "succ":
            return Contract(1, 1, lambda x: (x[0] + 1,), self.name)
        if self.kind == "proj":
            index = self.i - 1
            return Contract(self.n, 1, lambda x: (x[index],), self.name)
        value = self.k
        return Contract(self.arity, 1, lambda x: (value,), self.name)

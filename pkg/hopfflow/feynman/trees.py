"""Tree sums against the stationary point and critical value of the action."""
import logging
from typing import Dict, List, Literal, Optional

from pydantic import BaseModel

from hopfflow.config import settings
from hopfflow.feynman.model import ModelData
from hopfflow.feynman.partition import tree_series
from hopfflow.feynman.series import FormalSeries, difference_report
from hopfflow.feynman.stationary import action_polynomial, stationary_point

logger = logging.getLogger(__name__)

Convention = Literal["unit", "scaled"]


class ConventionOutcome(BaseModel):
    """Identity checks under one lambda convention."""
    convention: Convention
    derivative_identity: Dict[str, Optional[bool]]
    critical_value_identity: bool
    critical_value_diff: List[dict]


class TreeIdentityReport(BaseModel):
    max_weight: int
    adopted: Convention
    tree_lambda_powers: List[int]
    outcomes: Dict[str, ConventionOutcome]

    @property
    def passed(self) -> bool:
        outcome = self.outcomes[self.adopted]
        return outcome.critical_value_identity and all(
            ok is not False for ok in outcome.derivative_identity.values()
        )


def _normalize(series: FormalSeries, convention: Convention) -> FormalSeries:
    return series.at_lambda(1) if convention == "unit" else series.lambda_shift(1)


def tree_identity_report(
    model: ModelData,
    max_weight: int,
    convention: Optional[Convention] = None,
) -> TreeIdentityReport:
    """
    Compare dZ/dC_a with phi_0^a and Z with S(phi_0) under both lambda conventions.

    Every tree has Euler characteristic 1, so Z carries lambda^{-1} throughout:
    "unit" sets lambda = 1, "scaled" multiplies Z by lambda before comparing.
    The derivative identity is checked only for colors with an active rank-one
    coupling, up to max_weight - 1.
    """
    adopted = convention or settings.TREE_LAMBDA_CONVENTION
    z = tree_series(model, max_weight)
    phi = stationary_point(model, max_weight)
    critical = action_polynomial(model, max_weight).substitute(phi)

    outcomes = {}
    for name in ("unit", "scaled"):
        normalized = _normalize(z, name)
        derivative_identity: Dict[str, Optional[bool]] = {}
        for a in model.colors:
            if not model.is_active((a,)):
                derivative_identity[a] = None
                continue
            lhs = normalized.derivative((a,)).truncate(max_weight - 1)
            derivative_identity[a] = lhs == phi[a].truncate(max_weight - 1)
        diff = difference_report(normalized, critical)
        outcomes[name] = ConventionOutcome(
            convention=name,
            derivative_identity=derivative_identity,
            critical_value_identity=not diff,
            critical_value_diff=diff,
        )

    report = TreeIdentityReport(
        max_weight=max_weight,
        adopted=adopted,
        tree_lambda_powers=z.lambda_powers(),
        outcomes=outcomes,
    )
    if not report.passed:
        logger.warning(f"Tree identities fail under the {adopted} lambda convention at weight {max_weight}")
    return report

"""Half-integer coupling equivalence between a pseudo virtual and an eigenstate deletion."""
from typing import Optional

from app.core.logger import logger
from app.extension.duality import EquivalenceResult, check_available, halfint_equivalence
from app.extension.spec import ExtensionSpec


def verify_halfint_equivalence(spec: ExtensionSpec, n_total: Optional[int] = None,
                               strict: bool = True) -> EquivalenceResult:
    """
    Proportionality of Xi_D and Xi_barD plus the dual degree law. With strict,
    families and couplings where no equivalence exists raise
    EquivalenceUnavailableError; otherwise the formal comparison is returned.
    """
    if strict:
        check_available(spec.params)
    result = halfint_equivalence(spec.params, spec.degrees, n_total)
    if result.available and not result.passed:
        logger.warning(f"Half-integer equivalence failed for {spec}: {result.detail}")
    return result


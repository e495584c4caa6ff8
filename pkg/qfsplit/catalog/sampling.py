# qfsplit/catalog/sampling.py
from typing import Dict, List, Optional
import logging

import numpy as np

from ..config.settings import settings
from ..core.exceptions import ConstraintError
from ..core.fields import CoefficientDomain, ParameterRing

logger = logging.getLogger(__name__)


def sample_parameters(
    constraint,
    params: ParameterRing,
    field: CoefficientDomain,
    count: int,
    seed: int = 0,
    budget: Optional[int] = None,
) -> List[Dict[str, object]]:
    """
    Rejection-sample ``count`` assignments of the symbols of ``params`` in
    ``field`` on which ``constraint`` does not vanish.

    ``budget`` caps the total number of draws; the same seed always yields
    the same assignments.
    """
    if params.is_zero(constraint):
        raise ConstraintError("The constraint polynomial is zero; no assignment can satisfy it")
    budget = settings.SAMPLE_RETRY_BUDGET if budget is None else budget
    rng = np.random.default_rng(seed)
    accepted = []
    attempts = 0
    while len(accepted) < count:
        if attempts >= budget:
            raise ConstraintError(
                f"No admissible parameters after {attempts} draws over a field with {field.order} elements "
                f"({len(accepted)} of {count} found)"
            )
        attempts += 1
        assignment = {s: field.random_element(rng) for s in params.symbols}
        if not field.is_zero(params.specialize(constraint, assignment, field)):
            accepted.append(assignment)
    logger.info("Sampled %d assignments in %d draws over %r", count, attempts, field)
    return accepted

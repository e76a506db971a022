"""
The Kwapien functional and estimation of its two-sided constants.
"""

from .dual import DualTransferReport, dual_transfer_check
from .functional import (
    WitnessFamily,
    batch_ratio,
    family_norm_sq,
    orthonormality_defect,
    q_functional,
    q_functional_via_fourier,
    ratio,
)
from .optimizer import (
    CERTIFICATE_LABEL,
    ConstantEstimate,
    estimate_constant,
    random_search,
    restart_generator,
    structured_start,
    verify_witness,
)

__all__ = [
    "CERTIFICATE_LABEL",
    "ConstantEstimate",
    "DualTransferReport",
    "WitnessFamily",
    "batch_ratio",
    "dual_transfer_check",
    "estimate_constant",
    "family_norm_sq",
    "orthonormality_defect",
    "q_functional",
    "q_functional_via_fourier",
    "random_search",
    "ratio",
    "restart_generator",
    "structured_start",
    "verify_witness",
]

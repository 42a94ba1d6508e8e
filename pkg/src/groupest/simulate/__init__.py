"""Monte-Carlo protocols: samplers, maximum likelihood, Fisher quadratures,
and the qubit-coupling angular-momentum walk."""

from .config import (
    FLAT_TRIAL_CAP,
    GROUPS,
    ProtocolConfig,
    ProtocolReport,
    check_su2_parity,
    check_u1_evenness,
    u1_shift,
)
from .rng import trial_stream
from .schur import SchurWalkResult, schur_walk
from .su2 import (
    ClassFunctionSampler,
    fisher_su2,
    mle_su2,
    predicted_e_phi_group,
    quat_from_rotvec,
    quat_mul,
    run_group_protocol,
    sample_su2_outcome,
)
from .u1 import (
    U1Sampler,
    fisher_u1,
    mle_u1,
    predicted_e_phi,
    run_u1_protocol,
    sample_u1_outcome,
)

__all__ = [
    "FLAT_TRIAL_CAP",
    "GROUPS",
    "ProtocolConfig",
    "ProtocolReport",
    "check_su2_parity",
    "check_u1_evenness",
    "u1_shift",
    "trial_stream",
    "SchurWalkResult",
    "schur_walk",
    "ClassFunctionSampler",
    "fisher_su2",
    "mle_su2",
    "predicted_e_phi_group",
    "quat_from_rotvec",
    "quat_mul",
    "run_group_protocol",
    "sample_su2_outcome",
    "U1Sampler",
    "fisher_u1",
    "mle_u1",
    "predicted_e_phi",
    "run_u1_protocol",
    "sample_u1_outcome",
]

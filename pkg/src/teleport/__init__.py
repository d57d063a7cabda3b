"""隐形传态模块：输出映射、解析保真度、经典基线与端到端随机模拟."""

from .baselines import (
    classical_guess_fidelity,
    guess_fidelity_monte_carlo,
    popescu_classical_fidelity,
    popescu_fidelity_monte_carlo,
    popescu_success,
)
from .maps import (
    CORRECTION_AXES,
    ERROR_AXES,
    bloch_contraction,
    fidelity_exact,
    fidelity_exact_werner,
    fidelity_from_contraction,
    fidelity_quadrature_oracle,
    is_isotropic,
    is_nonclassical,
    noiseless_werner_fidelity,
    output_state,
)
from .models import (
    CLASSICAL_FIDELITY,
    GUESS_FIDELITY,
    FidelityEstimate,
    ResourceKind,
    TeleportScenario,
)
from .montecarlo import (
    branch_scores,
    fidelity_monte_carlo,
    haar_angles,
    protocol_scores,
    run_blocks,
)
from .protocol import (
    BELL_ENCODING,
    ProtocolRun,
    apply_correction,
    bob_conditional_state,
    correction_axis,
    encode_outcome,
    residual_axis,
    run_protocol,
    simulate_protocol,
    teleport_branch,
)

__all__ = [
    "BELL_ENCODING",
    "CLASSICAL_FIDELITY",
    "CORRECTION_AXES",
    "ERROR_AXES",
    "GUESS_FIDELITY",
    "FidelityEstimate",
    "ProtocolRun",
    "ResourceKind",
    "TeleportScenario",
    "apply_correction",
    "bloch_contraction",
    "branch_scores",
    "bob_conditional_state",
    "classical_guess_fidelity",
    "correction_axis",
    "encode_outcome",
    "fidelity_exact",
    "fidelity_exact_werner",
    "fidelity_from_contraction",
    "fidelity_monte_carlo",
    "fidelity_quadrature_oracle",
    "guess_fidelity_monte_carlo",
    "haar_angles",
    "is_isotropic",
    "is_nonclassical",
    "noiseless_werner_fidelity",
    "output_state",
    "popescu_classical_fidelity",
    "popescu_fidelity_monte_carlo",
    "popescu_success",
    "protocol_scores",
    "residual_axis",
    "run_blocks",
    "run_protocol",
    "simulate_protocol",
    "teleport_branch",
]

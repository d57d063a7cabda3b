"""通信量下界模块：最小充分通信量、Werner 资源曲线、Holevo 量与曲线扫描."""

from .holevo import dense_coding_ensemble, holevo_chi, holevo_closed_form, holevo_quantity
from .models import SweepKind, SweepTable, ThresholdResult
from .optimize import MinimizeResult, golden_section_minimize, grid_minimize
from .sweep import WERNER_SWEEP_START, sweep, werner_sweep
from .thresholds import (
    FIDELITY_P1_BOUND,
    ONE_BIT_PAIR_LABELS,
    PRODUCT_BOUND,
    TWO_BIT_LABELS,
    WERNER_ENTANGLEMENT_ALPHA,
    cost_curve_two_bit,
    isotropic_information,
    min_comm_two_bit,
    min_comm_two_independent,
    min_comm_werner_one_bit_pair,
    min_comm_werner_two_bit,
    one_bit_pair_cost_batch,
    two_bit_cost_batch,
    werner_cost_one_bit_pair,
    werner_cost_two_bit,
    werner_entanglement_boundary,
    werner_threshold,
)

__all__ = [
    "FIDELITY_P1_BOUND",
    "MinimizeResult",
    "ONE_BIT_PAIR_LABELS",
    "PRODUCT_BOUND",
    "SweepKind",
    "SweepTable",
    "TWO_BIT_LABELS",
    "ThresholdResult",
    "WERNER_ENTANGLEMENT_ALPHA",
    "WERNER_SWEEP_START",
    "cost_curve_two_bit",
    "dense_coding_ensemble",
    "golden_section_minimize",
    "grid_minimize",
    "holevo_chi",
    "holevo_closed_form",
    "holevo_quantity",
    "isotropic_information",
    "min_comm_two_bit",
    "min_comm_two_independent",
    "min_comm_werner_one_bit_pair",
    "min_comm_werner_two_bit",
    "one_bit_pair_cost_batch",
    "sweep",
    "two_bit_cost_batch",
    "werner_cost_one_bit_pair",
    "werner_cost_two_bit",
    "werner_entanglement_boundary",
    "werner_sweep",
    "werner_threshold",
]

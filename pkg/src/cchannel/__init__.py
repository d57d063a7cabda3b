"""经典噪声信道模块：单比特/两比特信道、信息量与随机采样."""

from .information import (
    capacity_one_bit,
    joint_distribution,
    mutual_info_two_bit,
    mutual_information_joint,
    shannon_entropy,
    shannon_entropy_distribution,
)
from .models import (
    BitPair,
    FlipPattern,
    OneBitChannel,
    TwoBitChannel,
    isotropic_channel,
    product_channel,
)
from .sampling import make_rng, sample_flip_patterns, sample_one_bit, sample_two_bit, spawn_streams

__all__ = [
    "BitPair",
    "FlipPattern",
    "OneBitChannel",
    "TwoBitChannel",
    "capacity_one_bit",
    "isotropic_channel",
    "joint_distribution",
    "make_rng",
    "mutual_info_two_bit",
    "mutual_information_joint",
    "product_channel",
    "sample_flip_patterns",
    "sample_one_bit",
    "sample_two_bit",
    "shannon_entropy",
    "shannon_entropy_distribution",
    "spawn_streams",
]

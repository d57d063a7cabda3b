"""Pytest 共享配置和 fixtures."""

import math

import numpy as np
import pytest

from src.cchannel import OneBitChannel, TwoBitChannel, isotropic_channel, product_channel


@pytest.fixture
def noiseless_channel():
    """无噪声两比特信道."""
    return TwoBitChannel(1.0, 0.0, 0.0, 0.0)


@pytest.fixture
def boundary_channel():
    """恰好达到经典极限的对称信道 (½, ⅙, ⅙, ⅙)."""
    return isotropic_channel(0.5)


@pytest.fixture
def independent_boundary_channel():
    """η = δ = 1/√2 的独立单比特信道对."""
    z = 1 / math.sqrt(2)
    return product_channel(OneBitChannel(z), OneBitChannel(z))


@pytest.fixture
def random_channels():
    """100 个随机两比特信道（固定种子）.

    Returns:
        list[TwoBitChannel]: Dirichlet(1,1,1,1) 抽样，末项由 1 − 前三项给出
    """
    rng = np.random.default_rng(2024)
    channels = []
    for probs in rng.dirichlet(np.ones(4), 100):
        p1, p2, p3 = (float(p) for p in probs[:3])
        channels.append(TwoBitChannel(p1, p2, p3, max(0.0, 1.0 - p1 - p2 - p3)))
    return channels


@pytest.fixture
def haar_angles_grid():
    """Bloch 球面上的一组固定角度 (θ, φ)."""
    rng = np.random.default_rng(7)
    cos_theta = rng.uniform(-1.0, 1.0, 20)
    phi = rng.uniform(0.0, 2 * math.pi, 20)
    return [(float(math.acos(c)), float(p)) for c, p in zip(cos_theta, phi)]

"""输出映射与解析保真度测试."""

import math

import numpy as np
import pytest

from src.cchannel import OneBitChannel, TwoBitChannel, isotropic_channel, product_channel
from src.errors import DomainError
from src.qstate import BlochVector, bloch_of, density_of, pure_state
from src.teleport import (
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


class TestOutputState:
    """输出映射测试."""

    def test_noiseless_identity(self, noiseless_channel):
        """无噪声信道输出等于输入."""
        rho = pure_state(0.8, 3.0)
        assert output_state(rho, noiseless_channel).allclose(rho)

    def test_uniform_noise_fully_mixes(self):
        """p = (¼, ¼, ¼, ¼) 时输出为 1/2."""
        rho = pure_state(0.8, 3.0)
        out = bloch_of(output_state(rho, isotropic_channel(0.25)))
        assert out.norm == pytest.approx(0.0, abs=1e-12)

    def test_contraction_scales_components(self):
        """输出 Bloch 向量按 (λx, λy, λz) 收缩."""
        ch = TwoBitChannel(0.4, 0.3, 0.2, 0.1)
        vector = BlochVector(0.6, -0.3, 0.7)
        out = bloch_of(output_state(density_of(vector), ch))
        expected = [f * v for f, v in zip(bloch_contraction(ch), vector.as_tuple())]
        assert np.allclose(out.as_tuple(), expected, atol=1e-12)

    def test_contraction_values(self):
        """λx = p₁+p₂−p₃−p₄，λz = p₁−p₂+p₃−p₄."""
        lx, ly, lz = bloch_contraction(TwoBitChannel(0.4, 0.3, 0.2, 0.1))
        assert (lx, ly, lz) == pytest.approx((0.4, 0.0, 0.2))


class TestClosedForms:
    """解析保真度测试."""

    def test_noiseless(self, noiseless_channel):
        """无噪声信道保真度 1."""
        assert fidelity_exact(noiseless_channel) == 1.0

    def test_boundary(self, boundary_channel):
        """p₁ = ½ 恰为 ⅔."""
        assert fidelity_exact(boundary_channel) == pytest.approx(2 / 3, abs=1e-12)

    def test_uniform_noise(self):
        """完全随机信道保真度 ½."""
        assert fidelity_exact(isotropic_channel(0.25)) == pytest.approx(0.5)

    def test_product_channel(self):
        """独立信道对 F = (1 + 2ηδ)/3."""
        z = 1 / math.sqrt(2)
        for eta, delta in [(0.5, 0.5), (0.8, 0.9), (z, z), (1.0, 0.6)]:
            ch = product_channel(OneBitChannel(eta), OneBitChannel(delta))
            assert fidelity_exact(ch) == pytest.approx((1 + 2 * eta * delta) / 3, abs=1e-12)

    def test_strictly_increasing_in_p1(self):
        """100×100 网格：对任意剩余概率分配，F 随 p₁ 严格递增."""
        rng = np.random.default_rng(5)
        p1_grid = np.linspace(0.0, 1.0, 100)
        for split in rng.dirichlet(np.ones(3), 100):
            values = [
                fidelity_exact(TwoBitChannel(float(p1), *(float(s) * (1 - p1) for s in split)))
                for p1 in p1_grid
            ]
            assert all(later > earlier for earlier, later in zip(values, values[1:]))

    def test_independent_boundary_is_two_thirds(self, independent_boundary_channel):
        """η = δ = 1/√2 时恰为 ⅔."""
        assert fidelity_exact(independent_boundary_channel) == pytest.approx(2 / 3, abs=1e-12)

    def test_contraction_formula_agrees(self, random_channels):
        """½ + Σλ/6 与 (1 + 2p₁)/3 一致."""
        for ch in random_channels:
            assert fidelity_from_contraction(bloch_contraction(ch)) == pytest.approx(
                fidelity_exact(ch), abs=1e-12
            )

    def test_range(self, random_channels):
        """F ∈ [⅓, 1]."""
        for ch in random_channels:
            assert 1 / 3 <= fidelity_exact(ch) <= 1.0

    def test_isotropy(self):
        """λx = λy = λz ⇔ p₂ = p₃ = p₄."""
        assert is_isotropic(isotropic_channel(0.6))
        assert not is_isotropic(TwoBitChannel(0.4, 0.3, 0.2, 0.1))

    def test_nonclassical(self):
        """严格大于 ⅔."""
        assert not is_nonclassical(2 / 3)
        assert is_nonclassical(0.7)


class TestWernerFidelity:
    """Werner 资源保真度测试."""

    def test_example_value(self):
        """p₁ = 0.7, α = ½ → (3 − 0.5 + 1.4)/6 = 0.65."""
        ch = TwoBitChannel(0.7, 0.1, 0.1, 0.1)
        assert fidelity_exact_werner(0.5, ch) == pytest.approx(0.65, abs=1e-12)

    def test_alpha_one_reduces_exactly(self, random_channels):
        """α = 1 与单态公式逐位相同."""
        for ch in random_channels:
            assert fidelity_exact_werner(1.0, ch) == fidelity_exact(ch)

    def test_alpha_zero_is_half(self, random_channels):
        """α = 0 与信道无关，恒为 ½."""
        for ch in random_channels[:10]:
            assert fidelity_exact_werner(0.0, ch) == pytest.approx(0.5)

    def test_noiseless_channel(self, noiseless_channel):
        """无噪声信道下为 (1 + α)/2."""
        for alpha in (0.0, 0.3, 0.8, 1.0):
            assert fidelity_exact_werner(alpha, noiseless_channel) == pytest.approx(
                noiseless_werner_fidelity(alpha), abs=1e-12
            )

    @pytest.mark.parametrize("p1", [0.3, 0.5, 0.75, 1.0])
    def test_increasing_in_alpha(self, p1):
        """p₁ > ¼ 时随 α 单调递增."""
        ch = isotropic_channel(p1)
        values = [fidelity_exact_werner(a, ch) for a in np.linspace(0.0, 1.0, 21)]
        assert all(later > earlier for earlier, later in zip(values, values[1:]))

    def test_increasing_on_grid(self):
        """100×100 网格：对 α 与 p₁ 均严格递增（α > 0，p₁ > ¼）."""
        alphas = np.linspace(0.01, 1.0, 100)
        channels = [isotropic_channel(float(p1)) for p1 in np.linspace(0.26, 1.0, 100)]
        grid = np.array([[fidelity_exact_werner(float(a), ch) for ch in channels] for a in alphas])
        assert np.all(np.diff(grid, axis=0) > 0.0)
        assert np.all(np.diff(grid, axis=1) > 0.0)

    @pytest.mark.parametrize("alpha", [-0.1, 1.1])
    def test_alpha_range(self, alpha, noiseless_channel):
        """α 越界."""
        with pytest.raises(DomainError):
            fidelity_exact_werner(alpha, noiseless_channel)


class TestQuadratureOracle:
    """数值积分验证测试."""

    def test_matches_closed_form(self, random_channels):
        """grid 400 的数值积分与 (1+2p₁)/3 相差不超过 1e-6."""
        for ch in random_channels[:20]:
            assert fidelity_quadrature_oracle(ch, 400) == pytest.approx(
                fidelity_exact(ch), abs=1e-6
            )

    @pytest.mark.slow
    def test_matches_closed_form_all_channels(self, random_channels):
        """100 个随机信道全部一致."""
        for ch in random_channels:
            assert fidelity_quadrature_oracle(ch, 400) == pytest.approx(
                fidelity_exact(ch), abs=1e-6
            )

    def test_odd_grid(self, boundary_channel):
        """奇数网格同样可用."""
        assert fidelity_quadrature_oracle(boundary_channel, 33) == pytest.approx(
            2 / 3, abs=1e-6
        )

    def test_grid_too_small(self, noiseless_channel):
        """grid_n < 8."""
        with pytest.raises(DomainError):
            fidelity_quadrature_oracle(noiseless_channel, 4)

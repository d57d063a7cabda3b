"""信道采样与随机流测试."""

import numpy as np
import pytest

from src.cchannel import (
    BitPair,
    OneBitChannel,
    TwoBitChannel,
    make_rng,
    sample_flip_patterns,
    sample_one_bit,
    sample_two_bit,
    spawn_streams,
)
from src.errors import DomainError


class TestStreams:
    """随机流测试."""

    def test_same_seed_same_stream(self):
        """相同种子给出相同序列."""
        assert np.array_equal(make_rng(3).random(10), make_rng(3).random(10))

    def test_stream_depends_only_on_seed_and_index(self):
        """子流 j 与派生数量无关."""
        full = spawn_streams(5, 4)
        single = spawn_streams(5, 1, offset=2)[0]
        assert np.array_equal(full[2].random(8), single.random(8))

    def test_streams_differ(self):
        """不同子流互不相同."""
        a, b = spawn_streams(5, 2)
        assert not np.array_equal(a.random(8), b.random(8))

    def test_negative_seed(self):
        """负种子."""
        with pytest.raises(DomainError):
            spawn_streams(-1, 1)


class TestSampling:
    """信道采样测试."""

    def setup_method(self):
        """测试前准备."""
        self.rng = make_rng(123)

    @pytest.mark.parametrize(
        "ch",
        [
            TwoBitChannel(0.4, 0.3, 0.2, 0.1),
            TwoBitChannel(0.5, 1 / 6, 1 / 6, 1 / 6),
            TwoBitChannel(0.97, 0.01, 0.015, 0.005),
        ],
    )
    def test_pattern_frequencies_converge(self, ch):
        """10⁶ 次采样的翻转模式频率与 (p₁..p₄) 的 L∞ 距离小于 0.005."""
        patterns = sample_flip_patterns(ch, 1_000_000, self.rng)
        frequencies = np.bincount(patterns, minlength=4) / patterns.size
        assert np.max(np.abs(frequencies - np.asarray(ch.probabilities))) < 0.005

    def test_boundary_channel_frequencies(self, boundary_channel):
        """(½, ⅙, ⅙, ⅙)：10⁵ 次采样频率在 ±0.01 内."""
        patterns = sample_flip_patterns(boundary_channel, 100_000, self.rng)
        frequencies = np.bincount(patterns, minlength=4) / patterns.size
        assert frequencies.tolist() == pytest.approx(list(boundary_channel.probabilities), abs=0.01)

    def test_noiseless_two_bit(self, noiseless_channel):
        """无噪声信道原样传输."""
        for k in range(4):
            pair = BitPair.from_index(k)
            assert sample_two_bit(noiseless_channel, pair, self.rng) == pair

    def test_one_bit_noiseless(self):
        """z = 1 原样传输."""
        assert all(sample_one_bit(OneBitChannel(1.0), 1, self.rng) == 1 for _ in range(100))

    def test_one_bit_frequency(self):
        """z = 0.75 时约 3/4 不翻转."""
        ch = OneBitChannel(0.75)
        kept = sum(sample_one_bit(ch, 0, self.rng) == 0 for _ in range(20_000))
        assert kept / 20_000 == pytest.approx(0.75, abs=0.02)

    def test_one_bit_rejects_non_bit(self):
        """输入必须是比特."""
        with pytest.raises(DomainError):
            sample_one_bit(OneBitChannel(0.9), 2, self.rng)

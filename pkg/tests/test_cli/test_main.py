"""命令行测试."""

import json

import pytest
from typer.testing import CliRunner

from src.cli.main import EXIT_INVALID_INPUT, EXIT_IO, EXIT_SELF_CHECK, app

runner = CliRunner()

QUIET = ["--log-level", "WARNING"]
BOUNDARY = ["--p1", "0.5", "--p2", "0.166667", "--p3", "0.166667", "--p4", "0.166666"]


def _invoke(*args: str):
    return runner.invoke(app, [*QUIET, *args])


def _parse(output: str) -> dict[str, str]:
    pairs = (line.split(": ", 1) for line in output.splitlines() if ": " in line)
    return {key: value for key, value in pairs}


class TestFidelityCommand:
    """fidelity 命令测试."""

    def test_boundary_channel(self):
        """(½, ⅙, ⅙, ⅙) → F = 0.66667，通信量 0.20752."""
        result = _invoke("fidelity", *BOUNDARY)
        assert result.exit_code == 0
        values = _parse(result.stdout)
        assert values["command"] == "fidelity"
        assert values["fidelity"] == "0.66667"
        assert values["comm_bits"] == "0.20752"
        assert values["exceeds_classical"] == "no"

    def test_noiseless_product_channel(self):
        """η = δ = 1 → F = 1，通信量 2 bit."""
        values = _parse(_invoke("fidelity", "--eta", "1", "--delta", "1").stdout)
        assert values["fidelity"] == "1.00000"
        assert values["comm_bits"] == "2.00000"
        assert values["exceeds_classical"] == "yes"

    def test_werner_resource(self):
        """p₁ = 0.7, α = ½ → 0.65."""
        result = _invoke(
            "fidelity", "--p1", "0.7", "--p2", "0.1", "--p3", "0.1", "--p4", "0.1", "--alpha", "0.5"
        )
        assert result.exit_code == 0
        assert _parse(result.stdout)["fidelity"] == "0.65000"

    @pytest.mark.parametrize(
        "args",
        [
            ["--p1", "0.5", "--p2", "0.2", "--p3", "0.1", "--p4", "0.1"],
            ["--p1", "0.5", "--eta", "0.9", "--delta", "0.9"],
            ["--eta", "0.9"],
            ["--eta", "0.3", "--delta", "0.9"],
            ["--p1", "1", "--p2", "0", "--p3", "0", "--p4", "0", "--alpha", "1.5"],
        ],
    )
    def test_invalid_input(self, args):
        """非法输入退出码 2."""
        assert _invoke("fidelity", *args).exit_code == EXIT_INVALID_INPUT

    def test_json_output(self):
        """--json 输出可解析，默认不含 wall_time."""
        result = _invoke("--json", "fidelity", *BOUNDARY)
        payload = json.loads(result.stdout)
        assert payload["command"] == "fidelity"
        assert payload["outputs"]["fidelity"] == pytest.approx(2 / 3, abs=1e-6)
        assert "wall_time" not in payload

    def test_timing(self):
        """--timing 追加 wall_time."""
        assert "wall_time" in _parse(_invoke("--timing", "fidelity", *BOUNDARY).stdout)


class TestMonteCarloCommand:
    """montecarlo 命令测试."""

    NOISELESS = ["--p1", "1", "--p2", "0", "--p3", "0", "--p4", "0"]
    PRODUCT = ["--eta", "0.8", "--delta", "0.9"]

    def test_noiseless(self):
        """无噪声信道均值恰为 1，自检通过."""
        result = _invoke("montecarlo", *self.NOISELESS, "--samples", "1000", "--seed", "3")
        assert result.exit_code == 0
        values = _parse(result.stdout)
        assert values["mean"] == "1.00000"
        assert values["seed"] == "3"
        assert values["self_check"] == "PASSED"

    def test_same_seed_same_output(self):
        """同种子两次运行标准输出逐字节一致."""
        args = ("montecarlo", *self.PRODUCT, "--samples", "20000", "--seed", "42")
        first, second = _invoke(*args), _invoke(*args)
        assert first.exit_code == 0
        assert first.stdout == second.stdout

    def test_product_channel_agrees(self):
        """独立信道对估计落在 4σ 内."""
        result = _invoke("montecarlo", *self.PRODUCT, "--samples", "50000", "--seed", "1")
        values = _parse(result.stdout)
        assert values["analytic"] == "0.81333"
        assert values["self_check"] == "PASSED"

    def test_too_few_samples(self):
        """样本数不足 100."""
        result = _invoke("montecarlo", *self.NOISELESS, "--samples", "10")
        assert result.exit_code == EXIT_INVALID_INPUT


class TestThresholdsCommand:
    """thresholds 命令测试."""

    def test_values_and_checks(self):
        """两个最小通信量及全部验证通过."""
        result = _invoke("thresholds", "--random-samples", "10000", "--grid-points", "10001")
        assert result.exit_code == 0
        values = _parse(result.stdout)
        assert float(values["two_bit_min_comm"]) == pytest.approx(0.20752, abs=1e-4)
        assert float(values["two_independent_min_comm"]) == pytest.approx(0.25512, abs=1e-4)
        assert float(values["two_bit_p1"]) == pytest.approx(0.5, abs=1e-4)
        assert float(values["two_independent_eta"]) == pytest.approx(0.70711, abs=1e-4)
        assert float(values["two_bit_constraint_value"]) == pytest.approx(0.5, abs=1e-6)
        assert float(values["two_independent_constraint_value"]) == pytest.approx(0.5, abs=1e-6)
        checks = [v for k, v in values.items() if k.endswith(("_boundary", "_oracle", "_simplex"))]
        assert len(checks) == 6
        assert set(checks) == {"PASSED"}

    def test_json_constraint_value(self):
        """JSON 输出包含最优点处的约束值."""
        result = _invoke(
            "--json", "thresholds", "--random-samples", "1000", "--grid-points", "1001"
        )
        outputs = json.loads(result.stdout)["outputs"]
        assert outputs["two_bit_constraint_value"] == pytest.approx(0.5, abs=1e-6)
        assert outputs["two_independent_constraint_value"] == pytest.approx(0.5, abs=1e-6)

    def test_invalid_sample_count(self):
        """样本数为 0."""
        assert _invoke("thresholds", "--random-samples", "0").exit_code == EXIT_INVALID_INPUT


class TestSweepCommand:
    """sweep 命令测试."""

    def test_fig1(self, tmp_path):
        """fig1 写出 CSV."""
        path = tmp_path / "fig1.csv"
        result = _invoke("sweep", "fig1", "--points", "3", "--out", str(path))
        assert result.exit_code == 0
        assert _parse(result.stdout)["rows"] == "3"
        lines = path.read_text(encoding="utf-8").splitlines()
        assert lines[0] == "p1,comm_bits"
        assert lines[1] == "0.500000,0.207519"
        assert lines[3] == "1.000000,2.000000"

    def test_fig2(self, tmp_path):
        """fig2 三列，首行 α ≈ 0.333334，末行为 α = 1."""
        path = tmp_path / "fig2.csv"
        result = _invoke("sweep", "fig2", "--points", "200", "--out", str(path))
        assert result.exit_code == 0
        lines = path.read_text(encoding="utf-8").splitlines()
        assert lines[0] == "alpha,comm_two_bit,comm_one_bit_pair"
        assert len(lines) == 201
        first = [float(v) for v in lines[1].split(",")]
        last = [float(v) for v in lines[-1].split(",")]
        assert lines[1].startswith("0.333334,")
        assert first[1:] == pytest.approx([2.0, 2.0], abs=1e-3)
        assert last == pytest.approx([1.0, 0.20752, 0.25512], abs=1e-4)

    def test_unknown_kind(self, tmp_path):
        """未知曲线退出码 2."""
        result = _invoke("sweep", "fig9", "--out", str(tmp_path / "x.csv"))
        assert result.exit_code == EXIT_INVALID_INPUT

    def test_unwritable_path(self, tmp_path):
        """输出目录不存在时退出码 4."""
        result = _invoke("sweep", "fig1", "--out", str(tmp_path / "missing" / "x.csv"))
        assert result.exit_code == EXIT_IO


class TestOtherCommands:
    """holevo / baselines / werner 命令测试."""

    @pytest.mark.parametrize(
        ("p1", "expected"), [("1", "2.00000"), ("0.5", "0.20752"), ("0.25", "0.00000")]
    )
    def test_holevo(self, p1, expected):
        """闭式与特征值两条路径一致."""
        values = _parse(_invoke("holevo", "--p1", p1).stdout)
        assert values["chi_closed_form"] == expected
        assert values["chi_eigensolver"] == expected
        assert values["difference"] == "0.00000"

    def test_holevo_domain(self):
        """p₁ < ¼."""
        assert _invoke("holevo", "--p1", "0.2").exit_code == EXIT_INVALID_INPUT

    def test_baselines(self):
        """两种经典方案都与解析值一致."""
        result = _invoke("baselines", "--samples", "20000", "--seed", "5")
        assert result.exit_code == 0
        values = _parse(result.stdout)
        assert values["guess_analytic"] == "0.50000"
        assert values["popescu_analytic"] == "0.66667"
        assert values["guess_check"] == "PASSED"
        assert values["popescu_check"] == "PASSED"

    def test_werner_alpha_one(self):
        """α = 1 退化为纯单态结果."""
        result = _invoke("werner", "--alpha", "1")
        assert result.exit_code == 0
        values = _parse(result.stdout)
        assert values["threshold_p1"] == "0.50000"
        assert values["comm_two_bit"] == "0.20752"
        assert values["comm_two_bit_optimized"] == "0.20752"
        assert values["boundary_fidelity"] == "0.66667"
        assert values["entangled"] == "yes"

    def test_werner_infeasible(self):
        """α < ⅓ 退出码 2."""
        assert _invoke("werner", "--alpha", "0.2").exit_code == EXIT_INVALID_INPUT


class TestExitCodesAndMetrics:
    """退出码常量与指标导出测试."""

    def test_exit_codes_distinct(self):
        """2 / 3 / 4."""
        assert (EXIT_INVALID_INPUT, EXIT_SELF_CHECK, EXIT_IO) == (2, 3, 4)

    def test_metrics_file(self, tmp_path):
        """--metrics-file 写出 Prometheus 文本."""
        path = tmp_path / "metrics.prom"
        result = _invoke("--metrics-file", str(path), "fidelity", *BOUNDARY)
        assert result.exit_code == 0
        assert "teleport_cli_commands_total" in path.read_text(encoding="utf-8")

    def test_no_arguments_shows_help(self):
        """无参数时显示帮助."""
        result = runner.invoke(app, [])
        assert "fidelity" in result.output

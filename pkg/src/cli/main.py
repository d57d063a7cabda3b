"""命令行入口.

Usage:
    # 给定信道的解析保真度与通信量
    teleport-noise fidelity --p1 0.5 --p2 0.166667 --p3 0.166667 --p4 0.166666

    # 端到端蒙特卡洛自检（偏离解析值超过 4σ 时退出码为 3）
    teleport-noise montecarlo --eta 0.8 --delta 0.9 --samples 1000000 --seed 42

    # 最小充分通信量及其独立验证
    teleport-noise thresholds

    # 曲线数据
    teleport-noise sweep fig2 --points 200 --out fig2.csv

退出码: 0 成功, 2 输入非法, 3 自检失败, 4 输出文件写入失败。
"""

import logging
import sys
import time
from collections.abc import Callable
from dataclasses import dataclass
from pathlib import Path

import typer

from src.bounds import (
    SweepKind,
    ThresholdResult,
    holevo_closed_form,
    holevo_quantity,
    min_comm_two_bit,
    min_comm_two_independent,
    min_comm_werner_two_bit,
    sweep,
    werner_cost_one_bit_pair,
    werner_cost_two_bit,
    werner_sweep,
    werner_threshold,
)
from src.cchannel import OneBitChannel, TwoBitChannel, mutual_info_two_bit, product_channel
from src.cli.report import FAILED, PASSED, RunReport, Scalar, render_lines
from src.config import settings
from src.errors import ContractViolationError, DomainError
from src.monitoring import export_metrics, record_command
from src.qstate import is_entangled_ppt, werner_state
from src.teleport import (
    CLASSICAL_FIDELITY,
    GUESS_FIDELITY,
    TeleportScenario,
    fidelity_exact_werner,
    fidelity_monte_carlo,
    guess_fidelity_monte_carlo,
    is_nonclassical,
    noiseless_werner_fidelity,
    popescu_fidelity_monte_carlo,
)
from src.validator import (
    ConstraintBoundaryValidator,
    GridOracleValidator,
    RandomSimplexValidator,
    ValidationPipeline,
)

logger = logging.getLogger(__name__)

EXIT_INVALID_INPUT = 2
EXIT_SELF_CHECK = 3
EXIT_IO = 4

app = typer.Typer(help="噪声经典信道下的量子隐形传态工具", no_args_is_help=True)


@dataclass
class CliState:
    """全局选项."""

    json_output: bool = False
    timing: bool = False
    metrics_file: Path | None = None


@app.callback()
def main(
    ctx: typer.Context,
    json_output: bool = typer.Option(False, "--json", help="以 JSON 输出运行报告"),
    log_level: str | None = typer.Option(None, "--log-level", help="日志级别（输出到 stderr）"),
    metrics_file: Path | None = typer.Option(None, "--metrics-file", help="Prometheus 指标输出文件"),
    timing: bool = typer.Option(False, "--timing", help="输出运行耗时"),
) -> None:
    """噪声经典信道下的量子隐形传态：保真度、通信量下界与蒙特卡洛验证."""
    logging.basicConfig(
        level=(log_level or settings.log_level).upper(),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
        force=True,
    )
    ctx.obj = CliState(json_output=json_output, timing=timing, metrics_file=metrics_file)


def _export_metrics(state: CliState) -> None:
    if state.metrics_file is None:
        return
    try:
        export_metrics(state.metrics_file)
    except OSError as e:
        typer.echo(f"❌ 指标文件写入失败: {e}", err=True)
        raise typer.Exit(code=EXIT_IO) from e


def _execute(ctx: typer.Context, command: str, body: Callable[[], RunReport]) -> None:
    """运行命令主体，统一处理输出、监控与退出码."""
    state: CliState = ctx.obj or CliState()
    start = time.perf_counter()
    try:
        report = body()
    except (DomainError, ContractViolationError) as e:
        record_command(command, "invalid_input")
        _export_metrics(state)
        typer.echo(f"❌ 输入非法: {e}", err=True)
        raise typer.Exit(code=EXIT_INVALID_INPUT) from e
    except OSError as e:
        record_command(command, "io_error")
        _export_metrics(state)
        typer.echo(f"❌ 文件写入失败: {e}", err=True)
        raise typer.Exit(code=EXIT_IO) from e

    report = report.model_copy(update={"wall_time": time.perf_counter() - start})
    if state.json_output:
        exclude = None if state.timing else {"wall_time"}
        typer.echo(report.model_dump_json(exclude=exclude))
    else:
        for line in render_lines(report, settings.cli.display_decimals, state.timing):
            typer.echo(line)

    failed = report.failed_checks
    record_command(command, "self_check_failed" if failed else "ok")
    _export_metrics(state)
    if failed:
        typer.echo(f"❌ 自检失败: {', '.join(failed)}", err=True)
        raise typer.Exit(code=EXIT_SELF_CHECK)


def _channel_from_options(
    eta: float | None,
    delta: float | None,
    p1: float | None,
    p2: float | None,
    p3: float | None,
    p4: float | None,
) -> TwoBitChannel:
    """--eta/--delta 与 --p1..--p4 二选一."""
    product = eta is not None or delta is not None
    explicit = any(p is not None for p in (p1, p2, p3, p4))
    if product == explicit:
        raise DomainError("specify either --eta/--delta or --p1/--p2/--p3/--p4")
    if product:
        if eta is None or delta is None:
            raise DomainError("both --eta and --delta are required")
        return product_channel(OneBitChannel(z=eta), OneBitChannel(z=delta))
    if p1 is None or p2 is None or p3 is None or p4 is None:
        raise DomainError("all of --p1, --p2, --p3, --p4 are required")
    return TwoBitChannel(p1, p2, p3, p4, sum_tol=settings.cli.probability_sum_tol)


def _scenario(channel: TwoBitChannel, alpha: float | None) -> TeleportScenario:
    if alpha is None:
        return TeleportScenario.singlet(channel)
    return TeleportScenario.werner(alpha, channel)


def _channel_inputs(
    eta: float | None,
    delta: float | None,
    channel: TwoBitChannel,
    alpha: float | None,
) -> dict[str, float | None]:
    inputs: dict[str, float | None] = {}
    if eta is not None:
        inputs.update(eta=eta, delta=delta)
    inputs.update(zip(("p1", "p2", "p3", "p4"), channel.probabilities, strict=True))
    inputs["alpha"] = alpha
    return inputs


# 信道选项
ETA = typer.Option(None, "--eta", help="第一比特直通概率 η")
DELTA = typer.Option(None, "--delta", help="第二比特直通概率 δ")
P1 = typer.Option(None, "--p1", help="两比特都正确的概率")
P2 = typer.Option(None, "--p2", help="仅第一比特翻转的概率")
P3 = typer.Option(None, "--p3", help="仅第二比特翻转的概率")
P4 = typer.Option(None, "--p4", help="两比特都翻转的概率")
ALPHA = typer.Option(None, "--alpha", help="Werner 参数 α（缺省为纯单态）")


@app.command()
def fidelity(
    ctx: typer.Context,
    eta: float | None = ETA,
    delta: float | None = DELTA,
    p1: float | None = P1,
    p2: float | None = P2,
    p3: float | None = P3,
    p4: float | None = P4,
    alpha: float | None = ALPHA,
) -> None:
    """解析保真度、与经典极限 ⅔ 的比较及信道通信量."""

    def body() -> RunReport:
        channel = _channel_from_options(eta, delta, p1, p2, p3, p4)
        value = _scenario(channel, alpha).closed_form()
        return RunReport(
            command="fidelity",
            inputs=_channel_inputs(eta, delta, channel, alpha),
            outputs={
                "fidelity": value,
                "classical_limit": CLASSICAL_FIDELITY,
                "exceeds_classical": is_nonclassical(value),
                "comm_bits": mutual_info_two_bit(channel),
            },
        )

    _execute(ctx, "fidelity", body)


@app.command()
def montecarlo(
    ctx: typer.Context,
    eta: float | None = ETA,
    delta: float | None = DELTA,
    p1: float | None = P1,
    p2: float | None = P2,
    p3: float | None = P3,
    p4: float | None = P4,
    alpha: float | None = ALPHA,
    samples: int = typer.Option(100_000, "--samples", "-n", help="样本数（≥ 100）"),
    seed: int | None = typer.Option(None, "--seed", help="随机种子（缺省取配置）"),
    workers: int | None = typer.Option(None, "--workers", help="并行线程数"),
) -> None:
    """端到端随机模拟，并与解析保真度比对."""

    def body() -> RunReport:
        channel = _channel_from_options(eta, delta, p1, p2, p3, p4)
        scenario = _scenario(channel, alpha)
        run_seed = settings.montecarlo.default_seed if seed is None else seed
        estimate = fidelity_monte_carlo(scenario, samples, run_seed, workers=workers)
        analytic = scenario.closed_form()
        deviation = estimate.deviation(analytic)
        band = settings.montecarlo.sigma_band

        outputs: dict[str, Scalar] = {
            "mean": estimate.mean,
            "std_error": estimate.std_error,
            "samples": estimate.samples,
            "analytic": analytic,
        }
        if deviation != float("inf"):
            outputs["deviation_sigma"] = deviation
        outputs["self_check"] = PASSED if deviation <= band else FAILED
        return RunReport(
            command="montecarlo",
            inputs=_channel_inputs(eta, delta, channel, alpha),
            outputs=outputs,
            seed=run_seed,
        )

    _execute(ctx, "montecarlo", body)


def _threshold_outputs(
    prefix: str,
    result: ThresholdResult,
    pipeline: ValidationPipeline,
) -> dict[str, Scalar]:
    outputs: dict[str, Scalar] = {f"{prefix}_min_comm": result.min_comm}
    outputs.update({f"{prefix}_{label}": value for label, value in result.as_dict().items()})
    outputs[f"{prefix}_constraint_value"] = result.constraint_value
    for check in pipeline.validate(result):
        outputs[f"{prefix}_{check.check_type}"] = check.status.value
        logger.info(f"{prefix} {check.check_type}: {check.message}")
    return outputs


@app.command()
def thresholds(
    ctx: typer.Context,
    random_samples: int = typer.Option(
        1_000_000, "--random-samples", help="随机可行信道搜索的样本数"
    ),
    grid_points: int = typer.Option(100_001, "--grid-points", help="网格验证的点数"),
    seed: int | None = typer.Option(None, "--seed", help="随机搜索种子（缺省取配置）"),
) -> None:
    """两类信道的最小充分通信量及独立验证结果."""

    def body() -> RunReport:
        if random_samples < 1:
            raise DomainError(f"--random-samples must be >= 1, got {random_samples}")
        run_seed = settings.montecarlo.default_seed if seed is None else seed
        pipeline = ValidationPipeline(
            [
                ConstraintBoundaryValidator(),
                GridOracleValidator(points=grid_points),
                RandomSimplexValidator(samples=random_samples, seed=run_seed),
            ]
        )
        outputs = _threshold_outputs("two_bit", min_comm_two_bit(), pipeline)
        outputs.update(
            _threshold_outputs("two_independent", min_comm_two_independent(), pipeline)
        )
        return RunReport(
            command="thresholds",
            inputs={"random_samples": random_samples, "grid_points": grid_points},
            outputs=outputs,
            seed=run_seed,
        )

    _execute(ctx, "thresholds", body)


@app.command(name="sweep")
def sweep_command(
    ctx: typer.Context,
    kind: str = typer.Argument(..., help="fig1 或 fig2"),
    points: int = typer.Option(101, "--points", "-n", help="采样点数（≥ 2）"),
    out: Path = typer.Option(..., "--out", "-o", help="CSV 输出路径"),
) -> None:
    """通信量曲线数据写入 CSV."""

    def body() -> RunReport:
        if kind == "fig1":
            table = sweep(SweepKind.FIG1, points)
        elif kind == "fig2":
            table = werner_sweep(points)
        else:
            raise DomainError(f"sweep kind must be fig1 or fig2, got {kind!r}")
        table.to_csv(out, decimals=settings.cli.csv_decimals)
        return RunReport(
            command="sweep",
            inputs={"kind": kind, "points": points, "out": str(out)},
            outputs={"rows": len(table.rows), "columns": ",".join(table.columns)},
        )

    _execute(ctx, "sweep", body)


@app.command()
def holevo(
    ctx: typer.Context,
    p1: float = typer.Option(..., "--p1", help="共享态的单态权重 p₁ ∈ [¼, 1]"),
) -> None:
    """密集编码系综的 Holevo 量：闭式与特征值两条路径."""

    def body() -> RunReport:
        closed = holevo_closed_form(p1)
        numeric = holevo_quantity(p1)
        return RunReport(
            command="holevo",
            inputs={"p1": p1},
            outputs={
                "chi_closed_form": closed,
                "chi_eigensolver": numeric,
                "difference": abs(closed - numeric),
            },
        )

    _execute(ctx, "holevo", body)


@app.command()
def baselines(
    ctx: typer.Context,
    samples: int = typer.Option(100_000, "--samples", "-n", help="样本数（≥ 100）"),
    seed: int | None = typer.Option(None, "--seed", help="随机种子（缺省取配置）"),
) -> None:
    """不使用纠缠的两种经典方案：解析值与蒙特卡洛确认."""

    def body() -> RunReport:
        run_seed = settings.montecarlo.default_seed if seed is None else seed
        band = settings.montecarlo.sigma_band
        guess = guess_fidelity_monte_carlo(samples, run_seed)
        popescu = popescu_fidelity_monte_carlo(samples, run_seed)
        return RunReport(
            command="baselines",
            inputs={"samples": samples},
            outputs={
                "guess_analytic": GUESS_FIDELITY,
                "guess_montecarlo": guess.mean,
                "guess_std_error": guess.std_error,
                "guess_check": PASSED if guess.agrees_with(GUESS_FIDELITY, band) else FAILED,
                "popescu_analytic": CLASSICAL_FIDELITY,
                "popescu_montecarlo": popescu.mean,
                "popescu_std_error": popescu.std_error,
                "popescu_check": (
                    PASSED if popescu.agrees_with(CLASSICAL_FIDELITY, band) else FAILED
                ),
            },
            seed=run_seed,
        )

    _execute(ctx, "baselines", body)


@app.command()
def werner(
    ctx: typer.Context,
    alpha: float = typer.Option(..., "--alpha", help="Werner 参数 α ∈ [⅓, 1]"),
) -> None:
    """Werner 资源：保真度阈值、两种信道的最小通信量与纠缠判定."""

    def body() -> RunReport:
        threshold = werner_threshold(alpha)
        optimized = min_comm_werner_two_bit(alpha)
        return RunReport(
            command="werner",
            inputs={"alpha": alpha},
            outputs={
                "threshold_p1": threshold,
                "comm_two_bit": werner_cost_two_bit(alpha),
                "comm_two_bit_optimized": optimized.min_comm,
                "comm_one_bit_pair": werner_cost_one_bit_pair(alpha),
                "noiseless_fidelity": noiseless_werner_fidelity(alpha),
                "boundary_fidelity": fidelity_exact_werner(
                    alpha, TwoBitChannel(*optimized.argmin, sum_tol=1e-9)
                ),
                "entangled": is_entangled_ppt(werner_state(alpha)),
            },
        )

    _execute(ctx, "werner", body)


if __name__ == "__main__":
    app()

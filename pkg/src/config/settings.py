"""项目配置管理.

使用 pydantic-settings 管理环境变量配置，支持从 .env 文件读取.
"""

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class NumericsConfig(BaseSettings):
    """数值计算容差配置.

    Attributes:
        hermitian_tol: 厄米性检查容差
        psd_tol: 半正定检查容差（最小特征值下限取负）
        entropy_clamp_tol: 熵计算前允许截断到 0 的负特征值幅度
        jacobi_tol: Jacobi 迭代的非对角 Frobenius 范数阈值
        jacobi_max_sweeps: Jacobi 最大扫描轮数
        golden_tol: 黄金分割搜索的参数容差
        probability_sum_tol: 信道概率归一化容差
    """

    model_config = SettingsConfigDict(env_prefix="NUMERICS_", env_file=".env", extra="ignore")

    hermitian_tol: float = Field(default=1e-12, gt=0, description="厄米性检查容差")
    psd_tol: float = Field(default=1e-12, gt=0, description="半正定检查容差")
    entropy_clamp_tol: float = Field(default=1e-9, gt=0, description="熵计算负特征值截断容差")
    jacobi_tol: float = Field(default=1e-12, gt=0, description="Jacobi 收敛阈值")
    jacobi_max_sweeps: int = Field(default=100, ge=1, description="Jacobi 最大扫描轮数")
    golden_tol: float = Field(default=1e-10, gt=0, description="黄金分割搜索参数容差")
    probability_sum_tol: float = Field(default=1e-12, gt=0, description="概率和容差")


class MonteCarloConfig(BaseSettings):
    """蒙特卡洛模拟配置.

    Attributes:
        default_seed: 未指定时使用的随机种子
        block_size: 随机子流划分单位（每块一个独立子流）
        workers: 并行线程数
        sigma_band: 自检接受带（标准误倍数）
        show_progress: 是否显示 tqdm 进度条（输出到 stderr）
    """

    model_config = SettingsConfigDict(env_prefix="MONTECARLO_", env_file=".env", extra="ignore")

    default_seed: int = Field(default=0, ge=0, description="默认随机种子")
    block_size: int = Field(default=50_000, ge=1, description="随机子流块大小")
    workers: int = Field(default=1, ge=1, le=64, description="并行线程数")
    sigma_band: float = Field(default=4.0, gt=0, description="接受带（标准误倍数）")
    show_progress: bool = Field(default=False, description="是否显示进度条")


class CliConfig(BaseSettings):
    """命令行输出配置.

    Attributes:
        probability_sum_tol: 命令行输入概率和的容差（拒绝而非重新归一化）
        csv_decimals: CSV 数值小数位
        display_decimals: 终端显示小数位
    """

    model_config = SettingsConfigDict(env_prefix="CLI_", env_file=".env", extra="ignore")

    probability_sum_tol: float = Field(default=1e-9, gt=0, description="输入概率和容差")
    csv_decimals: int = Field(default=6, ge=1, le=15, description="CSV 小数位")
    display_decimals: int = Field(default=5, ge=1, le=15, description="显示小数位")


class Settings(BaseSettings):
    """全局配置."""

    model_config = SettingsConfigDict(env_file=".env", extra="ignore")

    numerics: NumericsConfig = Field(default_factory=NumericsConfig)
    montecarlo: MonteCarloConfig = Field(default_factory=MonteCarloConfig)
    cli: CliConfig = Field(default_factory=CliConfig)

    # 应用配置
    app_name: str = Field(default="Noisy Teleportation Toolkit", description="应用名称")
    debug: bool = Field(default=False, description="调试模式")
    log_level: str = Field(default="INFO", description="日志级别")


# 全局配置实例
settings = Settings()

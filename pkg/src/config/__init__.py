from .settings import CliConfig, MonteCarloConfig, NumericsConfig, Settings, settings

__all__ = ["settings", "Settings", "NumericsConfig", "MonteCarloConfig", "CliConfig"]

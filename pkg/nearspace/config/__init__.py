from .loader import load_run_config, load_space, parse_space, resolve_env_vars, resolve_nested_env_vars
from .schema import GridConfig, OracleConfig, RunConfig, ScenarioParams, SpaceFile

__all__ = [
    "GridConfig",
    "OracleConfig",
    "RunConfig",
    "ScenarioParams",
    "SpaceFile",
    "load_run_config",
    "load_space",
    "parse_space",
    "resolve_env_vars",
    "resolve_nested_env_vars",
]

import json
import os
import re
from pathlib import Path
from typing import Any, Union

import yaml
from pydantic import ValidationError

from ..errors import InputError, ParseError
from ..topology.space import FiniteSpace
from .schema import RunConfig, SpaceFile


def resolve_env_vars(value: Any) -> Any:
    """Resolve ${ENV_VAR} patterns in string values"""
    if not isinstance(value, str):
        return value

    pattern = r"\${([^}^{]+)}"
    for match in re.finditer(pattern, value):
        env_var = match.group(1)
        env_value = os.environ.get(env_var)
        if env_value is None:
            raise ValueError(f"Environment variable {env_var} not found")
        value = value.replace(match.group(0), env_value)

    return value


def resolve_nested_env_vars(data):
    """Recursively resolve environment variables in nested structures"""
    if isinstance(data, dict):
        return {k: resolve_nested_env_vars(v) for k, v in data.items()}
    elif isinstance(data, list):
        return [resolve_nested_env_vars(v) for v in data]
    else:
        return resolve_env_vars(data)


def _read(path: Union[str, Path]) -> str:
    try:
        return Path(path).read_text()
    except OSError as e:
        raise InputError(f"Cannot read {path}: {e.strerror}") from e


def _describe(error: ValidationError) -> str:
    first = error.errors()[0]
    location = ".".join(str(part) for part in first["loc"])
    return f"{location}: {first['msg']}" if location else first["msg"]


def parse_space(data: Any) -> FiniteSpace:
    """Validate a decoded space document and build the space it describes"""
    try:
        space_file = SpaceFile.model_validate(data)
    except ValidationError as e:
        raise InputError(f"Invalid space file: {_describe(e)}") from e
    return space_file.to_space()


def load_space(path: Union[str, Path]) -> FiniteSpace:
    """Load a JSON space file, reporting syntax errors with their line and column"""
    try:
        data = json.loads(_read(path))
    except json.JSONDecodeError as e:
        raise ParseError(f"Malformed space file {path}: {e.msg}", e.lineno, e.colno) from e
    return parse_space(data)


def load_run_config(path: Union[str, Path]) -> RunConfig:
    """Load and parse YAML run config with environment variable support"""
    try:
        config_dict = yaml.safe_load(_read(path)) or {}
    except yaml.MarkedYAMLError as e:
        mark = e.problem_mark
        line, column = (mark.line + 1, mark.column + 1) if mark is not None else (None, None)
        raise ParseError(f"Malformed run config {path}: {e.problem}", line, column) from e

    # Resolve any environment variables in the config
    config_dict = resolve_nested_env_vars(config_dict)

    try:
        return RunConfig.model_validate(config_dict)
    except ValidationError as e:
        raise InputError(f"Invalid run config: {_describe(e)}") from e

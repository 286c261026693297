"""
Runtime configuration: defaults, .env / environment overrides, CLI overrides.
"""
import os
from enum import Enum
from typing import Any, Dict, Optional

from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict, ValidationError, field_validator

from .errors import ConfigError

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")

REPO_ROOT = os.path.dirname(os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))))

ENV_VARIABLES = {
    "lexicon_path": "NLMLKIT_LEXICON",
    "store_path": "NLMLKIT_STORE",
    "log_level": "NLMLKIT_LOG_LEVEL",
}


class OutputFormat(str, Enum):
    NLML = "nlml"
    TREE = "tree"
    JSON_LINES = "json-lines"


class CliConfig(BaseModel):
    """Settings shared by all subcommands"""
    model_config = ConfigDict(extra="forbid")

    lexicon_path: str = os.path.join("lexicon", "en-demo.lex")
    store_path: str = os.path.join("data", "nldb.tsv")
    output_format: OutputFormat = OutputFormat.NLML
    all_results: bool = False
    show_text: bool = False
    log_level: str = "WARNING"

    @field_validator("log_level")
    @classmethod
    def _known_level(cls, value: str) -> str:
        level = value.upper()
        if level not in LOG_LEVELS:
            raise ValueError(f"unknown log level {value!r}")
        return level

    def resolved(self) -> "CliConfig":
        """Copy with both paths made absolute against the repository root"""
        def absolute(path: str) -> str:
            return path if os.path.isabs(path) else os.path.join(REPO_ROOT, path)

        return self.model_copy(update={
            "lexicon_path": absolute(self.lexicon_path),
            "store_path": absolute(self.store_path),
        })


def load_config(overrides: Optional[Dict[str, Any]] = None, env_file: Optional[str] = None) -> CliConfig:
    """
    Build the configuration: defaults < environment (.env included) < overrides.

    Args:
        overrides: explicit values, typically CLI flags; None values are ignored
        env_file: .env location; defaults to the one at the repository root

    Raises:
        ConfigError: a value does not validate
    """
    env_path = env_file or os.path.join(REPO_ROOT, ".env")
    if os.path.exists(env_path):
        load_dotenv(env_path)
    values: Dict[str, Any] = {}
    for name, variable in ENV_VARIABLES.items():
        if os.getenv(variable):
            values[name] = os.getenv(variable)
    values.update({k: v for k, v in (overrides or {}).items() if v is not None})
    try:
        return CliConfig(**values).resolved()
    except ValidationError as e:
        reason = "; ".join(f"{'.'.join(str(p) for p in err['loc'])}: {err['msg']}" for err in e.errors())
        raise ConfigError(reason) from e


_config: Optional[CliConfig] = None


def get_config() -> CliConfig:
    """Process-wide configuration, loaded on first use"""
    global _config
    if _config is None:
        _config = load_config()
    return _config


def reset_config() -> None:
    global _config
    _config = None

"""Configuration management for Sublattice CLI."""

from pathlib import Path
from typing import Any

import yaml
from pydantic import Field, TypeAdapter
from pydantic import ValidationError as PydanticValidationError
from pydantic_settings import BaseSettings, SettingsConfigDict

from sublattice.utils.error_handler import ConfigurationError

# Load .env file early before settings initialization
_env_loaded = False
_env_path = Path(__file__).parent.parent.parent / ".env"
if _env_path.exists():
    try:
        from dotenv import load_dotenv

        load_dotenv(_env_path)
        _env_loaded = True
    except ImportError:
        pass


class EngineSettings(BaseSettings):
    """Limits and guards of the subgroup engine."""

    model_config = SettingsConfigDict(env_prefix="SUBLATTICE_ENGINE__", extra="ignore")

    element_cap: int = Field(
        default=2**20, ge=1, description="Largest group order accepted for element-indexed mode"
    )
    oracle_limit: int = Field(
        default=1000, ge=1, description="Largest group order for the brute-force oracle"
    )
    expand_bound: int = Field(
        default=300, ge=1, description="Largest subgroup total drawn member by member"
    )
    complement_search_limit: int = Field(
        default=2**20, ge=1, description="Guard on |N/B|^#gens during complement search"
    )
    isomorphism_limit: int = Field(
        default=1000, ge=1, description="Largest group order handed to the isomorphism search"
    )
    table_limit: int = Field(
        default=5040, ge=1, description="Largest order for which multiplication columns are cached"
    )


class OutputSettings(BaseSettings):
    """Report and table output configuration."""

    model_config = SettingsConfigDict(env_prefix="SUBLATTICE_OUTPUT__", extra="ignore")

    rank_hints: bool = Field(default=False, description="Group DOT nodes of equal order by rank")
    json_indent: int = Field(default=2, ge=0, description="Indentation of JSON documents")
    show_generators: bool = Field(
        default=False, description="Show representative generators in class tables"
    )


class Settings(BaseSettings):
    """Main application settings."""

    model_config = SettingsConfigDict(
        env_prefix="SUBLATTICE_",
        env_nested_delimiter="__",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    # Application info
    app_name: str = Field(default="Sublattice CLI", description="Application name")
    version: str = Field(default="0.1.0", description="Application version")
    debug: bool = Field(default=False, description="Debug mode")

    # Sub-configurations
    engine: EngineSettings = Field(default_factory=EngineSettings)
    output: OutputSettings = Field(default_factory=OutputSettings)

    # Paths
    base_dir: Path = Field(
        default_factory=lambda: Path(__file__).parent.parent.parent, description="Base directory"
    )
    config_file: Path = Field(
        default=Path("config/sublattice.yaml"), description="Config file path"
    )
    log_file: Path | None = Field(default=None, description="Log file path")

    def __init__(self, load_config_file: bool = True, **data: Any) -> None:
        super().__init__(**data)
        if load_config_file:
            self._load_config_file()

    def _load_config_file(self) -> None:
        """Load settings from YAML config file if exists.

        Raises:
            ConfigurationError: the file is not valid YAML or a value fails validation
        """
        config_path = self.base_dir / self.config_file

        if config_path.exists():
            try:
                with open(config_path, encoding="utf-8") as f:
                    yaml_config = yaml.safe_load(f)
            except yaml.YAMLError as e:
                raise ConfigurationError(str(self.config_file), f"malformed YAML ({e})") from e

            if yaml_config is None:
                return
            if not isinstance(yaml_config, dict):
                raise ConfigurationError(str(self.config_file), "top level must be a mapping")
            self._merge_config(yaml_config)

    def _merge_config(self, config: dict[str, Any]) -> None:
        """Merge YAML config into settings.

        Values already supplied through the environment win over the file.
        Every merged section is validated against its model.
        """
        fields = type(self).model_fields
        for key, value in config.items():
            if key not in fields:
                continue
            current = getattr(self, key)
            try:
                if isinstance(current, BaseSettings):
                    if not isinstance(value, dict):
                        raise ConfigurationError(key, "expected a mapping")
                    overrides = {
                        k: v
                        for k, v in value.items()
                        if k in type(current).model_fields and k not in current.model_fields_set
                    }
                    merged = {**current.model_dump(), **overrides}
                    setattr(self, key, type(current).model_validate(merged))
                elif key not in self.model_fields_set:
                    annotation = fields[key].annotation
                    setattr(self, key, TypeAdapter(annotation).validate_python(value))
            except PydanticValidationError as e:
                raise ConfigurationError(key, _first_error(e)) from e


def _first_error(error: PydanticValidationError) -> str:
    detail = error.errors()[0]
    location = ".".join(str(part) for part in detail["loc"])
    return f"{location}: {detail['msg']}" if location else detail["msg"]


# Global settings instance; a broken config file leaves the defaults in place
# and is reported by the CLI through ``config_error``.
config_error: ConfigurationError | None = None
try:
    settings = Settings()
except ConfigurationError as e:
    config_error = e
    settings = Settings(load_config_file=False)

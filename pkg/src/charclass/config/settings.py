"""Settings and configuration management using Pydantic."""

import os
from functools import lru_cache
from pathlib import Path
from typing import Any, Literal, Optional

import yaml
from pydantic import AliasChoices, Field, field_validator
from pydantic.fields import FieldInfo
from pydantic_settings import (
    BaseSettings,
    PydanticBaseSettingsSource,
    SettingsConfigDict,
)

from charclass.logging.config import get_logger

CONFIG_FILE = Path("config.yaml")
PACKAGE_DATA_DIR = Path(__file__).resolve().parent.parent / "data"

logger = get_logger(__name__)


class YamlConfigSettingsSource(PydanticBaseSettingsSource):
    """
    Settings source that loads values from a ``config.yaml`` in the
    working directory.
    """

    def _load(self) -> dict[str, Any]:
        if not CONFIG_FILE.exists():
            return {}
        encoding = self.config.get("env_file_encoding")
        try:
            content = yaml.safe_load(CONFIG_FILE.read_text(encoding))
        except (OSError, yaml.YAMLError) as e:
            logger.warning(f"Failed to load {CONFIG_FILE}: {e}")
            return {}
        return content if isinstance(content, dict) else {}

    def get_field_value(self, field: FieldInfo, field_name: str) -> tuple[Any, str, bool]:
        return self._load().get(field_name), field_name, False

    def __call__(self) -> dict[str, Any]:
        return self._load()


class Settings(BaseSettings):
    """charclass configuration settings."""

    model_config = SettingsConfigDict(
        env_prefix="CHARCLASS_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        populate_by_name=True,
        extra="ignore",
    )

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls: type[BaseSettings],
        init_settings: PydanticBaseSettingsSource,
        env_settings: PydanticBaseSettingsSource,
        dotenv_settings: PydanticBaseSettingsSource,
        file_secret_settings: PydanticBaseSettingsSource,
    ) -> tuple[PydanticBaseSettingsSource, ...]:
        return (
            init_settings,
            env_settings,
            dotenv_settings,
            YamlConfigSettingsSource(settings_cls),
            file_secret_settings,
        )

    # Data
    data_dir: Path = Field(
        default=PACKAGE_DATA_DIR,
        validation_alias=AliasChoices("CHARCLASS_DATA", "data_dir"),
        description="Directory holding even-rank presentation files (bgo<n>.json)",
    )

    # Computation
    degree_cap: int = Field(
        default=16,
        ge=1,
        le=64,
        description="Default cohomological degree cap for every presentation",
    )
    random_seed: int = Field(
        default=0,
        description="Seed for randomized self-checks",
    )

    # Logging
    log_level: Literal["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"] = Field(
        default="WARNING",
        description="Logging level",
    )
    log_file: Optional[Path] = Field(
        default=None,
        description="Optional log file path",
    )

    # Development
    debug: bool = Field(
        default=False,
        description="Enable debug mode",
    )

    @field_validator("data_dir", "log_file", mode="before")
    @classmethod
    def expand_path(cls, v: Optional[str | Path]) -> Optional[Path]:
        """Expand environment variables and user paths."""
        if v is None:
            return None
        if isinstance(v, str):
            v = os.path.expandvars(os.path.expanduser(v))
        return Path(v)

    def even_presentation_path(self, n: int) -> Path:
        """Location of the even-rank GO presentation file for rank ``n``."""
        return self.data_dir / f"bgo{n}.json"


@lru_cache
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()

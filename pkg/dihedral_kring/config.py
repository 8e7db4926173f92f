"""
Configuration Management
========================
Centralized settings and logging setup for the dihedral K-ring toolkit
"""

import logging
from pathlib import Path
from typing import Optional

from pydantic import field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Toolkit settings with environment variable support (prefix DIHEDRAL_)"""

    model_config = SettingsConfigDict(
        env_prefix="DIHEDRAL_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=True,
        extra="ignore",
    )

    # Application Settings
    APP_NAME: str = "Dihedral K-Ring Auditor"
    APP_VERSION: str = "1.0.0"
    SCHEMA_VERSION: int = 1

    # Server Settings
    HOST: str = "127.0.0.1"
    PORT: int = 8000

    # Logging Settings
    LOG_LEVEL: str = "WARNING"
    LOG_FILE: Optional[Path] = None
    LOG_JSON: bool = False
    LOG_FORMAT: str = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

    # Sweep Settings
    MAX_WORKERS: int = 1
    MONOMIAL_GUARD: int = 10_000
    # relation rows x columns over a whole truncation
    MATRIX_GUARD: int = 50_000

    # Dual-oracle sampling
    ORACLE_SAMPLES: int = 1000
    ORACLE_SEED: int = 20120509
    ORACLE_COEFF_BOUND: int = 3

    @field_validator("LOG_LEVEL")
    @classmethod
    def normalize_level(cls, v: str) -> str:
        level = v.upper()
        if not isinstance(logging.getLevelName(level), int):
            raise ValueError(f"Unknown log level: {v}")
        return level

    @field_validator("LOG_FILE", mode="before")
    @classmethod
    def create_log_directory(cls, v):
        if v:
            Path(v).parent.mkdir(parents=True, exist_ok=True)
        return v

    @field_validator("MAX_WORKERS", "MONOMIAL_GUARD", "MATRIX_GUARD", "ORACLE_SAMPLES", "ORACLE_COEFF_BOUND")
    @classmethod
    def positive(cls, v: int) -> int:
        if v < 1:
            raise ValueError("must be >= 1")
        return v


# Initialize settings
settings = Settings()


def setup_logging(level: Optional[str] = None) -> None:
    """Configure toolkit logging; stdout is reserved for command output"""
    level_name = (level or settings.LOG_LEVEL).upper()
    log_level = getattr(logging, level_name)

    if settings.LOG_JSON:
        from pythonjsonlogger import jsonlogger
        formatter: logging.Formatter = jsonlogger.JsonFormatter(settings.LOG_FORMAT)
    else:
        formatter = logging.Formatter(settings.LOG_FORMAT)

    log_handlers = []

    # Console handler (stderr)
    console_handler = logging.StreamHandler()
    console_handler.setLevel(log_level)
    console_handler.setFormatter(formatter)
    log_handlers.append(console_handler)

    # File handler (if enabled)
    if settings.LOG_FILE:
        try:
            from logging.handlers import RotatingFileHandler
            file_handler = RotatingFileHandler(
                settings.LOG_FILE,
                maxBytes=10 * 1024 * 1024,  # 10MB
                backupCount=5,
            )
            file_handler.setLevel(log_level)
            file_handler.setFormatter(formatter)
            log_handlers.append(file_handler)
        except OSError as e:
            logging.warning(f"Could not setup file logging: {e}")

    logging.basicConfig(level=log_level, handlers=log_handlers, force=True)

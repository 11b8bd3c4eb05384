"""
Configuration Management
========================
Centralized configuration for the bijection toolkit.
"""

import os
from pathlib import Path
from typing import Literal

from dotenv import load_dotenv
from pydantic import BaseModel, Field


# Load environment variables
load_dotenv()

# Project paths
PROJECT_ROOT = Path(__file__).parent.parent
SRC_DIR = PROJECT_ROOT / "src"


def _env_bool(name: str, default: str) -> bool:
    return os.getenv(name, default).lower() in ("1", "true", "yes")


class AlphabetConfig(BaseModel):
    """Alphabet Settings"""
    default_size: int = Field(
        default_factory=lambda: int(os.getenv("LYNDON_ALPHABET", "3")),
        ge=1,
    )
    # rank i renders as the (i+1)-th lowercase letter
    max_text_size: int = 26


class VerificationConfig(BaseModel):
    """Exhaustive Verification Budgets"""
    max_word_enumeration: int = Field(
        default_factory=lambda: int(os.getenv("LYNDON_MAX_WORDS", "200000"))
    )
    max_perm_n: int = Field(
        default_factory=lambda: int(os.getenv("LYNDON_MAX_PERM_N", "9"))
    )
    max_fs_n: int = Field(
        default_factory=lambda: int(os.getenv("LYNDON_MAX_FS_N", "7"))
    )
    workers: int = Field(
        default_factory=lambda: int(os.getenv("LYNDON_WORKERS", "1")),
        ge=1,
    )
    show_progress: bool = Field(
        default_factory=lambda: _env_bool("LYNDON_PROGRESS", "false")
    )
    check_invariants: bool = Field(
        default_factory=lambda: _env_bool("LYNDON_CHECK_INVARIANTS", "false")
    )


class OutputConfig(BaseModel):
    """Output Rendering Settings"""
    default_format: Literal["text", "records"] = Field(
        default_factory=lambda: os.getenv("LYNDON_FORMAT", "text")
    )
    factor_bar: str = "|"
    dashed_bar: str = "!"
    empty_word: str = "-"


class LoggingConfig(BaseModel):
    """Logging Settings"""
    level: str = Field(default_factory=lambda: os.getenv("LOG_LEVEL", "WARNING").upper())
    format: str = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


class ServerConfig(BaseModel):
    """API Server Settings"""
    host: str = Field(default_factory=lambda: os.getenv("API_HOST", "127.0.0.1"))
    port: int = Field(default_factory=lambda: int(os.getenv("API_PORT", "8000")))
    debug: bool = Field(default_factory=lambda: _env_bool("DEBUG", "false"))


class Config(BaseModel):
    """Main Configuration Container"""
    alphabet: AlphabetConfig = Field(default_factory=AlphabetConfig)
    verification: VerificationConfig = Field(default_factory=VerificationConfig)
    output: OutputConfig = Field(default_factory=OutputConfig)
    logging: LoggingConfig = Field(default_factory=LoggingConfig)
    server: ServerConfig = Field(default_factory=ServerConfig)


# Global config instance
config = Config()


def get_config() -> Config:
    """Get the global configuration instance."""
    return config


if __name__ == "__main__":
    # Print configuration for debugging
    import json
    print(json.dumps(config.model_dump(), indent=2))

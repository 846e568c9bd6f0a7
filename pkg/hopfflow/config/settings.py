"""Engine configuration with environment variable support."""
from typing import Literal
from pydantic_settings import BaseSettings, SettingsConfigDict
from pydantic import Field, field_validator, model_validator


class Settings(BaseSettings):
    """Type-safe configuration loaded from HOPFFLOW_* environment variables or .env file."""

    APP_NAME: str = "hopfflow"
    APP_VERSION: str = "1.0.0"

    LOG_LEVEL: str = Field(default="INFO", description="Logging level")

    # Enumeration
    MAX_CLASSES: int = Field(
        default=1_000_000,
        ge=1,
        description="Maximum number of isomorphism classes an enumeration may produce"
    )

    # Prim evaluation
    PRIM_STEP_BUDGET: int = Field(
        default=1_000_000,
        ge=1,
        description="Function applications allowed per flowchart evaluation call"
    )

    # Laurent target algebra
    LAURENT_POLE_CAP: int = Field(
        default=16,
        ge=0,
        description="Default pole order cap P of truncated Laurent values"
    )
    LAURENT_REGULAR_CAP: int = Field(
        default=16,
        ge=0,
        description="Default regular order cap R of truncated Laurent values"
    )

    # Feynman series
    TREE_LAMBDA_CONVENTION: Literal["unit", "scaled"] = Field(
        default="unit",
        description="unit: compare tree sums at lambda = 1; scaled: multiply tree sums by lambda first"
    )
    QUADRATURE_EPSREL: float = Field(
        default=1e-12,
        gt=0.0,
        lt=1.0,
        description="Relative tolerance of the numeric Gaussian moment check"
    )

    # Sequence fits
    FIT_MIN_LENGTH: int = Field(
        default=10_000,
        ge=1,
        description="Sequences shorter than this produce a warning in asymptotic fits"
    )
    FIT_CONDITION_LIMIT: float = Field(
        default=1e12,
        gt=1.0,
        description="Least-squares condition number above which a fit is flagged ill-conditioned"
    )

    OUTPUT_FORMAT: Literal["human", "json"] = Field(
        default="human",
        description="Default CLI output format"
    )

    @field_validator("LOG_LEVEL", mode="after")
    @classmethod
    def normalize_log_level(cls, v: str) -> str:
        """Accept lowercase level names."""
        level = v.strip().upper()
        if level not in {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}:
            raise ValueError(f"Unknown log level: {v}")
        return level

    @model_validator(mode="after")
    def validate_caps(self) -> "Settings":
        """Laurent caps must leave room for at least one pole or one regular term."""
        if self.LAURENT_POLE_CAP + self.LAURENT_REGULAR_CAP == 0:
            raise ValueError(
                "LAURENT_POLE_CAP and LAURENT_REGULAR_CAP cannot both be zero: "
                "the target algebra would only hold constants"
            )
        return self

    model_config = SettingsConfigDict(
        env_prefix="HOPFFLOW_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=True,
        extra="ignore"
    )


settings = Settings()

"""Runtime settings, read from the environment and an optional .env file."""

from dotenv import load_dotenv
from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

load_dotenv()


class Settings(BaseSettings):
    """Defaults for the CLI and the worked-example pipeline.

    Every field can be overridden with a ``LOGOS_``-prefixed environment
    variable, e.g. ``LOGOS_SEED=7``.
    """

    model_config = SettingsConfigDict(
        env_prefix="LOGOS_",
        env_file=".env",
        extra="ignore",
    )

    seed: int = Field(20180101, description="Default sampler seed")
    ks_budget: int = Field(10**8, gt=0, description="Node visits before a KS search gives up")
    commute_tol: float = Field(1e-9, gt=0, description="Frobenius tolerance for [P,Q] = 0")
    trials: int = Field(100_000, gt=0, description="Trials drawn by the reproduction pipeline")
    log_level: str = "WARNING"


settings = Settings()

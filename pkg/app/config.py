import logging

from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    """Application settings."""
    PROJECT_NAME: str = "Multicube API"
    ENVIRONMENT: str = "development"
    LOG_LEVEL: str = "INFO"

    TRACE_MAX_WINDOWS: int = 2_000_000
    PATCH_MAX_CELLS: int = 250_000
    CUBE_CACHE_SIZE: int = 8192
    SVG_CELL_SIZE: int = 48

    class Config:
        env_file = ".env"

settings = Settings()

def is_development() -> bool:
    """Check if we're in development mode."""
    return settings.ENVIRONMENT == "development"


def configure_logging(level: str | None = None) -> None:
    """Install one stream handler on the root logger."""
    level_name = (level or settings.LOG_LEVEL).upper()
    root = logging.getLogger()
    root.setLevel(getattr(logging, level_name, logging.INFO))
    if not any(getattr(h, "_multicube", False) for h in root.handlers):
        handler = logging.StreamHandler()
        handler.setFormatter(
            logging.Formatter("%(asctime)s %(levelname)s %(name)s: %(message)s")
        )
        handler._multicube = True
        root.addHandler(handler)

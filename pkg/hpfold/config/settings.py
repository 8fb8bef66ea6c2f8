from pydantic_settings import BaseSettings
from pathlib import Path


class Settings(BaseSettings):
    # Application
    APP_NAME: str = "hpfold"
    APP_VERSION: str = "1.0.0"

    # Logging
    LOG_LEVEL: str = "INFO"
    LOG_FILE: str = ""

    # Search
    SEARCH_WORKERS: int = 1
    SEARCH_MAX_NODES: int = 1_000_000_000
    SEARCH_MAX_SECONDS: float = 600.0
    SEARCH_SPLIT_DEPTH: int = 4  # prefix depth for parallel tasks

    # Keyboard move decoding
    DECODE_KEYS: str = "adefsw"

    # Corpus
    CORPUS_DIR: str = ""

    # Rendering
    SVG_PITCH: int = 24

    class Config:
        env_file = ".env"
        env_file_encoding = "utf-8"
        case_sensitive = True
        extra = "ignore"

    @property
    def corpus_path(self) -> Path:
        if self.CORPUS_DIR:
            return Path(self.CORPUS_DIR)
        return Path(__file__).resolve().parent.parent / "corpus" / "data"


def get_settings() -> Settings:
    """Get cached settings instance"""
    return Settings()


# Create a cached instance
settings = get_settings()

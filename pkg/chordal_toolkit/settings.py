from pathlib import Path
from pydantic_settings import BaseSettings
from pydantic import Field

# Load .env file from project root
env_file = Path(__file__).parent.parent / ".env"


class Settings(BaseSettings):
    BUDGET: int = Field(
        default=12,
        description="Largest clique/node count accepted by the enumeration oracles"
    )
    MAX_TREES: int = Field(
        default=250_000,
        description="Kirchhoff-count ceiling checked before enumerating spanning trees"
    )
    ISO_GUARD: int = Field(default=12)
    EXHAUSTIVE_GUARD: int = Field(default=6)
    SEED: int = Field(default=20240501)
    GENERATION_RETRIES: int = Field(default=200)
    LOG_LEVEL: str = Field(default="WARNING")

    model_config = {
        'env_prefix': 'CRT_',
        'env_file': str(env_file) if env_file.exists() else None,
        'env_file_encoding': 'utf-8',
        'extra': 'ignore'
    }


settings = Settings()

from pathlib import Path
from typing import Optional, Tuple, Type

from pydantic import Field
from pydantic_settings import BaseSettings, PydanticBaseSettingsSource, SettingsConfigDict


class NumericSettings(BaseSettings):
    # C3 agent count cap
    C3_AGENT_CAP: int = Field(default=10_000, gt=0)

    # h(beta) search
    H_BETA_MAX_ITERATIONS: int = Field(default=1_000_000_000, gt=0)
    H_BETA_VERIFY_WINDOW: int = Field(default=1_000, gt=0)

    # zeta summation
    ZETA_DIRECT_TERMS: int = Field(default=10_000, gt=10)

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls: Type[BaseSettings],
        init_settings: PydanticBaseSettingsSource,
        env_settings: PydanticBaseSettingsSource,
        dotenv_settings: PydanticBaseSettingsSource,
        file_secret_settings: PydanticBaseSettingsSource,
    ) -> Tuple[PydanticBaseSettingsSource, ...]:
        return (init_settings,)


class Settings(BaseSettings):
    # 수치 계산 설정
    numeric: NumericSettings = NumericSettings()

    # 기본 애플리케이션 설정
    APP_NAME: str = "tsvha"
    APP_DESC: str = "Thompson sampling with virtual helping agents: policies, bounds and benchmark harness"
    APP_VERSION: str = "0.1.0"

    # 로깅 설정
    LOG_LEVEL: str = Field(default="INFO", pattern="^(DEBUG|INFO|WARNING|ERROR)$")
    LOG_FORMAT: str = "%(asctime)s - %(name)s - %(levelname)s - %(filename)s:%(lineno)d - %(funcName)s() - %(message)s"
    LOG_FILE: Optional[Path] = None

    # 실험 실행 설정 (None = available parallelism)
    DEFAULT_WORKERS: Optional[int] = Field(default=None, gt=0)

    # CSV 출력 설정
    CSV_ENCODING: str = "utf-8"

    def configure_for_run(self, verbose: bool = False) -> None:
        if verbose:
            self.LOG_LEVEL = "DEBUG"

    # The CLI takes no environment variables: defaults and explicit init values only.
    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls: Type[BaseSettings],
        init_settings: PydanticBaseSettingsSource,
        env_settings: PydanticBaseSettingsSource,
        dotenv_settings: PydanticBaseSettingsSource,
        file_secret_settings: PydanticBaseSettingsSource,
    ) -> Tuple[PydanticBaseSettingsSource, ...]:
        return (init_settings,)

    model_config = SettingsConfigDict(
        validate_assignment=True,
        extra='ignore'
    )


settings = Settings()

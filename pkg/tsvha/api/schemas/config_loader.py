"""
Config Loader
YAML 설정 파일 로드 및 검증
"""

from pathlib import Path
from typing import Optional, Union

import yaml
from pydantic import ValidationError

from tsvha.core.logger import logger
from tsvha.core.exceptions import ConfigException, ErrorCode
from tsvha.api.schemas.run_config import RunConfig
from tsvha.domains.harness import ExperimentSpec


def _format_errors(exc: ValidationError) -> str:
    return "; ".join(
        f"{'.'.join(str(loc) for loc in error['loc']) or '<root>'}: {error['msg']}"
        for error in exc.errors()
    )


def load_run_config(path: Union[str, Path]) -> RunConfig:
    """
    YAML 설정 로드

    Raises:
        ConfigException: 파일 없음, YAML 파싱 실패, 스키마 검증 실패 (exit 2)
    """
    path = Path(path)
    if not path.is_file():
        raise ConfigException(
            config_path=str(path),
            detail=f"'{path}' does not exist",
            error_code=ErrorCode.CONFIG_NOT_FOUND,
        )

    try:
        with path.open("r", encoding="utf-8") as handle:
            document = yaml.safe_load(handle)
    except yaml.YAMLError as e:
        raise ConfigException(
            config_path=str(path),
            detail=str(e),
            error_code=ErrorCode.CONFIG_PARSE_FAILED,
            original_exception=e,
        )

    if not isinstance(document, dict):
        raise ConfigException(
            config_path=str(path),
            detail="top level must be a mapping of sections",
            error_code=ErrorCode.CONFIG_PARSE_FAILED,
        )

    try:
        config = RunConfig.model_validate(document)
    except ValidationError as e:
        unknown = any(error["type"] == "extra_forbidden" for error in e.errors())
        raise ConfigException(
            config_path=str(path),
            detail=_format_errors(e),
            error_code=ErrorCode.CONFIG_UNKNOWN_KEY if unknown else ErrorCode.CONFIG_INVALID,
            original_exception=e,
        )

    logger.info(f"[CLI] 설정 로드: {path}")
    return config


def build_experiment_spec(config: RunConfig, config_path: Union[str, Path], seed: Optional[int] = None) -> ExperimentSpec:
    """ExperimentSpec with cross-section checks reported as config errors"""
    try:
        return config.to_experiment_spec(seed)
    except ValidationError as e:
        raise ConfigException(
            config_path=str(config_path),
            detail=_format_errors(e),
            original_exception=e,
        )

"""
Core 예외 / 설정 테스트
"""

import pytest
from pydantic import BaseModel, ValidationError

from tsvha.core.config import NumericSettings, Settings
from tsvha.core.exceptions import (
    BoundConstraintException,
    ConfigException,
    DataFileNotFoundException,
    DataFormatException,
    DomainException,
    ErrorCategory,
    ErrorCode,
    ResourceException,
    describe_exception,
    get_error_category,
    handle_exception,
)


class TestErrorCodes:
    def test_codes_unique(self):
        codes = [code.code for code in ErrorCode]
        assert len(codes) == len(set(codes))

    def test_category_matches_leading_digit(self):
        for code in ErrorCode:
            assert get_error_category(code.code).value == str(code.code)[0]

    def test_exit_status(self):
        assert all(code.exit_status in (1, 2) for code in ErrorCode)
        assert ErrorCode.CONFIG_UNKNOWN_KEY.exit_status == 2
        assert ErrorCode.THEORY_CONSTRAINT_VIOLATED.exit_status == 2
        assert ErrorCode.DATA_OUT_OF_RANGE.exit_status == 1

    def test_to_dict(self):
        assert ErrorCode.DATA_BAD_HEADER.to_dict("x") == {
            "error_code": 40004, "message": "Unexpected header", "detail": "x",
        }


class TestExceptions:
    def test_builtin_bases(self):
        assert isinstance(ConfigException(detail="x"), ValueError)
        assert isinstance(DataFileNotFoundException("a.csv"), FileNotFoundError)
        assert isinstance(ResourceException(detail="x"), RuntimeError)
        assert isinstance(BoundConstraintException("c"), DomainException)

    def test_message_format(self):
        exc = DataFormatException(path="a.csv", line=4, detail="mean: too large", error_code=ErrorCode.DATA_OUT_OF_RANGE)
        assert str(exc) == "[40002] Value out of range: line 4: mean: too large"
        assert exc.to_log_dict()["context"] == {"path": "a.csv", "line": 4}
        assert exc.to_dict()["error_code"] == 40002
        assert exc.to_dict()["category"] == "4"
        assert exc.category is ErrorCategory.DATA


class TestHandlers:
    def test_app_exception_status(self):
        assert handle_exception(ConfigException(detail="x")) == 2
        assert handle_exception(DataFileNotFoundException("a.csv")) == 1
        assert handle_exception(BoundConstraintException("2*beta/gamma - epsilon > 0")) == 2

    def test_validation_error_status(self):
        class Model(BaseModel):
            value: int

        with pytest.raises(ValidationError) as exc_info:
            Model(value="many")
        assert handle_exception(exc_info.value) == 2
        assert describe_exception(exc_info.value).startswith("error [12000]")

    def test_unexpected_exception_status(self):
        assert handle_exception(KeyError("k")) == 1
        assert describe_exception(KeyError("k")).startswith("error [10000]")

    def test_describe(self):
        line = describe_exception(BoundConstraintException("2*beta/gamma - epsilon > 1"))
        assert line == "error [34000] Bound parameter constraint violated: constraint '2*beta/gamma - epsilon > 1' violated"


class TestSettings:
    def test_environment_ignored(self, monkeypatch):
        monkeypatch.setenv("LOG_LEVEL", "ERROR")
        monkeypatch.setenv("C3_AGENT_CAP", "5")
        assert Settings().LOG_LEVEL == "INFO"
        assert NumericSettings().C3_AGENT_CAP == 10_000

    def test_verbose(self):
        local = Settings()
        local.configure_for_run(verbose=True)
        assert local.LOG_LEVEL == "DEBUG"

    def test_log_level_validated(self):
        with pytest.raises(ValidationError):
            Settings(LOG_LEVEL="LOUD")

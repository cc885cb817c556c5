"""Custom exception classes

Exception hierarchy:
    BaseAppException
    |-- ConfigException (ValueError)
    |-- DomainException (ValueError)
    |   |-- PosteriorException
    |   |-- CombinerException
    |   |-- PolicyException
    |   |-- EnvException
    |   |-- TheoryException
    |   |   +-- BoundConstraintException
    |   |-- HarnessException
    |   +-- IngestException
    |-- DataException
    |   |-- DataFormatException (ValueError)
    |   |-- DataFileNotFoundException (FileNotFoundError)
    |   +-- DataWriteException (OSError)
    +-- ResourceException (RuntimeError)
"""

from typing import Any, Dict, Optional

from tsvha.core.exceptions.error_codes import ErrorCategory, ErrorCode, get_error_category


class BaseAppException(Exception):
    """Base application exception. All custom exceptions inherit from this."""

    def __init__(
        self,
        error_code: ErrorCode,
        detail: Optional[str] = None,
        context: Optional[Dict[str, Any]] = None,
        original_exception: Optional[Exception] = None
    ):
        self.error_code = error_code
        self.detail = detail
        self.context = context or {}
        self.original_exception = original_exception

        message = error_code.message
        if detail:
            message = f"{message}: {detail}"

        super().__init__(message)

    @property
    def code(self) -> int:
        return self.error_code.code

    @property
    def exit_status(self) -> int:
        return self.error_code.exit_status

    @property
    def category(self) -> ErrorCategory:
        return get_error_category(self.code)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for diagnostics"""
        result = self.error_code.to_dict(self.detail)
        result["category"] = self.category.value
        return result

    def to_log_dict(self) -> Dict[str, Any]:
        """Convert to logging dictionary with more information"""
        log_data = self.to_dict()
        if self.context:
            log_data["context"] = self.context
        if self.original_exception:
            log_data["original_error"] = {
                "type": type(self.original_exception).__name__,
                "message": str(self.original_exception),
            }
        return log_data

    def __str__(self) -> str:
        return f"[{self.code}] {self.error_code.message}" + (
            f": {self.detail}" if self.detail else ""
        )

    def __repr__(self) -> str:
        return (
            f"{self.__class__.__name__}("
            f"code={self.code}, "
            f"message='{self.error_code.message}', "
            f"detail='{self.detail}'"
            f")"
        )


# Config Exceptions (2XXXX)
class ConfigException(BaseAppException, ValueError):
    """Experiment config exception"""
    def __init__(
        self,
        config_path: Optional[str] = None,
        detail: Optional[str] = None,
        error_code: ErrorCode = ErrorCode.CONFIG_INVALID,
        **kwargs
    ):
        context = {}
        if config_path:
            context["config_path"] = config_path
        super().__init__(error_code, detail=detail, context=context, **kwargs)


# Domain Exceptions (3XXXX)
class DomainException(BaseAppException, ValueError):
    """Invalid argument to a model operation"""
    def __init__(
        self,
        error_code: ErrorCode,
        detail: Optional[str] = None,
        **kwargs
    ):
        super().__init__(error_code, detail=detail, **kwargs)


class PosteriorException(DomainException):
    """Posterior state / update exception"""
    def __init__(
        self,
        detail: Optional[str] = None,
        family: Optional[str] = None,
        error_code: ErrorCode = ErrorCode.POSTERIOR_REWARD_OUT_OF_SUPPORT,
        **kwargs
    ):
        context = {}
        if family:
            context["family"] = family
        super().__init__(error_code, detail=detail, context=context, **kwargs)


class CombinerException(DomainException):
    """Combiner construction / application exception"""
    def __init__(
        self,
        detail: Optional[str] = None,
        agents: Optional[int] = None,
        error_code: ErrorCode = ErrorCode.COMBINER_INVALID_AGENTS,
        **kwargs
    ):
        context = {}
        if agents is not None:
            context["agents"] = agents
        super().__init__(error_code, detail=detail, context=context, **kwargs)


class PolicyException(DomainException):
    """Policy exception"""
    def __init__(
        self,
        detail: Optional[str] = None,
        arm: Optional[int] = None,
        error_code: ErrorCode = ErrorCode.POLICY_INVALID_ARM,
        **kwargs
    ):
        context = {}
        if arm is not None:
            context["arm"] = arm
        super().__init__(error_code, detail=detail, context=context, **kwargs)


class EnvException(DomainException):
    """Environment exception"""
    def __init__(
        self,
        detail: Optional[str] = None,
        arm: Optional[int] = None,
        error_code: ErrorCode = ErrorCode.ENV_INVALID_CONFIG,
        **kwargs
    ):
        context = {}
        if arm is not None:
            context["arm"] = arm
        super().__init__(error_code, detail=detail, context=context, **kwargs)


class TheoryException(DomainException):
    """Bound evaluator exception"""
    def __init__(
        self,
        detail: Optional[str] = None,
        error_code: ErrorCode = ErrorCode.THEORY_INVALID_ARGUMENT,
        **kwargs
    ):
        super().__init__(error_code, detail=detail, **kwargs)


class BoundConstraintException(TheoryException):
    """A regret-bound parameter constraint does not hold"""
    def __init__(self, constraint: str, detail: Optional[str] = None, **kwargs):
        self.constraint = constraint
        super().__init__(
            detail=detail or f"constraint '{constraint}' violated",
            error_code=ErrorCode.THEORY_CONSTRAINT_VIOLATED,
            context={"constraint": constraint},
            **kwargs
        )


class HarnessException(DomainException):
    """Experiment harness exception"""
    def __init__(
        self,
        detail: Optional[str] = None,
        error_code: ErrorCode = ErrorCode.HARNESS_INVALID_SPEC,
        **kwargs
    ):
        super().__init__(error_code, detail=detail, **kwargs)


class IngestException(DomainException):
    """Dataset transform received an input outside its domain"""
    def __init__(
        self,
        detail: Optional[str] = None,
        error_code: ErrorCode = ErrorCode.INGEST_INVALID_INPUT,
        **kwargs
    ):
        super().__init__(error_code, detail=detail, **kwargs)


# Data Exceptions (4XXXX)
class DataException(BaseAppException):
    """Data ingestion / output base exception"""
    def __init__(
        self,
        error_code: ErrorCode,
        path: Optional[str] = None,
        line: Optional[int] = None,
        detail: Optional[str] = None,
        **kwargs
    ):
        context = {}
        if path:
            context["path"] = path
        if line is not None:
            context["line"] = line
        self.line = line
        super().__init__(error_code, detail=detail, context=context, **kwargs)


class DataFormatException(DataException, ValueError):
    """Malformed, out-of-range or duplicate data"""
    def __init__(
        self,
        path: Optional[str] = None,
        line: Optional[int] = None,
        detail: Optional[str] = None,
        error_code: ErrorCode = ErrorCode.DATA_MALFORMED_ROW,
        **kwargs
    ):
        if line is not None and detail:
            detail = f"line {line}: {detail}"
        super().__init__(error_code, path=path, line=line, detail=detail, **kwargs)


class DataFileNotFoundException(DataException, FileNotFoundError):
    """Input file does not exist"""
    def __init__(self, path: str, **kwargs):
        super().__init__(
            ErrorCode.DATA_FILE_NOT_FOUND,
            path=path,
            detail=f"'{path}' does not exist",
            **kwargs
        )


class DataWriteException(DataException, OSError):
    """Output file could not be written"""
    def __init__(self, path: str, detail: Optional[str] = None, **kwargs):
        super().__init__(ErrorCode.DATA_WRITE_FAILED, path=path, detail=detail, **kwargs)


# Resource Exceptions (5XXXX)
class ResourceException(BaseAppException, RuntimeError):
    """Computation exceeded its budget"""
    def __init__(
        self,
        detail: Optional[str] = None,
        error_code: ErrorCode = ErrorCode.RESOURCE_SEARCH_EXHAUSTED,
        **kwargs
    ):
        super().__init__(error_code, detail=detail, **kwargs)

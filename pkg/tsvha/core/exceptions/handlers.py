"""Top-level exception handling for the command line"""

import traceback
from typing import Union

from pydantic import ValidationError

from tsvha.core.exceptions.base import BaseAppException
from tsvha.core.exceptions.error_codes import ErrorCode
from tsvha.core.logger import logger


class ErrorResponse:
    """Standard diagnostic line format"""

    @staticmethod
    def create(error_code: int, message: str, detail: str = None) -> str:
        """Create the one-line diagnostic written to stderr"""
        line = f"error [{error_code}] {message}"
        if detail:
            line = f"{line}: {detail}"
        return line


def base_app_exception_handler(exc: BaseAppException) -> int:
    """Handle custom application exceptions"""
    log_data = exc.to_log_dict()

    if exc.exit_status == 2:
        logger.warning(
            f"[{exc.code}] {exc.error_code.message}",
            extra={"error_code": exc.code, "detail": exc.detail, "context": log_data}
        )
    else:
        logger.error(
            f"[{exc.code}] {exc.error_code.message}",
            extra={"error_code": exc.code, "detail": exc.detail, "context": log_data}
        )
    return exc.exit_status


def validation_exception_handler(exc: ValidationError) -> int:
    """Handle pydantic validation exceptions raised outside config loading"""
    errors = exc.errors()
    error_details = []
    for error in errors:
        field = " -> ".join(str(loc) for loc in error.get("loc", []))
        error_details.append(f"{field}: {error.get('msg', '')}")

    logger.warning(
        f"[{ErrorCode.VALIDATION_ERROR.code}] Validation failed: " + "; ".join(error_details),
        extra={"error_code": ErrorCode.VALIDATION_ERROR.code, "validation_errors": errors}
    )
    return ErrorCode.VALIDATION_ERROR.exit_status


def generic_exception_handler(exc: Exception) -> int:
    """Handle unexpected exceptions"""
    logger.error(
        f"[{ErrorCode.INTERNAL_ERROR.code}] Unexpected exception: {exc}",
        extra={
            "error_code": ErrorCode.INTERNAL_ERROR.code,
            "exception_type": type(exc).__name__,
            "traceback": traceback.format_exc(),
        }
    )
    return ErrorCode.INTERNAL_ERROR.exit_status


def handle_exception(exc: Union[BaseAppException, ValidationError, Exception]) -> int:
    """Log the exception and return the process exit status"""
    if isinstance(exc, BaseAppException):
        return base_app_exception_handler(exc)
    if isinstance(exc, ValidationError):
        return validation_exception_handler(exc)
    return generic_exception_handler(exc)


def describe_exception(exc: Exception) -> str:
    """One-line diagnostic for the user"""
    if isinstance(exc, BaseAppException):
        return ErrorResponse.create(exc.code, exc.error_code.message, exc.detail)
    if isinstance(exc, ValidationError):
        return ErrorResponse.create(
            ErrorCode.VALIDATION_ERROR.code, ErrorCode.VALIDATION_ERROR.message, str(exc)
        )
    return ErrorResponse.create(ErrorCode.INTERNAL_ERROR.code, ErrorCode.INTERNAL_ERROR.message, str(exc))

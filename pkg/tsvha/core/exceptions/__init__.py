"""Exception handling package

This package provides:
- Error codes (error_codes.py)
- Custom exception classes (base.py)
- Command line exception handlers (handlers.py)
"""

# Error codes
from tsvha.core.exceptions.error_codes import (
    ErrorCode,
    ErrorCategory,
    get_error_category,
)

# Base exceptions
from tsvha.core.exceptions.base import (
    BaseAppException,
    ConfigException,
    DomainException,
    PosteriorException,
    CombinerException,
    PolicyException,
    EnvException,
    TheoryException,
    BoundConstraintException,
    HarnessException,
    IngestException,
    DataException,
    DataFormatException,
    DataFileNotFoundException,
    DataWriteException,
    ResourceException,
)

# CLI handlers
from tsvha.core.exceptions.handlers import (
    handle_exception,
    describe_exception,
    ErrorResponse,
)

__all__ = [
    # Error codes
    "ErrorCode",
    "ErrorCategory",
    "get_error_category",
    # Base exceptions
    "BaseAppException",
    "ConfigException",
    "DomainException",
    "PosteriorException",
    "CombinerException",
    "PolicyException",
    "EnvException",
    "TheoryException",
    "BoundConstraintException",
    "HarnessException",
    "IngestException",
    "DataException",
    "DataFormatException",
    "DataFileNotFoundException",
    "DataWriteException",
    "ResourceException",
    # CLI handlers
    "handle_exception",
    "describe_exception",
    "ErrorResponse",
]

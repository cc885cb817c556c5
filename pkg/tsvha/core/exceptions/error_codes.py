"""Error code system

Error code structure (5 digits):
- 1st digit: Category (1=General, 2=Config, 3=Domain, 4=Data, 5=Resource)
- 2nd-3rd digits: Sub-category
- 4th-5th digits: Specific error

Example: 31001 = Domain(3) Combiner(10) Too few agents(01)
"""

from enum import Enum
from typing import Dict, Optional


class ErrorCategory(str, Enum):
    """Error categories"""
    GENERAL = "1"
    CONFIG = "2"
    DOMAIN = "3"
    DATA = "4"
    RESOURCE = "5"


class ErrorCode(Enum):
    """Error code definitions. Each code is (code, message, exit_status) tuple."""

    # 1XXXX: General Errors
    INTERNAL_ERROR = (10000, "Internal error", 1)

    VALIDATION_ERROR = (12000, "Validation failed", 2)

    # 2XXXX: Configuration Errors
    CONFIG_NOT_FOUND = (20000, "Config file not found", 2)
    CONFIG_PARSE_FAILED = (20001, "Config file could not be parsed", 2)
    CONFIG_INVALID = (20002, "Config validation failed", 2)
    CONFIG_UNKNOWN_KEY = (20003, "Unknown config key", 2)

    # 3XXXX: Domain Errors
    POSTERIOR_REWARD_OUT_OF_SUPPORT = (30000, "Reward outside posterior support", 1)
    POSTERIOR_FAMILY_MISMATCH = (30001, "Posterior family mismatch", 1)

    COMBINER_INVALID_AGENTS = (31000, "Invalid number of agents", 1)
    COMBINER_TOO_FEW_AGENTS = (31001, "Too few agents for combiner", 1)
    COMBINER_LENGTH_MISMATCH = (31002, "Coefficient and sample lengths differ", 1)
    COMBINER_EMPTY_INPUT = (31003, "Combiner input is empty", 1)
    COMBINER_TOO_FEW_ARMS = (31004, "At least two arms required", 1)
    COMBINER_INVALID_GAMMA = (31005, "Variance scaling factor must be positive", 1)
    COMBINER_NOT_LINEAR = (31006, "Combiner has no fixed coefficient vector", 1)

    POLICY_INVALID_ARM = (32000, "Invalid arm index", 1)
    POLICY_INVALID_SPEC = (32001, "Invalid policy specification", 1)

    ENV_INVALID_MEANS = (33000, "Arm means outside reward support", 1)
    ENV_INVALID_ARM = (33001, "Invalid arm index", 1)
    ENV_INVALID_CONFIG = (33002, "Invalid environment configuration", 1)

    THEORY_CONSTRAINT_VIOLATED = (34000, "Bound parameter constraint violated", 2)
    THEORY_INVALID_ARGUMENT = (34001, "Invalid argument", 1)

    HARNESS_EMPTY_INPUT = (35000, "Aggregation input is empty", 1)
    HARNESS_INVALID_SPEC = (35001, "Invalid experiment specification", 1)

    INGEST_INVALID_INPUT = (36000, "Transform input out of range", 1)

    # 4XXXX: Data Errors
    DATA_FILE_NOT_FOUND = (40000, "Data file not found", 1)
    DATA_MALFORMED_ROW = (40001, "Malformed row", 1)
    DATA_OUT_OF_RANGE = (40002, "Value out of range", 1)
    DATA_DUPLICATE_ID = (40003, "Duplicate arm id", 1)
    DATA_BAD_HEADER = (40004, "Unexpected header", 1)
    DATA_WRITE_FAILED = (41000, "Output write failed", 1)

    # 5XXXX: Resource Errors
    RESOURCE_SEARCH_EXHAUSTED = (50000, "Search budget exhausted", 1)
    RESOURCE_NOT_REPRESENTABLE = (50001, "Result not representable as a float", 1)

    @property
    def code(self) -> int:
        """Return error code"""
        return self.value[0]

    @property
    def message(self) -> str:
        """Return error message"""
        return self.value[1]

    @property
    def exit_status(self) -> int:
        """Return process exit status"""
        return self.value[2]

    def to_dict(self, detail: Optional[str] = None) -> Dict:
        """Convert to dictionary for diagnostics"""
        result = {
            "error_code": self.code,
            "message": self.message,
        }
        if detail:
            result["detail"] = detail
        return result


ERROR_CATEGORY_MAP = {
    ErrorCategory.GENERAL: range(10000, 20000),
    ErrorCategory.CONFIG: range(20000, 30000),
    ErrorCategory.DOMAIN: range(30000, 40000),
    ErrorCategory.DATA: range(40000, 50000),
    ErrorCategory.RESOURCE: range(50000, 60000),
}


def get_error_category(error_code: int) -> ErrorCategory:
    """Get category from error code"""
    for category, code_range in ERROR_CATEGORY_MAP.items():
        if error_code in code_range:
            return category
    return ErrorCategory.GENERAL

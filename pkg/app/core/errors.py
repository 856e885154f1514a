from typing import Any, Dict, Optional
from app.core.logger import logger


class ExtensionError(Exception):
    """Base class for every failure raised by the package."""

    exit_code: int = 2
    label: str = "error"

    def __init__(self, message: str, **context: Any):
        super().__init__(message)
        self.message = message
        self.context = context


class DomainError(ExtensionError, ValueError):
    label = "domain error"


class InvalidParamsError(DomainError):
    label = "invalid parameters"


class NonGenericError(InvalidParamsError):
    label = "non-generic parameters"


class InvalidSeedError(ExtensionError, ValueError):
    label = "invalid seed range"


class DegenerateClassificationError(ExtensionError):
    label = "degenerate classification"


class SpecError(ExtensionError, ValueError):
    label = "invalid extension spec"


class DuplicateIndexError(SpecError):
    label = "duplicate index"


class PreconditionError(ExtensionError):
    label = "precondition violated"


class SingularExtensionError(ExtensionError):
    exit_code = 1
    label = "singular extension"


class EquivalenceUnavailableError(ExtensionError):
    exit_code = 1
    label = "equivalence unavailable"


class InternalConsistencyError(ExtensionError):
    exit_code = 1
    label = "internal consistency error"


class SamplingError(ExtensionError):
    exit_code = 1
    label = "sampling error"


class ConfigError(ExtensionError):
    label = "invalid config"

    def __init__(self, message: str, location: Optional[str] = None, **context: Any):
        super().__init__(message, **context)
        self.location = location

    def __str__(self) -> str:
        if self.location:
            return f"{self.location}: {self.message}"
        return self.message


def error_payload(exc: BaseException) -> Dict[str, Any]:
    if isinstance(exc, ExtensionError):
        payload = {"error": exc.label, "detail": str(exc)}
        if isinstance(exc, ConfigError) and exc.location:
            payload["location"] = exc.location
        if exc.context:
            payload["context"] = {k: str(v) for k, v in exc.context.items()}
        return payload
    return {"error": "internal error", "detail": "An unexpected error occurred."}


def exit_code_for(exc: BaseException) -> int:
    if isinstance(exc, ExtensionError):
        logger.warning(f"{exc.label}: {exc}")
        return exc.exit_code
    logger.error(f"Unhandled exception: {exc}", exc_info=True)
    return 1

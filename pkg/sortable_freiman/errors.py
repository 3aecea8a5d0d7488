# sortable_freiman/errors.py

from __future__ import annotations


class MonomialParseError(ValueError):
    """Raised when monomial text cannot be read; ``position`` is a 0-based offset."""

    def __init__(self, text: str, position: int, reason: str):
        self.text = text
        self.position = position
        self.reason = reason
        super().__init__(f"{reason} at position {position} in {text!r}")


class MalformedTokenError(MonomialParseError):
    pass


class VariableIndexError(MonomialParseError):
    pass


class VectorLengthError(MonomialParseError):
    pass


class NegativeExponentError(MonomialParseError):
    pass


class AmbientMismatchError(ValueError):
    pass


class DegreeMismatchError(ValueError):
    pass


class LimitExceededError(ValueError):
    pass


class EmptyDomainError(ValueError):
    pass


class GeneratorFileError(ValueError):
    def __init__(self, path: str, line: int, reason: str):
        self.path = path
        self.line = line
        self.reason = reason
        super().__init__(f"{path}:{line}: {reason}")


class DuplicateGeneratorError(GeneratorFileError):
    pass


class CertificateError(RuntimeError):
    pass

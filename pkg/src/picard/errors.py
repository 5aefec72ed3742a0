"""Exception types.  Every error carries a stable machine-readable ``code``."""

from __future__ import annotations


class PicardError(Exception):
    code = "ERROR"

    def __init__(self, message: str = "", *, code: str | None = None):
        super().__init__(message)
        if code is not None:
            self.code = code

    def __str__(self) -> str:
        msg = super().__str__()
        return f"{self.code}: {msg}" if msg else self.code


class MalformedTable(PicardError):
    code = "MALFORMED_TABLE"


class NotParallel(PicardError):
    code = "NOT_PARALLEL"


class NotAGroup(PicardError):
    """Raised for NOT_GROUP and NOT_ABELIAN."""

    code = "NOT_GROUP"


class NotARing(PicardError):
    code = "NOT_RING"


class NotAModule(PicardError):
    code = "NOT_MODULE"


class DomainMismatch(PicardError):
    code = "DOMAIN_MISMATCH"


class Parallelism(PicardError):
    code = "PARALLELISM"


class RingMismatch(PicardError):
    code = "RING_MISMATCH"


class BudgetExceeded(PicardError):
    code = "BUDGET_EXCEEDED"


class NotClosed(PicardError):
    code = "NOT_CLOSED"


class BoundaryError(PicardError):
    code = "BOUNDARY"


class NotEndRing(PicardError):
    code = "NOT_ENDRING"


class DocumentError(PicardError):
    """Base for the text-format errors (PARSE_ERROR, VERSION_UNSUPPORTED, REFERENCE_ERROR)."""

    code = "PARSE_ERROR"

    def __init__(self, message: str = "", *, line: int | None = None, col: int | None = None,
                 code: str | None = None):
        if line is not None:
            message = f"line {line}, col {col or 1}: {message}"
        super().__init__(message, code=code)
        self.line = line
        self.col = col


class ParseError(DocumentError):
    code = "PARSE_ERROR"


class VersionUnsupported(DocumentError):
    code = "VERSION_UNSUPPORTED"


class DanglingReference(DocumentError):
    code = "REFERENCE_ERROR"


class CompositionError(KeyError):
    """A composite or table lookup that is undefined (not a user-facing error)."""

"""Exception types shared across the toolkit."""

from __future__ import annotations


class EcdelError(Exception):
    """Base class for all toolkit errors."""


class EcgFormatError(EcdelError):
    """Malformed ECG input. Carries the 1-based offending line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class MalformedHeaderError(EcgFormatError):
    pass


class DuplicateEdgeError(EcgFormatError):
    pass


class LoopEdgeError(EcgFormatError):
    pass


class ColorOutOfRangeError(EcgFormatError):
    pass


class VertexOutOfRangeError(EcgFormatError):
    pass


class EdgeNotPresentError(EcdelError):
    pass


class InvalidSpecError(EcdelError):
    pass


class ResourceLimitError(EcdelError):
    pass


class NotBicoloredError(EcdelError):
    pass


class SpecNotColorDiverseError(EcdelError):
    pass


class NotInClassTError(EcdelError):
    """Graph is outside the fence/clique-star class; carries a witness."""

    def __init__(self, message: str, witness=None):
        self.witness = witness
        super().__init__(message)


class PreconditionViolatedError(EcdelError):
    pass


class InvalidParamsError(EcdelError):
    pass


class MalformedFormulaError(EcdelError):
    pass


class MalformedInstanceError(EcdelError):
    pass


class NotTripartiteError(EcdelError):
    pass


class TriangleFoundError(EcdelError):
    pass


class ConstructionError(EcdelError):
    """A generator's self-validation failed; indicates a construction bug."""

"""Exception types raised across the package."""


class ChaosRagaError(Exception):
    """Base class for all package errors."""


class DomainError(ChaosRagaError, ValueError):
    """An argument lies outside the domain an operation accepts."""


class UnknownRagaError(ChaosRagaError, LookupError):
    def __init__(self, name):
        super().__init__(f"unknown raga: {name!r}")
        self.name = name


class IllegalSymbolError(ChaosRagaError, ValueError):
    """A character in a note text is not part of the raga alphabet.

    ``position`` is the 1-based character offset into the original text;
    ``line`` and ``column`` are 1-based as well.
    """

    def __init__(self, symbol, position, line, column, raga_name):
        super().__init__(
            f"illegal symbol {symbol!r} for raga {raga_name!r} at position {position} "
            f"(line {line}, column {column})"
        )
        self.symbol = symbol
        self.position = position
        self.line = line
        self.column = column


class MismatchError(ChaosRagaError, ValueError):
    """Two sequences that must agree in length or raga do not."""


class ZeroEnergyError(ChaosRagaError, ValueError):
    def __init__(self, operand):
        super().__init__(f"operand {operand!r} has zero energy; correlation undefined")
        self.operand = operand


class TooShortError(ChaosRagaError, ValueError):
    pass

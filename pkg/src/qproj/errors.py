"""Exception hierarchy shared by the library and the CLI."""


class QprojError(Exception):
    """Base class; the CLI maps these to exit status 1."""


class NonHermitianInput(QprojError, ValueError):
    pass


class NoConvergence(QprojError, RuntimeError):
    pass


class DimensionMismatch(QprojError, ValueError):
    pass


class WrongDimension(QprojError, ValueError):
    pass


class OutsideBall(QprojError, ValueError):
    pass


class InvalidDensity(QprojError, ValueError):
    """Raised by ``validate_density``; ``violations`` lists every failed check.

    Each entry is a ``(kind, deviation)`` pair where ``kind`` is one of
    ``"NotHermitian"``, ``"TraceNotOne"`` or ``"NotPSD"``.
    """

    def __init__(self, violations):
        self.violations = list(violations)
        msg = ", ".join(f"{kind} (deviation {dev:.3g})" for kind, dev in self.violations)
        super().__init__(msg)

    @property
    def kinds(self):
        return [kind for kind, _ in self.violations]


class NotOrthonormal(QprojError, ValueError):
    pass


class VanishingOverlap(QprojError, ValueError):
    def __init__(self, pair, overlap):
        self.pair = pair
        self.overlap = overlap
        super().__init__(f"overlap <b_{pair[1]}|a_{pair[0]}> = {overlap:.3g} vanishes")


class DegenerateBasis(QprojError, ValueError):
    pass


class UnknownCatalogId(QprojError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class UnboundedProgram(QprojError, ArithmeticError):
    pass


class InfeasibleProgram(QprojError, ArithmeticError):
    pass


class ParseError(QprojError, ValueError):
    """Malformed JSON input; carries line/column of the failure."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = f" at line {line} column {column}" if line is not None else ""
        super().__init__(f"{message}{where}")


class SchemaError(QprojError, ValueError):
    """Well-formed JSON that does not match the expected layout."""

    def __init__(self, path, message):
        self.path = path
        super().__init__(f"{path}: {message}")

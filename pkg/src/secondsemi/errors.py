class StructureError(Exception):
    """Base class for malformed or invalid algebraic input."""


class ShapeError(StructureError):
    pass


class AxiomViolation(StructureError):
    """A table violates a named axiom; ``witness`` is the offending tuple."""

    def __init__(self, axiom: str, witness: tuple, name: str = "", line: int | None = None):
        self.axiom = axiom
        self.witness = tuple(witness)
        self.name = name
        self.line = line
        where = f"{name}: " if name else ""
        at = f" (line {line})" if line is not None else ""
        super().__init__(f"{where}axiom {axiom!r} fails at {self.witness}{at}")


class StructureSyntaxError(StructureError):
    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


class NotProper(ValueError):
    pass


class ParentMismatch(ValueError):
    pass


class NotHomomorphism(ValueError):
    def __init__(self, rule: str, witness: tuple):
        self.rule = rule
        self.witness = tuple(witness)
        super().__init__(f"map breaks {rule!r} at {self.witness}")


class ArityMismatch(ValueError):
    pass


class SizeCapExceeded(Exception):
    pass

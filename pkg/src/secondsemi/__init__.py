"""Second subsemimodules over finite commutative semirings."""

from .catalog import builtin_catalog, extended_catalog
from .errors import (
    ArityMismatch,
    AxiomViolation,
    NotHomomorphism,
    NotProper,
    ParentMismatch,
    StructureError,
    StructureSyntaxError,
)
from .harness import check, replay, run_catalog
from .semiring import Ideal, Semiring, enumerate_ideals, validate_semiring
from .semimodule import (
    Homomorphism,
    Semimodule,
    Subsemimodule,
    enumerate_subsemimodules,
    validate_homomorphism,
    validate_semimodule,
)
from .second import is_second, second_subsemimodules, socle
from .textio import parse, serialize

__all__ = [
    "ArityMismatch", "AxiomViolation", "Homomorphism", "Ideal", "NotHomomorphism", "NotProper",
    "ParentMismatch", "Semimodule", "Semiring", "StructureError", "StructureSyntaxError",
    "Subsemimodule", "builtin_catalog", "check", "enumerate_ideals", "enumerate_subsemimodules",
    "extended_catalog", "is_second", "parse", "replay", "run_catalog", "second_subsemimodules",
    "serialize", "socle", "validate_homomorphism", "validate_semimodule", "validate_semiring",
]

"""Exception types shared across the package.

Every domain failure raises one of these; callers (in particular the CLI)
can map them to machine-readable error objects without pattern-matching
message strings.
"""


class PencillabError(Exception):
    """Base class for all domain errors raised by this package."""


class RiemannHurwitzViolation(PencillabError):
    """Total ramification weight exceeds what a cover of the stated degree admits."""


class FormulationMismatch(PencillabError):
    """The two equivalent nonemptiness formulations disagreed; signals a bug."""


class ProfileInfeasible(PencillabError):
    """No tuple of cycles with the requested orders can exist."""


class ResourceLimit(PencillabError):
    """Search space exceeds the configured budget or hard guard."""


class DegeneratePencil(PencillabError):
    """The two generators are linearly dependent and span no pencil."""


class BasePointAmbiguity(PencillabError):
    """Both query points lie in the base locus; every member contains both."""


class BasePointPresent(PencillabError):
    """Operation requires a base-point-free pencil."""


class CharacteristicObstruction(PencillabError):
    """Field characteristic too small for the requested derivative-based test."""


class CoincidentPoints(PencillabError):
    """Distinct points were required."""


class ChainMismatch(PencillabError):
    """Chain multiset does not match the prescribed multiplicity vector."""


class PointCollision(PencillabError):
    """Node and marked points must be pairwise distinct."""


class ZeroCount(PencillabError):
    """Exponent fit is undefined when a sample count is zero."""

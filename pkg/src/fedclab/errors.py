"""Exception types shared across the package."""


class FedclabError(Exception):
    """Base class for all package-specific errors."""


class ZeroVector(FedclabError):
    """A vector with norm below the degeneracy threshold where a direction is required."""


class ShapeMismatch(FedclabError):
    """Array shapes incompatible with the declared layer or parameter layout."""


class MissingPrototype(FedclabError):
    """An operation needed a class prototype that is not present."""


class InfeasibleGeometry(FedclabError):
    """Requested point configuration cannot be placed (retry cap exhausted)."""


class Infeasible(FedclabError):
    """A partition request cannot be satisfied by the available samples."""


class EmptyClass(FedclabError):
    """Augmentation was requested for a class with zero local samples."""


class ParseError(FedclabError):
    """Malformed input file; message carries the offending line number."""


class LabelOutOfRange(FedclabError):
    """A label falls outside the declared class range."""


class ValidationError(FedclabError):
    """A config value violates its constraint; message names key and constraint."""


class DivergenceConfig(FedclabError):
    """Dynamics configuration has no finite fixed point (anchor attraction >= 1)."""

"""Exception hierarchy shared by every module."""


class RoughMatroidError(Exception):
    """Base class for all library errors."""


class UnknownLabel(RoughMatroidError, KeyError):
    def __init__(self, label):
        super().__init__(label)
        self.label = label

    def __str__(self):
        return f"unknown label {self.label!r}"


class UniverseMismatch(RoughMatroidError, ValueError):
    pass


class UniverseTooLarge(RoughMatroidError, ValueError):
    def __init__(self, size: int, cap: int):
        super().__init__(f"universe of size {size} exceeds the cap of {cap}")
        self.size = size
        self.cap = cap


class NotSymmetricTransitive(RoughMatroidError, ValueError):
    """Raised when an operation needs a symmetric and transitive relation.

    ``witness`` is either a violating pair ``(x, y)`` (symmetry) or a
    violating triple ``(x, y, z)`` (transitivity).
    """

    def __init__(self, witness: tuple):
        kind = "symmetric" if len(witness) == 2 else "transitive"
        super().__init__(f"relation is not {kind}; witness {witness}")
        self.witness = witness


class InvalidFamily(RoughMatroidError, ValueError):
    """A set family failed its axiom check; ``report`` is the AxiomReport."""

    def __init__(self, report):
        super().__init__(f"axiom {report.failed_axiom} violated; witness {report.describe_witness()}")
        self.report = report


class InvalidCircuitFamily(InvalidFamily):
    pass


class InvalidIndependenceFamily(InvalidFamily):
    pass

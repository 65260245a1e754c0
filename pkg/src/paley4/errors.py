"""Exception types raised across the package."""


class Paley4Error(Exception):
    """Base class for all package errors."""


class NonPrimeCharacteristic(Paley4Error, ValueError):
    pass


class ReducibleModulus(Paley4Error, ValueError):
    pass


class NoBuiltinModulus(Paley4Error, ValueError):
    pass


class ZeroInverse(Paley4Error, ZeroDivisionError):
    pass


class ZeroVector(Paley4Error, ValueError):
    pass


class CapExceeded(Paley4Error, ValueError):
    pass


class NotPaleyAdmissible(Paley4Error, ValueError):
    """Raised when a Paley construction is requested for q not congruent to 3 mod 4."""


class SizeMismatch(Paley4Error, ValueError):
    pass


class BudgetExceeded(Paley4Error):
    """The realizability search ran out of nodes before reaching a verdict."""

    def __init__(self, nodes):
        super().__init__(f"node budget exhausted after {nodes} nodes")
        self.nodes = nodes


class FormatError(Paley4Error, ValueError):
    """Malformed hypergraph or tournament text."""

class LatticeRecError(Exception):
    pass


class DimensionMismatch(LatticeRecError, ValueError):
    pass


class InvalidInput(LatticeRecError, ValueError):
    """Malformed or out-of-contract input (bad shape, non-lattice vertex, ...)."""


class UnsupportedInput(LatticeRecError):
    """Input is valid but outside what the exact methods here handle."""


class InfeasibleError(LatticeRecError):
    pass


class UnboundedError(LatticeRecError):
    pass


class VerificationError(LatticeRecError):
    """An identity that must hold exactly did not.

    The attached ``detail`` mapping carries the offending index/point and the
    difference so a failure can be reported without re-running.
    """

    def __init__(self, message, **detail):
        super().__init__(message)
        self.detail = detail

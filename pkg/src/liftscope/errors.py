"""Exception hierarchy.  The CLI maps these to exit codes (2 input, 3 internal)."""


class LiftscopeError(Exception):
    """Base class for all package-specific errors."""


class InputError(LiftscopeError):
    """Malformed or out-of-contract user input."""


class InternalInconsistencyError(LiftscopeError):
    """A structural invariant failed; indicates a bug, not bad input."""


class CertificateRejected(LiftscopeError):
    """A claimed parametrization certificate failed verification."""

    def __init__(self, reasons):
        self.reasons = list(reasons)
        super().__init__("; ".join(self.reasons))

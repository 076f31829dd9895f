"""Typed failures raised by the library.

Every error carries the name of the invariant that failed so that the
command line front-end can report it and map it to an exit code.
"""


class HodgePinkError(Exception):
    """Base class for all library errors."""

    invariant = "unspecified"

    def __init__(self, message="", **details):
        super().__init__(message)
        self.message = message
        self.details = details

    def as_dict(self):
        out = {"error": type(self).__name__, "invariant": self.invariant,
               "message": self.message}
        if self.details:
            out["details"] = {k: str(v) for k, v in self.details.items()}
        return out


class InputError(HodgePinkError):
    invariant = "input parses against the schema"


class ShapeMismatch(HodgePinkError):
    invariant = "dimensions agree"


class InsufficientPrecision(HodgePinkError):
    invariant = "result certified within the precision window"


class NotAUnit(HodgePinkError):
    invariant = "series has a certified lowest coefficient"


class NonzeroConstantTerm(HodgePinkError):
    invariant = "series has strictly positive order"


class RankDeficient(HodgePinkError):
    invariant = "matrix has full rank"


class WindowViolated(HodgePinkError):
    invariant = "t^n p is contained in q, which is contained in t^-m p"


class RelationViolated(HodgePinkError):
    invariant = "p^f F N0 = N0 F"


class SingularFrobenius(HodgePinkError):
    invariant = "det F != 0"


class NotNilpotent(HodgePinkError):
    invariant = "N0^d = 0"


class UnsupportedSpectrum(HodgePinkError):
    invariant = "Frobenius spectrum lies in a supported class"


class InconsistentChain(HodgePinkError):
    invariant = "Jordan type of N0 matches the eigenvalue chains"


class CasePreconditionViolated(HodgePinkError):
    invariant = "block sizes and eigenvalues fit the selected case"


class NotStable(HodgePinkError):
    invariant = "subspace is stable under F and N0"

# errors.py
from typing import Any, Optional


class LieTheoryError(Exception):
    """Base class for every failure raised by the library"""

    status_code = 400

    def __init__(self, detail: str, witness: Optional[Any] = None):
        super().__init__(detail)
        self.detail = detail
        self.witness = witness

    def to_dict(self) -> dict:
        payload = {"error": type(self).__name__, "detail": self.detail}
        if self.witness is not None:
            payload["witness"] = repr(self.witness)
        return payload


# ============== INPUT ERRORS ==============

class InvalidCartanMatrix(LieTheoryError):
    """Entries break the generalized Cartan matrix axioms"""


class NotSymmetrizable(LieTheoryError):
    pass


class NotFiniteType(LieTheoryError):
    pass


class IsotropicCoroot(LieTheoryError):
    pass


class SameRootLine(LieTheoryError):
    pass


class NotSimplyLaced(LieTheoryError):
    pass


class NotDominated(LieTheoryError):
    pass


class UnknownType(LieTheoryError):
    """Label is not a Bourbaki type we can build"""

    status_code = 404


class IllegalTwist(LieTheoryError):
    pass


class NotCoprime(LieTheoryError):
    pass


class NotInvolution(LieTheoryError):
    pass


class NotApplicable(LieTheoryError):
    status_code = 422


class NotInPsi(LieTheoryError):
    pass


class NotDistinct(LieTheoryError):
    pass


class PropertiesViolated(LieTheoryError):
    status_code = 422


class NotTubeType(LieTheoryError):
    status_code = 422


class NoShortRoots(LieTheoryError):
    status_code = 422


class NotMaximal(LieTheoryError):
    status_code = 422


class LevelBoundTooSmall(LieTheoryError):
    status_code = 507


class DictionaryMismatch(LieTheoryError):
    status_code = 500


# ============== THEOREM VIOLATIONS ==============
# Raised only when a computed object contradicts a proven statement.

class TheoremViolation(LieTheoryError):
    status_code = 500


class NoDecomposition(TheoremViolation):
    pass


class NotFiniteOrAffine(TheoremViolation):
    pass


class BoundViolation(TheoremViolation):
    pass

"""Exception hierarchy shared by all incalg modules.

Every domain failure raises a subclass of :class:`DomainError`; the CLI maps
these to exit code 2.  Malformed input (bad JSON, unknown ring spec strings)
raises :class:`InputError`, which maps to exit code 1.
"""


class DomainError(Exception):
    """Base class for legitimate domain failures."""

    code = "DomainError"


class InputError(Exception):
    """Malformed input: unparsable files, unknown spec strings."""


class IndexOutOfRange(DomainError):
    code = "IndexOutOfRange"


class TooLarge(DomainError):
    code = "TooLarge"


class NotUnit(DomainError):
    code = "NotUnit"


class NotInvertible(DomainError):
    code = "NotInvertible"


class Mismatch(DomainError):
    code = "Mismatch"


class NotInM(DomainError):
    code = "NotInM"


class NotSingletonClass(DomainError):
    code = "NotSingletonClass"


class CocycleViolation(DomainError):
    code = "CocycleViolation"

    def __init__(self, message, triangle=None):
        super().__init__(message)
        self.triangle = triangle


class NotCentralUnit(DomainError):
    code = "NotCentralUnit"


class NotCentral(DomainError):
    code = "NotCentral"


class MissingEdge(DomainError):
    code = "MissingEdge"


class Disconnected(DomainError):
    code = "Disconnected"


class NotASemipath(DomainError):
    code = "NotASemipath"


class NotAutomorphism(DomainError):
    code = "NotAutomorphism"


class ShapeMismatch(DomainError):
    code = "ShapeMismatch"


class NotClassPreserving(DomainError):
    code = "NotClassPreserving"


class NotMultiplicativeResidue(DomainError):
    code = "NotMultiplicativeResidue"


class CenterNotField(DomainError):
    code = "CenterNotField"


class NotAField(DomainError):
    code = "NotAField"


class NotAPoset(DomainError):
    code = "NotAPoset"


class GammaNonzero(DomainError):
    code = "GammaNonzero"


class IntervalTooLarge(DomainError):
    code = "IntervalTooLarge"


class NotAPartition(DomainError):
    code = "NotAPartition"


class RepresentativeDisagreement(DomainError):
    code = "RepresentativeDisagreement"


class NotConstantOnTypes(DomainError):
    code = "NotConstantOnTypes"

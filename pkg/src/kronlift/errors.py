"""Exception hierarchy.

The CLI maps these onto exit codes: :class:`InputError` subclasses exit 2,
:class:`PreconditionViolated` subclasses exit 3 and
:class:`InternalVerificationFailed` subclasses exit 4.
"""


class KronliftError(Exception):
    pass


class InputError(KronliftError, ValueError):
    """Malformed or inconsistent input."""


class NonMonic(InputError):
    pass


class NoRealRootIsolated(InputError):
    pass


class FieldMismatch(InputError):
    pass


class ShapeMismatch(InputError):
    pass


class PreconditionViolated(KronliftError):
    """The inputs are well-formed but the operation's hypothesis fails."""


class DivisionByZero(PreconditionViolated, ZeroDivisionError):
    pass


class ReducibleMinimalPolynomial(PreconditionViolated):
    def __init__(self, factor):
        self.factor = factor
        super().__init__(f"minimal polynomial has the nontrivial factor {factor}")


class SingularMatrix(PreconditionViolated):
    pass


class NoSolution(PreconditionViolated):
    pass


class NotASublattice(PreconditionViolated):
    pass


class NotABasis(PreconditionViolated):
    pass


class NotConnected(PreconditionViolated):
    pass


class NotRationallyDefined(PreconditionViolated):
    pass


class NotGenerating(PreconditionViolated):
    pass


class FieldTooSmall(PreconditionViolated):
    pass


class RankTooSmall(PreconditionViolated):
    def __init__(self, given, bound):
        self.given = given
        self.bound = bound
        super().__init__(
            f"{given} generators given but lifting requires at least "
            f"2*dim G - dim T = {bound}"
        )


class NotDense(PreconditionViolated):
    pass


class EmptyModule(PreconditionViolated):
    pass


class InvalidStructure(PreconditionViolated):
    pass


class InternalVerificationFailed(KronliftError):
    """A postcondition check failed; always a bug."""


class SelectionFailed(InternalVerificationFailed):
    pass


class GreedyExtensionFailed(InternalVerificationFailed):
    pass

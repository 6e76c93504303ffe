"""Exception types raised across the package."""


class BrauerDMError(Exception):
    pass


class ParityError(BrauerDMError, ValueError):
    """n - |lambda| is negative or odd."""


class NotContained(BrauerDMError, ValueError):
    pass


class PrefixTooShort(BrauerDMError, ValueError):
    pass


class NotInImage(BrauerDMError, ValueError):
    pass


class SingularityMismatch(BrauerDMError, ValueError):
    pass


class NotApplicable(BrauerDMError, ValueError):
    pass


class PreconditionViolated(BrauerDMError, ValueError):
    pass


class UnknownFormat(BrauerDMError, ValueError):
    pass


class NonIntegerDelta(BrauerDMError, ValueError):
    """The algebra is semisimple for non-integer delta; nothing to compute."""


class SizeMismatch(BrauerDMError, ValueError):
    pass


class IdentityViolation(BrauerDMError, AssertionError):
    def __init__(self, nu, expected, actual):
        super().__init__(f"dimension identity fails at {nu}: dim={expected}, sum={actual}")
        self.nu = nu
        self.expected = expected
        self.actual = actual


class InternalError(BrauerDMError, RuntimeError):
    pass

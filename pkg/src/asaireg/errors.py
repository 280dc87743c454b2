"""Exception types shared across the package."""


class AsairegError(Exception):
    pass


class DivisionByZero(AsairegError):
    """Division by a scalar with no known nonzero digit."""


class PrecisionExhausted(AsairegError):
    """A result would carry zero provable digits."""


class NotASquare(AsairegError):
    pass


class IrrationalRoots(AsairegError):
    """Hecke quadratic has no roots in Q_p (non-integral slopes or
    irreducible residual quadratic)."""


class LogDomain(AsairegError):
    """p-adic logarithm of something that is not a 1-unit."""


class EigenspaceNotOneDimensional(AsairegError):
    pass


class InsufficientPrecision(AsairegError):
    pass


class NonSplitPrime(AsairegError):
    pass


class FactorBoundExceeded(AsairegError):
    def __init__(self, message, leftover=None):
        super().__init__(message)
        self.leftover = leftover


class TruncationMismatch(AsairegError):
    pass


class NotCuspidal(AsairegError):
    pass


class InsufficientTruncation(AsairegError):
    pass


class MissingPrime(AsairegError):
    """An eigenvalue table lookup failed.

    Carries the canonical generator and norm of the missing prime, and the
    norm bound the caller would need the table to cover.
    """

    def __init__(self, message, generator=None, norm=None, norm_bound=None):
        super().__init__(message)
        self.generator = generator
        self.norm = norm
        self.norm_bound = norm_bound


class DivisionByNonUnit(AsairegError):
    """A Fourier-Whittaker prefactor would divide by a non-unit embedding
    value on an undepleted support point."""


class UnlicensedInverse(AsairegError):
    """Theta_1 inversion requested without either the double-depletion
    licence or the non-ordinary-at-p2 licence."""


class IdentityFailure(AsairegError):
    pass


class EulerVanishing(AsairegError):
    pass


class ParityMismatch(AsairegError):
    pass


class TrivialWeightZero(AsairegError):
    pass


class TailUnbounded(AsairegError):
    """No tail policy certifies the requested output precision."""


class UnsupportedCharacterRing(AsairegError):
    pass


class SeriesDivergence(AsairegError):
    pass


class InvalidConfig(AsairegError):
    pass

"""Domain error hierarchy.

Every error carries a stable machine-readable ``code`` so front ends (the CLI
in particular) can map failures without parsing messages.
"""


class AlgebraError(Exception):
    """Base class for all domain errors raised by this package."""

    code = "algebra_error"


class ParamMismatch(AlgebraError):
    """Operands were built over different parameter triples."""

    code = "param_mismatch"


class ZeroNorm(AlgebraError):
    """The quaternion is null (norm zero within the scale-aware threshold)."""

    code = "zero_norm"


class NonElliptic(AlgebraError):
    """The axis discriminant is not positive; no circular polar form exists."""

    code = "non_elliptic"


class NonUnit(AlgebraError):
    """The operation requires a unit-norm quaternion."""

    code = "non_unit"


class NotUnitVector(AlgebraError):
    """The operation requires a pure vector of unit length under the bilinear form."""

    code = "not_unit_vector"


class DegenerateAxis(AlgebraError):
    """The closed-form eigenvector denominator vanishes; no formula applies."""

    code = "degenerate_axis"


class NotPositiveFamily(AlgebraError):
    """The operation is only defined when all three parameters are positive."""

    code = "not_positive_family"


class NoPeriod(AlgebraError):
    """The quaternion's angle does not divide a full turn into a whole number of steps."""

    code = "no_period"


class CongruenceViolation(AlgebraError):
    """The requested exponents are not congruent modulo the power period."""

    code = "congruence_violation"

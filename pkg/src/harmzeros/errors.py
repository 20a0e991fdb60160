"""Exception types shared across the package."""


class HarmZerosError(Exception):
    """Base class for all package-specific failures."""


class NonConvergence(HarmZerosError):
    """Root iteration exhausted its budget without hitting the residual target."""


class CurveThroughZero(HarmZerosError):
    """The function being winding-counted vanishes (numerically) on the contour."""


class SingularSystem(HarmZerosError):
    """A linear system in the construction was singular for the chosen parameters."""


class NotRegular(HarmZerosError):
    """Operation requires a regular zero set but a singular zero is present."""


class NotRealCoefficients(HarmZerosError):
    """Operation requires real coefficients."""


class EmptySupport(HarmZerosError):
    """Newton polygon of the zero polynomial requested."""


class TraceStall(HarmZerosError):
    """Curve tracing step size collapsed away from any saddle point."""


class SaddleUnresolved(HarmZerosError):
    """Branch pairing at a lemniscate critical point was ambiguous."""


class BranchJump(HarmZerosError):
    """Adjacent samples of a tracked argument differ by too much to unwrap."""


class CriticalPoint(HarmZerosError):
    """Tangent requested at a point where f' vanishes."""


class NotOnLemniscate(HarmZerosError):
    """Point is not on the unit level set of |f|."""


class NotCritical(HarmZerosError):
    """Point is not a critical point of f."""


class AssumptionFailed(HarmZerosError):
    """A hypothesis of the local analysis fails at the given point.

    The message names the broken hypothesis.
    """

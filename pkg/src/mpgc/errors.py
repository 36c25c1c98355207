"""Exception types shared across the package."""


class GraphInputError(ValueError):
    """Malformed or out-of-contract input (bad vertex, bad edge, bad string)."""


class PreconditionError(GraphInputError):
    """Input is well formed but violates an operation's precondition."""


class CapabilityError(RuntimeError):
    """Request exceeds a documented implementation bound."""


class TheoremCheckFailure(AssertionError):
    """A property guaranteed for MPGCs did not hold on a concrete instance."""

"""Exception types shared across the package."""


class InvalidParameter(ValueError):
    """Discretisation parameter is not an admissible prime."""


class DegenerateTriangle(ValueError):
    pass


class InadmissibleConfiguration(ValueError):
    pass


class GeometryError(ValueError):
    """Snapping a trial geometry could not avoid a degenerate lattice value."""


class InvariantBreach(AssertionError):
    """A property the model guarantees was observed to fail.

    The CLI maps this to exit code 4.
    """

"""Exception hierarchy shared by the solvers and the CLI."""


class GeometryError(Exception):
    """Base class for every error raised by this package."""


class InvalidInput(GeometryError, ValueError):
    """Malformed or non-finite input coordinates."""


class EmptyInput(InvalidInput):
    pass


class DegeneratePoint(GeometryError):
    """An operation needs at least one edge but the hull is a single point."""


class DegenerateHull(GeometryError):
    """An operation needs a hull with at least three vertices."""


class TooFewVertices(DegenerateHull):
    pass


class NotAContainer(GeometryError):
    """The candidate container does not contain the hull."""


class WrongCase(GeometryError):
    pass


class ApexInsideHull(GeometryError):
    pass


class NoCrossover(GeometryError):
    pass

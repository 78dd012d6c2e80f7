"""Exception hierarchy.

``GeometryError`` covers degenerate kernel inputs; ``ConstructionError``
covers violated construction preconditions. The CLI maps both to exit 2.
"""


class GeometryError(ValueError):
    pass


class ConcentricIdentical(GeometryError):
    """Two circles coincide, so they share infinitely many points."""


class Parallel(GeometryError):
    pass


class CoincidentPoints(GeometryError):
    pass


class ConstructionError(GeometryError):
    pass


class BadAxes(ConstructionError):
    pass


class BadRadii(ConstructionError):
    pass


class BadParameter(ConstructionError):
    pass


class Infeasible(ConstructionError):
    pass


class RadiusTooLarge(ConstructionError):
    pass


class NotAdjacent(ConstructionError):
    pass


class NotOverlapping(ConstructionError):
    pass


class NotSeparate(ConstructionError):
    pass


class TooFarApart(ConstructionError):
    pass


class DegenerateFamily(ConstructionError):
    pass


class InvalidOval(GeometryError):
    pass


class InvalidResult(GeometryError):
    pass

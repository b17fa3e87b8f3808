"""Exception hierarchy.  Everything raised on purpose derives from PlumbingError."""


class PlumbingError(Exception):
    pass


class ParseError(PlumbingError, ValueError):
    def __init__(self, line, reason):
        self.line = line
        self.reason = reason
        super().__init__(f"line {line}: {reason}")


class InvalidGraph(PlumbingError, ValueError):
    pass


class UnknownVertex(PlumbingError, LookupError):
    def __init__(self, vertex):
        self.vertex = vertex
        super().__init__(f"unknown vertex {vertex!r}")


class SingularError(PlumbingError, ArithmeticError):
    """The intersection matrix (or a matrix handed to ``solve``) has det 0."""


class NotSymmetric(PlumbingError, ValueError):
    pass


class EmptyFamily(PlumbingError, ValueError):
    def __init__(self, family):
        self.family = family
        super().__init__(f"no arrows carry family={family}")


class NonPositiveMultiplicity(PlumbingError, ValueError):
    pass


class UntaggedArrow(PlumbingError, ValueError):
    pass


class ZeroDenominatorQuotient(PlumbingError, ArithmeticError):
    """Some rupture vertex has m^g = 0, so its contact quotient is undefined.

    ``report`` holds the partial FgBarReport: quotients at the offending
    vertices are left out, condition_iii and the difference verdict are
    still filled in.
    """

    def __init__(self, vertices, report):
        self.vertices = vertices
        self.report = report
        super().__init__(
            "m^g vanishes at rupture vertex " + ", ".join(vertices)
        )


class NotBlowDownable(PlumbingError, ValueError):
    pass


class ExponentTooSmall(PlumbingError, ValueError):
    pass

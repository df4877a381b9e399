"""Exception hierarchy shared by every engine module."""

from __future__ import annotations


class PointWorldError(Exception):
    """Base class for all engine errors."""


class LocatedError(PointWorldError):
    """An error that may carry the source line that triggered it."""

    def __init__(self, message: str, line: int | None = None, source: str | None = None):
        self.message = message
        self.line = line
        self.source = source
        super().__init__(self._render())

    def _render(self) -> str:
        where = []
        if self.source:
            where.append(self.source)
        if self.line is not None:
            where.append(f"line {self.line}")
        prefix = ":".join(where)
        return f"{prefix}: {self.message}" if prefix else self.message

    def at(self, line: int | None = None, source: str | None = None) -> "LocatedError":
        if line is not None:
            self.line = line
        if source is not None:
            self.source = source
        self.args = (self._render(),)
        return self


# world files and world invariants
class WorldError(LocatedError):
    pass


class DuplicatePoint(WorldError):
    pass


class UnknownPoint(WorldError):
    pass


class SelfLoop(WorldError):
    pass


class DuplicateConnection(WorldError):
    pass


class BadWeight(WorldError):
    pass


class WorldSyntaxError(WorldError):
    pass


# geometry
class InvalidWalk(PointWorldError):
    pass


class NotASegment(PointWorldError):
    pass


class DirectedUnsupported(PointWorldError):
    pass


class NonUnitWeights(PointWorldError):
    pass


class ZeroRadiusUnderNZ(PointWorldError):
    pass


# enumeration
class BadFamilyParameter(PointWorldError):
    pass


class TooLarge(PointWorldError):
    pass


# theory graphs
class TheoryError(LocatedError):
    pass


class DuplicateId(TheoryError):
    pass


class UnknownId(TheoryError):
    pass


class JustifiedNonClaim(TheoryError):
    pass


class TheorySyntaxError(TheoryError):
    pass


class CyclicDependency(PointWorldError):
    def __init__(self, cycle: tuple[str, ...]):
        self.cycle = cycle
        super().__init__("cyclic dependency: " + " -> ".join(cycle + cycle[:1]))


# podgon definitions
class DefinitionSyntaxError(PointWorldError):
    def __init__(self, message: str, position: int, text: str = ""):
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}")

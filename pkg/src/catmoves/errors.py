"""Exception hierarchy shared by every catmoves module."""

from __future__ import annotations


class CatmovesError(ValueError):
    """Base class for all validation and range errors raised by catmoves."""


class DuplicateLabel(CatmovesError):
    pass


class LabelOutOfRange(CatmovesError):
    pass


class CrossingPair(CatmovesError):
    def __init__(self, first: tuple[int, int], second: tuple[int, int]):
        self.pairs = (first, second)
        super().__init__(f"pairs {first} and {second} cross")


class ReversedPair(CatmovesError):
    pass


class PairCountMismatch(CatmovesError):
    pass


class BadShape(CatmovesError):
    pass


class DuplicateEntry(CatmovesError):
    pass


class RowNotIncreasing(CatmovesError):
    pass


class ColumnNotIncreasing(CatmovesError):
    pass


class ShapeNotTwoRow(CatmovesError):
    pass


class ParseError(CatmovesError):
    pass


class NotAdjacent(CatmovesError):
    pass


class NotEdgesOfTree(CatmovesError):
    pass


class IndexOutOfRange(CatmovesError):
    pass


class RankOutOfRange(CatmovesError):
    pass


class ShapeTooLarge(CatmovesError):
    pass


class SizeExceedsCap(CatmovesError):
    pass


class WrongGraphKind(CatmovesError):
    pass


class ShapeMismatch(CatmovesError):
    pass


class VertexOutOfRange(CatmovesError):
    pass


class IoFailure(CatmovesError):
    pass

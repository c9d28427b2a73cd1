from enum import Enum
from typing import Iterable, Sequence


class ViolationKind(str, Enum):
    """Ways in which raw passport data can fail validation."""

    EMPTY_PARTITION = 'EmptyPartition'
    NON_POSITIVE_PART = 'NonPositivePart'
    TOO_FEW_PARTITIONS = 'TooFewPartitions'
    FACE_NOT_TWO_PARTS = 'FaceNotTwoParts'
    SUM_MISMATCH = 'SumMismatch'
    TRIVIAL_PARTITION = 'TrivialPartition'
    RH_VIOLATION = 'RHViolation'


class Violation:
    __slots__ = ('kind', 'message')

    def __init__(self, kind: ViolationKind, message: str):
        self.kind = kind
        self.message = message

    def __eq__(self, other):
        if not isinstance(other, Violation):
            return NotImplemented
        return (self.kind, self.message) == (other.kind, other.message)

    def __hash__(self):
        return hash((self.kind, self.message))

    def __repr__(self):
        return f'Violation({self.kind.value}: {self.message})'

    def __str__(self):
        return f'{self.kind.value}: {self.message}'


class LaurentError(Exception):
    """Base class of every error raised by laurentreal."""


class InvalidPassport(LaurentError, ValueError):

    def __init__(self, violations: Sequence[Violation]):
        self.violations = list(violations)
        super().__init__('; '.join(str(v) for v in self.violations) or 'invalid passport')

    @property
    def kinds(self) -> set:
        return {v.kind for v in self.violations}


class DegreeMismatch(LaurentError, ValueError):
    pass


class QMismatch(LaurentError, ValueError):
    pass


class NotTransitive(LaurentError, ValueError):
    pass


class NotQ3(LaurentError, ValueError):
    pass


class UnsortedInput(LaurentError, ValueError):
    pass


class NoSolution(LaurentError):
    """No (x, y) represents the target.

    ``reason`` is ``"out_of_range"`` when the target lies outside
    ``[0, t + sum(u)]`` and ``"unrepresentable"`` otherwise.
    """

    OUT_OF_RANGE = 'out_of_range'
    UNREPRESENTABLE = 'unrepresentable'

    def __init__(self, reason: str, message: str = ''):
        self.reason = reason
        super().__init__(message or reason)


class NotRealizable(LaurentError):

    def __init__(self, families: Iterable[int]):
        self.families = tuple(sorted(set(families)))
        super().__init__(f'not realizable, exceptional families={list(self.families)}')


class BudgetExceeded(LaurentError):

    def __init__(self, nodes: int, message: str = ''):
        self.nodes = nodes
        super().__init__(message or f'search budget exceeded after {nodes} nodes')


class InternalPlanError(LaurentError, RuntimeError):
    pass


class PlanInconsistent(LaurentError, RuntimeError):
    pass


class PassportSyntaxError(LaurentError, ValueError):
    pass


class AmbiguousFace(PassportSyntaxError):
    pass


class NoFace(PassportSyntaxError):
    pass


class DocumentError(LaurentError, ValueError):
    pass

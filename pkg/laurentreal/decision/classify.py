from typing import Tuple, Union

from laurentreal.decision.families import matching_families
from laurentreal.passport.laurent import LaurentPassport, RawPassport, canonicalize, validate


class Verdict:
    """Realizability verdict of a Laurent passport.

    Exactly one of three tags: ``REALIZABLE``, ``EXCEPTIONAL`` (with the
    nonempty sorted tuple of matching family ids, q=3 only) or ``INVALID``
    (with the validation messages).
    """

    REALIZABLE = 'Realizable'
    EXCEPTIONAL = 'Exceptional'
    INVALID = 'Invalid'

    __slots__ = ('tag', 'families', 'reasons')

    def __init__(self, tag: str, families: Tuple[int, ...] = (), reasons: Tuple[str, ...] = ()):
        assert tag in (self.REALIZABLE, self.EXCEPTIONAL, self.INVALID)
        assert (tag == self.EXCEPTIONAL) == bool(families), 'families are reported iff exceptional'

        self.tag = tag
        self.families = tuple(sorted(set(families)))
        self.reasons = tuple(reasons)

    @classmethod
    def realizable(cls) -> 'Verdict':
        return cls(cls.REALIZABLE)

    @classmethod
    def exceptional(cls, families) -> 'Verdict':
        return cls(cls.EXCEPTIONAL, families=tuple(families))

    @classmethod
    def invalid(cls, reasons) -> 'Verdict':
        return cls(cls.INVALID, reasons=tuple(reasons))

    @property
    def is_realizable(self) -> bool:
        return self.tag == self.REALIZABLE

    @property
    def is_exceptional(self) -> bool:
        return self.tag == self.EXCEPTIONAL

    @property
    def is_invalid(self) -> bool:
        return self.tag == self.INVALID

    def summary(self) -> str:
        if self.is_realizable:
            return 'REALIZABLE'
        if self.is_exceptional:
            return f'EXCEPTIONAL families={list(self.families)}'
        return 'INVALID ' + '; '.join(self.reasons)

    def __eq__(self, other):
        if not isinstance(other, Verdict):
            return NotImplemented
        return (self.tag, self.families, self.reasons) == (other.tag, other.families, other.reasons)

    def __hash__(self):
        return hash((self.tag, self.families, self.reasons))

    def __repr__(self):
        return f'Verdict({self.summary()})'


def classify(p: Union[LaurentPassport, RawPassport, tuple]) -> Verdict:
    """Decide realizability of a Laurent passport.

    Every passport with q > 3 is realizable. With q = 3 a passport is
    realizable iff it belongs to none of the seven exceptional families; all
    matching families are reported.
    """
    if not isinstance(p, LaurentPassport):
        p = validate(p)
        if isinstance(p, list):
            return Verdict.invalid(str(v) for v in p)

    if p.q > 3:
        return Verdict.realizable()

    canonical, _ = canonicalize(p)
    families = matching_families(canonical)
    if families:
        return Verdict.exceptional(families)

    return Verdict.realizable()

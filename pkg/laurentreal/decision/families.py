from abc import ABC, abstractmethod
from typing import Dict, Iterator, List

from laurentreal.errors import NotQ3
from laurentreal.passport.laurent import LaurentPassport
from laurentreal.passport.partition import Partition


class ExceptionalFamily(ABC):
    """A family of non-realizable Laurent passports with q=3.

    Subclasses implement :meth:`matches_roles` for a fixed assignment of the
    two colored partitions to the roles (Π_1, Π_2); :meth:`matches` tries both
    assignments, so the color order of the passport does not matter. The face
    is compared as an unordered pair.

    Attributes
    ----------
    ID : int
        Family number, 1 to 7.
    DESCRIPTION : str
        The shape of the family in partition notation.
    """

    ID: int
    DESCRIPTION: str

    def matches(self, p: LaurentPassport) -> bool:
        if p.q != 3:
            raise NotQ3(f'exceptional families are defined for q=3, got q={p.q}')

        a, b = p.colored
        return self.matches_roles(a, b, p.face) or self.matches_roles(b, a, p.face)

    @abstractmethod
    def matches_roles(self, first: Partition, second: Partition, face: Partition) -> bool:
        raise NotImplementedError

    @abstractmethod
    def instances(self, n: int) -> Iterator[LaurentPassport]:
        """Yield every passport of degree ``n`` in this family."""
        raise NotImplementedError

    @staticmethod
    def _face(n: int, s: int) -> Partition:
        return Partition((s, n - s))

    def __repr__(self):
        return f'{self.__class__.__name__}({self.DESCRIPTION})'


class EqualPartsAgainstOnePeak(ExceptionalFamily):
    ID = 1
    DESCRIPTION = '{l,...,l}, {1,...,1,d}, {s,n-s}: d>=3, l>=2, s≡0 mod l'

    def matches_roles(self, first, second, face):
        parts = set(first.parts)
        if len(parts) != 1:
            return False
        l = parts.pop()

        big = second.big_parts
        if l < 2 or len(big) != 1 or big[0] < 3:
            return False

        return face.parts[0] % l == 0

    def instances(self, n):
        for l in range(2, n + 1):
            if n % l:
                continue
            k = n // l
            d = k + 1
            if d < 3:
                continue
            for s in range(l, n // 2 + 1, l):
                yield LaurentPassport([(l,) * k, (1,) * (n - d) + (d,)], (s, n - s))


class TwoMatchings(ExceptionalFamily):
    ID = 2
    DESCRIPTION = '{2,...,2}, {2,...,2}, {s,n-s}: s≠n/2'

    def matches_roles(self, first, second, face):
        return first.is_all_twos and second.is_all_twos and face.parts[0] != face.parts[1]

    def instances(self, n):
        if n % 2 or n < 4:
            return
        twos = (2,) * (n // 2)
        for s in range(1, n // 2):
            yield LaurentPassport([twos, twos], (s, n - s))


class _MatchingAgainstPeaks(ExceptionalFamily):
    """Shared shape of families whose first partition is {2,...,2}."""

    def matches_roles(self, first, second, face):
        if not first.is_all_twos:
            return False
        return self.matches_second(second, face, first.n)

    @abstractmethod
    def matches_second(self, second: Partition, face: Partition, n: int) -> bool:
        raise NotImplementedError

    @staticmethod
    def _twos(n: int):
        return (2,) * (n // 2)


class MatchingAgainstConsecutivePeaks(_MatchingAgainstPeaks):
    ID = 3
    DESCRIPTION = '{2,...,2}, {1,...,1,d-1,d}, {2d-3,n-2d+3}: d>=3'

    def matches_second(self, second, face, n):
        big = second.big_parts
        if len(big) != 2:
            return False
        d = big[1]
        return d >= 3 and big[0] == d - 1 and face == self._face(n, 2 * d - 3)

    def instances(self, n):
        # the part count condition forces n = 4d - 6
        if (n + 6) % 4:
            return
        d = (n + 6) // 4
        if d < 3:
            return
        yield LaurentPassport([self._twos(n), (1,) * (n - 2 * d + 1) + (d - 1, d)],
                              self._face(n, 2 * d - 3))


class MatchingAgainstTwinPeaksInner(_MatchingAgainstPeaks):
    ID = 4
    DESCRIPTION = '{2,...,2}, {1,...,1,d,d}, {2d-3,n-2d+3}: d>=3'
    OFFSET = 3

    def matches_second(self, second, face, n):
        big = second.big_parts
        if len(big) != 2 or big[0] != big[1]:
            return False
        d = big[0]
        return d >= 3 and face == self._face(n, 2 * d - self.OFFSET)

    def instances(self, n):
        # the part count condition forces n = 4d - 4
        if n % 4:
            return
        d = (n + 4) // 4
        if d < 3:
            return
        yield LaurentPassport([self._twos(n), (1,) * (n - 2 * d) + (d, d)],
                              self._face(n, 2 * d - self.OFFSET))


class MatchingAgainstTwinPeaksOuter(MatchingAgainstTwinPeaksInner):
    ID = 5
    DESCRIPTION = '{2,...,2}, {1,...,1,d,d}, {2d-1,n-2d+1}: d>=3'
    OFFSET = 1


class MatchingAgainstOneTwoThree(_MatchingAgainstPeaks):
    ID = 6
    DESCRIPTION = '{2,...,2}, {1,2,...,2,3}, {n/2,n/2}'

    def matches_second(self, second, face, n):
        parts = second.parts
        return (parts[0] == 1 and parts[-1] == 3
                and all(x == 2 for x in parts[1:-1])
                and face.parts[0] == face.parts[1])

    def instances(self, n):
        if n % 2 or n < 4:
            return
        yield LaurentPassport([self._twos(n), (1,) + (2,) * ((n - 4) // 2) + (3,)],
                              self._face(n, n // 2))


class SporadicTwelve(ExceptionalFamily):
    ID = 7
    DESCRIPTION = '{2,2,2,2,2,2}, {1,1,1,3,3,3}, {6,6}'

    FIRST = Partition((2, 2, 2, 2, 2, 2))
    SECOND = Partition((1, 1, 1, 3, 3, 3))
    FACE = Partition((6, 6))

    def matches_roles(self, first, second, face):
        return first == self.FIRST and second == self.SECOND and face == self.FACE

    def instances(self, n):
        if n == 12:
            yield LaurentPassport([self.FIRST, self.SECOND], self.FACE)


FAMILIES: Dict[int, ExceptionalFamily] = {
    family.ID: family for family in [
        EqualPartsAgainstOnePeak(),
        TwoMatchings(),
        MatchingAgainstConsecutivePeaks(),
        MatchingAgainstTwinPeaksInner(),
        MatchingAgainstTwinPeaksOuter(),
        MatchingAgainstOneTwoThree(),
        SporadicTwelve(),
    ]
}


def match_family(p: LaurentPassport, k: int) -> bool:
    if k not in FAMILIES:
        raise ValueError(f'unknown family {k}, expected 1..7')
    return FAMILIES[k].matches(p)


def matching_families(p: LaurentPassport) -> List[int]:
    return [k for k, family in FAMILIES.items() if family.matches(p)]


def family_instances(max_n: int) -> Iterator[LaurentPassport]:
    """Every exceptional passport of degree at most ``max_n``, each once."""
    seen = set()
    for n in range(3, max_n + 1):
        for family in FAMILIES.values():
            for p in family.instances(n):
                if p not in seen:
                    seen.add(p)
                    yield p

from typing import Iterable, Iterator, Optional, Tuple


class Partition:
    """Multiset of positive integers, stored weakly increasing.

    Two partitions are equal iff they are equal as multisets. Partitions are
    immutable and hashable, so they can be used as dictionary keys and set
    members.

    Parameters
    ----------
    parts : Iterable[int]
        Parts in any order. Every part must be at least 1.

    Examples
    --------
    >>> Partition([3, 1, 2, 3])
    Partition({1,2,3,3})
    >>> Partition([1, 1, 3, 3]).big_parts
    (3, 3)
    """

    __slots__ = ('_parts',)

    def __init__(self, parts: Iterable[int]):
        parts = tuple(sorted(int(x) for x in parts))
        if any(x < 1 for x in parts):
            raise ValueError(f'partition parts must be positive, got {parts}')

        self._parts = parts

    @classmethod
    def of(cls, *parts: int) -> 'Partition':
        return cls(parts)

    @property
    def parts(self) -> Tuple[int, ...]:
        return self._parts

    @property
    def n(self) -> int:
        return sum(self._parts)

    @property
    def length(self) -> int:
        """Number of parts (p_i)."""
        return len(self._parts)

    @property
    def ones(self) -> int:
        """Number of parts equal to 1 (e_i)."""
        return sum(1 for x in self._parts if x == 1)

    @property
    def big_parts(self) -> Tuple[int, ...]:
        """Parts greater than 1, increasing (b_{i,1} <= ... <= b_{i,q_i})."""
        return tuple(x for x in self._parts if x > 1)

    @property
    def n_big(self) -> int:
        """Number of parts greater than 1 (q_i)."""
        return len(self._parts) - self.ones

    @property
    def is_all_twos(self) -> bool:
        return len(self._parts) > 0 and all(x == 2 for x in self._parts)

    def decreasing(self) -> Tuple[int, ...]:
        return tuple(reversed(self._parts))

    def to_text(self) -> str:
        return ','.join(str(x) for x in self.decreasing())

    def __iter__(self):
        return iter(self._parts)

    def __len__(self):
        return len(self._parts)

    def __getitem__(self, item):
        return self._parts[item]

    def __eq__(self, other):
        if not isinstance(other, Partition):
            return NotImplemented
        return self._parts == other._parts

    def __hash__(self):
        return hash(self._parts)

    def __repr__(self):
        return f'Partition({self})'

    def __str__(self):
        return '{' + ','.join(str(x) for x in self._parts) + '}'


def partitions_of(n: int, max_part: Optional[int] = None) -> Iterator[Partition]:
    """Yield every partition of ``n``, largest parts first.

    The order is deterministic: partitions are generated as weakly decreasing
    part lists in reverse lexicographic order, e.g. for n=4
    {4}, {1,3}, {2,2}, {1,1,2}, {1,1,1,1}.

    Parameters
    ----------
    n : int
        Integer to partition, n >= 1.
    max_part : int, optional
        Upper bound on every part.
    """
    if max_part is None:
        max_part = n

    def _rec(remaining: int, bound: int, prefix: Tuple[int, ...]):
        if remaining == 0:
            yield Partition(prefix)
            return
        for part in range(min(bound, remaining), 0, -1):
            yield from _rec(remaining - part, part, prefix + (part,))

    if n >= 1:
        yield from _rec(n, max_part, ())

import math
from collections import Counter
from itertools import permutations
from typing import Iterator, List, Optional

from laurentreal.constellation.perm import Perm
from laurentreal.passport.partition import Partition


def class_size(t: Partition) -> int:
    """Number of permutations of cycle type ``t``: n! / Π_k k^{m_k} m_k!."""
    size = math.factorial(t.n)
    for k, m in Counter(t.parts).items():
        size //= k ** m * math.factorial(m)
    return size


def class_stream(t: Partition, n: Optional[int] = None) -> Iterator[Perm]:
    """Yield every permutation of cycle type ``t``, each exactly once.

    The cycle through the smallest unused point is chosen first: its length
    among the remaining distinct parts, then its other points in every order.
    The order of the stream is deterministic.

    Parameters
    ----------
    t : Partition
        Cycle type.
    n : int, optional
        Degree; must equal ``t.n`` when given.

    Examples
    --------
    >>> sum(1 for _ in class_stream(Partition.of(2, 1, 1)))
    6
    """
    if n is not None and n != t.n:
        raise ValueError(f'cycle type {t} does not sum to n={n}')

    n = t.n
    images = list(range(n))
    used = [False] * n
    remaining = Counter(t.parts)

    def _rec(placed: int) -> Iterator[Perm]:
        if placed == n:
            yield Perm.unchecked(tuple(images))
            return

        start = used.index(False)
        used[start] = True
        free: List[int] = [x for x in range(n) if not used[x]]

        for length in sorted(k for k, m in remaining.items() if m > 0):
            remaining[length] -= 1
            for rest in permutations(free, length - 1):
                cycle = (start,) + rest
                for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                    images[a] = b
                for x in rest:
                    used[x] = True
                yield from _rec(placed + length)
                for x in rest:
                    used[x] = False
            remaining[length] += 1

        images[start] = start
        used[start] = False

    return _rec(0)

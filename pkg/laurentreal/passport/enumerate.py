from itertools import combinations_with_replacement
from typing import Iterator

from laurentreal.passport.laurent import LaurentPassport
from laurentreal.passport.partition import partitions_of


def enumerate_passports(n: int, q: int) -> Iterator[LaurentPassport]:
    """Yield every Laurent passport of degree ``n`` with ``q`` branch points.

    Each passport appears once up to the order of its colored partitions and
    of its face parts. Colored partitions are drawn as multisets from
    :func:`partitions_of` (so the order is deterministic) and the face part
    ``s`` runs over ``1..n//2``.

    Parameters
    ----------
    n : int
        Degree, n >= 2.
    q : int
        Number of branch points, q >= 3.

    Examples
    --------
    >>> len(list(enumerate_passports(4, 3)))
    8
    """
    assert n >= 2, 'degree must be at least 2'
    assert q >= 3, 'a passport has at least 3 branch points'

    r = q - 1
    # the face has 2 parts, so it needs n >= 3 to have fewer than n parts
    if n < 3:
        return

    candidates = [c for c in partitions_of(n) if c.length < n]
    target = (r - 1) * n

    for combo in combinations_with_replacement(range(len(candidates)), r):
        if sum(candidates[i].length for i in combo) != target:
            continue

        colored = [candidates[i] for i in combo]
        for s in range(1, n // 2 + 1):
            yield LaurentPassport(colored, (s, n - s))

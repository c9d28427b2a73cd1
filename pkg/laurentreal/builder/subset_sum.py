from typing import Sequence, Tuple

import numpy as np

from laurentreal.errors import NoSolution, UnsortedInput


def criterion_holds(u: Sequence[int], t: int) -> bool:
    """Whether t + u_1 + ... + u_{k-1} >= u_k - 1 for every k.

    This holds iff every s in ``0..t+sum(u)`` is of the form
    y + Σ x_i u_i with x_i in {0, 1} and 0 <= y <= t.
    """
    prefix = t
    for value in u:
        if prefix < value - 1:
            return False
        prefix += value
    return True


def _check_input(u: Sequence[int], t: int):
    if t < 0:
        raise ValueError(f'slack t must be non-negative, got {t}')
    if any(value <= 1 for value in u):
        raise UnsortedInput(f'weights must all exceed 1, got {list(u)}')
    if any(a > b for a, b in zip(u, u[1:])):
        raise UnsortedInput(f'weights must be sorted increasingly, got {list(u)}')


def _peel(u: Sequence[int], t: int, s: int) -> Tuple[Tuple[int, ...], int]:
    # walks the weights from the largest down, taking u_k whenever the rest
    # cannot reach the remaining target on their own
    x = [0] * len(u)
    prefix = [t]
    for value in u:
        prefix.append(prefix[-1] + value)

    remaining = s
    for k in reversed(range(len(u))):
        if remaining > prefix[k]:
            x[k] = 1
            remaining -= u[k]

    assert 0 <= remaining <= t
    return tuple(x), remaining


def _search(u: Sequence[int], t: int, s: int) -> Tuple[Tuple[int, ...], int]:
    total = int(sum(u))
    reachable = np.zeros((len(u) + 1, total + 1), dtype=bool)
    reachable[0, 0] = True
    for k, value in enumerate(u):
        reachable[k + 1] = reachable[k]
        reachable[k + 1, value:] |= reachable[k, :total + 1 - value]

    candidates = np.flatnonzero(reachable[len(u), max(s - t, 0):min(s, total) + 1])
    if candidates.size == 0:
        raise NoSolution(NoSolution.UNREPRESENTABLE,
                         f'{s} is not y + a subset sum of {list(u)} with y <= {t}')

    subset_sum = int(candidates[-1]) + max(s - t, 0)
    x = [0] * len(u)
    remaining = subset_sum
    for k in reversed(range(len(u))):
        if not reachable[k, remaining]:
            x[k] = 1
            remaining -= u[k]

    assert remaining == 0
    return tuple(x), s - subset_sum


def solve_bounded_sum(u: Sequence[int], t: int, s: int, search: bool = True) -> Tuple[Tuple[int, ...], int]:
    """Write ``s`` as y + Σ x_i u_i with x_i in {0, 1} and 0 <= y <= t.

    When the criterion of :func:`criterion_holds` is met the solution is
    found by peeling the largest weights first. Otherwise, if ``search`` is
    set, the specific target is looked up in a subset-sum table, which
    answers for this ``s`` alone.

    Parameters
    ----------
    u : Sequence[int]
        Weights, sorted increasingly, all greater than 1.
    t : int
        Bound on the free summand y, t >= 0.
    s : int
        Target.
    search : bool
        Fall back to a table lookup when the criterion fails.

    Returns
    -------
    (x, y)
        Tuple of 0/1 flags aligned with ``u`` and the free summand.

    Raises
    ------
    NoSolution
        ``reason='out_of_range'`` if s is outside ``0..t+sum(u)``,
        ``reason='unrepresentable'`` otherwise.
    UnsortedInput
        If ``u`` is not sorted or contains a weight <= 1.

    Examples
    --------
    >>> solve_bounded_sum([2, 3], 1, 4)
    ((0, 1), 1)
    """
    u = [int(value) for value in u]
    _check_input(u, t)

    if s < 0 or s > t + sum(u):
        raise NoSolution(NoSolution.OUT_OF_RANGE, f'target {s} outside 0..{t + sum(u)}')

    if criterion_holds(u, t):
        return _peel(u, t, s)

    if not search:
        raise NoSolution(NoSolution.UNREPRESENTABLE, 'criterion fails and search is disabled')

    return _search(u, t, s)

import logging
import time
from itertools import product
from typing import List, Optional, Sequence, Tuple, Union

from laurentreal.constellation.constellation import (ConstellationTuple,
                                                     is_transitive,
                                                     reorder,
                                                     verify_against)
from laurentreal.constellation.perm import Perm, cycle_type
from laurentreal.errors import BudgetExceeded, InvalidPassport, PlanInconsistent, Violation, ViolationKind
from laurentreal.oracle.classes import class_size, class_stream
from laurentreal.passport.laurent import LaurentPassport, RawPassport, validate
from laurentreal.passport.partition import Partition

logger = logging.getLogger(__name__)


class SearchBudget:
    """Caps on the oracle search: backtracking nodes and wall-clock milliseconds."""

    DEFAULT_MAX_NODES = 5_000_000
    DEFAULT_MAX_MILLIS = 60_000

    def __init__(self, max_nodes: Optional[int] = None, max_millis: Optional[int] = None):
        self.max_nodes = self.DEFAULT_MAX_NODES if max_nodes is None else int(max_nodes)
        self.max_millis = self.DEFAULT_MAX_MILLIS if max_millis is None else int(max_millis)

        if self.max_nodes <= 0 or self.max_millis <= 0:
            raise ValueError(f'budget caps must be positive, got {self.max_nodes} nodes, {self.max_millis} ms')

    def __repr__(self):
        return f'SearchBudget(max_nodes={self.max_nodes}, max_millis={self.max_millis})'


class OracleResult:
    """Outcome of :func:`oracle_decide`.

    ``tag`` is one of ``REALIZABLE`` (``witness`` set), ``NOT_REALIZABLE``
    (the reduced space was exhausted) or ``BUDGET_EXCEEDED``. ``nodes`` counts
    the candidate permutations tried.
    """

    REALIZABLE = 'Realizable'
    NOT_REALIZABLE = 'NotRealizable'
    BUDGET_EXCEEDED = 'BudgetExceeded'

    __slots__ = ('tag', 'witness', 'nodes')

    def __init__(self, tag: str, witness: Optional[ConstellationTuple] = None, nodes: int = 0):
        assert tag in (self.REALIZABLE, self.NOT_REALIZABLE, self.BUDGET_EXCEEDED)
        assert (tag == self.REALIZABLE) == (witness is not None), 'a witness comes iff realizable'

        self.tag = tag
        self.witness = witness
        self.nodes = nodes

    @property
    def is_realizable(self) -> bool:
        return self.tag == self.REALIZABLE

    @property
    def is_not_realizable(self) -> bool:
        return self.tag == self.NOT_REALIZABLE

    @property
    def budget_exceeded(self) -> bool:
        return self.tag == self.BUDGET_EXCEEDED

    def summary(self) -> str:
        return f'{self.tag} after {self.nodes} nodes'

    def __repr__(self):
        return f'OracleResult({self.summary()})'


def face_permutation(face: Partition) -> Perm:
    """Consecutive blocks, smallest part first: (1..s)(s+1..n) for a face {s, n-s}."""
    cycles = []
    start = 0
    for part in face.parts:
        cycles.append(list(range(start, start + part)))
        start += part
    return Perm.from_cycles(face.n, cycles)


def rotation_group(g: Perm) -> List[Perm]:
    """Products of powers of the cycles of ``g``; every element commutes with ``g``."""
    n = g.n
    cycles = g.cycles(include_fixed=False)
    out = []
    for shifts in product(*[range(len(c)) for c in cycles]):
        images = list(range(n))
        for cycle, shift in zip(cycles, shifts):
            for i, x in enumerate(cycle):
                images[x] = cycle[(i + shift) % len(cycle)]
        out.append(Perm.unchecked(tuple(images)))
    return out


def _is_least_conjugate(g: Perm, group: Sequence[Perm]) -> bool:
    return all(not g.conjugate(c) < g for c in group)


class _Counter:

    def __init__(self, budget: SearchBudget):
        self.budget = budget
        self.nodes = 0
        self.deadline = time.monotonic() + budget.max_millis / 1000

    def tick(self):
        self.nodes += 1
        if self.nodes > self.budget.max_nodes:
            raise BudgetExceeded(self.nodes)
        if self.nodes % 1024 == 0 and time.monotonic() > self.deadline:
            raise BudgetExceeded(self.nodes, f'search time budget of {self.budget.max_millis} ms exceeded '
                                             f'after {self.nodes} nodes')


def _as_partitions(p) -> Tuple[Tuple[Partition, ...], Optional[LaurentPassport]]:
    if isinstance(p, RawPassport):
        p = validate(p)
        if isinstance(p, list):
            raise InvalidPassport(p)
    if isinstance(p, LaurentPassport):
        return p.partitions, p

    partitions = tuple(x if isinstance(x, Partition) else Partition(x) for x in p)
    violations = []
    if len(partitions) < 2:
        violations.append(Violation(ViolationKind.TOO_FEW_PARTITIONS,
                                    f'a passport needs at least 2 partitions, got {len(partitions)}'))
    else:
        n = partitions[-1].n
        for i, t in enumerate(partitions):
            if t.n != n:
                violations.append(Violation(ViolationKind.SUM_MISMATCH,
                                            f'partition {i + 1} sums to {t.n}, expected n={n}'))
        total = sum(t.length for t in partitions)
        expected = (len(partitions) - 2) * n + 2
        if total != expected:
            violations.append(Violation(ViolationKind.RH_VIOLATION,
                                        f'total number of parts is {total}, expected (q-2)n+2={expected}'))
    if violations:
        raise InvalidPassport(violations)
    return partitions, None


def _search_q3(colored: Sequence[Partition], gq: Perm, counter: _Counter, reduce: bool) -> Optional[List[Perm]]:
    gq_inv = gq.inverse()
    group = rotation_group(gq) if reduce else []
    first = 0 if class_size(colored[0]) <= class_size(colored[1]) else 1
    other = colored[1 - first]

    for g in class_stream(colored[first]):
        counter.tick()
        if reduce and not _is_least_conjugate(g, group):
            continue
        if first == 0:
            g1, g2 = g, g.inverse() * gq_inv
        else:
            g1, g2 = gq_inv * g.inverse(), g
        derived = g2 if first == 0 else g1
        if cycle_type(derived) != other:
            continue
        c = ConstellationTuple([g1, g2, gq])
        if is_transitive(c):
            return [g1, g2]
    return None


def _search_general(colored: Sequence[Partition], gq: Perm, counter: _Counter,
                    reduce: bool) -> Optional[Tuple[List[Perm], List[int]]]:
    # the largest class is derived from the others; the rest are tried in
    # increasing class size
    order = sorted(range(len(colored)), key=lambda i: class_size(colored[i]))
    enumerated, last = order[:-1], order[-1]
    gq_inv = gq.inverse()
    group = rotation_group(gq) if reduce else []
    n = gq.n

    chosen: List[Perm] = []

    def _rec(level: int, prefix: Perm) -> bool:
        if level == len(enumerated):
            derived = prefix.inverse() * gq_inv
            if cycle_type(derived) != colored[last]:
                return False
            c = ConstellationTuple(chosen + [derived, gq])
            if not is_transitive(c):
                return False
            chosen.append(derived)
            return True

        for g in class_stream(colored[enumerated[level]]):
            counter.tick()
            if level == 0 and reduce and not _is_least_conjugate(g, group):
                continue
            chosen.append(g)
            if _rec(level + 1, prefix * g):
                return True
            chosen.pop()
        return False

    if _rec(0, Perm.identity(n)):
        return chosen, order
    return None


def oracle_decide(p: Union[LaurentPassport, RawPassport, Sequence[Sequence[int]]],
                  budget: Optional[SearchBudget] = None,
                  reduce: bool = True) -> OracleResult:
    """Decide realizability by exhaustive search over permutation tuples.

    The face permutation g_q is fixed to consecutive blocks. For q = 3 the
    smaller of the two colored classes is enumerated and the other
    permutation is derived from the product; for q > 3 all classes but the
    largest are backtracked over and the last one is derived. With
    ``reduce`` the first enumerated permutation is only tried when it is the
    least of its conjugates under the rotations of the cycles of g_q, which
    commute with g_q and so leave the answer unchanged.

    Parameters
    ----------
    p : LaurentPassport, RawPassport or sequence of partitions
        A general passport is a sequence of partitions of n whose last member
        is the cycle type of g_q.
    budget : SearchBudget, optional
        Defaults to :class:`SearchBudget` defaults.
    reduce : bool
        Apply the conjugation filter.

    Returns
    -------
    OracleResult
        ``NOT_REALIZABLE`` only after full exhaustion of the (reduced) space.

    Raises
    ------
    InvalidPassport
        If the partitions do not form a passport.
    """
    partitions, laurent = _as_partitions(p)
    budget = budget or SearchBudget()
    colored, face = list(partitions[:-1]), partitions[-1]
    gq = face_permutation(face)
    counter = _Counter(budget)

    try:
        if len(colored) == 1:
            counter.tick()
            found = ([gq.inverse()], [0]) if cycle_type(gq.inverse()) == colored[0] else None
        elif len(colored) == 2:
            perms = _search_q3(colored, gq, counter, reduce)
            found = (perms, [0, 1]) if perms is not None else None
        else:
            found = _search_general(colored, gq, counter, reduce)
    except BudgetExceeded as exc:
        logger.warning('oracle budget exhausted after %d nodes', exc.nodes)
        return OracleResult(OracleResult.BUDGET_EXCEEDED, nodes=exc.nodes)

    if found is None:
        logger.info('oracle exhausted the search space after %d nodes: not realizable', counter.nodes)
        return OracleResult(OracleResult.NOT_REALIZABLE, nodes=counter.nodes)

    perms, order = found
    witness = ConstellationTuple(list(perms) + [gq])
    if order != sorted(order):
        # search position k holds partition order[k]
        back = [0] * len(order)
        for k, i in enumerate(order):
            back[i] = k
        witness = reorder(witness, back)

    if laurent is not None:
        report = verify_against(witness, laurent)
        if not report:
            raise PlanInconsistent(f'oracle witness failed verification: {", ".join(report.failures)}')
    elif tuple(cycle_type(g) for g in witness.g) != partitions or not is_transitive(witness):
        raise PlanInconsistent('oracle witness does not match the passport')

    logger.info('oracle found a witness after %d nodes', counter.nodes)
    return OracleResult(OracleResult.REALIZABLE, witness=witness, nodes=counter.nodes)

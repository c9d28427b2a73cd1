import logging
from collections import Counter
from typing import List, NamedTuple, Sequence, Tuple

from laurentreal.constellation.perm import Perm, cycle_type
from laurentreal.errors import DegreeMismatch, NotTransitive, QMismatch
from laurentreal.passport.laurent import LaurentPassport
from laurentreal.passport.partition import Partition

logger = logging.getLogger(__name__)


class ValencyDatum(NamedTuple):
    """Cycle types Γ_1..Γ_q of the permutations of a constellation."""

    partitions: Tuple[Partition, ...]

    @property
    def colored(self) -> Tuple[Partition, ...]:
        return self.partitions[:-1]

    @property
    def face(self) -> Partition:
        return self.partitions[-1]


class ConstellationTuple:
    """Planar constellation encoded as a tuple of permutations.

    ``g[0..q-2]`` are the rotations of the colored vertices, ``g[q-1]`` is the
    face permutation. The left-to-right product of all of them is the identity.
    Transitivity and genus are not enforced here: use :func:`is_transitive`,
    :func:`genus` and :func:`verify_against`.

    Parameters
    ----------
    g : Sequence[Perm]
        The q permutations, all of the same degree.
    """

    __slots__ = ('_g',)

    def __init__(self, g: Sequence[Perm]):
        g = tuple(g)
        if len(g) < 1:
            raise ValueError('a constellation needs at least one permutation')

        n = g[0].n
        if any(p.n != n for p in g):
            raise DegreeMismatch(f'permutations of mixed degrees {[p.n for p in g]}')

        product = g[0]
        for p in g[1:]:
            product = product * p
        if not product.is_identity():
            raise ValueError('the product g_1...g_q is not the identity')

        self._g = g

    @property
    def g(self) -> Tuple[Perm, ...]:
        return self._g

    @property
    def n(self) -> int:
        return self._g[0].n

    @property
    def q(self) -> int:
        return len(self._g)

    @property
    def rotations(self) -> Tuple[Perm, ...]:
        return self._g[:-1]

    @property
    def face(self) -> Perm:
        return self._g[-1]

    def valency_datum(self) -> ValencyDatum:
        return ValencyDatum(tuple(cycle_type(p) for p in self._g))

    def conjugate(self, c: Perm) -> 'ConstellationTuple':
        """Relabel the stars by ``c``."""
        return ConstellationTuple([p.conjugate(c) for p in self._g])

    def __eq__(self, other):
        if not isinstance(other, ConstellationTuple):
            return NotImplemented
        return self._g == other._g

    def __hash__(self):
        return hash(self._g)

    def __repr__(self):
        return 'ConstellationTuple(' + ', '.join(str(p) for p in self._g) + ')'


def from_rotations(n: int, rotations: Sequence[Perm]) -> ConstellationTuple:
    """Complete the rotations g_1..g_{q-1} with g_q = (g_1···g_{q-1})⁻¹."""
    if any(p.n != n for p in rotations):
        raise DegreeMismatch(f'expected degree {n}, got {[p.n for p in rotations]}')

    product = Perm.identity(n)
    for p in rotations:
        product = product * p

    return ConstellationTuple(list(rotations) + [product.inverse()])


def orbits(c: ConstellationTuple) -> List[List[int]]:
    """Orbits of the group generated by the permutations of ``c``."""
    seen = [False] * c.n
    out = []
    for start in range(c.n):
        if seen[start]:
            continue
        seen[start] = True
        orbit = [start]
        stack = [start]
        while stack:
            x = stack.pop()
            for p in c.g:
                y = p[x]
                if not seen[y]:
                    seen[y] = True
                    orbit.append(y)
                    stack.append(y)
        out.append(sorted(orbit))
    return out


def is_transitive(c: ConstellationTuple) -> bool:
    return len(orbits(c)) <= 1


def euler_count(c: ConstellationTuple) -> int:
    """Σ_i c(g_i) - (q-2)n, which equals 2 - 2·genus for a transitive tuple."""
    return sum(p.n_cycles() for p in c.g) - (c.q - 2) * c.n


def genus(c: ConstellationTuple) -> int:
    if not is_transitive(c):
        raise NotTransitive('genus is defined for transitive tuples only')

    chi = euler_count(c)
    assert chi % 2 == 0, 'Euler characteristic of a constellation is even'
    return (2 - chi) // 2


class VerificationReport(NamedTuple):
    """Outcome of :func:`verify_against`; truthy iff every check passed.

    ``failures`` holds the names of the failed checks among ``transitive``,
    ``genus``, ``colored`` and ``face``.
    """

    failures: Tuple[str, ...]
    details: Tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.failures

    def __bool__(self):
        return self.passed


def verify_against(c: ConstellationTuple, p: LaurentPassport) -> VerificationReport:
    """Check that ``c`` is a planar constellation realizing ``p``.

    The colored cycle types are compared as a multiset, the face cycle type
    must equal the face partition.
    """
    if c.n != p.n:
        raise DegreeMismatch(f'constellation has degree {c.n}, passport has {p.n}')
    if c.q != p.q:
        raise QMismatch(f'constellation has q={c.q}, passport has q={p.q}')

    failures = []
    details = []

    if not is_transitive(c):
        failures.append('transitive')
        details.append(f'orbits: {[len(o) for o in orbits(c)]}')

    chi = euler_count(c)
    if chi != 2:
        failures.append('genus')
        details.append(f'Σc(g_i) - (q-2)n = {chi}, expected 2')

    datum = c.valency_datum()
    if Counter(datum.colored) != Counter(p.colored):
        failures.append('colored')
        details.append(f'colored cycle types {[str(x) for x in datum.colored]}')

    if datum.face != p.face:
        failures.append('face')
        details.append(f'face cycle type {datum.face}, expected {p.face}')

    report = VerificationReport(tuple(failures), tuple(details))
    if not report:
        logger.debug('verification of %r against %s failed: %s', c, p, report.details)

    return report


def reorder(c: ConstellationTuple, order: Sequence[int]) -> ConstellationTuple:
    """Permute the colored permutations of ``c`` by braid moves.

    The result has, at colored position ``k``, a conjugate of
    ``c.g[order[k]]``. Each move replaces an adjacent pair (a, b) by
    (b, b⁻¹ab), which keeps the product, the generated group and all cycle
    types. The face permutation is untouched.

    Parameters
    ----------
    c : ConstellationTuple
    order : Sequence[int]
        A permutation of ``range(c.q - 1)``.
    """
    r = c.q - 1
    if sorted(order) != list(range(r)):
        raise ValueError(f'order must be a permutation of 0..{r - 1}, got {list(order)}')

    labels = list(range(r))
    perms = list(c.rotations)
    for k, wanted in enumerate(order):
        j = labels.index(wanted)
        while j > k:
            a, b = perms[j - 1], perms[j]
            perms[j - 1], perms[j] = b, a.conjugate(b)
            labels[j - 1], labels[j] = labels[j], labels[j - 1]
            j -= 1

    return ConstellationTuple(perms + [c.face])

from typing import List, NamedTuple, Sequence, Tuple, Union

from laurentreal.errors import InvalidPassport, Violation, ViolationKind
from laurentreal.passport.partition import Partition


class RawPassport(NamedTuple):
    """Unvalidated passport data: colored partitions plus the face partition."""

    colored: Tuple[Tuple[int, ...], ...]
    face: Tuple[int, ...]


class LaurentPassport:
    """Validated Laurent passport.

    A Laurent passport of degree n is a collection of q = r + 1 partitions of
    n: r colored partitions Π_1..Π_r and a face partition {s, n-s}, such that
    every partition has fewer than n parts and

        Σ_{i=1}^{q} p_i = (q-2)n + 2.

    Instances are immutable; construction validates and raises
    :class:`InvalidPassport` listing every violated invariant.

    Parameters
    ----------
    colored : Sequence
        The r colored partitions, as :class:`Partition` or integer sequences.
    face : Partition or Sequence[int]
        The two-part face partition. Stored normalized, so s <= n - s.
    """

    __slots__ = ('_colored', '_face')

    def __init__(self,
                 colored: Sequence[Union[Partition, Sequence[int]]],
                 face: Union[Partition, Sequence[int]]):
        violations = _violations([tuple(c) for c in colored], tuple(face))
        if violations:
            raise InvalidPassport(violations)

        self._colored = tuple(c if isinstance(c, Partition) else Partition(c) for c in colored)
        self._face = face if isinstance(face, Partition) else Partition(face)

    @property
    def colored(self) -> Tuple[Partition, ...]:
        return self._colored

    @property
    def face(self) -> Partition:
        return self._face

    @property
    def n(self) -> int:
        return self._face.n

    @property
    def r(self) -> int:
        return len(self._colored)

    @property
    def q(self) -> int:
        return len(self._colored) + 1

    @property
    def s(self) -> int:
        """Smaller face part."""
        return self._face.parts[0]

    @property
    def partitions(self) -> Tuple[Partition, ...]:
        return self._colored + (self._face,)

    def to_raw(self) -> RawPassport:
        return RawPassport(tuple(c.decreasing() for c in self._colored), self._face.decreasing())

    def to_text(self) -> str:
        """PassportText rendering with the face marked by ``*``."""
        return ';'.join([c.to_text() for c in self._colored] + [self._face.to_text() + '*'])

    def __eq__(self, other):
        if not isinstance(other, LaurentPassport):
            return NotImplemented
        return self._colored == other._colored and self._face == other._face

    def __hash__(self):
        return hash((self._colored, self._face))

    def __repr__(self):
        inner = ', '.join(str(c) for c in self._colored)
        return f'LaurentPassport({inner}; face={self._face})'

    def __str__(self):
        return self.to_text()


class DerivedStats(NamedTuple):
    """Per-color quantities q_i, e_i and b_{i,j} (0-based color index)."""

    q: Tuple[int, ...]
    e: Tuple[int, ...]
    b: Tuple[Tuple[int, ...], ...]


class ColorRelabeling(NamedTuple):
    """Map between a passport and its canonical form.

    ``order[k]`` is the input index of the colored partition placed at
    canonical position ``k``. Faces are stored with the smaller part first,
    so the face never takes part in a relabeling.
    """

    order: Tuple[int, ...]

    @property
    def is_identity(self) -> bool:
        return self.order == tuple(range(len(self.order)))

    def to_input_order(self, items: Sequence) -> list:
        """Rearrange per-color items from canonical order to input order."""
        out = [None] * len(self.order)
        for k, i in enumerate(self.order):
            out[i] = items[k]
        return out

    def restore(self, canonical: LaurentPassport) -> LaurentPassport:
        return LaurentPassport(self.to_input_order(canonical.colored), canonical.face)


def _violations(colored: List[Tuple[int, ...]], face: Tuple[int, ...]) -> List[Violation]:
    violations = []
    everything = list(colored) + [face]
    names = [f'partition {i + 1}' for i in range(len(colored))] + ['face']

    malformed = False
    for name, parts in zip(names, everything):
        if len(parts) == 0:
            violations.append(Violation(ViolationKind.EMPTY_PARTITION, f'{name} has no parts'))
            malformed = True
        elif any(int(x) < 1 for x in parts):
            violations.append(Violation(ViolationKind.NON_POSITIVE_PART,
                                        f'{name} has a non-positive part: {list(parts)}'))
            malformed = True

    q = len(everything)
    if q < 3:
        violations.append(Violation(ViolationKind.TOO_FEW_PARTITIONS,
                                    f'a passport needs at least 3 partitions, got {q}'))

    if len(face) != 2:
        violations.append(Violation(ViolationKind.FACE_NOT_TWO_PARTS,
                                    f'face partition must have exactly 2 parts, got {len(face)}'))

    if malformed:
        return violations

    n = sum(face)
    for name, parts in zip(names, everything):
        if sum(parts) != n:
            violations.append(Violation(ViolationKind.SUM_MISMATCH,
                                        f'{name} sums to {sum(parts)}, expected n={n}'))
        elif len(parts) >= n:
            violations.append(Violation(ViolationKind.TRIVIAL_PARTITION,
                                        f'{name} has {len(parts)} parts, must be fewer than n={n}'))

    total = sum(len(parts) for parts in everything)
    expected = (q - 2) * n + 2
    if total != expected:
        violations.append(Violation(ViolationKind.RH_VIOLATION,
                                    f'total number of parts is {total}, expected (q-2)n+2={expected}'))

    return violations


def validate(raw: Union[RawPassport, Tuple[Sequence, Sequence]]) -> Union[LaurentPassport, List[Violation]]:
    """Validate raw passport data.

    Parameters
    ----------
    raw : RawPassport or (colored, face)
        Colored partitions and the designated face partition.

    Returns
    -------
    LaurentPassport or list of Violation
        The passport if every invariant holds, otherwise all violations found.
    """
    colored, face = raw
    colored = [tuple(int(x) for x in c) for c in colored]
    face = tuple(int(x) for x in face)

    violations = _violations(colored, face)
    if violations:
        return violations

    return LaurentPassport(colored, face)


def _canonical_key(partition: Partition):
    return partition.n_big, partition.decreasing()


def canonicalize(p: LaurentPassport) -> Tuple[LaurentPassport, ColorRelabeling]:
    """Reorder colors so that q_1 >= q_2 >= ... >= q_r.

    Ties are broken by comparing the decreasing part lists, larger first; the
    sort is stable, so equal partitions keep their input order.
    """
    order = sorted(range(p.r), key=lambda i: _canonical_key(p.colored[i]), reverse=True)
    canonical = LaurentPassport([p.colored[i] for i in order], p.face)

    return canonical, ColorRelabeling(tuple(order))


def is_canonical(p: LaurentPassport) -> bool:
    keys = [_canonical_key(c) for c in p.colored]
    return all(a >= b for a, b in zip(keys, keys[1:]))


def derived(p: LaurentPassport) -> DerivedStats:
    return DerivedStats(q=tuple(c.n_big for c in p.colored),
                        e=tuple(c.ones for c in p.colored),
                        b=tuple(c.big_parts for c in p.colored))


def gop_sides(p: LaurentPassport) -> Tuple[int, int]:
    """Both sides of the identity Σ_{i>=2} Σ_j (b_{i,j} - 2) = e_1 + q_1 - (q_2 + ... + q_r).

    The identity follows from the part count condition and holds for every
    valid passport.
    """
    stats = derived(p)
    lhs = sum(b - 2 for row in stats.b[1:] for b in row)
    rhs = stats.e[0] + stats.q[0] - sum(stats.q[1:])
    return lhs, rhs


def from_branch_profile(b_rows: Sequence[Sequence[int]], s: int) -> LaurentPassport:
    """Rebuild the passport determined by its non-1 parts and the face part ``s``.

    The degree is forced: Σ_i p_i = (r-1)n with p_i = n - Σ_j b_{i,j} + q_i
    gives n = Σ_i Σ_j (b_{i,j} - 1). Each colored partition is completed with
    ones.

    Raises
    ------
    InvalidPassport
        If no valid passport has these non-1 parts and face part.
    """
    rows = [tuple(int(b) for b in row) for row in b_rows]
    if any(b < 2 for row in rows for b in row):
        raise ValueError('branch profile rows may only contain parts >= 2')

    n = sum(b - 1 for row in rows for b in row)
    colored = [row + (1,) * (n - sum(row)) if n >= sum(row) else row for row in rows]

    result = validate((colored, (s, n - s)))
    if isinstance(result, list):
        raise InvalidPassport(result)

    return result

from typing import Iterable, List, Sequence, Tuple

from laurentreal.passport.partition import Partition


class Perm:
    """Permutation of a set of ``n`` stars.

    Images are stored 0-based: ``perm[x]`` is the image of star ``x`` in
    ``0..n-1``. Text and JSON renderings are 1-based. Composition is
    left-to-right: ``a * b`` applies ``a`` first, then ``b``.

    Parameters
    ----------
    images : Sequence[int]
        0-based image array; must be a bijection of ``range(len(images))``.
    """

    __slots__ = ('_images',)

    def __init__(self, images: Iterable[int]):
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f'not a permutation: {images}')

        self._images = images

    @classmethod
    def unchecked(cls, images: Tuple[int, ...]) -> 'Perm':
        """Wrap an image tuple already known to be a bijection."""
        perm = cls.__new__(cls)
        perm._images = images
        return perm

    @classmethod
    def identity(cls, n: int) -> 'Perm':
        return cls.unchecked(tuple(range(n)))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]], one_based: bool = False) -> 'Perm':
        """Build a permutation from disjoint cycles; unlisted points are fixed."""
        images = list(range(n))
        seen = set()
        shift = 1 if one_based else 0
        for cycle in cycles:
            cycle = [int(x) - shift for x in cycle]
            for x in cycle:
                if x in seen or not 0 <= x < n:
                    raise ValueError(f'invalid or repeated point {x + shift} in cycles')
                seen.add(x)
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                images[a] = b
        return cls.unchecked(tuple(images))

    @classmethod
    def from_one_based(cls, images: Iterable[int]) -> 'Perm':
        return cls(int(x) - 1 for x in images)

    @property
    def n(self) -> int:
        return len(self._images)

    @property
    def images(self) -> Tuple[int, ...]:
        return self._images

    def one_based(self) -> List[int]:
        return [x + 1 for x in self._images]

    def __call__(self, x: int) -> int:
        return self._images[x]

    def __getitem__(self, x: int) -> int:
        return self._images[x]

    def __len__(self):
        return len(self._images)

    def __mul__(self, other: 'Perm') -> 'Perm':
        """Left-to-right product: apply ``self``, then ``other``."""
        if other.n != self.n:
            raise ValueError('cannot compose permutations of different degrees')
        o = other._images
        return Perm.unchecked(tuple(o[x] for x in self._images))

    def inverse(self) -> 'Perm':
        inv = [0] * len(self._images)
        for x, y in enumerate(self._images):
            inv[y] = x
        return Perm.unchecked(tuple(inv))

    def conjugate(self, c: 'Perm') -> 'Perm':
        """Return c⁻¹·self·c, i.e. the permutation mapping c(x) to c(self(x))."""
        images = [0] * len(self._images)
        cimg = c._images
        for x, y in enumerate(self._images):
            images[cimg[x]] = cimg[y]
        return Perm.unchecked(tuple(images))

    def is_identity(self) -> bool:
        return all(x == y for x, y in enumerate(self._images))

    def cycles(self, include_fixed: bool = True) -> List[Tuple[int, ...]]:
        """Disjoint cycles, each starting at its smallest point, ordered by that point."""
        seen = [False] * len(self._images)
        out = []
        for start in range(len(self._images)):
            if seen[start]:
                continue
            cycle = []
            x = start
            while not seen[x]:
                seen[x] = True
                cycle.append(x)
                x = self._images[x]
            if include_fixed or len(cycle) > 1:
                out.append(tuple(cycle))
        return out

    def cycle_of(self, x: int) -> Tuple[int, ...]:
        cycle = [x]
        y = self._images[x]
        while y != x:
            cycle.append(y)
            y = self._images[y]
        return tuple(cycle)

    def n_cycles(self) -> int:
        return len(self.cycles())

    def __eq__(self, other):
        if not isinstance(other, Perm):
            return NotImplemented
        return self._images == other._images

    def __lt__(self, other: 'Perm') -> bool:
        return self._images < other._images

    def __hash__(self):
        return hash(self._images)

    def __repr__(self):
        return f'Perm({self})'

    def __str__(self):
        cycles = self.cycles(include_fixed=False)
        if not cycles:
            return '()'
        return ''.join('(' + ' '.join(str(x + 1) for x in c) + ')' for c in cycles)


def cycle_type(p: Perm) -> Partition:
    """Multiset of cycle lengths of ``p``, fixed points included as 1s."""
    return Partition(len(c) for c in p.cycles())

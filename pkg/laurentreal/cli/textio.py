"""Text formats: the passport grammar, constellation JSON documents and DOT."""
import json
import re
from pathlib import Path
from typing import List, Tuple, Union

from laurentreal.constellation.constellation import ConstellationTuple
from laurentreal.constellation.graph import to_dot
from laurentreal.constellation.perm import Perm
from laurentreal.errors import AmbiguousFace, DocumentError, NoFace, PassportSyntaxError
from laurentreal.passport.laurent import LaurentPassport, RawPassport

_PARTITION = re.compile(r'^\d+(,\d+)*\*?$')


def parse_passport(text: str) -> RawPassport:
    """Parse ``partition (';' partition)+`` into raw passport data.

    A partition is a comma separated list of positive integers; whitespace is
    ignored. A trailing ``*`` marks the face. Without a marker the face is
    the only partition with two parts. When there are several and they are
    all equal, any of them gives the same passport and the last is taken;
    otherwise the last partition is taken if it has two parts and no other
    partition is equal to it.

    Raises
    ------
    PassportSyntaxError
        On malformed text or more than one ``*``.
    AmbiguousFace
        If the face cannot be told apart without a marker.
    NoFace
        If no partition can be the face.

    Examples
    --------
    >>> parse_passport('3,1;2,2*;3,1').face
    (2, 2)
    """
    compact = re.sub(r'\s+', '', text)
    chunks = compact.split(';')
    if len(chunks) < 2:
        raise PassportSyntaxError(f'expected at least two partitions separated by ";", got {text!r}')

    partitions: List[Tuple[int, ...]] = []
    marked = []
    for k, chunk in enumerate(chunks):
        if not _PARTITION.match(chunk):
            raise PassportSyntaxError(f'malformed partition {chunk!r} in {text!r}')
        if chunk.endswith('*'):
            marked.append(k)
            chunk = chunk[:-1]
        partitions.append(tuple(int(x) for x in chunk.split(',')))

    if len(marked) > 1:
        raise PassportSyntaxError(f'more than one face marker in {text!r}')

    if marked:
        face_at = marked[0]
    else:
        face_at = _default_face(partitions)

    colored = tuple(p for k, p in enumerate(partitions) if k != face_at)
    return RawPassport(colored, partitions[face_at])


def _default_face(partitions: List[Tuple[int, ...]]) -> int:
    candidates = [k for k, p in enumerate(partitions) if len(p) == 2]
    if not candidates:
        raise NoFace('no partition has exactly two parts; mark the face with "*"')
    if len({tuple(sorted(partitions[k])) for k in candidates}) == 1:
        return candidates[-1]

    last = len(partitions) - 1
    same_as_last = [k for k in candidates if sorted(partitions[k]) == sorted(partitions[last])]
    if candidates[-1] == last and same_as_last == [last]:
        return last

    raise AmbiguousFace(f'{len(candidates)} partitions have two parts; mark the face with "*"')


def format_passport(p: LaurentPassport) -> str:
    """Grammar accepted by :func:`parse_passport`, face last and marked."""
    return p.to_text()


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


class ConstellationDoc:
    """JSON document holding a constellation.

    ``{"n": n, "q": q, "convention": "left-to-right", "sigma": [...]}`` where
    ``sigma`` lists g_1..g_q as 1-based image arrays.
    """

    CONVENTION = 'left-to-right'

    def __init__(self, constellation: ConstellationTuple):
        self.constellation = constellation

    def to_dict(self) -> dict:
        c = self.constellation
        return {
            'n': c.n,
            'q': c.q,
            'convention': self.CONVENTION,
            'sigma': [g.one_based() for g in c.g],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + '\n'

    def dump(self, path: Union[str, Path]):
        Path(path).write_text(self.dumps(), encoding='utf-8')

    @classmethod
    def from_dict(cls, data) -> 'ConstellationDoc':
        if not isinstance(data, dict):
            raise DocumentError('a constellation document is a JSON object')

        missing = [key for key in ('n', 'q', 'convention', 'sigma') if key not in data]
        if missing:
            raise DocumentError(f'missing fields: {missing}')
        if data['convention'] != cls.CONVENTION:
            raise DocumentError(f'unsupported convention {data["convention"]!r}, expected {cls.CONVENTION!r}')

        n, q, sigma = data['n'], data['q'], data['sigma']
        if not (_is_int(n) and _is_int(q)):
            raise DocumentError(f'n and q must be integers, got n={n!r}, q={q!r}')
        if not isinstance(sigma, list) or len(sigma) != q:
            raise DocumentError(f'sigma must list q={q} permutations')

        perms = []
        for k, images in enumerate(sigma, start=1):
            if not isinstance(images, list) or len(images) != n:
                raise DocumentError(f'permutation {k} must have n={n} images')
            if not all(_is_int(x) for x in images):
                raise DocumentError(f'permutation {k} has non-integer images: {images}')
            try:
                perms.append(Perm.from_one_based(images))
            except (TypeError, ValueError) as exc:
                raise DocumentError(f'permutation {k}: {exc}') from exc

        try:
            return cls(ConstellationTuple(perms))
        except ValueError as exc:
            raise DocumentError(str(exc)) from exc

    @classmethod
    def loads(cls, text: str) -> 'ConstellationDoc':
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise DocumentError(f'not valid JSON: {exc}') from exc
        return cls.from_dict(data)

    @classmethod
    def load(cls, path: Union[str, Path]) -> 'ConstellationDoc':
        return cls.loads(Path(path).read_text(encoding='utf-8'))


def export(c: ConstellationTuple, fmt: str = 'dot') -> str:
    if fmt == 'dot':
        return to_dot(c)
    if fmt == 'json':
        return ConstellationDoc(c).dumps()
    raise ValueError(f'unknown export format {fmt!r}')

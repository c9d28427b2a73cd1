import logging
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from laurentreal.errors import InternalPlanError
from laurentreal.passport.partition import Partition

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Hub:
    """A colored vertex hanging off the skeleton cycle.

    The hub sits at a free tip of the star it hangs from; ``twigs`` are the
    further stars glued to it, so its valency is ``1 + len(twigs)``.
    """

    color: int
    twigs: Tuple['Twig', ...] = ()

    @property
    def valency(self) -> int:
        return 1 + len(self.twigs)

    @property
    def weight(self) -> int:
        return sum(twig.weight for twig in self.twigs)


@dataclass(frozen=True)
class Twig:
    """A star off the skeleton cycle, with hubs at some of its free tips."""

    hubs: Tuple[Hub, ...] = ()

    @property
    def weight(self) -> int:
        return 1 + sum(hub.weight for hub in self.hubs)


LEAF = Twig()


@dataclass(frozen=True)
class CycleNode:
    color: int
    valency: int


@dataclass(frozen=True)
class Branch:
    """A tree of stars glued at a corner of cycle node ``anchor``.

    ``interior`` selects the corner: between the node's incoming and outgoing
    cycle stars on the interior side, or the opposite one.
    """

    anchor: int
    twig: Twig
    interior: bool

    @property
    def weight(self) -> int:
        return self.twig.weight


@dataclass(frozen=True)
class Graft:
    """A hub placed at the free tip of color ``hub.color`` of cycle star ``star``."""

    star: int
    hub: Hub

    @property
    def weight(self) -> int:
        return self.hub.weight


@dataclass(frozen=True)
class SunflowerPlan:
    """Symbolic two-face constellation: a skeleton cycle with trees hanging off it.

    Cycle star ``k`` joins node ``k-1`` (its incoming color) to node ``k``
    (its outgoing color), indices modulo the cycle length. A cycle star lies
    in the interior face iff its incoming color is larger than its outgoing
    color. A branch lies in the face of its corner, a graft in the face of
    the tip it hangs from.

    Attributes
    ----------
    r : int
        Number of colors.
    cycle : tuple of CycleNode
    branches : tuple of Branch
    grafts : tuple of Graft
    s : int
        Intended interior face size.
    recipe : str
        Name of the construction that produced the plan.
    """

    r: int
    cycle: Tuple[CycleNode, ...]
    branches: Tuple[Branch, ...] = ()
    grafts: Tuple[Graft, ...] = ()
    s: int = 0
    recipe: str = ''

    @property
    def m(self) -> int:
        return len(self.cycle)

    @property
    def n(self) -> int:
        return self.m + sum(b.weight for b in self.branches) + sum(g.weight for g in self.grafts)

    def in_color(self, star: int) -> int:
        return self.cycle[(star - 1) % self.m].color

    def out_color(self, star: int) -> int:
        return self.cycle[star % self.m].color

    def star_is_interior(self, star: int) -> bool:
        return self.in_color(star) > self.out_color(star)

    def tip_is_interior(self, star: int, color: int) -> bool:
        """Whether the free tip of ``color`` at cycle star ``star`` faces the interior.

        It does iff ``color`` lies strictly between the incoming and the
        outgoing color, going counter-clockwise (upwards, modulo r).
        """
        a, b = self.in_color(star), self.out_color(star)
        return 0 < (color - a) % self.r < (b - a) % self.r

    def descents(self) -> int:
        return sum(1 for k in range(self.m) if self.star_is_interior(k))

    def interior_size(self) -> int:
        return (self.descents()
                + sum(b.weight for b in self.branches if b.interior)
                + sum(g.weight for g in self.grafts if self.tip_is_interior(g.star, g.hub.color)))

    def first_interior_star(self) -> int:
        return next(k for k in range(self.m) if self.star_is_interior(k))

    def hubs(self) -> List[Hub]:
        out = []
        stack = [b.twig for b in self.branches] + [Twig((g.hub,)) for g in self.grafts]
        while stack:
            twig = stack.pop()
            for hub in twig.hubs:
                out.append(hub)
                stack.extend(hub.twigs)
        return out

    def partitions(self) -> Tuple[Partition, ...]:
        """Per-color valency multisets, leaves included."""
        valencies: Dict[int, List[int]] = {c: [] for c in range(1, self.r + 1)}
        for node in self.cycle:
            valencies[node.color].append(node.valency)
        for hub in self.hubs():
            valencies[hub.color].append(hub.valency)

        n = self.n
        out = []
        for c in range(1, self.r + 1):
            leaves = n - sum(valencies[c])
            assert leaves >= 0, f'color {c} has more incidences than stars'
            out.append(Partition(valencies[c] + [1] * leaves))
        return tuple(out)

    def check(self):
        """Raise InternalPlanError unless the plan is well formed and its accounting gives ``s``."""
        problems = []
        if self.m < 2:
            problems.append('the cycle needs at least two nodes')
        for k in range(self.m):
            if self.in_color(k) == self.out_color(k):
                problems.append(f'cycle star {k} joins two nodes of color {self.out_color(k)}')
            if not 1 <= self.cycle[k].color <= self.r:
                problems.append(f'cycle node {k} has color {self.cycle[k].color}')

        hung = [0] * self.m
        for branch in self.branches:
            if not 0 <= branch.anchor < self.m:
                problems.append(f'branch anchored at missing node {branch.anchor}')
                continue
            hung[branch.anchor] += 1
            problems.extend(_twig_problems(branch.twig, self.cycle[branch.anchor].color, self.r))
        for k, node in enumerate(self.cycle):
            if node.valency != 2 + hung[k]:
                problems.append(f'cycle node {k} has valency {node.valency} but {hung[k]} branches')

        tips = set()
        for graft in self.grafts:
            key = (graft.star, graft.hub.color)
            if key in tips:
                problems.append(f'two grafts on tip {graft.hub.color} of star {graft.star}')
            tips.add(key)
            if graft.hub.color in (self.in_color(graft.star), self.out_color(graft.star)):
                problems.append(f'graft on star {graft.star} uses a cycle color')
            problems.extend(_hub_problems(graft.hub, self.r))

        if not problems and self.interior_size() != self.s:
            problems.append(f'interior accounting gives {self.interior_size()}, intended {self.s}')

        if problems:
            raise InternalPlanError(f'{self.recipe} plan: ' + '; '.join(problems))

    def describe(self) -> str:
        colors = ''.join(str(node.color) for node in self.cycle)
        interior = sum(b.weight for b in self.branches if b.interior)
        lines = [
            f'recipe: {self.recipe}',
            f'cycle colors: {colors} ({self.m} stars, {self.descents()} interior)',
            f'branches: {len(self.branches)} ({sum(1 for b in self.branches if b.interior)} interior, '
            f'interior weight {interior})',
            f'grafts: {len(self.grafts)}',
            f'interior face: {self.interior_size()} of n={self.n}',
        ]
        return '\n'.join(lines)


def _twig_problems(twig: Twig, parent_color: int, r: int) -> List[str]:
    colors = [hub.color for hub in twig.hubs]
    problems = []
    if parent_color in colors:
        problems.append(f'twig hung by color {parent_color} carries a hub of the same color')
    if len(set(colors)) != len(colors):
        problems.append(f'twig carries two hubs of one color: {colors}')
    for hub in twig.hubs:
        problems.extend(_hub_problems(hub, r))
    return problems


def _hub_problems(hub: Hub, r: int) -> List[str]:
    if not 1 <= hub.color <= r:
        return [f'hub of color {hub.color}']
    problems = []
    for twig in hub.twigs:
        problems.extend(_twig_problems(twig, hub.color, r))
    return problems


class _HubDraft:
    __slots__ = ('color', 'twigs')

    def __init__(self, color: int):
        self.color = color
        self.twigs: List['_TwigDraft'] = []

    def freeze(self) -> Hub:
        return Hub(self.color, tuple(twig.freeze() for twig in self.twigs))


class _TwigDraft:
    __slots__ = ('hubs',)

    def __init__(self, hubs: Sequence[_HubDraft] = ()):
        self.hubs = list(hubs)

    def freeze(self) -> Twig:
        if not self.hubs:
            return LEAF
        return Twig(tuple(hub.freeze() for hub in self.hubs))


class Sketch:
    """Mutable plan under construction.

    Recipes lay out a skeleton (cycle colors, chains of hubs, grafts) and
    then call :meth:`dress` to raise every skeleton vertex to its valency.

    Parameters
    ----------
    r : int
        Number of colors.
    colors : Sequence[int]
        Colors of the cycle nodes, in cycle order.
    """

    def __init__(self, r: int, colors: Sequence[int]):
        self.r = r
        self.colors = list(colors)
        self.hung: List[List[Tuple[_TwigDraft, bool]]] = [[] for _ in self.colors]
        self.grafts: List[Tuple[int, _HubDraft]] = []
        self.hub_drafts: List[_HubDraft] = []
        self.fixed: set = set()

    @property
    def m(self) -> int:
        return len(self.colors)

    def hub(self, color: int, dressed: bool = False) -> _HubDraft:
        """New hub; ``dressed`` hubs already have their final valency."""
        draft = _HubDraft(color)
        self.hub_drafts.append(draft)
        if dressed:
            self.fixed.add(id(draft))
        return draft

    def pendant(self, color: int, valency: int) -> _HubDraft:
        """Dressed hub carrying ``valency - 1`` single stars."""
        draft = self.hub(color, dressed=True)
        draft.twigs.extend(_TwigDraft() for _ in range(valency - 1))
        return draft

    @staticmethod
    def twig(*hubs: _HubDraft) -> _TwigDraft:
        return _TwigDraft(hubs)

    def chain(self, colors: Sequence[int]) -> _HubDraft:
        """Hubs of the given colors, each hanging from a twig of the previous one."""
        first = previous = self.hub(colors[0])
        for color in colors[1:]:
            draft = self.hub(color)
            previous.twigs.append(_TwigDraft([draft]))
            previous = draft
        return first

    def hang(self, node: int, twig: _TwigDraft, interior: bool = False):
        self.hung[node].append((twig, interior))

    def graft(self, star: int, hub: _HubDraft):
        self.grafts.append((star % self.m, hub))

    def cycle_valency(self, node: int) -> int:
        return 2 + len(self.hung[node])

    def dress(self,
              b_rows: Sequence[Sequence[int]],
              long_valencies: Sequence[int] = (),
              long_interior: Sequence[bool] = (),
              interior_leaves: int = 0):
        """Give every skeleton vertex its valency by gluing extra stars.

        Parameters
        ----------
        b_rows : Sequence[Sequence[int]]
            Per color (0-based), the valencies of the skeleton vertices that
            are not already dressed. Larger valencies go to vertices that
            already carry more stars.
        long_valencies : Sequence[int]
            Valencies of color-1 hubs to hang, each on its own new star, at
            vertices of other colors. Cycle nodes are used before hubs.
        long_interior : Sequence[bool]
            Per long hub, whether its star goes to the interior corner. Only
            possible on cycle nodes.
        interior_leaves : int
            Number of single new stars placed at interior corners of cycle
            nodes; every other new star goes exterior.
        """
        long_interior = list(long_interior) or [False] * len(long_valencies)
        assert len(long_interior) == len(long_valencies)

        cycle_slots: List[int] = []
        hub_slots: List[_HubDraft] = []

        for c in range(1, self.r + 1):
            vertices = [('cycle', k, self.cycle_valency(k)) for k in range(self.m) if self.colors[k] == c]
            vertices += [('hub', draft, 1 + len(draft.twigs)) for draft in self.hub_drafts
                         if draft.color == c and id(draft) not in self.fixed]
            values = sorted(b_rows[c - 1], reverse=True)
            if len(values) != len(vertices):
                raise InternalPlanError(f'color {c}: {len(vertices)} skeleton vertices, {len(values)} valencies')

            order = sorted(range(len(vertices)), key=lambda i: -vertices[i][2])
            for i, value in zip(order, values):
                kind, where, current = vertices[i]
                if value < current:
                    raise InternalPlanError(f'color {c}: valency {value} below skeleton valency {current}')
                if kind == 'cycle':
                    cycle_slots.extend([where] * (value - current))
                else:
                    hub_slots.extend([where] * (value - current))

        long_sites = [('cycle', k) for k in cycle_slots if self.colors[k] != 1]
        long_sites += [('hub', d) for d in hub_slots if d.color != 1]
        if len(long_sites) < len(long_valencies):
            raise InternalPlanError(f'{len(long_valencies)} long branches but {len(long_sites)} sites')

        used_cycle = []
        used_hubs = []
        for (kind, where), value, interior in zip(long_sites, long_valencies, long_interior):
            twig = _TwigDraft([self.pendant(1, value)])
            if kind == 'cycle':
                self.hang(where, twig, interior)
                used_cycle.append(where)
            else:
                if interior:
                    raise InternalPlanError('an off-cycle branch cannot be moved to the interior')
                where.twigs.append(twig)
                used_hubs.append(where)

        for k in used_cycle:
            cycle_slots.remove(k)
        for draft in used_hubs:
            hub_slots.remove(draft)

        if interior_leaves > len(cycle_slots):
            raise InternalPlanError(f'{interior_leaves} interior leaves but {len(cycle_slots)} cycle slots')

        for i, k in enumerate(cycle_slots):
            self.hang(k, _TwigDraft(), i < interior_leaves)
        for draft in hub_slots:
            draft.twigs.append(_TwigDraft())

        for draft in self.hub_drafts:
            self.fixed.add(id(draft))

    def leaf_slots(self, b_rows: Sequence[Sequence[int]], n_long: int) -> int:
        """Number of single stars :meth:`dress` will place at cycle nodes.

        Assumes every skeleton vertex sits on the cycle.
        """
        total = 0
        for c in range(1, self.r + 1):
            current = sum(self.cycle_valency(k) for k in range(self.m) if self.colors[k] == c)
            total += sum(b_rows[c - 1]) - current
        return total - n_long

    def freeze(self, s: int, recipe: str) -> SunflowerPlan:
        cycle = tuple(CycleNode(color, self.cycle_valency(k)) for k, color in enumerate(self.colors))
        branches = tuple(Branch(k, twig.freeze(), interior)
                         for k in range(self.m)
                         for twig, interior in self.hung[k])
        grafts = tuple(Graft(star, hub.freeze()) for star, hub in self.grafts)

        plan = SunflowerPlan(r=self.r, cycle=cycle, branches=branches, grafts=grafts, s=s, recipe=recipe)
        plan.check()
        logger.debug('plan %s: n=%d, interior %d = %d cycle + %d hung', recipe, plan.n, plan.s,
                     plan.descents(), plan.s - plan.descents())
        return plan


def skeleton_rows(b: Sequence[Sequence[int]], ones_on_skeleton: int) -> List[List[int]]:
    """Valencies for :meth:`Sketch.dress` when ``ones_on_skeleton`` 1-vertices are on the skeleton.

    Those take the largest 1-valencies; the smaller ones are left for long branches.
    """
    rows = [list(row) for row in b]
    rows[0] = rows[0][len(rows[0]) - ones_on_skeleton:]
    return rows

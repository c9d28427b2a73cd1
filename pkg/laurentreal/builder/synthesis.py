import logging
from typing import Dict, List

from laurentreal.builder.plan import SunflowerPlan, Twig
from laurentreal.constellation.constellation import ConstellationTuple, from_rotations, is_transitive, euler_count
from laurentreal.constellation.perm import Perm, cycle_type
from laurentreal.errors import PlanInconsistent

logger = logging.getLogger(__name__)


class _StarAllocator:
    """Numbers the stars of hung trees and records the rotation of every hub."""

    def __init__(self, first: int, r: int):
        self.next_star = first
        self.cycles: Dict[int, List[List[int]]] = {c: [] for c in range(1, r + 1)}

    def twig(self, twig: Twig) -> int:
        star = self.next_star
        self.next_star += 1
        stack = [(twig, star)]
        while stack:
            current, at = stack.pop()
            for hub in current.hubs:
                stack.extend(self._hub(hub, at))
        return star

    def hub(self, hub, at: int):
        stack = self._hub(hub, at)
        while stack:
            current, star = stack.pop()
            for child in current.hubs:
                stack.extend(self._hub(child, star))

    def _hub(self, hub, at: int):
        children = []
        for twig in hub.twigs:
            children.append((twig, self.next_star))
            self.next_star += 1
        self.cycles[hub.color].append([at] + [star for _, star in children])
        return children


def synthesize(plan: SunflowerPlan) -> ConstellationTuple:
    """Turn a plan into permutations g_1..g_q on its n stars.

    Cycle stars are numbered 0..m-1, star ``k`` running from node ``k-1`` to
    node ``k``. A cycle node lists its incoming star, then the stars of its
    interior branches, then its outgoing star, then those of its exterior
    branches. A hub lists the star it hangs from first, then its twigs.

    Raises
    ------
    PlanInconsistent
        If the result is not a planar, transitive tuple with the plan's cycle
        types and an interior face of size ``plan.s``.
    """
    m, n = plan.m, plan.n
    allocator = _StarAllocator(m, plan.r)

    for k, node in enumerate(plan.cycle):
        interior = [allocator.twig(b.twig) for b in plan.branches if b.anchor == k and b.interior]
        exterior = [allocator.twig(b.twig) for b in plan.branches if b.anchor == k and not b.interior]
        allocator.cycles[node.color].append([k] + interior + [(k + 1) % m] + exterior)

    for graft in plan.grafts:
        allocator.hub(graft.hub, graft.star)

    if allocator.next_star != n:
        raise PlanInconsistent(f'{plan.recipe}: allocated {allocator.next_star} stars, plan has {n}')

    rotations = [Perm.from_cycles(n, allocator.cycles[c]) for c in range(1, plan.r + 1)]
    c = from_rotations(n, rotations)
    _check(plan, c)

    logger.debug('synthesized %s: n=%d, face %s', plan.recipe, n, cycle_type(c.face))
    return c


def _check(plan: SunflowerPlan, c: ConstellationTuple):
    if not is_transitive(c):
        raise PlanInconsistent(f'{plan.recipe}: synthesized tuple is not transitive')

    chi = euler_count(c)
    if chi != 2:
        raise PlanInconsistent(f'{plan.recipe}: synthesized tuple has Euler count {chi}, expected 2')

    expected = plan.partitions()
    actual = tuple(cycle_type(g) for g in c.rotations)
    if actual != expected:
        raise PlanInconsistent(f'{plan.recipe}: cycle types {[str(x) for x in actual]}, '
                               f'plan says {[str(x) for x in expected]}')

    interior = len(c.face.cycle_of(plan.first_interior_star()))
    if interior != plan.s:
        raise PlanInconsistent(f'{plan.recipe}: interior face has {interior} stars, plan says {plan.s}')

"""Plans for Laurent passports with two colored partitions (q = 3).

Here every star is an edge of a bicolored plane graph, so the skeleton cycle
alternates 1- and 2-vertices and exactly half of its edges face the
interior. Nothing can be grafted on a star, everything off the cycle hangs
from a cycle vertex.
"""
import logging

from laurentreal.builder.plan import Sketch, SunflowerPlan, skeleton_rows
from laurentreal.builder.subset_sum import solve_bounded_sum
from laurentreal.decision.families import matching_families
from laurentreal.errors import InternalPlanError, NoSolution, NotRealizable
from laurentreal.passport.laurent import LaurentPassport, derived

logger = logging.getLogger(__name__)


def _alternating(first: int, length: int):
    return [first if k % 2 == 0 else 3 - first for k in range(length)]


def _plan_chain(p: LaurentPassport) -> SunflowerPlan:
    # s < q_2: a cycle of s edge pairs and the other q_2 - s pairs of
    # non-trivial vertices as one exterior path
    stats = derived(p)
    q, b = stats.q, stats.b
    s = p.s

    sketch = Sketch(2, _alternating(1, 2 * s))
    anchor = 0 if b[0][-1] >= 3 else 1
    path = sketch.chain(_alternating(2 - anchor, 2 * (q[1] - s)))
    sketch.hang(anchor, sketch.twig(path))

    sketch.dress(skeleton_rows(b, q[1]), long_valencies=b[0][:q[0] - q[1]])
    return sketch.freeze(s, 'cycle+path')


def _plan_subset(p: LaurentPassport) -> SunflowerPlan:
    stats = derived(p)
    q, b = stats.q, stats.b
    s = p.s
    l = q[0] - q[1]

    sketch = Sketch(2, _alternating(1, 2 * q[1]))
    rows = skeleton_rows(b, q[1])
    long_valencies = list(b[0][:l])
    t = sketch.leaf_slots(rows, l)

    try:
        x, y = solve_bounded_sum(long_valencies, t, s - q[1])
    except NoSolution as exc:
        raise InternalPlanError(f'cycle+subset-shift: {s - q[1]} not reachable ({exc.reason})') from exc

    logger.debug('cycle+subset-shift: base %d, long %s -> %s, %d interior leaves', q[1], long_valencies, x, y)
    sketch.dress(rows, long_valencies=long_valencies, long_interior=[bool(v) for v in x], interior_leaves=y)
    return sketch.freeze(s, 'cycle+subset-shift')


def _plan_off_cycle(p: LaurentPassport) -> SunflowerPlan:
    """Π_1 all 2s with the wrong parity: the smallest 2-vertex leaves the cycle.

    It hangs, through a 1-vertex of valency 2, from the largest 2-vertex of
    a cycle of q_2 - 1 edge pairs. Every other 1-vertex is a pendant of
    weight 2, the detached 2-vertex with its pendants weighs 2·b_{2,1}.
    """
    stats = derived(p)
    q, b = stats.q, stats.b
    s = p.s
    smallest = b[1][0]

    sketch = Sketch(2, _alternating(1, 2 * (q[1] - 1)))
    detached = sketch.hub(2)
    connector = sketch.hub(1, dressed=True)
    connector.twigs.append(sketch.twig(detached))

    # cycle pendant sites: every 2-slot on the cycle but the connector's
    pendant_sites = sum(value - 2 for value in b[1][1:]) - 1
    try:
        (x,), y = solve_bounded_sum([smallest], pendant_sites, (s - q[1] + 1) // 2)
    except NoSolution as exc:
        raise InternalPlanError(f'cycle+off-cycle-vertex: s={s} not reachable ({exc.reason})') from exc

    sketch.hang(1, sketch.twig(connector), interior=bool(x))

    rows = [list(b[0][:q[1] - 1]), list(b[1])]
    long_valencies = [2] * (q[0] - q[1])
    logger.debug('cycle+off-cycle-vertex: base %d, detached weight %d interior=%s, %d interior pendants',
                 q[1] - 1, 2 * smallest, bool(x), y)
    sketch.dress(rows, long_valencies=long_valencies,
                 long_interior=[k < y for k in range(len(long_valencies))])
    return sketch.freeze(s, 'cycle+off-cycle-vertex')


def plan_r2(p: LaurentPassport) -> SunflowerPlan:
    """Plan a witness for a canonical, non-exceptional passport with r = 2.

    * s < q_2: a cycle of s edge pairs with the remaining non-trivial
      vertices on an exterior path hung from a vertex of valency at least 3.
    * s >= q_2, and s ≡ q_2 mod 2 whenever Π_1 is all 2s: all non-trivial
      2-vertices and the q_2 largest 1-vertices on the cycle, the others as
      pendants; pendants and single edges are moved inside by a bounded
      subset sum.
    * Π_1 all 2s and s ≢ q_2 mod 2: the smallest 2-vertex is taken off the
      cycle, which lowers the base by one.

    Raises
    ------
    NotRealizable
        If ``p`` belongs to an exceptional family.
    InternalPlanError
        If no recipe reaches s.
    """
    assert p.r == 2, 'plan_r2 needs exactly two colored partitions'

    families = matching_families(p)
    if families:
        raise NotRealizable(families)

    q2 = derived(p).q[1]
    if p.s < q2:
        return _plan_chain(p)
    if p.colored[0].is_all_twos and (p.s - q2) % 2 == 1 and q2 >= 2:
        return _plan_off_cycle(p)
    return _plan_subset(p)

"""Plans for Laurent passports with three or more colored partitions.

Colors are canonical (q_1 >= q_2 >= ... >= q_r) and Q = q_2 + ... + q_r.
The skeleton cycle is made of blocks: a 1-vertex followed by vertices of
increasing higher colors. A block read in increasing order contributes one
interior cycle star (the step back down to the next 1-vertex); reversing the
last j colors of a block raises that to j + 1 interior stars.
"""
import logging
from typing import List, Sequence

from laurentreal.builder.plan import Sketch, SunflowerPlan, skeleton_rows
from laurentreal.builder.subset_sum import solve_bounded_sum
from laurentreal.errors import InternalPlanError, NoSolution
from laurentreal.passport.laurent import LaurentPassport, derived

logger = logging.getLogger(__name__)


def block_runs(q: Sequence[int], blocks: int) -> List[List[int]]:
    """Split the higher-color vertices into ``blocks`` increasing runs.

    Start from q_2 runs, run k holding every color c >= 2 with q_c >= k, and
    break runs before their third, fourth, ... color until there are
    ``blocks`` of them.

    Parameters
    ----------
    q : Sequence[int]
        Canonical counts q_1..q_r (0-based).
    blocks : int
        Number of runs wanted, q_2 <= blocks <= Q.

    Returns
    -------
    list of list of int
        The higher colors of each run, increasing. Each run is preceded by a
        1-vertex on the cycle.
    """
    r = len(q)
    extra = blocks - q[1]
    assert 0 <= extra <= sum(q[1:]) - q[1], 'block count out of range'

    runs = []
    for k in range(1, q[1] + 1):
        colors = [c for c in range(2, r + 1) if q[c - 1] >= k]
        run = [colors[0]]
        for c in colors[1:]:
            if extra > 0:
                runs.append(run)
                run = [c]
                extra -= 1
            else:
                run.append(c)
        runs.append(run)

    return runs


def cycle_colors(runs: Sequence[Sequence[int]], interior: int) -> List[int]:
    """Cycle colors with exactly ``interior`` interior stars.

    Needs len(runs) <= interior <= total length of the runs.
    """
    extra = interior - len(runs)
    assert 0 <= extra <= sum(len(run) - 1 for run in runs)

    colors = []
    for run in runs:
        flipped = 1 + min(extra, len(run) - 1)
        extra -= flipped - 1
        keep = list(run[:len(run) - flipped])
        colors += [1] + keep + list(reversed(run[len(run) - flipped:]))

    return colors


def _plan_low(p: LaurentPassport) -> SunflowerPlan:
    stats = derived(p)
    q, b = stats.q, stats.b
    big_q = sum(q[1:])
    ones = min(q[0], big_q)
    s = p.s
    assert q[1] <= ones and s <= big_q, 'cycle has too few 1-vertices for the blocks'

    runs = block_runs(q, ones)
    if s >= ones:
        sketch = Sketch(p.r, cycle_colors(runs, s))
        recipe = 'blocks'
    else:
        sketch = _tail_chain(p.r, runs, s)
        recipe = 'blocks+tail-chain'

    long_valencies = b[0][:q[0] - ones]
    sketch.dress(skeleton_rows(b, ones), long_valencies=long_valencies)
    return sketch.freeze(s, recipe)


def _tail_chain(r: int, runs: List[List[int]], s: int) -> Sketch:
    """Keep ``s`` runs on the cycle and hang the others as one exterior chain.

    The chain hangs from an exterior free tip of a kept run: the 1-tip of the
    star between its first two higher colors when some run has two of them,
    otherwise the 2-tip of the star leaving a run [1, c] with c >= 3.
    """
    long_run = next((i for i, run in enumerate(runs) if len(run) >= 2), None)

    if long_run is not None:
        ordered = [runs[long_run]] + runs[:long_run] + runs[long_run + 1:]
        kept, removed = ordered[:s], ordered[s:]
        chain = [c for run in removed for c in [1] + run]
        star, tip = 2, 1
    else:
        first = next(i for i, run in enumerate(runs) if run[0] >= 3)
        rest = runs[:first] + runs[first + 1:]
        ordered = [runs[first]] + [run for run in rest if run[0] >= 3] + [run for run in rest if run[0] == 2]
        kept, removed = ordered[:s], ordered[s:]
        # the last removed run is a [1, 2] run; it leads the chain so the chain starts with color 2
        removed = [removed[-1]] + removed[:-1]
        chain = [c for run in removed for c in list(reversed(run)) + [1]]
        star, tip = 2, 2

    assert chain[0] == tip
    sketch = Sketch(r, cycle_colors(kept, s))
    sketch.graft(star, sketch.chain(chain))
    return sketch


def _plan_high(p: LaurentPassport) -> SunflowerPlan:
    stats = derived(p)
    q, b = stats.q, stats.b
    big_q = sum(q[1:])
    ones = min(q[0], big_q)
    s, n = p.s, p.n

    runs = block_runs(q, ones)
    n_long = q[0] - ones
    long_valencies = list(b[0][:n_long])
    parity_swap = set(b[0]) == {2} and n_long > 0 and (s - big_q) % 2 == 1

    rows = skeleton_rows(b, ones)
    if parity_swap:
        sketch = _merged_blocks(p.r, runs)
        rows[0] = rows[0][1:]
        base = big_q + 1
        recipe = 'blocks+shift+parity-swap'
    else:
        sketch = Sketch(p.r, cycle_colors(runs, big_q))
        base = big_q
        recipe = 'blocks+shift' if n_long == 0 else 'blocks+subset-shift'

    t = sketch.leaf_slots(rows, n_long)
    assert sketch.m + t + sum(long_valencies) + base - big_q == n, 'stars left over after dressing'
    assert base <= s <= base + t + sum(long_valencies), 'interior target outside the reachable range'

    try:
        x, y = solve_bounded_sum(long_valencies, t, s - base)
    except NoSolution as exc:
        raise InternalPlanError(f'{recipe}: interior target {s - base} not reachable ({exc.reason})') from exc

    logger.debug('%s: base %d, long %s -> %s, %d interior leaves', recipe, base, long_valencies, x, y)
    sketch.dress(rows, long_valencies=long_valencies, long_interior=[bool(v) for v in x], interior_leaves=y)
    return sketch.freeze(s, recipe)


def _merged_blocks(r: int, runs: List[List[int]]) -> Sketch:
    """Single-color runs with two neighbours [1, a][1, b], a > b, merged into [1, a, b].

    The freed 1-vertex, of valency 2, is grafted on the interior 1-tip of the
    star from a to b, so the interior face gains one star.
    """
    colors = [run[0] for run in runs]
    assert all(len(run) == 1 for run in runs)
    i = next(k for k in range(len(colors)) if colors[k] > colors[(k + 1) % len(colors)])
    rotated = colors[i:] + colors[:i]

    cycle = [1, rotated[0], rotated[1]]
    for c in rotated[2:]:
        cycle += [1, c]

    sketch = Sketch(r, cycle)
    sketch.graft(2, sketch.pendant(1, 2))
    return sketch


def plan_r_gt2(p: LaurentPassport) -> SunflowerPlan:
    """Plan a witness for a canonical Laurent passport with r > 2.

    With Q = q_2 + ... + q_r:

    * s <= Q: the block cycle, with run tails reversed to reach s interior
      stars, or with surplus runs moved into an exterior chain when s is
      smaller than the number of 1-vertices on the cycle; every other star
      is exterior.
    * s > Q: the block cycle with Q interior stars, then whole branches
      moved to the interior. Long branches (1-vertices that do not fit on
      the cycle) are chosen by a bounded subset sum. When every non-1 part of Π_1 is 2 and
      the parity is wrong, two blocks are merged first, which adds one
      interior star.
    """
    assert p.r > 2, 'plan_r_gt2 needs at least three colored partitions'

    if p.s <= sum(derived(p).q[1:]):
        return _plan_low(p)
    return _plan_high(p)

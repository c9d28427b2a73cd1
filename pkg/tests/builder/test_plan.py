import pytest

from laurentreal.builder.bicolored import plan_r2
from laurentreal.builder.build import plan
from laurentreal.builder.high_rank import block_runs, cycle_colors, plan_r_gt2
from laurentreal.builder.plan import Sketch, skeleton_rows
from laurentreal.builder.synthesis import synthesize
from laurentreal.constellation.constellation import verify_against
from laurentreal.decision.families import family_instances
from laurentreal.errors import InternalPlanError, NotRealizable
from laurentreal.passport.laurent import LaurentPassport, canonicalize


@pytest.fixture(params=[
    ([(2, 1), (2, 1), (2, 1)], (2, 1), 'blocks'),
    ([(3, 1), (2, 1, 1), (2, 1, 1)], (2, 2), 'blocks'),
    ([(2, 2), (2, 1, 1), (2, 1, 1)], (1, 3), 'blocks+tail-chain'),
    ([(3, 1, 1, 1)] * 3, (3, 3), 'blocks+shift'),
    ([(2, 2, 2), (3, 1, 1, 1), (2, 1, 1, 1, 1)], (3, 3), 'blocks+shift+parity-swap'),
    ([(2, 2), (3, 1)], (3, 1), 'cycle+subset-shift'),
    ([(3, 1), (3, 1)], (3, 1), 'cycle+subset-shift'),
    ([(2, 2), (2, 2)], (2, 2), 'cycle+subset-shift'),
    ([(3, 3), (2, 2, 1, 1)], (1, 5), 'cycle+path'),
    ([(2, 2, 2, 2), (4, 2, 1, 1)], (3, 5), 'cycle+off-cycle-vertex'),
])
def case(request):
    colored, face, recipe = request.param
    return canonicalize(LaurentPassport(colored, face))[0], recipe


def test_plan_recipe(case):
    p, recipe = case
    witness_plan = plan(p)

    assert witness_plan.recipe == recipe
    assert witness_plan.n == p.n
    assert witness_plan.s == p.s


def test_plan_accounting(case):
    p, _ = case
    witness_plan = plan(p)

    assert witness_plan.partitions() == p.colored
    assert witness_plan.interior_size() == p.s
    assert 'interior face' in witness_plan.describe()


def test_synthesis_verifies(case):
    p, _ = case
    c = synthesize(plan(p))

    assert c.n == p.n
    assert verify_against(c, p)


def test_plan_needs_canonical_order():
    with pytest.raises(ValueError):
        plan(LaurentPassport([(1, 3), (2, 2)], (3, 1)))


def test_off_cycle_vertex_layout():
    p = canonicalize(LaurentPassport([(2, 2, 2, 2), (4, 2, 1, 1)], (3, 5)))[0]
    witness_plan = plan(p)

    assert [node.color for node in witness_plan.cycle] == [1, 2]
    assert witness_plan.descents() == 1
    assert sorted(b.weight for b in witness_plan.branches) == [2, 4]


def test_block_runs_split():
    assert block_runs((1, 1, 1), 1) == [[2, 3]]
    assert block_runs((1, 1, 1), 2) == [[2], [3]]
    assert block_runs((3, 2, 1, 1), 3) == [[2], [3, 4], [2]]
    assert block_runs((3, 2, 1, 1), 4) == [[2], [3], [4], [2]]


def test_cycle_colors_reverse_tails():
    runs = [[2, 3]]

    assert cycle_colors(runs, 1) == [1, 2, 3]
    assert cycle_colors(runs, 2) == [1, 3, 2]


def test_sketch_rejects_bad_cycle():
    sketch = Sketch(2, [1, 1])

    with pytest.raises(InternalPlanError):
        sketch.freeze(0, 'broken')


def test_skeleton_rows_keep_largest_ones():
    assert skeleton_rows([(2, 3, 5), (4,)], 2) == [[3, 5], [4]]


def test_two_colors_refuse_exceptional():
    for p in family_instances(10):
        with pytest.raises(NotRealizable):
            plan_r2(canonicalize(p)[0])


def test_two_colors_refusal_names_families():
    with pytest.raises(NotRealizable) as info:
        plan_r2(canonicalize(LaurentPassport([(2, 2, 2), (1, 2, 3)], (3, 3)))[0])

    assert info.value.families == (3, 6)


def test_blocks_need_enough_one_vertices():
    # colors out of canonical order: q_2 = 2 blocks but a single 1-vertex
    with pytest.raises(AssertionError):
        plan_r_gt2(LaurentPassport([(1, 1, 2), (2, 2), (1, 1, 2)], (1, 3)))

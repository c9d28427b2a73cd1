from .subset_sum import criterion_holds, solve_bounded_sum
from .plan import Hub, Twig, LEAF, CycleNode, Branch, Graft, SunflowerPlan, Sketch, skeleton_rows
from .high_rank import plan_r_gt2
from .bicolored import plan_r2
from .synthesis import synthesize
from .build import plan, build

__all__ = [
    "criterion_holds",
    "solve_bounded_sum",
    "Hub",
    "Twig",
    "LEAF",
    "CycleNode",
    "Branch",
    "Graft",
    "SunflowerPlan",
    "Sketch",
    "skeleton_rows",
    "plan_r_gt2",
    "plan_r2",
    "synthesize",
    "plan",
    "build",
]

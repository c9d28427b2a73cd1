import logging
from typing import Union

from laurentreal.builder.bicolored import plan_r2
from laurentreal.builder.high_rank import plan_r_gt2
from laurentreal.builder.plan import SunflowerPlan
from laurentreal.builder.synthesis import synthesize
from laurentreal.constellation.constellation import ConstellationTuple, reorder, verify_against
from laurentreal.decision.classify import classify
from laurentreal.errors import InvalidPassport, NotRealizable, PlanInconsistent
from laurentreal.passport.laurent import LaurentPassport, RawPassport, canonicalize, is_canonical, validate

logger = logging.getLogger(__name__)


def plan(p: LaurentPassport) -> SunflowerPlan:
    """Plan a witness for a canonical, realizable passport."""
    if not is_canonical(p):
        raise ValueError(f'plan needs a canonical passport, got {p}')

    if p.r > 2:
        return plan_r_gt2(p)
    return plan_r2(p)


def _as_passport(p: Union[LaurentPassport, RawPassport, tuple]) -> LaurentPassport:
    if isinstance(p, LaurentPassport):
        return p
    checked = validate(p)
    if isinstance(checked, list):
        raise InvalidPassport(checked)
    return checked


def build(p: Union[LaurentPassport, RawPassport, tuple]) -> ConstellationTuple:
    """Construct a planar constellation realizing ``p``.

    The passport is validated and classified, its colors are sorted into
    canonical order, a plan is synthesized into permutations, and the
    rotations are braided back into the input color order. The result is
    checked with :func:`verify_against` before it is returned.

    Raises
    ------
    InvalidPassport
        If ``p`` is not a valid Laurent passport.
    NotRealizable
        If ``p`` belongs to an exceptional family.
    PlanInconsistent
        If the construction fails its own verification.
    """
    p = _as_passport(p)

    verdict = classify(p)
    if verdict.is_exceptional:
        raise NotRealizable(verdict.families)

    canonical, relabeling = canonicalize(p)
    witness_plan = plan(canonical)
    logger.info('building %s with recipe %s', p, witness_plan.recipe)

    c = synthesize(witness_plan)
    if not relabeling.is_identity:
        # canonical position k holds input color relabeling.order[k]
        c = reorder(c, relabeling.to_input_order(range(p.r)))

    report = verify_against(c, p)
    if not report:
        raise PlanInconsistent(f'witness for {p} failed verification: {", ".join(report.failures)}')

    return c

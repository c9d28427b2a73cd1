import logging
from typing import Iterable, Optional

import pandas as pd
from tqdm import tqdm

from laurentreal.builder.build import build, plan
from laurentreal.decision.classify import classify
from laurentreal.decision.families import family_instances, matching_families
from laurentreal.errors import LaurentError
from laurentreal.oracle.search import OracleResult, SearchBudget, oracle_decide
from laurentreal.passport.enumerate import enumerate_passports
from laurentreal.passport.laurent import canonicalize

logger = logging.getLogger(__name__)

SWEEP_COLUMNS = ['passport', 'n', 'q', 's', 'verdict', 'families', 'oracle', 'oracle_nodes', 'build', 'recipe',
                 'agree']


def _build_outcome(p):
    try:
        build(p)
    except LaurentError as exc:
        return exc.__class__.__name__
    return 'ok'


def sweep(degrees: Iterable[int],
          q: int,
          budget: Optional[SearchBudget] = None,
          use_oracle: bool = True,
          progress: bool = False) -> pd.DataFrame:
    """Cross-check classify, the oracle and build on every Laurent passport.

    One row per passport of each degree in ``degrees`` with ``q`` branch
    points. ``agree`` is False when the oracle (if run and not out of budget)
    contradicts the verdict, or when build does not succeed exactly on the
    realizable passports.

    Parameters
    ----------
    degrees : Iterable[int]
    q : int
    budget : SearchBudget, optional
        Budget of each oracle call.
    use_oracle : bool
        Skip the oracle to check classify against build only.
    progress : bool
        Show a tqdm progress bar.
    """
    passports = [p for n in degrees for p in enumerate_passports(n, q)]
    rows = []
    for p in tqdm(passports, disable=not progress):
        verdict = classify(p)
        realizable = verdict.is_realizable

        oracle_tag, nodes = None, None
        if use_oracle:
            result = oracle_decide(p, budget)
            oracle_tag, nodes = result.tag, result.nodes

        outcome = _build_outcome(p)
        recipe = plan(canonicalize(p)[0]).recipe if realizable and outcome == 'ok' else None

        agree = (outcome == 'ok') == realizable
        if oracle_tag is not None and oracle_tag != OracleResult.BUDGET_EXCEEDED:
            agree = agree and (oracle_tag == OracleResult.REALIZABLE) == realizable

        if not agree:
            logger.warning('disagreement on %s: verdict %s, oracle %s, build %s',
                           p, verdict.summary(), oracle_tag, outcome)

        rows.append({
            'passport': p.to_text(),
            'n': p.n,
            'q': p.q,
            's': p.s,
            'verdict': verdict.tag,
            'families': ' '.join(str(k) for k in verdict.families),
            'oracle': oracle_tag,
            'oracle_nodes': nodes,
            'build': outcome,
            'recipe': recipe,
            'agree': agree,
        })

    return pd.DataFrame(rows, columns=SWEEP_COLUMNS)


def family_table(max_n: int) -> pd.DataFrame:
    """Every exceptional passport up to degree ``max_n`` with all the families it belongs to."""
    rows = [{'passport': p.to_text(), 'n': p.n, 's': p.s,
             'families': ' '.join(str(k) for k in matching_families(canonicalize(p)[0]))}
            for p in family_instances(max_n)]
    return pd.DataFrame(rows, columns=['passport', 'n', 's', 'families'])

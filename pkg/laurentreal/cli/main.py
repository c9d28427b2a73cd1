"""Command-line interface of laurentreal.

Every subcommand returns one of the :class:`ExitCode` values so that shell
loops can tally outcomes without parsing the output.
"""
import argparse
import logging
import sys
from enum import IntEnum
from pathlib import Path
from typing import List, Optional

from laurentreal import __version__
from laurentreal.builder.build import build, plan
from laurentreal.cli.experiments import family_table, sweep
from laurentreal.cli.textio import ConstellationDoc, export, parse_passport
from laurentreal.constellation.constellation import verify_against
from laurentreal.decision.classify import classify
from laurentreal.errors import (BudgetExceeded,
                                DegreeMismatch,
                                DocumentError,
                                InternalPlanError,
                                InvalidPassport,
                                NotRealizable,
                                PassportSyntaxError,
                                PlanInconsistent,
                                QMismatch)
from laurentreal.oracle.search import OracleResult, SearchBudget, oracle_decide
from laurentreal.passport.enumerate import enumerate_passports
from laurentreal.passport.laurent import LaurentPassport, canonicalize, validate

logger = logging.getLogger(__name__)


class ExitCode(IntEnum):
    OK = 0
    USAGE = 1
    INVALID = 2
    NOT_REALIZABLE = 3
    BUDGET_EXCEEDED = 4
    VERIFICATION_FAILED = 5


def _passport(text: str) -> LaurentPassport:
    p = validate(parse_passport(text))
    if isinstance(p, list):
        raise InvalidPassport(p)
    return p


def _write(text: str, output: Optional[str]):
    if output:
        Path(output).write_text(text, encoding='utf-8')
    else:
        sys.stdout.write(text)


def cmd_check(args) -> int:
    verdict = classify(parse_passport(args.passport))
    print(verdict.summary())
    if verdict.is_realizable:
        return ExitCode.OK
    if verdict.is_exceptional:
        return ExitCode.NOT_REALIZABLE
    return ExitCode.INVALID


def cmd_build(args) -> int:
    p = _passport(args.passport)
    c = build(p)

    if args.show_plan:
        witness_plan = plan(canonicalize(p)[0])
        print(witness_plan.describe(), file=sys.stderr)

    _write(ConstellationDoc(c).dumps(), args.output)
    return ExitCode.OK


def cmd_verify(args) -> int:
    doc = ConstellationDoc.load(args.document)
    p = _passport(args.passport)

    try:
        report = verify_against(doc.constellation, p)
    except (DegreeMismatch, QMismatch) as exc:
        print(f'FAIL {exc}')
        return ExitCode.VERIFICATION_FAILED

    if report:
        print('PASS')
        return ExitCode.OK

    print('FAIL ' + ', '.join(report.failures))
    for detail in report.details:
        print(f'  {detail}')
    return ExitCode.VERIFICATION_FAILED


def cmd_oracle(args) -> int:
    p = _passport(args.passport)
    result = oracle_decide(p, SearchBudget(args.max_nodes, args.max_millis), reduce=not args.no_reduce)
    print(result.summary())

    if result.is_realizable:
        if args.output:
            ConstellationDoc(result.witness).dump(args.output)
        return ExitCode.OK
    if result.tag == OracleResult.NOT_REALIZABLE:
        return ExitCode.NOT_REALIZABLE
    return ExitCode.BUDGET_EXCEEDED


def cmd_enumerate(args) -> int:
    for p in enumerate_passports(args.n, args.q):
        verdict = classify(p)
        if args.only_exceptional and not verdict.is_exceptional:
            continue
        print(f'{p.to_text()} {verdict.summary()}')
    return ExitCode.OK


def cmd_export(args) -> int:
    doc = ConstellationDoc.load(args.document)
    _write(export(doc.constellation, args.format), args.output)
    return ExitCode.OK


def cmd_sweep(args) -> int:
    budget = SearchBudget(args.max_nodes, args.max_millis)
    table = sweep(range(args.min_n, args.max_n + 1), args.q, budget,
                  use_oracle=not args.no_oracle, progress=args.progress)

    if args.output:
        table.to_csv(args.output, index=False)
    else:
        sys.stdout.write(table.to_csv(index=False))

    disagreements = int((~table['agree']).sum())
    print(f'{len(table)} passports, {disagreements} disagreements', file=sys.stderr)
    return ExitCode.OK if disagreements == 0 else ExitCode.VERIFICATION_FAILED


def cmd_families(args) -> int:
    table = family_table(args.max_n)
    for row in table.itertuples(index=False):
        print(f'{row.passport} families=[{row.families.replace(" ", ", ")}]')
    return ExitCode.OK


def _add_budget(parser: argparse.ArgumentParser):
    parser.add_argument('--max-nodes', type=int, default=SearchBudget.DEFAULT_MAX_NODES,
                        help='cap on oracle search nodes')
    parser.add_argument('--max-millis', type=int, default=SearchBudget.DEFAULT_MAX_MILLIS,
                        help='cap on oracle search time in milliseconds')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='laurentreal',
                                     description='Realizability of Laurent passports by planar constellations.')
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help='-v for progress information, -vv for construction details')
    commands = parser.add_subparsers(dest='command', required=True)

    check = commands.add_parser('check', help='decide realizability')
    check.add_argument('passport', help='passport text, e.g. "2,2;2,2;3,1"')
    check.set_defaults(func=cmd_check)

    build_cmd = commands.add_parser('build', help='construct a witness constellation')
    build_cmd.add_argument('passport')
    build_cmd.add_argument('-o', '--output', help='JSON document to write (default: stdout)')
    build_cmd.add_argument('--show-plan', action='store_true', help='print the construction recipe on stderr')
    build_cmd.set_defaults(func=cmd_build)

    verify = commands.add_parser('verify', help='check a constellation document against a passport')
    verify.add_argument('document')
    verify.add_argument('passport')
    verify.set_defaults(func=cmd_verify)

    oracle = commands.add_parser('oracle', help='decide by exhaustive search')
    oracle.add_argument('passport')
    _add_budget(oracle)
    oracle.add_argument('--no-reduce', action='store_true', help='disable the conjugation filter')
    oracle.add_argument('-o', '--output', help='JSON document for the witness')
    oracle.set_defaults(func=cmd_oracle)

    enum = commands.add_parser('enumerate', help='list every Laurent passport of a degree')
    enum.add_argument('--n', type=int, required=True)
    enum.add_argument('--q', type=int, default=3)
    enum.add_argument('--only-exceptional', action='store_true')
    enum.set_defaults(func=cmd_enumerate)

    exp = commands.add_parser('export', help='convert a constellation document')
    exp.add_argument('document')
    exp.add_argument('--format', choices=['dot', 'json'], default='dot')
    exp.add_argument('-o', '--output')
    exp.set_defaults(func=cmd_export)

    sweep_cmd = commands.add_parser('sweep', help='cross-check classify, oracle and build')
    sweep_cmd.add_argument('--min-n', type=int, default=3)
    sweep_cmd.add_argument('--max-n', type=int, required=True)
    sweep_cmd.add_argument('--q', type=int, default=3)
    sweep_cmd.add_argument('--no-oracle', action='store_true')
    sweep_cmd.add_argument('--progress', action='store_true')
    sweep_cmd.add_argument('--output', help='CSV file (default: stdout)')
    _add_budget(sweep_cmd)
    sweep_cmd.set_defaults(func=cmd_sweep)

    families = commands.add_parser('families', help='list exceptional passports')
    families.add_argument('--max-n', type=int, required=True)
    families.set_defaults(func=cmd_families)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return ExitCode.OK if exc.code == 0 else ExitCode.USAGE

    level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG)
    logging.basicConfig(level=level, format='%(levelname)s %(name)s: %(message)s')

    try:
        return int(args.func(args))
    except (InvalidPassport, PassportSyntaxError) as exc:
        print(f'INVALID {exc}')
        return ExitCode.INVALID
    except DocumentError as exc:
        print(f'invalid document: {exc}', file=sys.stderr)
        return ExitCode.INVALID
    except NotRealizable as exc:
        print(f'EXCEPTIONAL families={list(exc.families)}')
        return ExitCode.NOT_REALIZABLE
    except BudgetExceeded as exc:
        print(str(exc), file=sys.stderr)
        return ExitCode.BUDGET_EXCEEDED
    except (PlanInconsistent, InternalPlanError) as exc:
        logger.error('construction failed: %s', exc)
        return ExitCode.VERIFICATION_FAILED
    except OSError as exc:
        print(f'error: {exc}', file=sys.stderr)
        return ExitCode.USAGE


if __name__ == '__main__':
    sys.exit(main())

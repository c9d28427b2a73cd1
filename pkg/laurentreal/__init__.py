# pylint: disable=missing-module-docstring
__version__ = "0.1.0"

from laurentreal.passport import LaurentPassport, RawPassport, Partition, validate, canonicalize, enumerate_passports
from laurentreal.constellation import ConstellationTuple, Perm, verify_against
from laurentreal.decision import Verdict, classify
from laurentreal.builder import build, plan
from laurentreal.oracle import SearchBudget, OracleResult, oracle_decide

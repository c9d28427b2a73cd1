from .families import (ExceptionalFamily,
                       FAMILIES,
                       match_family,
                       matching_families,
                       family_instances)
from .classify import Verdict, classify

__all__ = [
    "ExceptionalFamily",
    "FAMILIES",
    "match_family",
    "matching_families",
    "family_instances",
    "Verdict",
    "classify",
]

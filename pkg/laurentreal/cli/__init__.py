from .textio import parse_passport, format_passport, ConstellationDoc, export
from .experiments import sweep, family_table

__all__ = [
    "parse_passport",
    "format_passport",
    "ConstellationDoc",
    "export",
    "sweep",
    "family_table",
]

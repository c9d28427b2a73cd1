from .perm import Perm, cycle_type
from .constellation import (ConstellationTuple,
                            ValencyDatum,
                            VerificationReport,
                            from_rotations,
                            orbits,
                            is_transitive,
                            euler_count,
                            genus,
                            verify_against,
                            reorder)
from .graph import to_graph, to_dot

__all__ = [
    "Perm",
    "cycle_type",
    "ConstellationTuple",
    "ValencyDatum",
    "VerificationReport",
    "from_rotations",
    "orbits",
    "is_transitive",
    "euler_count",
    "genus",
    "verify_against",
    "reorder",
    "to_graph",
    "to_dot",
]

from .partition import Partition, partitions_of
from .laurent import (LaurentPassport,
                      RawPassport,
                      DerivedStats,
                      ColorRelabeling,
                      validate,
                      canonicalize,
                      is_canonical,
                      derived,
                      gop_sides,
                      from_branch_profile)
from .enumerate import enumerate_passports

__all__ = [
    "Partition",
    "partitions_of",
    "LaurentPassport",
    "RawPassport",
    "DerivedStats",
    "ColorRelabeling",
    "validate",
    "canonicalize",
    "is_canonical",
    "derived",
    "gop_sides",
    "from_branch_profile",
    "enumerate_passports",
]

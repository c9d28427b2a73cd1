from .classes import class_size, class_stream
from .search import SearchBudget, OracleResult, face_permutation, rotation_group, oracle_decide

__all__ = [
    "class_size",
    "class_stream",
    "SearchBudget",
    "OracleResult",
    "face_permutation",
    "rotation_group",
    "oracle_decide",
]

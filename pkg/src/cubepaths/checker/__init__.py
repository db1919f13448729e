from .validation import FailureCause, Failure, ValidationReport
from .validation import validate_path, validate_walk
from .validation import validate_decomposition, validate_walk_decomposition
from .validation import validate_hamiltonian_decomposition, describe_path
from .feasibility import odd_part, infeasibility_reason, feasible, feasible_even

__all__ = [
    "FailureCause",
    "Failure",
    "ValidationReport",
    "validate_path",
    "validate_walk",
    "validate_decomposition",
    "validate_walk_decomposition",
    "validate_hamiltonian_decomposition",
    "describe_path",
    "odd_part",
    "infeasibility_reason",
    "feasible",
    "feasible_even",
]

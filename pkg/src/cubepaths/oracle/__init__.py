from .exact_cover import DancingLinks, BudgetExceeded
from .search import SearchBudget, SearchOutcome, SearchResult
from .search import brute_force_decomposition, search_hamiltonian_decomposition, candidate_paths, integer_hypercube

__all__ = [
    "DancingLinks",
    "BudgetExceeded",
    "SearchBudget",
    "SearchOutcome",
    "SearchResult",
    "brute_force_decomposition",
    "search_hamiltonian_decomposition",
    "candidate_paths",
    "integer_hypercube",
]

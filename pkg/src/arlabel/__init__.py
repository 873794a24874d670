"""AR-labelings of graphs: edge labelings whose incident labels are sum-distinct at every vertex."""

from .graph import Family, FamilySpec, Graph, generate
from .search import SearchConfig, SearchResult, ar_index, bounds, is_ar_graph
from .verify import VerifyReport, is_sum_distinct, signed_zero_combination, verify_labeling

__version__ = "0.1.0"

__all__ = [
    "Family",
    "FamilySpec",
    "Graph",
    "SearchConfig",
    "SearchResult",
    "VerifyReport",
    "ar_index",
    "bounds",
    "generate",
    "is_ar_graph",
    "is_sum_distinct",
    "signed_zero_combination",
    "verify_labeling",
]

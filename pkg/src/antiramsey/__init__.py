"""Anti-Ramsey numbers of linear forests.

The anti-Ramsey number AR(n, G) is the largest number of colors an edge
coloring of K_n can use while containing no rainbow copy of G.  This
package computes AR for matchings and for forests of paths P4 plus single
edges: closed formulas where they hold, extremal colorings witnessing the
lower bounds, rainbow-copy detection, exact values by exhaustive search
at small n, randomized certified lower bounds, and exact-arithmetic scans
of the counting arguments behind the formulas.
"""

from .claimcheck import (BetaIdentityReport, BoundsCheck, Claim8Report,
                         OmegaInput, RegionReport, alpha, bounds_ledger,
                         omega, verify_beta_identity, verify_claim8,
                         verify_region)
from .construct import (construct_forest_avoider, construct_matching,
                        rainbow_clique_coloring, star_cover_coloring)
from .detect import (DetectBudget, colored_subset_has_rainbow, find_rainbow,
                     find_rainbow_oracle, has_rainbow_using_edge,
                     matching_shadow)
from .errors import BudgetExceededError, OutOfRegionError, ParseError
from .exact import (ExactBudget, ExactResult, ar_exact,
                    exists_avoiding_coloring)
from .formulas import (RegionTag, ar_linear_forest, ar_matching,
                       classify_region, floor_f, interval_bounds,
                       interval_lower, interval_nonempty,
                       largest_k_with_nonempty_interval, mu_beta)
from .model import (Embedding, EdgeColoring, LinearForest,
                    coloring_from_raw, edge_count, edge_endpoints,
                    edge_index, linear_forest, normalize, parse_forest,
                    read_coloring, representative_subgraph,
                    validate_embedding, write_coloring)
from .search import (Certificate, ProbeReport, SearchConfig,
                     conjecture_probe, search_lower_bound)

__version__ = "0.1.0"

__all__ = [
    "BetaIdentityReport", "BoundsCheck", "BudgetExceededError",
    "Certificate", "Claim8Report", "DetectBudget", "EdgeColoring",
    "Embedding", "ExactBudget", "ExactResult", "LinearForest",
    "OmegaInput", "OutOfRegionError", "ParseError", "ProbeReport",
    "RegionReport", "RegionTag", "SearchConfig", "alpha", "ar_exact",
    "ar_linear_forest", "ar_matching", "bounds_ledger", "classify_region",
    "colored_subset_has_rainbow", "coloring_from_raw", "conjecture_probe",
    "construct_forest_avoider", "construct_matching", "edge_count",
    "edge_endpoints", "edge_index", "exists_avoiding_coloring",
    "find_rainbow", "find_rainbow_oracle", "floor_f",
    "has_rainbow_using_edge", "interval_bounds", "interval_lower",
    "interval_nonempty", "largest_k_with_nonempty_interval",
    "linear_forest", "matching_shadow", "mu_beta", "normalize", "omega",
    "parse_forest", "rainbow_clique_coloring", "read_coloring",
    "representative_subgraph", "search_lower_bound", "star_cover_coloring",
    "validate_embedding", "verify_beta_identity", "verify_claim8",
    "verify_region", "write_coloring", "__version__",
]

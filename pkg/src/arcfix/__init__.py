"""Editing graphs into proper (Helly) circular-arc form.

Recognition with certificates, exact bounded-budget modification solvers,
constant-ratio approximations, and brute-force oracles for small instances.
"""

from .graphs import Graph, GraphParseError, format_graph, parse_graph
from .interval import pi_approx6, pi_mixed, pied, pivd
from .oracle import OracleCapError, brute_edit, member_oracle
from .pca import bpvd, is_bipartite_permutation, pca_approx9, pca_vd, recognize_pca
from .phcag import (phcag_approx6, phcag_completion, phcag_ed, phcag_mixed,
                    phcag_vd)
from .representation import (ArcRep, CliqueCircle, Recognition, TooManyCliques,
                             maximal_cliques, recognize_phcag,
                             recognize_proper_interval, validate_rep)
from .results import Budget, SolveResult

__all__ = [
    "ArcRep", "Budget", "CliqueCircle", "Graph", "GraphParseError",
    "OracleCapError", "Recognition", "SolveResult", "TooManyCliques",
    "bpvd", "brute_edit", "format_graph", "is_bipartite_permutation",
    "maximal_cliques", "member_oracle", "parse_graph", "pca_approx9",
    "pca_vd", "phcag_approx6", "phcag_completion", "phcag_ed",
    "phcag_mixed", "phcag_vd", "pi_approx6", "pi_mixed", "pied", "pivd",
    "recognize_pca", "recognize_phcag", "recognize_proper_interval",
    "validate_rep",
]

__version__ = "0.1.0"

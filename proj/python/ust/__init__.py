"""Uniform spanning trees: exact probabilities, sampling and limits.

Exact results come back as fractions.Fraction. Errors raise UstError whose
args are (message, code).
"""

from ._ust import (
    Graph,
    UstError,
    __version__,
    brute_prob,
    count_spanning_trees,
    degree_pmf,
    effective_resistance,
    entropy_finite,
    entropy_integral,
    enumerate_spanning_trees,
    gw_tree_moment,
    hitting_voltage,
    impedance_matrix,
    incipient_tree_moment,
    kn_degree_pmf,
    prob,
    sample_census,
    sample_frequencies,
    sample_tree,
    temperley_matching,
    torus_potential_table,
    tree_map_count,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]

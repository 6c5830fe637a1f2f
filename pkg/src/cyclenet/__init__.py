"""Clique-complex homology and cycle structure of undirected networks."""

from .complex import CapExceededError, CliqueComplex, boundary_matrix, build_complex, euler_characteristic, f_vector
from .cycles import (
    CycleSet,
    HyperNetwork,
    cycle_number_matrix,
    cycle_ratio,
    smallest_cycle_set,
    spreading_matrix,
    to_hypernetwork,
)
from .dynamics import SirConfig, SirOutcome, sir_run, spreading_experiment
from .graph import (
    UNBOUNDED,
    Graph,
    GraphFormatError,
    NodeProfile,
    connected_components,
    is_totally_homogeneous,
    laplacian,
    node_profile,
    parse_edge_list,
    read_edge_list,
    spanning_forest,
)
from .homology import (
    ChainVector,
    HomologyReport,
    betti_numbers,
    cavity_representatives,
    cycle_space_dimension,
    fundamental_cycle_basis,
    is_homologous,
)
from .importance import Ranking, attack_curve, coreness, h_index, kendall_tau, rank_nodes
from .spectral import SpectralSummary, symmetric_eigenvalues, sync_metrics


def fixture_path(name: str = "fig3.edges"):
    """Path of a bundled edge-list fixture."""
    from importlib.resources import files

    return files(__name__) / "data" / name


__version__ = "0.1.0"

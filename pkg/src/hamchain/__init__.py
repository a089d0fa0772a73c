"""Hamiltonicity toolkit for threshold and chain graphs.

Graphs are given by run-length binary generating sequences; the decision
procedures run in time linear in the number of runs, and a brute-force
oracle cross-validates them on small instances.
"""

from .errors import (
    DisconnectedSequenceError,
    EdgeDeletionDisconnectsError,
    NoHamiltonianChainGraphError,
    OracleCapError,
    RecognitionError,
    ReductionNotApplicableError,
    SequenceError,
)
from .extremal import KeyEdge, census, delete_key_edge, key_edges, min_cycle_chain_graph
from .graph import (
    DegreeProfile,
    Graph,
    chain_degree_profile,
    degree_profile,
    export,
    materialize,
)
from .hamiltonicity import (
    REASON_CODES,
    Verdict,
    check_sq_system,
    is_hamiltonian_chain,
    is_hamiltonian_threshold,
    reduce_to_g_star,
)
from .oracle import (
    CycleCount,
    HamiltonCycle,
    count_hamilton_cycles,
    enumerate_sequences,
    find_hamilton_cycle,
    hamilton_cycle_through,
)
from .sequence import (
    GeneratingSequence,
    parse_sequence,
    parse_with_isolated,
    recover_sequence,
    sequence_from_bit_runs,
)

__version__ = "0.1.0"

__all__ = [
    "CycleCount",
    "DegreeProfile",
    "DisconnectedSequenceError",
    "EdgeDeletionDisconnectsError",
    "GeneratingSequence",
    "Graph",
    "HamiltonCycle",
    "KeyEdge",
    "NoHamiltonianChainGraphError",
    "OracleCapError",
    "REASON_CODES",
    "RecognitionError",
    "ReductionNotApplicableError",
    "SequenceError",
    "Verdict",
    "census",
    "chain_degree_profile",
    "check_sq_system",
    "count_hamilton_cycles",
    "degree_profile",
    "delete_key_edge",
    "enumerate_sequences",
    "export",
    "find_hamilton_cycle",
    "hamilton_cycle_through",
    "is_hamiltonian_chain",
    "is_hamiltonian_threshold",
    "key_edges",
    "materialize",
    "min_cycle_chain_graph",
    "parse_sequence",
    "parse_with_isolated",
    "recover_sequence",
    "reduce_to_g_star",
    "sequence_from_bit_runs",
]

"""Exception types shared across the package."""


class SequenceError(ValueError):
    """Input text or run list is not a valid generating sequence."""


class DisconnectedSequenceError(SequenceError):
    """Sequence ends in a zero run, i.e. the graph has isolated vertices."""

    def __init__(self, message: str, isolated: int = 0):
        super().__init__(message)
        self.isolated = isolated


class RecognitionError(ValueError):
    """Adjacency structure is not a threshold or chain graph."""


class ReductionNotApplicableError(ValueError):
    """Clique-trimming reduction preconditions are not met."""


class EdgeDeletionDisconnectsError(ValueError):
    """Deleting the requested key edge would isolate a vertex."""


class NoHamiltonianChainGraphError(ValueError):
    """No Hamiltonian chain graph exists for the requested order."""


class OracleCapError(ValueError):
    """Exhaustive cycle counting refused above the configured size cap."""

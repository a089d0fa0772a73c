"""Key edges of chain graphs, sequence rewrites under key-edge deletion,
and the extremal chain graph with the fewest Hamilton cycles.

A key edge joins a zero and a one of the same level.  Deleting one keeps
the graph a chain graph, and the effect is a local rewrite of the
generating sequence; the rewrites here are cross-validated against literal
edge deletion in the tests.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import EdgeDeletionDisconnectsError, NoHamiltonianChainGraphError, OracleCapError
from .graph import materialize
from .hamiltonicity import is_hamiltonian_chain
from .oracle import DEFAULT_COUNT_CAP, count_hamilton_cycles, enumerate_sequences
from .sequence import GeneratingSequence, sequence_from_bit_runs


@dataclass(frozen=True)
class KeyEdge:
    """An edge joining a zero and a one of the same level ``level``."""

    level: int
    u: int
    v: int


def key_edges(seq: GeneratingSequence) -> list[KeyEdge]:
    """All key edges of the chain graph, by level then endpoint ids.

    Level i contributes t_i * s_i edges; vertex ids follow the
    materialization order.
    """
    edges = []
    offset = 0
    for level, (t, s) in enumerate(seq.runs, start=1):
        for u in range(offset, offset + t):
            for v in range(offset + t, offset + t + s):
                edges.append(KeyEdge(level, u, v))
        offset += t + s
    return edges


def delete_key_edge(seq: GeneratingSequence, level: int) -> GeneratingSequence:
    """Generating sequence of the chain graph minus one level-``level`` key edge.

    All key edges of a level are equivalent up to isomorphism, so only the
    level is needed.  Raises :class:`EdgeDeletionDisconnectsError` when the
    deleted edge is the only edge at one of its endpoints, i.e. for a
    single-zero level 1 or a single-one level h.
    """
    h = seq.h
    if not 1 <= level <= h:
        raise ValueError(f"level must be in 1..{h}, got {level}")
    i = level - 1
    t, s = seq.runs[i]
    if t == 1 and level == 1:
        raise EdgeDeletionDisconnectsError(
            "the level-1 ones have only the single level-1 zero as a neighbour"
        )
    if s == 1 and level == h:
        raise EdgeDeletionDisconnectsError(
            f"the level-{h} zeros have only the single level-{h} one as a neighbour"
        )

    bits: list[tuple[int, int]] = []
    for tj, sj in seq.runs:
        bits.append((0, tj))
        bits.append((1, sj))
    pos = 2 * i  # index of the level's zero run in ``bits``
    if t > 1 and s > 1:
        # The detached endpoints split off as singleton runs between the
        # shrunken old runs.
        bits[pos : pos + 2] = [(0, t - 1), (1, 1), (0, 1), (1, s - 1)]
    elif t > 1 and s == 1:
        # The detached zero now starts its neighbourhood one level up.
        bits[pos : pos + 2] = [(0, t - 1), (1, 1)]
        bits[pos + 2] = (0, seq.runs[i + 1][0] + 1)
    elif t == 1 and s > 1:
        # The detached one joins the previous level's ones; the zero keeps
        # the remaining ones of its level.
        bits[pos - 1] = (1, seq.runs[i - 1][1] + 1)
        bits[pos : pos + 2] = [(0, 1), (1, s - 1)]
    else:
        # Both endpoints migrate and the level disappears.
        bits[pos - 1] = (1, seq.runs[i - 1][1] + 1)
        bits[pos + 2] = (0, seq.runs[i + 1][0] + 1)
        del bits[pos : pos + 2]
    return sequence_from_bit_runs(bits)


def min_cycle_chain_graph(n: int) -> GeneratingSequence:
    """The order-``n`` Hamiltonian chain graph with the fewest Hamilton cycles.

    Defined for even n >= 4 with n = 2h: a C_4 for h = 2, and otherwise
    two zeros, alternating singles, two ones, with exactly h zeros and h
    ones.  Its cycle count is 2^(h-2) and no other Hamiltonian chain graph
    of the same order gets that low.
    """
    if n % 2 or n < 4:
        raise NoHamiltonianChainGraphError(
            f"Hamiltonian chain graphs have even order >= 4, got {n}"
        )
    h = n // 2
    if h == 2:
        return GeneratingSequence(((2, 2),))
    return GeneratingSequence(((2, 1),) + ((1, 1),) * (h - 3) + ((1, 2),))


def census(n: int, cap: int = DEFAULT_COUNT_CAP) -> list[tuple[GeneratingSequence, int]]:
    """Exact cycle counts for every Hamiltonian chain graph of order ``n``.

    Enumerates all connected sequences, filters by the linear decision, and
    counts cycles only on the survivors.  Rows are sorted by ascending
    count, ties by word.
    """
    if n > cap:
        raise OracleCapError(
            f"census order {n} exceeds the counting cap {cap}; pass a larger cap to override"
        )
    rows = []
    for seq in enumerate_sequences(n):
        if is_hamiltonian_chain(seq).hamiltonian:
            count = count_hamilton_cycles(materialize(seq, "chain"), cap).count
            rows.append((seq, count))
    rows.sort(key=lambda row: (row[1], row[0].word()))
    return rows

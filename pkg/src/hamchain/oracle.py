"""Brute-force ground truth: Hamilton cycle search, exact counting, and
exhaustive enumeration of generating sequences.

Plain backtracking over bitmask adjacency, cut only by facts that hold in
every graph, so the oracle stays independent of the linear decision
procedures:

* starvation: an unvisited vertex with fewer than two potential cycle
  neighbours (unvisited vertices, the path tip, or the start) kills the
  branch;
* confinement: unvisited vertices sharing one availability set need two
  slots each there, so a set supplying fewer slots than that is a dead
  end, and one supplying exactly that many closes the region off and is a
  dead end too unless the region is everything that remains;
* at the root only: a disconnected graph has no spanning cycle; neither
  has a bipartite graph with unequal colour classes; neither has a graph
  with an independent set above n/2, and one of size exactly n/2 forces
  strict alternation, so every outside vertex then needs two neighbours
  inside the set (checked with a greedy independent set).

Correctness over speed; the counter refuses graphs above a size cap
unless overridden.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .errors import OracleCapError
from .graph import Graph
from .sequence import GeneratingSequence, parse_sequence

DEFAULT_COUNT_CAP = 20


@dataclass(frozen=True)
class HamiltonCycle:
    """A Hamilton cycle in canonical form.

    Stored starting at the minimum vertex id, in the lexicographically
    smaller of the two traversal directions.  Any rotation or direction may
    be passed in; the constructor canonicalizes.
    """

    vertices: tuple[int, ...]

    def __post_init__(self):
        verts = tuple(self.vertices)
        if len(set(verts)) != len(verts):
            raise ValueError("cycle visits a vertex twice")
        if len(verts) < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        k = verts.index(min(verts))
        rotated = verts[k:] + verts[:k]
        flipped = rotated[:1] + tuple(reversed(rotated[1:]))
        object.__setattr__(self, "vertices", min(rotated, flipped))

    def edges(self) -> Iterator[tuple[int, int]]:
        verts = self.vertices
        for i, u in enumerate(verts):
            v = verts[(i + 1) % len(verts)]
            yield (u, v) if u < v else (v, u)

    def is_valid_for(self, g: Graph) -> bool:
        return sorted(self.vertices) == list(range(g.n)) and all(
            g.has_edge(u, v) for u, v in self.edges()
        )


@dataclass(frozen=True)
class CycleCount:
    """Exact number of distinct undirected Hamilton cycles."""

    count: int


def _greedy_independent_set(adjm: tuple[int, ...], n: int) -> tuple[int, int]:
    """Greedy independent set (min remaining degree, lowest id first).

    Returns (size, membership bitmask).
    """
    mask = (1 << n) - 1
    members = 0
    size = 0
    while mask:
        best = -1
        best_deg = n + 1
        m = mask
        while m:
            low = m & -m
            m ^= low
            v = low.bit_length() - 1
            deg = (adjm[v] & mask).bit_count()
            if deg < best_deg:
                best, best_deg = v, deg
        size += 1
        members |= 1 << best
        mask &= ~(adjm[best] | (1 << best))
    return size, members


def _no_cycle_by_independence(adjm: tuple[int, ...], n: int) -> bool:
    """Root test: does a greedy independent set rule out any spanning cycle?

    A spanning cycle has no independent set above n/2; one of size exactly
    n/2 (even n) forces strict alternation, so every vertex outside the set
    needs at least two neighbours inside it.
    """
    size, members = _greedy_independent_set(adjm, n)
    if size > n // 2:
        return True
    if n % 2 == 0 and size == n // 2:
        m = ((1 << n) - 1) ^ members
        while m:
            low = m & -m
            m ^= low
            v = low.bit_length() - 1
            if (adjm[v] & members).bit_count() < 2:
                return True
    return False


def _no_cycle_by_coloring(adjm: tuple[int, ...], n: int) -> bool:
    """Root test: disconnected, or bipartite with unequal classes."""
    seen = 1
    frontier = 1
    levels = [1, 0]  # vertices at even / odd BFS depth
    side = 0
    while frontier:
        reach = 0
        m = frontier
        while m:
            low = m & -m
            m ^= low
            reach |= adjm[low.bit_length() - 1]
        frontier = reach & ~seen
        seen |= frontier
        side ^= 1
        levels[side] |= frontier
    if seen != (1 << n) - 1:
        return True
    even, odd = levels
    m = even
    while m:  # any edge inside a level class means an odd cycle exists
        low = m & -m
        m ^= low
        if adjm[low.bit_length() - 1] & even:
            return False
    m = odd
    while m:
        low = m & -m
        m ^= low
        if adjm[low.bit_length() - 1] & odd:
            return False
    return even.bit_count() != odd.bit_count()


def _cycle_search(g: Graph, prefix: list[int], dedup: bool) -> Iterator[tuple[int, ...]]:
    """Yield Hamilton cycles as vertex tuples extending ``prefix``.

    Expansion is by ascending neighbour id from a fixed start, so the
    stream is deterministic.  With ``dedup`` each undirected cycle appears
    exactly once (second vertex smaller than last); without it both
    traversal directions may appear.
    """
    n = g.n
    adjm = g.adjacency_masks
    if any(m.bit_count() < 2 for m in adjm):
        return
    if _no_cycle_by_coloring(adjm, n) or _no_cycle_by_independence(adjm, n):
        return
    full = (1 << n) - 1
    start = prefix[0]
    start_bit = 1 << start
    visited = 0
    path = list(prefix)
    for v in path:
        visited |= 1 << v

    def extend(visited: int) -> Iterator[tuple[int, ...]]:
        tip = path[-1]
        if len(path) == n:
            if adjm[tip] & start_bit and (not dedup or path[1] < path[-1]):
                yield tuple(path)
            return
        tip_bit = 1 << tip
        unvisited = full ^ visited
        avail_mask = unvisited | tip_bit | start_bit
        groups: dict[int, list[int]] = {}
        m = unvisited
        while m:
            low = m & -m
            m ^= low
            # Unvisited vertices need two cycle neighbours among the
            # unvisited ones, the tip, and the start.
            avail = adjm[low.bit_length() - 1] & avail_mask
            if avail.bit_count() < 2:
                return
            entry = groups.get(avail)
            if entry is None:
                groups[avail] = [1, low]
            else:
                entry[0] += 1
                entry[1] |= low
        for avail, (count, members) in groups.items():
            if count == 1:
                continue
            # Each confined vertex consumes two edge slots inside its
            # availability set; unvisited members supply two slots, the
            # path ends one each (two when the path is a single vertex).
            slots = 2 * (avail & unvisited).bit_count()
            if avail & tip_bit:
                slots += 2 if tip == start else 1
            if (avail & start_bit) and tip != start:
                slots += 1
            if 2 * count > slots:
                return
            if 2 * count == slots and (avail | members) != avail_mask:
                # The group saturates its set: that region closes into a
                # cycle of its own and cannot be part of a spanning one.
                return
        m = adjm[tip] & unvisited
        while m:
            low = m & -m
            m ^= low
            v = low.bit_length() - 1
            path.append(v)
            yield from extend(visited | low)
            path.pop()

    yield from extend(visited)


def find_hamilton_cycle(g: Graph) -> Optional[HamiltonCycle]:
    """A canonical Hamilton cycle of ``g``, or ``None``; deterministic."""
    if g.n < 3:
        return None
    first = next(_cycle_search(g, [0], dedup=False), None)
    return HamiltonCycle(first) if first is not None else None


def hamilton_cycle_through(g: Graph, u: int, v: int) -> Optional[HamiltonCycle]:
    """A Hamilton cycle of ``g`` containing the edge uv, or ``None``."""
    if not g.has_edge(u, v):
        raise ValueError(f"({u}, {v}) is not an edge of the graph")
    if g.n < 3:
        return None
    first = next(_cycle_search(g, [u, v], dedup=False), None)
    return HamiltonCycle(first) if first is not None else None


def count_hamilton_cycles(g: Graph, cap: int = DEFAULT_COUNT_CAP) -> CycleCount:
    """Exact count of undirected Hamilton cycles, each counted once.

    Refuses graphs with more than ``cap`` vertices; raise the cap
    explicitly for bigger exhaustive runs.
    """
    if g.n > cap:
        raise OracleCapError(
            f"graph order {g.n} exceeds the counting cap {cap}; pass a larger cap to override"
        )
    if g.n < 3:
        return CycleCount(0)
    return CycleCount(sum(1 for _ in _cycle_search(g, [0], dedup=True)))


def enumerate_sequences(n: int, connected_only: bool = True) -> Iterator[GeneratingSequence]:
    """All canonical generating sequences of words of length ``n``.

    Words start with 0; with ``connected_only`` they also end with 1, giving
    2^(n-2) sequences.  Otherwise every word with at least one 1 is parsed
    permissively, its trailing zeros dropped.  Yields in lexicographic order
    of the underlying word, each sequence exactly once.
    """
    if n < 2:
        raise ValueError("sequences encode graphs on at least 2 vertices")
    if connected_only:
        width = n - 2
        for i in range(1 << width):
            mid = format(i, "b").zfill(width) if width else ""
            yield parse_sequence("0" + mid + "1")
    else:
        width = n - 1
        for i in range(1 << width):
            mid = format(i, "b").zfill(width) if width else ""
            word = "0" + mid
            if "1" in word:
                yield parse_sequence(word, allow_isolated=True)

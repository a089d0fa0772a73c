"""Run-length binary generating sequences for threshold and chain graphs.

A generating sequence is a binary word that starts with a zero run and ends
with a ones run, stored in run-length form as pairs ``(t_i, s_i)``: ``t_i``
zeros followed by ``s_i`` ones at level ``i``.  Zeros add independent
vertices and ones add dominating vertices, so the word fully determines
both the threshold graph and the chain graph it generates.

Accepted input notations:

* raw binary words, e.g. ``"001011"``;
* run-length notation with optional parentheses and carets, e.g.
  ``"0^2 1^2 0^2 1^3"`` or ``"(0^2 1^2)(0^2 1^3)"``.

Whitespace separates tokens and is otherwise ignored.  An exponent is a
maximal digit run, so a multi-digit count such as ``0^10`` must be followed
by whitespace, a parenthesis, or the end of input (the display form
produced by ``str()`` always satisfies this).

A word that starts with a ones run is normalised by flipping its first
symbol to zero: the first vertex of the construction is a single vertex
either way, so the generated graph does not depend on that symbol.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import TYPE_CHECKING, Iterable

from .errors import DisconnectedSequenceError, RecognitionError, SequenceError

if TYPE_CHECKING:
    from .graph import Graph


@dataclass(frozen=True)
class GeneratingSequence:
    """Canonical run-length form of a generating binary word.

    ``runs`` holds the pairs ``(t_i, s_i)`` for levels ``i = 1..h``.  Every
    entry is at least 1, so the form is canonical: runs are maximal and
    adjacent pairs can never merge.
    """

    runs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        runs = tuple((int(t), int(s)) for t, s in self.runs)
        if not runs:
            raise SequenceError("a generating sequence needs at least one (zeros, ones) level")
        for t, s in runs:
            if t < 1 or s < 1:
                raise SequenceError(f"run lengths must be positive, got ({t}, {s})")
        object.__setattr__(self, "runs", runs)

    @property
    def h(self) -> int:
        """Number of levels (zero-run/ones-run pairs)."""
        return len(self.runs)

    @cached_property
    def zero_runs(self) -> tuple[int, ...]:
        return tuple(t for t, _ in self.runs)

    @cached_property
    def one_runs(self) -> tuple[int, ...]:
        return tuple(s for _, s in self.runs)

    @cached_property
    def zeros(self) -> int:
        """Total number of zeros (independent-vertex insertions)."""
        return sum(self.zero_runs)

    @cached_property
    def ones(self) -> int:
        """Total number of ones (dominating-vertex insertions)."""
        return sum(self.one_runs)

    @property
    def n(self) -> int:
        """Order of the generated graph."""
        return self.zeros + self.ones

    def word(self) -> str:
        """The raw binary word, e.g. ``"001011"``."""
        return "".join("0" * t + "1" * s for t, s in self.runs)

    def mirror(self) -> GeneratingSequence:
        """Sequence generating the same chain graph with colour classes swapped.

        Obtained by reversing the word and flipping every bit; for the
        bipartite chain graph this exchanges the roles of the two classes.
        """
        return GeneratingSequence(tuple((s, t) for t, s in reversed(self.runs)))

    def __str__(self) -> str:
        parts = []
        for t, s in self.runs:
            parts.append(f"0^{t}" if t > 1 else "0")
            parts.append(f"1^{s}" if s > 1 else "1")
        return " ".join(parts)


def _scan(text: str) -> list[tuple[int, int]]:
    """Tokenize input text into raw (bit, count) runs, in order."""
    runs: list[tuple[int, int]] = []
    depth = 0
    i = 0
    end = len(text)
    while i < end:
        c = text[i]
        if c.isspace():
            i += 1
        elif c == "(":
            depth += 1
            i += 1
        elif c == ")":
            depth -= 1
            if depth < 0:
                raise SequenceError("unbalanced ')' in sequence")
            i += 1
        elif c in "01":
            bit = ord(c) - 48
            count = 1
            i += 1
            if i < end and text[i] == "^":
                i += 1
                start = i
                while i < end and text[i].isdigit():
                    i += 1
                if i == start:
                    raise SequenceError("'^' must be followed by a positive integer")
                count = int(text[start:i])
                if count == 0:
                    raise SequenceError("zero-length runs are not allowed")
            runs.append((bit, count))
        else:
            raise SequenceError(f"unexpected character {c!r} in sequence")
    if depth:
        raise SequenceError("unbalanced '(' in sequence")
    if not runs:
        raise SequenceError("empty sequence")
    return runs


def _merge_bit_runs(bit_runs: Iterable[tuple[int, int]]) -> tuple[GeneratingSequence, int]:
    """Merge raw (bit, count) runs into canonical form.

    Returns the sequence and the number of trailing zeros (isolated
    vertices), which are not representable in the canonical form.
    """
    merged: list[list[int]] = []
    for bit, count in bit_runs:
        if bit not in (0, 1):
            raise SequenceError(f"bits must be 0 or 1, got {bit!r}")
        if count < 0:
            raise SequenceError(f"run lengths cannot be negative, got {count}")
        if count == 0:
            continue
        if merged and merged[-1][0] == bit:
            merged[-1][1] += count
        else:
            merged.append([bit, count])
    if not merged:
        raise SequenceError("empty sequence")
    isolated = 0
    if merged[-1][0] == 0:
        if len(merged) == 1:
            raise SequenceError("sequence contains no ones, so the graph has no edges")
        isolated = merged.pop()[1]
    if merged[0][0] == 1:
        raise SequenceError("sequence must start with a zero run")
    pairs = tuple((merged[i][1], merged[i + 1][1]) for i in range(0, len(merged), 2))
    return GeneratingSequence(pairs), isolated


def sequence_from_bit_runs(bit_runs: Iterable[tuple[int, int]]) -> GeneratingSequence:
    """Build a canonical sequence from raw (bit, count) runs.

    Zero-length runs are dropped and adjacent equal-bit runs merged.
    Trailing zeros are rejected.
    """
    seq, isolated = _merge_bit_runs(bit_runs)
    if isolated:
        raise DisconnectedSequenceError(
            f"sequence has {isolated} trailing zeros (isolated vertices)", isolated
        )
    return seq


def parse_with_isolated(text: str) -> tuple[GeneratingSequence, int]:
    """Parse sequence text, returning the trailing-zero count separately."""
    bit_runs = _scan(text)
    if bit_runs[0][0] == 1:
        # The generated graph ignores the first symbol; rewrite a leading
        # ones run by flipping its first symbol to zero.
        first = bit_runs[0][1]
        bit_runs[0:1] = [(0, 1), (1, first - 1)]
    return _merge_bit_runs(bit_runs)


def parse_sequence(text: str, allow_isolated: bool = False) -> GeneratingSequence:
    """Parse raw or run-length notation into a canonical sequence.

    Trailing zeros encode isolated vertices and are rejected unless
    ``allow_isolated`` is set, in which case they are dropped; use
    :func:`parse_with_isolated` to obtain their count.
    """
    seq, isolated = parse_with_isolated(text)
    if isolated and not allow_isolated:
        raise DisconnectedSequenceError(
            f"sequence has {isolated} trailing zeros (isolated vertices); "
            "pass allow_isolated=True to accept them",
            isolated,
        )
    return seq


def recover_sequence(g: Graph) -> GeneratingSequence:
    """Recover the canonical generating sequence of a materialized graph.

    The inverse of materialization: works from the adjacency structure
    alone, using recorded cells only to fix which colour class of a chain
    graph plays the zero role.  Without recorded cells the orientation is
    chosen to make the run list lexicographically smallest.

    Raises :class:`RecognitionError` when the neighbourhoods are not nested,
    i.e. the graph is not of the declared kind.
    """
    if g.kind == "threshold":
        return _recover_threshold(g)
    if g.kind == "chain":
        return _recover_chain(g)
    raise ValueError(f"unknown graph kind {g.kind!r}")


def _recover_threshold(g: Graph) -> GeneratingSequence:
    n = g.n
    if n < 2:
        raise RecognitionError("graphs on fewer than 2 vertices have no generating sequence")
    nbrs = [set(a) for a in g.adj]
    alive = set(range(n))
    rev: list[str] = []
    # Peel construction order from the back: the last vertex added is
    # isolated (a zero) or dominating (a one) in the current subgraph.
    while len(alive) > 1:
        k = len(alive)
        iso = next((v for v in alive if not nbrs[v]), None)
        if iso is not None:
            alive.remove(iso)
            rev.append("0")
            continue
        dom = next((v for v in alive if len(nbrs[v]) == k - 1), None)
        if dom is None:
            raise RecognitionError(
                "not a threshold graph: no isolated or dominating vertex to peel"
            )
        alive.remove(dom)
        for u in nbrs[dom]:
            nbrs[u].discard(dom)
        rev.append("1")
    rev.append("0")  # the first vertex; the graph is independent of this symbol
    seq, isolated = parse_with_isolated("".join(reversed(rev)))
    if isolated:
        raise RecognitionError(f"graph is disconnected ({isolated} isolated vertices)")
    return seq


def _recover_chain(g: Graph) -> GeneratingSequence:
    n = g.n
    if n < 2:
        raise RecognitionError("graphs on fewer than 2 vertices have no generating sequence")
    nbrs = g.neighbor_sets
    if any(not a for a in nbrs):
        raise RecognitionError("graph has an isolated vertex: not a connected chain graph")
    color = [-1] * n
    color[0] = 0
    queue = [0]
    while queue:
        v = queue.pop()
        for u in nbrs[v]:
            if color[u] == -1:
                color[u] = 1 - color[v]
                queue.append(u)
            elif color[u] == color[v]:
                raise RecognitionError("graph is not bipartite: not a chain graph")
    if any(c == -1 for c in color):
        raise RecognitionError("graph is disconnected: not a connected chain graph")
    class_a = [v for v in range(n) if color[v] == 0]
    class_b = [v for v in range(n) if color[v] == 1]
    if g.cells is not None:
        whites = sorted(v for u_cell, _ in g.cells for v in u_cell)
        blacks = sorted(v for _, v_cell in g.cells for v in v_cell)
        return GeneratingSequence(_chain_runs(whites, blacks, nbrs))
    runs_a = _chain_runs(class_a, class_b, nbrs)
    runs_b = _chain_runs(class_b, class_a, nbrs)
    return GeneratingSequence(min(runs_a, runs_b))


def _chain_runs(whites, blacks, nbrs) -> tuple[tuple[int, int], ...]:
    """Derive (t_i, s_i) runs treating ``whites`` as the zero class."""
    groups: dict[frozenset, int] = {}
    for w in whites:
        hood = frozenset(nbrs[w])
        groups[hood] = groups.get(hood, 0) + 1
    ordered = sorted(groups.items(), key=lambda item: -len(item[0]))
    hoods = [hood for hood, _ in ordered]
    if hoods[0] != frozenset(blacks):
        raise RecognitionError("not a chain graph: no vertex dominates the whole other class")
    for bigger, smaller in zip(hoods, hoods[1:]):
        if not smaller < bigger:
            raise RecognitionError("not a chain graph: neighbourhoods are not nested")
    hoods.append(frozenset())
    return tuple(
        (count, len(hoods[i]) - len(hoods[i + 1])) for i, (_, count) in enumerate(ordered)
    )

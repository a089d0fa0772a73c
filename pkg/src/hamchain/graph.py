"""Materialized threshold and chain graphs with their level-cell partition.

Vertex ids follow construction order: the ``t_i`` zeros of level ``i`` come
first, then its ``s_i`` ones.  A chain graph connects each one to every
zero added before it; a threshold graph connects each one to every vertex
added before it, so the ones induce a clique and the zeros a co-clique.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from .sequence import GeneratingSequence

KINDS = ("threshold", "chain")


class Graph:
    """Immutable undirected graph, optionally carrying level cells.

    ``cells`` lists, per level, the id ranges of the zero cell and the ones
    cell; it is present on materialized graphs and ``None`` on graphs built
    from raw edges.
    """

    def __init__(self, n: int, adj: Iterable[Iterable[int]], kind: str,
                 cells=None, runs=None):
        if kind not in KINDS:
            raise ValueError(f"kind must be one of {KINDS}, got {kind!r}")
        self.n = int(n)
        self.kind = kind
        self.adj = tuple(tuple(sorted(a)) for a in adj)
        if len(self.adj) != self.n:
            raise ValueError("adjacency list length does not match vertex count")
        self.cells = tuple(cells) if cells is not None else None
        self.runs = tuple(runs) if runs is not None else None

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], kind: str) -> Graph:
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for {n} vertices")
            if u == v:
                raise ValueError(f"self loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        return cls(n, adj, kind)

    @classmethod
    def from_json(cls, text: str) -> Graph:
        data = json.loads(text)
        g = cls.from_edges(data["n"], [tuple(e) for e in data["edges"]], data["kind"])
        if data.get("runs"):
            g.runs = tuple((t, s) for t, s in data["runs"])
        return g

    @cached_property
    def neighbor_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(a) for a in self.adj)

    @cached_property
    def adjacency_masks(self) -> tuple[int, ...]:
        """Neighbourhoods as integer bitmasks, bit v set for neighbour v."""
        masks = []
        for a in self.adj:
            m = 0
            for v in a:
                m |= 1 << v
            masks.append(m)
        return tuple(masks)

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        """All edges as (u, v) with u < v, in lexicographic order."""
        for u in range(self.n):
            for v in self.adj[u]:
                if v > u:
                    yield (u, v)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbor_sets[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def __repr__(self) -> str:
        return f"Graph(kind={self.kind!r}, n={self.n}, m={self.edge_count})"


def materialize(seq: GeneratingSequence, kind: str) -> Graph:
    """Build the threshold or chain graph of ``seq`` by the insertion rule."""
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}, got {kind!r}")
    n = seq.n
    adj: list[list[int]] = [[] for _ in range(n)]
    cells = []
    next_id = 0
    whites: list[int] = []
    for t, s in seq.runs:
        u_cell = range(next_id, next_id + t)
        whites.extend(u_cell)
        next_id += t
        v_cell = range(next_id, next_id + s)
        next_id += s
        for v in v_cell:
            targets = whites if kind == "chain" else range(v)
            adj[v] = list(targets)
            for u in targets:
                adj[u].append(v)
        cells.append((u_cell, v_cell))
    return Graph(n, adj, kind, cells=cells, runs=seq.runs)


@dataclass(frozen=True)
class DegreeProfile:
    """Ordered degree lists of the two sides of a chain graph.

    For the threshold view (``degree_profile``): ``d`` holds the co-clique
    degrees and ``e`` the maximal-clique degrees after the clique edges are
    removed, with ``r`` and ``s`` the respective side sizes (``r = T - 1``,
    ``s = S + 1``).  For the plain bipartite view
    (``chain_degree_profile``): ``d`` and ``e`` are the class degree lists
    and ``r = T``, ``s = S``.  All lists are non-decreasing.
    """

    d: tuple[int, ...]
    e: tuple[int, ...]
    r: int
    s: int
    T: int
    S: int
    t1_is_one: bool


def degree_profile(seq: GeneratingSequence) -> DegreeProfile:
    """Closed-form degree profile of the split of a threshold graph.

    The maximal clique is the ones plus one lowest-id zero of level 1 (the
    whole first cell when ``t_1 = 1``); degrees are taken in the bipartite
    graph left after deleting all edges inside that clique.
    """
    ts, ss = seq.zero_runs, seq.one_runs
    h = seq.h
    T, S = seq.zeros, seq.ones
    d: list[int] = []
    e: list[int] = []
    if ts[0] != 1:
        # d_j = s_{h+1-j} + ... + s_h, with multiplicity t_{h+1-j}
        # (the last value, j = h, has multiplicity t_1 - 1: one zero of
        # level 1 is absorbed into the clique).
        dval = 0
        for j in range(1, h + 1):
            dval += ss[h - j]
            mult = ts[h - j] - (1 if j == h else 0)
            d.extend([dval] * mult)
        # e list: the absorbed vertex contributes a single 0, then
        # e_j = t_1 + ... + t_j - 1 with multiplicity s_j.
        e.append(0)
        eval_ = -1
        for j in range(h):
            eval_ += ts[j]
            e.extend([eval_] * ss[j])
    else:
        # Whole first cell absorbed: d ranges over levels 2..h only and the
        # e list starts with 1 + s_1 zeros, then e_j = t_2 + ... + t_j.
        dval = 0
        for j in range(1, h):
            dval += ss[h - j]
            d.extend([dval] * ts[h - j])
        e.extend([0] * (1 + ss[0]))
        eval_ = 0
        for j in range(1, h):
            eval_ += ts[j]
            e.extend([eval_] * ss[j])
    return DegreeProfile(
        d=tuple(d), e=tuple(e), r=T - 1, s=S + 1, T=T, S=S, t1_is_one=(ts[0] == 1)
    )


def chain_degree_profile(seq: GeneratingSequence) -> DegreeProfile:
    """Class degree lists of the chain graph itself, both non-decreasing."""
    ts, ss = seq.zero_runs, seq.one_runs
    h = seq.h
    d: list[int] = []
    e: list[int] = []
    suffix = 0
    for i in range(h - 1, -1, -1):  # zeros of level i see the ones of levels >= i
        suffix += ss[i]
        d.extend([suffix] * ts[i])
    prefix = 0
    for i in range(h):  # ones of level i see the zeros of levels <= i
        prefix += ts[i]
        e.extend([prefix] * ss[i])
    return DegreeProfile(
        d=tuple(d), e=tuple(e), r=seq.zeros, s=seq.ones,
        T=seq.zeros, S=seq.ones, t1_is_one=(ts[0] == 1),
    )


def to_edgelist(g: Graph) -> str:
    """One ``u v`` pair per line, u < v, lexicographic order."""
    return "".join(f"{u} {v}\n" for u, v in g.edges())


def to_dot(g: Graph) -> str:
    """DOT text with one rank group per cell when cells are recorded."""
    lines = ["graph {"]
    if g.cells is not None:
        for u_cell, v_cell in g.cells:
            for cell in (u_cell, v_cell):
                members = " ".join(f"{v};" for v in cell)
                lines.append(f"  {{ rank=same; {members} }}")
    else:
        for v in range(g.n):
            if not g.adj[v]:
                lines.append(f"  {v};")
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(g: Graph) -> str:
    payload = {
        "n": g.n,
        "kind": g.kind,
        "runs": [list(run) for run in g.runs] if g.runs is not None else None,
        "edges": [list(edge) for edge in g.edges()],
    }
    return json.dumps(payload)


_EXPORTERS = {"dot": to_dot, "edgelist": to_edgelist, "json": to_json}


def export(g: Graph, format: str) -> str:
    """Serialize ``g`` as ``dot``, ``edgelist`` or ``json`` text."""
    try:
        exporter = _EXPORTERS[format]
    except KeyError:
        raise ValueError(f"unknown export format {format!r}") from None
    return exporter(g)

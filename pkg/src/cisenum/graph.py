"""Undirected simple graphs in compressed adjacency form, plus parsing and
the traversal utilities every enumerator relies on."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Hashable, Iterable, Sequence

import numpy as np

Label = Hashable


class GraphFormatError(ValueError):
    """Raised when graph text cannot be parsed."""


@dataclass(frozen=True)
class ParseReport:
    self_loops: int = 0
    duplicates: int = 0

    @property
    def dropped(self) -> int:
        return self.self_loops + self.duplicates


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable undirected simple graph.

    Vertices are the dense ids ``0..n-1``. The neighbors of ``v`` are
    ``neighbors[offsets[v]:offsets[v+1]]``, strictly ascending.
    ``external_labels[v]`` is the label ``v`` had in the input.
    """

    n: int
    offsets: np.ndarray
    neighbors: np.ndarray
    external_labels: tuple = ()
    report: ParseReport = field(default_factory=ParseReport)
    name: str = ""

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        labels: Sequence[Label] | None = None,
        name: str = "",
    ) -> "Graph":
        """Build a graph on ids ``0..n-1``; loops and repeated edges are dropped and counted."""
        adj: list[set[int]] = [set() for _ in range(n)]
        loops = dups = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                loops += 1
            elif v in adj[u]:
                dups += 1
            else:
                adj[u].add(v)
                adj[v].add(u)
        offsets = np.zeros(n + 1, dtype=np.int64)
        rows = [sorted(a) for a in adj]
        offsets[1:] = np.cumsum([len(r) for r in rows]) if n else []
        flat = np.fromiter((x for r in rows for x in r), dtype=np.int64, count=int(offsets[-1]))
        offsets.flags.writeable = False
        flat.flags.writeable = False
        if labels is None:
            labels = range(n)
        elif len(labels) != n:
            raise ValueError("need exactly one label per vertex")
        return cls(n, offsets, flat, tuple(labels), ParseReport(loops, dups), name)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Per-vertex neighbor tuples (the pure-Python kernels index these)."""
        off = self.offsets.tolist()
        flat = self.neighbors.tolist()
        return tuple(tuple(flat[off[v]:off[v + 1]]) for v in range(self.n))

    @property
    def num_edges(self) -> int:
        return int(self.offsets[-1]) // 2

    def neighbors_of(self, v: int) -> np.ndarray:
        return self.neighbors[self.offsets[v]:self.offsets[v + 1]]

    def degree(self, v: int) -> int:
        return int(self.offsets[v + 1] - self.offsets[v])

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    def to_labels(self, vertices: Iterable[int]) -> list[Label]:
        lab = self.external_labels
        return [lab[v] for v in vertices]

    def check(self) -> None:
        """Assert the structural invariants (symmetry, sorted slices, offsets)."""
        off = self.offsets
        assert len(off) == self.n + 1 and off[0] == 0
        assert np.all(np.diff(off) >= 0), "offsets must be non-decreasing"
        assert off[-1] == len(self.neighbors) and off[-1] % 2 == 0
        adj = self.adjacency
        for u in range(self.n):
            row = adj[u]
            assert all(a < b for a, b in zip(row, row[1:])), f"slice of {u} not strictly ascending"
            assert u not in row, f"self-loop at {u}"
            for v in row:
                assert u in adj[v], f"asymmetric edge {u}-{v}"


# -- parsing -----------------------------------------------------------------

def _as_label(token: str) -> Label:
    try:
        return int(token)
    except ValueError:
        return token


def _parse_edge_list(text: str, name: str) -> Graph:
    ids: dict[Label, int] = {}
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line[0] in "%#":
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise GraphFormatError(f"line {lineno}: expected 2 labels, got {len(tokens)}")
        pair = []
        for tok in tokens:
            lab = _as_label(tok)
            if lab not in ids:
                ids[lab] = len(ids)
            pair.append(ids[lab])
        edges.append((pair[0], pair[1]))
    if not ids:
        raise GraphFormatError("empty input: no edges found")
    return Graph.from_edges(len(ids), edges, labels=list(ids), name=name)


def _parse_matrix_market(text: str, name: str) -> Graph:
    lines = text.splitlines()
    banner = lines[0].split()
    if len(banner) < 3 or banner[1].lower() != "matrix" or banner[2].lower() != "coordinate":
        raise GraphFormatError("only 'matrix coordinate' Matrix Market files are supported")
    body = (ln.strip() for ln in lines[1:])
    body = [(i, ln) for i, ln in enumerate(body, 2) if ln and not ln.startswith("%")]
    if not body:
        raise GraphFormatError("Matrix Market file has no size line")

    def ints(lineno: int, tokens: list[str]) -> list[int]:
        try:
            return [int(t) for t in tokens]
        except ValueError:
            raise GraphFormatError(f"line {lineno}: non-numeric coordinate in {tokens!r}") from None

    lineno, size_line = body[0]
    dims = ints(lineno, size_line.split()[:3])
    if len(dims) != 3:
        raise GraphFormatError(f"line {lineno}: size line needs rows, cols, entries")
    rows, cols, _ = dims
    if rows != cols:
        raise GraphFormatError(f"adjacency matrix must be square, got {rows}x{cols}")
    if rows == 0:
        raise GraphFormatError("empty input: zero vertices")
    edges = []
    for lineno, line in body[1:]:
        tokens = line.split()
        if len(tokens) < 2:
            raise GraphFormatError(f"line {lineno}: expected 'row col [value]'")
        i, j = ints(lineno, tokens[:2])
        if not (1 <= i <= rows and 1 <= j <= rows):
            raise GraphFormatError(f"line {lineno}: index out of range 1..{rows}")
        edges.append((i - 1, j - 1))
    return Graph.from_edges(rows, edges, name=name)


def parse_graph(data: bytes | str, format_hint: str = "auto", name: str = "") -> Graph:
    """Parse an edge list or a Matrix Market coordinate file.

    ``format_hint`` is one of ``"edge_list"``, ``"matrix_market"`` or
    ``"auto"`` (Matrix Market iff the text starts with the
    ``%%MatrixMarket`` banner). Matrix Market indices are 1-based and become
    labels ``i - 1``; edge-list labels keep their first-appearance order.
    """
    text = data.decode() if isinstance(data, (bytes, bytearray)) else data
    if not text.strip():
        raise GraphFormatError("empty input")
    if format_hint == "auto":
        format_hint = "matrix_market" if text.lstrip().startswith("%%MatrixMarket") else "edge_list"
    if format_hint == "edge_list":
        return _parse_edge_list(text, name)
    if format_hint == "matrix_market":
        return _parse_matrix_market(text.lstrip(), name)
    raise ValueError(f"unknown format hint {format_hint!r}")


def read_graph(path, format_hint: str = "auto") -> Graph:
    from pathlib import Path

    path = Path(path)
    return parse_graph(path.read_bytes(), format_hint, name=path.stem)


# -- traversal ---------------------------------------------------------------

def connected_components(g: Graph) -> list[list[int]]:
    """Maximal connected vertex sets, each sorted, ordered by smallest member."""
    adj = g.adjacency
    seen = bytearray(g.n)
    comps = []
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = 1
        comp = [root]
        stack = [root]
        while stack:
            for w in adj[stack.pop()]:
                if not seen[w]:
                    seen[w] = 1
                    comp.append(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def dfs_discovery_order(g: Graph, component: Iterable[int]) -> list[int]:
    """Vertices of a connected ``component`` in DFS discovery order.

    The search starts at the smallest id and tries neighbors in ascending
    order, so it matches a recursive DFS exactly. Every prefix of the result
    induces a connected subgraph.
    """
    comp = set(component)
    if not comp:
        raise ValueError("component is empty")
    adj = g.adjacency
    root = min(comp)
    seen = {root}
    order = [root]
    stack = [(root, 0)]
    while stack:
        v, i = stack[-1]
        row = adj[v]
        while i < len(row) and (row[i] in seen or row[i] not in comp):
            i += 1
        if i == len(row):
            stack.pop()
            continue
        stack[-1] = (v, i + 1)
        w = row[i]
        seen.add(w)
        order.append(w)
        stack.append((w, 0))
    if len(order) != len(comp):
        raise ValueError("component is not connected")
    return order


def induced_is_connected(g: Graph, vertices: Iterable[int]) -> bool:
    """True iff the subgraph induced on ``vertices`` is connected."""
    members = set(vertices)
    if not members:
        raise ValueError("vertex set is empty")
    adj = g.adjacency
    start = next(iter(members))
    seen = {start}
    stack = [start]
    while stack:
        for w in adj[stack.pop()]:
            if w in members and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(members)


def max_degree(g: Graph) -> int:
    if g.n == 0:
        raise ValueError("graph has no vertices")
    return int(np.max(np.diff(g.offsets)))


def count_upper_bound(n: int, delta: int, k: int) -> float:
    """Upper bound ``n * (e*delta)**k / ((delta - 1) * k)`` on the number of
    connected induced subgraphs of size ``k``.

    The expression is undefined for ``delta <= 1``; such graphs are disjoint
    edges and isolated vertices, which have at most ``n`` connected sets of
    any one size, so ``n`` is returned.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if n < 1:
        raise ValueError("n must be at least 1")
    if delta <= 1:
        return float(n)
    return n * (math.e * delta) ** k / ((delta - 1) * k)


# -- generators --------------------------------------------------------------

def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)), name=f"path{n}")


def cycle_graph(n: int) -> Graph:
    if n < 3:
        return path_graph(n)
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)), name=f"cycle{n}")


def star_graph(leaves: int) -> Graph:
    """Center 0 joined to ``leaves`` leaves ``1..leaves``."""
    return Graph.from_edges(leaves + 1, ((0, i) for i in range(1, leaves + 1)), name=f"star{leaves}")


def clique_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, j) for i in range(n) for j in range(i + 1, n)), name=f"clique{n}")


def random_graph(n: int, p: float, seed: int = 0) -> Graph:
    """Erdős–Rényi G(n, p); identical output for identical arguments."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability {p} outside [0, 1]")
    rng = random.Random(seed)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges, name=f"random{n}_{p}_{seed}")


def generate_graph(spec: str) -> Graph:
    """Build a graph from ``family:args``, e.g. ``path:6``, ``star:5``,
    ``clique:4``, ``cycle:8`` or ``random:10:0.3:7`` (n, p, seed)."""
    family, _, rest = spec.partition(":")
    args = [a for a in rest.split(":") if a]
    try:
        n = int(args[0])
    except (IndexError, ValueError):
        raise ValueError(f"bad generator spec {spec!r}: missing size") from None
    if n <= 0:
        raise ValueError("generator size must be positive")
    simple = {"path": path_graph, "cycle": cycle_graph, "star": star_graph, "clique": clique_graph}
    if family in simple:
        if len(args) != 1:
            raise ValueError(f"{family} takes exactly one argument")
        return simple[family](n)
    if family == "random":
        if len(args) not in (2, 3):
            raise ValueError("random takes n:p[:seed]")
        p = float(args[1])
        seed = int(args[2]) if len(args) == 3 else 0
        return random_graph(n, p, seed)
    raise ValueError(f"unknown graph family {family!r}")


# The 6-vertex example graph used throughout the documentation and tests.
SAMPLE_EDGES = ((0, 1), (1, 2), (1, 5), (2, 3), (2, 4), (3, 4), (3, 5), (4, 5))


def sample_graph() -> Graph:
    return Graph.from_edges(6, SAMPLE_EDGES, name="sample6")

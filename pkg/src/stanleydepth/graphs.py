"""Simple graphs on vertex set {1..n}: families, independent sets, dedup.

Only what the independence-ideal construction needs: enumeration of
independent sets, the independence number, canonical labeling for
isomorphism dedup in scans, and the standard named families used as
fixtures.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations, product

from .subsets import VarSet, check_lattice_guard


@dataclass(frozen=True)
class Graph:
    """An undirected simple graph; edges are (u, v) pairs with u < v."""

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"vertex count must be >= 0, got {self.n}")
        for e in self.edges:
            u, v = e
            if u == v:
                raise ValueError(f"loop edge {e} not allowed")
            if not (1 <= u < v <= self.n):
                raise ValueError(f"edge {e} must satisfy 1 <= u < v <= {self.n}")

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        normalized = frozenset((min(u, v), max(u, v)) for u, v in edges)
        return cls(n, normalized)

    def edge_masks(self) -> tuple[int, ...]:
        return tuple(
            sorted((1 << (u - 1)) | (1 << (v - 1)) for u, v in self.edges)
        )

    def is_complete(self) -> bool:
        return len(self.edges) == self.n * (self.n - 1) // 2

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)


def graph_families(kind: str, n: int) -> Graph:
    """Canonical labeled graph from one of the named families."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if kind == "complete":
        return Graph.from_edges(n, combinations(range(1, n + 1), 2))
    if kind == "cycle":
        if n < 3:
            raise ValueError(f"a cycle needs n >= 3, got {n}")
        return Graph.from_edges(
            n, [(i, i + 1) for i in range(1, n)] + [(1, n)]
        )
    if kind == "path":
        return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)])
    if kind == "discrete":
        return Graph(n, frozenset())
    raise ValueError(f"unknown graph family {kind!r}")


def independent_sets(graph: Graph, max_n: int | None = None) -> list[VarSet]:
    """All independent sets, the empty set included, in (size, mask) order."""
    check_lattice_guard(graph.n, max_n)
    edge_masks = graph.edge_masks()
    out = []
    for b in range(1 << graph.n):
        if all(em & b != em for em in edge_masks):
            out.append(b)
    out.sort(key=lambda b: (b.bit_count(), b))
    return [VarSet(b, graph.n) for b in out]


def independence_number(graph: Graph, max_n: int | None = None) -> int:
    return max(len(s) for s in independent_sets(graph, max_n))


def _refinement_signatures(graph: Graph, rounds: int = 3):
    """Iterated neighborhood signatures as nested tuples.

    The values are stable across graphs (no per-graph relabeling), so
    sorted class signatures agree between isomorphic graphs.  Vertices
    with different signatures cannot correspond under any isomorphism.
    """
    adj = {v: set() for v in range(1, graph.n + 1)}
    for u, v in graph.edges:
        adj[u].add(v)
        adj[v].add(u)
    sig = {v: (len(adj[v]),) for v in adj}
    for _ in range(rounds):
        sig = {
            v: (sig[v], tuple(sorted(sig[w] for w in adj[v])))
            for v in adj
        }
    return sig


def canonical_key(graph: Graph) -> str:
    """A labeling-invariant key: equal keys iff the graphs are isomorphic.

    Refinement splits the vertices into signature classes; the key is the
    minimum edge encoding over relabelings that send the classes, taken in
    signature order, onto consecutive position blocks.  The candidate set
    is defined purely by isomorphism invariants, so isomorphic graphs
    minimize over identical candidate sets; within classes all orderings
    are tried, which keeps the key exact.
    """
    n = graph.n
    if not graph.edges:
        return f"n{n}:"
    sig = _refinement_signatures(graph)
    classes: dict = {}
    for v in range(1, n + 1):
        classes.setdefault(sig[v], []).append(v)
    blocks = [classes[s] for s in sorted(classes)]
    offsets = []
    start = 1
    for block in blocks:
        offsets.append(start)
        start += len(block)
    best: tuple[tuple[int, int], ...] | None = None
    for orderings in product(*(permutations(block) for block in blocks)):
        position = {}
        for block_order, offset in zip(orderings, offsets):
            for j, v in enumerate(block_order):
                position[v] = offset + j
        relabeled = tuple(
            sorted(
                (min(position[u], position[v]), max(position[u], position[v]))
                for u, v in graph.edges
            )
        )
        if best is None or relabeled < best:
            best = relabeled
    assert best is not None
    return f"n{n}:" + ",".join(f"{u}-{v}" for u, v in best)


def all_graphs(n: int, dedup: bool = True) -> list[Graph]:
    """Every graph on n labeled vertices; one per isomorphism class if dedup.

    Dedup is a speed optimization for scans, not needed for soundness;
    pass ``dedup=False`` to get all 2^C(n,2) labeled graphs.
    """
    pairs = list(combinations(range(1, n + 1), 2))
    seen: set[str] = set()
    out: list[Graph] = []
    for bits in range(1 << len(pairs)):
        g = Graph(n, frozenset(p for i, p in enumerate(pairs) if bits >> i & 1))
        if dedup:
            key = canonical_key(g)
            if key in seen:
                continue
            seen.add(key)
        out.append(g)
    return out

"""Vertex graphs attached to a diagonal braiding, word supports, decompositions."""
from __future__ import annotations

from dataclasses import dataclass

from .braiding import BraidingMatrix, ptilde
from .scalars import RootFraction, ROOT_ONE

#: A monomial word: tuple of 1-based generator indices, e.g. (1, 2, 1).
Word = tuple


def _unit(i, n):
    return tuple(1 if k == i - 1 else 0 for k in range(n))


@dataclass(frozen=True)
class VertexGraph:
    """Undirected graph on vertices 1..n with a frozen edge set."""

    vertex_count: int
    edges: frozenset

    @classmethod
    def build(cls, n, edge_pairs):
        edges = frozenset((min(i, j), max(i, j)) for i, j in edge_pairs if i != j)
        return cls(n, edges)

    def has_edge(self, i, j):
        return (min(i, j), max(i, j)) in self.edges

    def neighbors(self, i):
        out = set()
        for a, b in self.edges:
            if a == i:
                out.add(b)
            elif b == i:
                out.add(a)
        return out

    def components(self, subset=None):
        """Connected components (sorted tuples, ordered by smallest vertex)."""
        if subset is None:
            todo = set(range(1, self.vertex_count + 1))
        else:
            todo = set(subset)
        comps = []
        while todo:
            seed = min(todo)
            seen = {seed}
            stack = [seed]
            while stack:
                v = stack.pop()
                for w in self.neighbors(v):
                    if w in todo and w not in seen:
                        seen.add(w)
                        stack.append(w)
            todo -= seen
            comps.append(tuple(sorted(seen)))
        comps.sort(key=lambda c: c[0])
        return comps

    def is_connected(self, subset) -> bool:
        subset = set(subset)
        if not subset:
            return True
        return len(self.components(subset)) == 1


def pure_graph(matrix: BraidingMatrix) -> VertexGraph:
    """Edge {i,j} exactly when q_ij * q_ji != 1."""
    n = matrix.n
    pairs = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if not ptilde(_unit(i, n), _unit(j, n), matrix).is_one():
                pairs.append((i, j))
    return VertexGraph.build(n, pairs)


def aug_graph(matrix: BraidingMatrix) -> VertexGraph:
    """Augmented graph: edge {i,j} when q_ij != 1 or q_ji != 1."""
    n = matrix.n
    pairs = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if not (matrix.entry(i, j).is_one() and matrix.entry(j, i).is_one()):
                pairs.append((i, j))
    return VertexGraph.build(n, pairs)


def support(word: Word) -> tuple:
    """Sorted distinct generator indices occurring in the word."""
    return tuple(sorted(set(word)))


def is_connected(word: Word, graph: VertexGraph) -> bool:
    """Whether the word's support induces a connected subgraph."""
    return graph.is_connected(support(word))


def is_weakly_disconnected(word: Word, graph: VertexGraph) -> bool:
    """Support is a single vertex, or disconnected in the given graph."""
    supp = support(word)
    return len(supp) == 1 or not graph.is_connected(supp)


def component_decomposition(word: Word, matrix: BraidingMatrix):
    """Sort a word's letters by pure-graph component, tracking the braiding scalar.

    Returns (c, factors) with the letters regrouped into one factor per
    component (components ordered by smallest vertex, letter order inside each
    factor preserved), and c the product of p_{x_a, x_b} over the adjacent
    transpositions performed, so that w = c * u_1 u_2 ... u_r holds in the
    Nichols algebra quotient (each swap crosses components, where the letters
    quantum-commute).
    """
    graph = pure_graph(matrix)
    comps = graph.components(support(word))
    rank_of = {}
    for idx, comp in enumerate(comps):
        for v in comp:
            rank_of[v] = idx
    letters = list(word)
    scalar = ROOT_ONE
    changed = True
    while changed:
        changed = False
        for t in range(len(letters) - 1):
            a, b = letters[t], letters[t + 1]
            if rank_of[a] > rank_of[b]:
                letters[t], letters[t + 1] = b, a
                scalar = scalar * matrix.entry(a, b)
                changed = True
    factors = []
    for comp in comps:
        members = set(comp)
        factors.append(tuple(l for l in letters if l in members))
    return scalar, factors

"""Finite preordered sets and the combinatorics built on their quotient
posets: comparability graphs, spanning forests, fundamental cycles, triangles,
and order automorphisms.

Conventions fixed here and relied on everywhere else:

* quotient classes are ordered by their minimal original element;
* comparability edges are all strict comparable class pairs, sorted
  lexicographically (not just Hasse covers -- triangles need every pair);
* the spanning forest is grown by BFS from the lowest-index vertex of each
  component, visiting neighbors in ascending order;
* triangles are sorted by (low, mid, high).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .errors import IndexOutOfRange, TooLarge

__all__ = [
    "Preorder",
    "QuotientPoset",
    "CompGraph",
    "SpanningForest",
    "Triangle",
    "build_preorder",
    "quotient",
    "comparability",
    "spanning_forest",
    "triangles",
    "poset_automorphisms",
]


@dataclass(frozen=True)
class Preorder:
    """A reflexive transitive relation on {0..n-1}, one bitmask row per element."""

    n: int
    rows: tuple  # rows[i] has bit j set iff i <= j

    def leq(self, i: int, j: int) -> bool:
        return bool(self.rows[i] >> j & 1)

    def pairs(self):
        """All comparable ordered pairs (i, j) with i <= j, lexicographic."""
        for i in range(self.n):
            row = self.rows[i]
            for j in range(self.n):
                if row >> j & 1:
                    yield (i, j)

    def strict_pairs(self):
        return [(i, j) for i, j in self.pairs() if not self.leq(j, i)]


def build_preorder(n: int, pairs) -> Preorder:
    """Smallest preorder on {0..n-1} containing the given pairs.

    Reflexive-transitive closure by Warshall on bitmask rows.
    """
    rows = [1 << i for i in range(n)]
    for i, j in pairs:
        if not (0 <= i < n and 0 <= j < n):
            raise IndexOutOfRange(f"pair ({i}, {j}) out of range for n={n}")
        rows[i] |= 1 << j
    for k in range(n):
        bit = 1 << k
        for i in range(n):
            if rows[i] & bit:
                rows[i] |= rows[k]
    return Preorder(n, tuple(rows))


@dataclass(frozen=True)
class QuotientPoset:
    """The partial-order quotient of a preorder by mutual comparability."""

    preorder: Preorder
    classes: tuple  # tuple of sorted member tuples, ordered by min member
    class_of: tuple  # element index -> class index
    lt: frozenset  # strict class pairs (x, y)

    @property
    def k(self) -> int:
        return len(self.classes)

    def class_size(self, x: int) -> int:
        return len(self.classes[x])

    def repr_of(self, x: int) -> int:
        return self.classes[x][0]

    def lt_pair(self, x: int, y: int) -> bool:
        return (x, y) in self.lt

    def leq_class(self, x: int, y: int) -> bool:
        return x == y or (x, y) in self.lt

    def class_interval(self, x: int, y: int):
        """Classes z with x <= z <= y in the quotient order."""
        return [z for z in range(self.k)
                if self.leq_class(x, z) and self.leq_class(z, y)]

    def interval_length(self, x: int, y: int) -> int:
        """Length of the longest chain from x to y (0 when x == y)."""
        if x == y:
            return 0
        inner = set(self.class_interval(x, y))
        memo = {y: 0}

        def chain_to_y(z):
            if z not in memo:
                memo[z] = 1 + max(chain_to_y(w) for w in inner
                                  if self.lt_pair(z, w))
            return memo[z]

        return chain_to_y(x)

    def max_interval_length(self) -> int:
        return max((self.interval_length(x, y) for x, y in self.lt), default=0)

    def topological_order(self):
        """Classes in a topological order of lt, ties by class index (= minimal member)."""
        indeg = [0] * self.k
        for _, y in self.lt:
            indeg[y] += 1
        # lt is transitively closed, so repeated min-selection is fine
        order, used = [], [False] * self.k
        for _ in range(self.k):
            z = min(i for i in range(self.k)
                    if not used[i] and all(used[w] or not self.lt_pair(w, i)
                                           for w in range(self.k)))
            used[z] = True
            order.append(z)
        return order

    def is_poset(self) -> bool:
        return all(len(c) == 1 for c in self.classes)


def quotient(p: Preorder) -> QuotientPoset:
    """Quotient by mutual comparability; classes ordered by minimal member."""
    n = p.n
    class_of = [-1] * n
    classes = []
    for i in range(n):
        if class_of[i] >= 0:
            continue
        members = tuple(j for j in range(n) if p.leq(i, j) and p.leq(j, i))
        idx = len(classes)
        classes.append(members)
        for j in members:
            class_of[j] = idx
    lt = frozenset(
        (a, b)
        for a in range(len(classes))
        for b in range(len(classes))
        if a != b and p.leq(classes[a][0], classes[b][0])
        and not p.leq(classes[b][0], classes[a][0]))
    return QuotientPoset(p, tuple(classes), tuple(class_of), lt)


@dataclass(frozen=True)
class CompGraph:
    """Comparability digraph of the quotient poset (all strict pairs)."""

    poset: QuotientPoset
    edges: tuple  # lexicographically sorted (x, y) with x lt y
    components: tuple  # vertex partition, each sorted, ordered by min vertex

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def cyclomatic(self) -> int:
        return self.m - self.poset.k + len(self.components)

    def edge_index(self, x: int, y: int) -> int:
        return self.edges.index((x, y))

    def neighbors(self, v: int):
        """Undirected neighbors in ascending order."""
        out = set()
        for x, y in self.edges:
            if x == v:
                out.add(y)
            elif y == v:
                out.add(x)
        return sorted(out)

    def is_connected(self) -> bool:
        return len(self.components) <= 1


def comparability(q: QuotientPoset) -> CompGraph:
    edges = tuple(sorted(q.lt))
    seen = [False] * q.k
    comps = []
    for start in range(q.k):
        if seen[start]:
            continue
        comp, queue = [], deque([start])
        seen[start] = True
        while queue:
            v = queue.popleft()
            comp.append(v)
            for x, y in edges:
                w = y if x == v else x if y == v else None
                if w is not None and not seen[w]:
                    seen[w] = True
                    queue.append(w)
        comps.append(tuple(sorted(comp)))
    return CompGraph(q, edges, tuple(comps))


@dataclass(frozen=True)
class FundamentalCycle:
    """A chord plus the unique tree semipath joining its endpoints.

    ``path`` runs from the chord's lower endpoint to its upper endpoint
    through tree edges; appending the chord (traversed upper -> lower)
    closes the simple cycle.
    """

    chord: tuple
    path: tuple  # vertex walk chord[0] .. chord[1]


@dataclass(frozen=True)
class SpanningForest:
    graph: CompGraph
    tree_edges: tuple  # subset of graph.edges
    chords: tuple  # remaining edges, in graph edge order
    fundamental_cycles: tuple  # one FundamentalCycle per chord

    def tree_path(self, u: int, v: int):
        """Unique semipath u .. v through tree edges (vertex list)."""
        parent = {u: None}
        queue = deque([u])
        adj = {}
        for x, y in self.tree_edges:
            adj.setdefault(x, set()).add(y)
            adj.setdefault(y, set()).add(x)
        while queue:
            w = queue.popleft()
            if w == v:
                break
            for nb in sorted(adj.get(w, ())):
                if nb not in parent:
                    parent[nb] = w
                    queue.append(nb)
        if v not in parent:
            raise KeyError(f"{u} and {v} are in different tree components")
        path = [v]
        while path[-1] != u:
            path.append(parent[path[-1]])
        return list(reversed(path))


def spanning_forest(g: CompGraph) -> SpanningForest:
    """BFS spanning forest (lowest-index roots, ascending neighbors)."""
    tree = []
    visited = set()
    for comp in g.components:
        root = comp[0]
        visited.add(root)
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in g.neighbors(v):
                if w not in visited:
                    visited.add(w)
                    e = (v, w) if (v, w) in set(g.edges) else (w, v)
                    tree.append(e)
                    queue.append(w)
    tree_set = set(tree)
    tree_edges = tuple(e for e in g.edges if e in tree_set)
    chords = tuple(e for e in g.edges if e not in tree_set)
    forest = SpanningForest(g, tree_edges, chords, ())
    cycles = tuple(
        FundamentalCycle(chord, tuple(forest.tree_path(chord[0], chord[1])))
        for chord in chords)
    return SpanningForest(g, tree_edges, chords, cycles)


@dataclass(frozen=True)
class Triangle:
    """A chain x < z < y with the indices of its three edges."""

    x: int
    z: int
    y: int
    i_xy: int
    i_xz: int
    i_zy: int


def triangles(q: QuotientPoset):
    """All chains x < z < y, sorted by (x, z, y)."""
    g = comparability(q)
    index = {e: i for i, e in enumerate(g.edges)}
    out = []
    for x in range(q.k):
        for z in range(q.k):
            if not q.lt_pair(x, z):
                continue
            for y in range(q.k):
                if q.lt_pair(z, y):
                    out.append(Triangle(x, z, y, index[(x, y)],
                                        index[(x, z)], index[(z, y)]))
    out.sort(key=lambda t: (t.x, t.z, t.y))
    return out


def poset_automorphisms(q: QuotientPoset, bound: int = 10):
    """All class permutations preserving the strict order and class sizes.

    Backtracking with degree/size pruning; identity is always first.
    """
    k = q.k
    if k > bound:
        raise TooLarge(f"{k} classes exceeds the automorphism bound {bound}")
    updeg = [sum(1 for y in range(k) if q.lt_pair(x, y)) for x in range(k)]
    downdeg = [sum(1 for y in range(k) if q.lt_pair(y, x)) for x in range(k)]
    size = [q.class_size(x) for x in range(k)]
    sigs = [(size[x], updeg[x], downdeg[x]) for x in range(k)]
    results = []

    def extend(perm, used):
        x = len(perm)
        if x == k:
            results.append(tuple(perm))
            return
        for y in range(k):
            if used[y] or sigs[x] != sigs[y]:
                continue
            ok = True
            for w in range(x):
                if q.lt_pair(w, x) != q.lt_pair(perm[w], y) or \
                   q.lt_pair(x, w) != q.lt_pair(y, perm[w]):
                    ok = False
                    break
            if ok:
                perm.append(y)
                used[y] = True
                extend(perm, used)
                perm.pop()
                used[y] = False

    extend([], [False] * k)
    results.sort()
    return results

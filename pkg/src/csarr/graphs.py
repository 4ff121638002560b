"""Simple graphs on vertices 1..n and the operations the classifiers need.

Vertices are always labeled 1..n; edges are unordered pairs.  All operations
that relabel (induced subgraphs, contractions) do so order-preservingly so
certificates replay deterministically.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

Edge = tuple[int, int]


class EmptySubsetError(ValueError):
    """Raised when an induced subgraph is requested on the empty set."""


class NotAnEdgeError(ValueError):
    """Raised when contracting a pair that is not an edge."""


class DisconnectedError(ValueError):
    """Raised by operations requiring a connected graph."""


def _norm_edge(i: int, j: int) -> Edge:
    if i == j:
        raise ValueError(f"loop at vertex {i}")
    return (i, j) if i < j else (j, i)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 1..n."""

    n: int
    edges: frozenset[Edge]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        for i, j in self.edges:
            if not (1 <= i < j <= self.n):
                raise ValueError(f"edge ({i},{j}) out of range 1..{self.n}")

    @staticmethod
    def from_edges(n: int, edges) -> "Graph":
        return Graph(n, frozenset(_norm_edge(i, j) for i, j in edges))

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def adjacency(self) -> dict[int, set[int]]:
        adj: dict[int, set[int]] = {v: set() for v in self.vertices}
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return adj

    def degree_sequence(self) -> tuple[int, ...]:
        adj = self.adjacency()
        return tuple(sorted(len(adj[v]) for v in self.vertices))

    def has_edge(self, i: int, j: int) -> bool:
        return _norm_edge(i, j) in self.edges

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        adj = self.adjacency()
        seen = {1}
        stack = [1]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n

    def components(self) -> list[frozenset[int]]:
        adj = self.adjacency()
        seen: set[int] = set()
        comps = []
        for v in self.vertices:
            if v in seen:
                continue
            comp = {v}
            stack = [v]
            seen.add(v)
            while stack:
                u = stack.pop()
                for w in adj[u]:
                    if w not in seen:
                        seen.add(w)
                        comp.add(w)
                        stack.append(w)
            comps.append(frozenset(comp))
        return comps


# ---------------------------------------------------------------------------
# Families
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GraphFamily:
    """Recognized family tag with canonical parameters.

    kind is one of "path", "cycle", "almost_path", "path_triangle",
    "triangle", "other".  Parameters follow the family conventions:
    almost_path(n, k) lives on n+1 vertices (path 1..n, extra edge {k, n+1}),
    path_triangle(n, k) on n+1 vertices (path 1..n, triangle at {k, k+1}).
    """

    kind: str
    n: int = 0
    k: int = 0

    def __str__(self) -> str:
        if self.kind in ("almost_path", "path_triangle"):
            return f"{self.kind}({self.n},{self.k})"
        if self.kind in ("path", "cycle"):
            return f"{self.kind}({self.n})"
        return self.kind


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    edges = [(i, i + 1) for i in range(1, n)] + [(1, n)]
    return Graph.from_edges(n, edges)


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, itertools.combinations(range(1, n + 1), 2))


def almost_path_graph(n: int, k: int) -> Graph:
    """Path 1..n plus an extra vertex n+1 joined to vertex k (1 < k < n)."""
    if not 1 < k < n:
        raise ValueError(f"almost path requires 1 < k < n, got n={n}, k={k}")
    edges = [(i, i + 1) for i in range(1, n)] + [(k, n + 1)]
    return Graph.from_edges(n + 1, edges)


def path_triangle_graph(n: int, k: int) -> Graph:
    """Path 1..n plus vertex n+1 joined to both k and k+1 (1 <= k < n)."""
    if not 1 <= k < n:
        raise ValueError(f"path-with-triangle requires 1 <= k < n, got n={n}, k={k}")
    edges = [(i, i + 1) for i in range(1, n)] + [(k, n + 1), (k + 1, n + 1)]
    return Graph.from_edges(n + 1, edges)


def induced_subgraph(g: Graph, s) -> Graph:
    """Induced subgraph on s, relabeled 1..|s| preserving sorted order."""
    s = sorted(set(s))
    if not s:
        raise EmptySubsetError("induced subgraph on empty vertex set")
    if s[0] < 1 or s[-1] > g.n:
        raise ValueError("vertex subset out of range")
    relabel = {v: i + 1 for i, v in enumerate(s)}
    keep = set(s)
    edges = [(relabel[i], relabel[j]) for i, j in g.edges if i in keep and j in keep]
    return Graph.from_edges(len(s), edges)


def contract_edge(g: Graph, e) -> Graph:
    """Contract an edge; the merged vertex takes the smaller label's slot.

    The larger endpoint j is removed and labels above j shift down by one.
    Loops and parallel edges created by the identification are dropped.
    """
    i, j = _norm_edge(*e)
    if (i, j) not in g.edges:
        raise NotAnEdgeError(f"({i},{j}) is not an edge")

    def relabel(v: int) -> int:
        if v == j:
            v = i
        return v - 1 if v > j else v

    edges = set()
    for a, b in g.edges:
        if (a, b) == (i, j):
            continue
        ra, rb = relabel(a), relabel(b)
        if ra != rb:
            edges.add(_norm_edge(ra, rb))
    return Graph(g.n - 1, frozenset(edges))


def restrict_vertex(g: Graph, v: int) -> Graph:
    """Delete v and add the clique on its neighbors, relabeled 1..n-1.

    Mirrors restriction of the associated arrangement to ker x_v.
    """
    if not 1 <= v <= g.n:
        raise ValueError(f"vertex {v} out of range")
    adj = g.adjacency()
    nbrs = sorted(adj[v])
    edges = set(g.edges)
    for a, b in itertools.combinations(nbrs, 2):
        edges.add((a, b))
    h = Graph(g.n, frozenset(edges))
    keep = [u for u in g.vertices if u != v]
    return induced_subgraph(h, keep)


# ---------------------------------------------------------------------------
# Connected subset enumeration
# ---------------------------------------------------------------------------

def connected_subsets(g: Graph) -> list[frozenset[int]]:
    """All nonempty vertex sets inducing a connected subgraph.

    Enumerates by neighbor augmentation anchored at each set's minimum
    label, so every set appears exactly once; the result is sorted by
    (size, sorted members).
    """
    adj = g.adjacency()
    out: list[frozenset[int]] = []

    def extend(sub: set[int], ext: set[int], closed: set[int], anchor: int):
        out.append(frozenset(sub))
        ext = sorted(ext)
        for idx, w in enumerate(ext):
            fresh = {u for u in adj[w] if u > anchor and u not in closed}
            new_ext = set(ext[idx + 1:]) | fresh
            extend(sub | {w}, new_ext, closed | fresh, anchor)

    for v in g.vertices:
        ext0 = {u for u in adj[v] if u > v}
        extend({v}, ext0, {v} | ext0, v)
    out.sort(key=lambda s: (len(s), sorted(s)))
    return out


def connected_subsets_brute(g: Graph) -> list[frozenset[int]]:
    """Reference enumeration by filtering all subsets (test oracle)."""
    out = []
    verts = list(g.vertices)
    for r in range(1, g.n + 1):
        for combo in itertools.combinations(verts, r):
            if induced_subgraph(g, combo).is_connected():
                out.append(frozenset(combo))
    out.sort(key=lambda s: (len(s), sorted(s)))
    return out


# ---------------------------------------------------------------------------
# Family recognition
# ---------------------------------------------------------------------------

def recognize_family(g: Graph) -> GraphFamily:
    """Classify a connected graph into the free families, or "other".

    Canonical parameters: almost_path k is the smaller of k, n+1-k;
    path_triangle k is the smaller of k, n-k.  A 3-cycle reports as
    "triangle" (it coincides with path_triangle(2, 1)).
    """
    if not g.is_connected():
        raise DisconnectedError("family recognition requires a connected graph")
    n, m = g.n, len(g.edges)
    adj = g.adjacency()
    degs = {v: len(adj[v]) for v in g.vertices}
    maxdeg = max(degs.values(), default=0)

    if m == n - 1:  # tree
        if maxdeg <= 2:
            return GraphFamily("path", n)
        deg3 = [v for v in g.vertices if degs[v] == 3]
        if maxdeg == 3 and len(deg3) == 1:
            legs = _legs_from(g, adj, deg3[0])
            if len(legs) == 3 and min(legs) == 1:
                legs.remove(1)
                a, b = legs
                path_n = a + b + 1
                k = min(a, b) + 1
                return GraphFamily("almost_path", path_n, k)
        return GraphFamily("other")

    if m == n:  # exactly one cycle
        if maxdeg == 2:
            return GraphFamily("triangle") if n == 3 else GraphFamily("cycle", n)
        cyc = _unique_cycle(g, adj)
        if cyc is not None and len(cyc) == 3 and maxdeg == 3:
            tails = []
            ok = True
            for v in g.vertices:
                if degs[v] == 3 and v not in cyc:
                    ok = False
                    break
            if ok:
                attach = [v for v in cyc if degs[v] == 3]
                if len(attach) <= 2:
                    for v in attach:
                        legs = _legs_from(g, adj, v, forbidden=set(cyc) - {v})
                        if len(legs) != 1:
                            ok = False
                            break
                        tails.append(legs[0])
                    if ok:
                        while len(tails) < 2:
                            tails.append(0)
                        a, b = sorted(tails)
                        path_n = a + b + 2
                        k = min(b + 1, path_n - (b + 1))
                        return GraphFamily("path_triangle", path_n, k)
        return GraphFamily("other")

    return GraphFamily("other")


def _legs_from(g: Graph, adj, center: int, forbidden: set[int] | None = None) -> list[int]:
    """Lengths of the simple paths hanging off a branch vertex.

    Returns None-like empty list if a leg is not a plain path.
    """
    forbidden = forbidden or set()
    legs = []
    for start in sorted(adj[center]):
        if start in forbidden:
            continue
        length = 1
        prev, cur = center, start
        while True:
            nxt = [w for w in adj[cur] if w != prev]
            if not nxt:
                break
            if len(nxt) > 1:
                return []
            prev, cur = cur, nxt[0]
            length += 1
        legs.append(length)
    return legs


def _unique_cycle(g: Graph, adj) -> list[int] | None:
    """Vertices of the unique cycle of a connected graph with m == n."""
    degs = {v: len(adj[v]) for v in g.vertices}
    pruned = dict(degs)
    alive = set(g.vertices)
    changed = True
    while changed:
        changed = False
        for v in sorted(alive):
            if pruned[v] <= 1:
                alive.discard(v)
                changed = True
                for w in adj[v]:
                    if w in alive:
                        pruned[w] -= 1
    return sorted(alive) if alive else None


# ---------------------------------------------------------------------------
# Obstruction graphs
# ---------------------------------------------------------------------------

_OBSTRUCTION_EDGES = {
    # Fixed by the chi-matching oracle (tests/test_obstructions.py): each is
    # the unique candidate whose arrangement matches its table row.
    1: (4, [(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]),            # diamond
    2: (4, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]),    # K4
    3: (5, [(1, 2), (1, 3), (1, 4), (1, 5)]),                    # star K_{1,4}
    4: (5, [(1, 2), (1, 3), (2, 3), (3, 4), (3, 5)]),            # cricket
    5: (5, [(1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5)]),    # bowtie
    6: (5, [(1, 2), (2, 3), (3, 4), (1, 4), (1, 5)]),            # C4 + pendant
    7: (6, [(1, 2), (1, 3), (2, 3), (1, 4), (2, 5), (3, 6)]),    # net
    8: (7, [(1, 2), (2, 3), (1, 4), (4, 5), (1, 6), (6, 7)]),    # spider(2,2,2)
}


def obstruction_graph(idx: int) -> Graph:
    """One of the eight minimal graphs obstructing freeness."""
    if idx not in _OBSTRUCTION_EDGES:
        raise ValueError(f"obstruction id must be 1..8, got {idx}")
    n, edges = _OBSTRUCTION_EDGES[idx]
    return Graph.from_edges(n, edges)


# ---------------------------------------------------------------------------
# Canonical labeling and generation
# ---------------------------------------------------------------------------

def _edge_mask(g: Graph, order: list[int]) -> int:
    """Adjacency bitmask of g relabeled by order (order[i] gets label i)."""
    pos = {v: i for i, v in enumerate(order)}
    mask = 0
    n = g.n
    for i, j in g.edges:
        a, b = pos[i], pos[j]
        if a > b:
            a, b = b, a
        mask |= 1 << (a * n + b)
    return mask


def _refine(g: Graph, colors: dict[int, int]) -> dict[int, int]:
    adj = g.adjacency()
    while True:
        sig = {
            v: (colors[v], tuple(sorted(colors[w] for w in adj[v])))
            for v in g.vertices
        }
        palette = {s: i for i, s in enumerate(sorted(set(sig.values())))}
        new = {v: palette[sig[v]] for v in g.vertices}
        if new == colors:
            return colors
        colors = new


def _classes(colors: dict[int, int]) -> list[list[int]]:
    out: dict[int, list[int]] = {}
    for v in sorted(colors):
        out.setdefault(colors[v], []).append(v)
    return [out[c] for c in sorted(out)]


def _homogeneous(g: Graph, classes: list[list[int]]) -> bool:
    for cls in classes:
        k = len(cls)
        if k > 1:
            inside = sum(1 for a, b in itertools.combinations(cls, 2) if g.has_edge(a, b))
            if inside not in (0, k * (k - 1) // 2):
                return False
    for c1, c2 in itertools.combinations(classes, 2):
        cross = sum(1 for a in c1 for b in c2 if g.has_edge(a, b))
        if cross not in (0, len(c1) * len(c2)):
            return False
    return True


def canonical_form(g: Graph) -> tuple[int, int]:
    """Canonical (n, adjacency-bitmask) pair; equal iff graphs isomorphic."""
    if g.n == 0:
        return (0, 0)
    colors = _refine(g, {v: 0 for v in g.vertices})
    best: list[int | None] = [None]

    def descend(colors: dict[int, int]):
        classes = _classes(colors)
        if all(len(c) == 1 for c in classes):
            mask = _edge_mask(g, [c[0] for c in classes])
            if best[0] is None or mask < best[0]:
                best[0] = mask
            return
        if _homogeneous(g, classes):
            order = [v for cls in classes for v in cls]
            mask = _edge_mask(g, order)
            if best[0] is None or mask < best[0]:
                best[0] = mask
            return
        target = next(c for c in classes if len(c) > 1)
        for v in target:
            new = dict(colors)
            for w in g.vertices:
                new[w] = 2 * colors[w] + (0 if w == v else 1)
            descend(_refine(g, new))

    descend(colors)
    assert best[0] is not None
    return (g.n, best[0])


def canonical_graph(g: Graph) -> Graph:
    """The canonically labeled representative of g's isomorphism class."""
    n, mask = canonical_form(g)
    edges = []
    for a in range(n):
        for b in range(a + 1, n):
            if mask >> (a * n + b) & 1:
                edges.append((a + 1, b + 1))
    return Graph.from_edges(n, edges)


def are_isomorphic(g: Graph, h: Graph) -> bool:
    return canonical_form(g) == canonical_form(h)


@lru_cache(maxsize=None)
def connected_graphs(n: int) -> tuple[Graph, ...]:
    """All connected graphs on n vertices up to isomorphism.

    Built by augmenting the (n-1)-vertex catalog with one new vertex over
    every nonempty neighborhood, deduplicating by canonical form.  Output
    is deterministic (sorted by edge count, then canonical mask).
    """
    if n < 1:
        return ()
    if n == 1:
        return (Graph(1, frozenset()),)
    seen: dict[tuple[int, int], Graph] = {}
    for base in connected_graphs(n - 1):
        for nbhd_mask in range(1, 1 << (n - 1)):
            nbrs = [v + 1 for v in range(n - 1) if nbhd_mask >> v & 1]
            edges = set(base.edges) | {(v, n) for v in nbrs}
            g = Graph(n, frozenset(edges))
            key = canonical_form(g)
            if key not in seen:
                seen[key] = canonical_graph(g)
    ordered = sorted(seen.values(), key=lambda g: (len(g.edges), canonical_form(g)[1]))
    return tuple(ordered)


# ---------------------------------------------------------------------------
# Input formats
# ---------------------------------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse "i-j,k-l,..." (1-based); vertex count is the largest label."""
    text = text.strip()
    if not text:
        raise ValueError("empty edge list")
    edges = []
    hi = 0
    for part in text.split(","):
        part = part.strip()
        a, sep, b = part.partition("-")
        if not sep:
            raise ValueError(f"bad edge {part!r}")
        i, j = int(a), int(b)
        edges.append((i, j))
        hi = max(hi, i, j)
    return Graph.from_edges(hi, edges)


def parse_graph6(text: str) -> Graph:
    """Decode a graph6 string (n <= 62 supported)."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    if not s:
        raise ValueError("empty graph6 string")
    data = [ord(c) - 63 for c in s]
    if any(b < 0 or b > 63 for b in data):
        raise ValueError("invalid graph6 character")
    n = data[0]
    if n == 63:
        raise ValueError("graph6 with n > 62 not supported")
    bits = []
    for b in data[1:]:
        bits.extend((b >> k) & 1 for k in range(5, -1, -1))
    need = n * (n - 1) // 2
    if len(bits) < need:
        raise ValueError("truncated graph6 string")
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((i + 1, j + 1))
            idx += 1
    return Graph.from_edges(n, edges)


def to_graph6(g: Graph) -> str:
    """Encode as graph6 (n <= 62)."""
    n = g.n
    if n > 62:
        raise ValueError("graph6 with n > 62 not supported")
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if g.has_edge(i + 1, j + 1) else 0)
    while len(bits) % 6:
        bits.append(0)
    chars = [chr(n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        chars.append(chr(val + 63))
    return "".join(chars)


_FAMILY_BUILDERS = {
    "path": lambda args: path_graph(int(args[0])),
    "cycle": lambda args: cycle_graph(int(args[0])),
    "complete": lambda args: complete_graph(int(args[0])),
    "almostpath": lambda args: almost_path_graph(int(args[0]), int(args[1])),
    "triangle-path": lambda args: path_triangle_graph(int(args[0]), int(args[1])),
}


def parse_graph_spec(spec: str) -> Graph:
    """Parse a graph given as family shorthand, edge list, or graph6.

    Family shorthands: path:n, cycle:n, complete:n, almostpath:n:k,
    triangle-path:n:k.  Strings matching "i-j,k-l" parse as edge lists;
    anything else is tried as graph6 (optionally prefixed "g6:").
    """
    spec = spec.strip()
    if not spec:
        raise ValueError("empty graph spec")
    head, _, rest = spec.partition(":")
    if head in _FAMILY_BUILDERS:
        args = rest.split(":") if rest else []
        try:
            return _FAMILY_BUILDERS[head](args)
        except (IndexError, ValueError) as exc:
            raise ValueError(f"bad family spec {spec!r}: {exc}") from exc
    if head == "g6":
        return parse_graph6(rest)
    if "-" in spec and spec[0].isdigit():
        return parse_edge_list(spec)
    return parse_graph6(spec)

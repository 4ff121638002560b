"""Integer-normal hyperplane arrangements and the subgraph-arrangement map.

An arrangement is an immutable ordered set of distinct primitive integer
normal vectors in a fixed ambient dimension.  Hyperplanes are kept sorted in
canonical order so equal arrangements have equal representations.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property

from .graphs import Graph, connected_subsets
from .linalg import (
    IntVec,
    bareiss_echelon,
    canonicalize_vector,
    in_row_space,
    kernel_basis,
)


@dataclass(frozen=True)
class Arrangement:
    """Central arrangement given by canonical primitive integer normals."""

    dim: int
    hyperplanes: tuple[IntVec, ...]

    @staticmethod
    def from_normals(dim: int, normals) -> "Arrangement":
        canon = {canonicalize_vector(v) for v in normals}
        for v in canon:
            if len(v) != dim:
                raise ValueError(f"normal {v} has wrong length for dim {dim}")
        return Arrangement(dim, tuple(sorted(canon)))

    def __len__(self) -> int:
        return len(self.hyperplanes)

    @cached_property
    def is_01(self) -> bool:
        return all(all(x in (0, 1) for x in v) for v in self.hyperplanes)

    def subsets(self) -> tuple[frozenset[int], ...]:
        """For a 0/1 arrangement, the vertex set of each hyperplane."""
        if not self.is_01:
            raise ValueError("subset view requires a 0/1 arrangement")
        return tuple(
            frozenset(i + 1 for i, x in enumerate(v) if x) for v in self.hyperplanes
        )

    def index_of(self, normal) -> int:
        return self.hyperplanes.index(canonicalize_vector(normal))

    def index_of_subset(self, s) -> int:
        vec = [0] * self.dim
        for i in s:
            vec[i - 1] = 1
        return self.index_of(vec)

    def rank(self, subset=None) -> int:
        """Rank over Q of the chosen normals (all of them by default)."""
        if subset is None:
            rows = self.hyperplanes
        else:
            rows = [self.hyperplanes[i] for i in subset]
        return len(bareiss_echelon(rows))

    def is_essential(self) -> bool:
        return self.rank() == self.dim

    def delete(self, h: int) -> "Arrangement":
        """Remove the hyperplane at index h."""
        hs = self.hyperplanes
        if not 0 <= h < len(hs):
            raise IndexError(f"hyperplane index {h} out of range")
        return Arrangement(self.dim, hs[:h] + hs[h + 1:])

    def restrict(self, h: int, basis=None) -> "Arrangement":
        """Restriction to the hyperplane at index h (dimension drops by 1).

        Coordinates on the hyperplane come from the canonical (HNF) basis of
        its integer kernel lattice, so the output is deterministic.  Distinct
        hyperplanes whose traces coincide collapse to one.
        """
        v = self.hyperplanes[h]
        rows = kernel_basis(v) if basis is None else [tuple(r) for r in basis]
        traced = set()
        for i, u in enumerate(self.hyperplanes):
            if i == h:
                continue
            w = tuple(sum(b[j] * u[j] for j in range(self.dim)) for b in rows)
            if any(w):
                traced.add(canonicalize_vector(w))
        return Arrangement(self.dim - 1, tuple(sorted(traced)))

    def localize(self, members) -> "Arrangement":
        """Sub-arrangement of the hyperplanes with the given indices.

        Callers pass the member set of a flat; the ambient dimension is
        unchanged.
        """
        idx = sorted(set(members))
        return Arrangement(self.dim, tuple(self.hyperplanes[i] for i in idx))

    def to_json(self) -> str:
        return json.dumps({"dim": self.dim, "normals": [list(v) for v in self.hyperplanes]})

    @staticmethod
    def from_json(text: str) -> "Arrangement":
        data = json.loads(text)
        return Arrangement.from_normals(data["dim"], data["normals"])


def csa_from_graph(g: Graph) -> Arrangement:
    """The arrangement with one 0/1 normal per connected vertex subset."""
    normals = []
    for s in connected_subsets(g):
        v = [0] * g.n
        for i in s:
            v[i - 1] = 1
        normals.append(tuple(v))
    return Arrangement(g.n, tuple(sorted(normals)))


def flat_members(a: Arrangement, spanning_normals) -> frozenset[int]:
    """Indices of all hyperplanes containing the flat cut out by the rows.

    The flat is the common kernel of ``spanning_normals``; a hyperplane
    contains it iff its normal lies in their row space.
    """
    ech = bareiss_echelon(spanning_normals)
    return frozenset(
        i for i, u in enumerate(a.hyperplanes) if in_row_space(u, ech)
    )


def coordinate_flat_members(a: Arrangement, vertices) -> frozenset[int]:
    """Members of the flat where the given coordinates vanish."""
    rows = []
    for v in vertices:
        e = [0] * a.dim
        e[v - 1] = 1
        rows.append(e)
    return flat_members(a, rows)


def edge_flat_members(a: Arrangement, i: int, j: int) -> frozenset[int]:
    """Members of the line x_i = -x_j, all other coordinates zero.

    For a subgraph arrangement this is the localization matching the
    contraction of edge {i, j}.
    """
    rows = []
    for v in range(1, a.dim + 1):
        if v in (i, j):
            continue
        e = [0] * a.dim
        e[v - 1] = 1
        rows.append(e)
    e = [0] * a.dim
    e[i - 1] = 1
    e[j - 1] = 1
    rows.append(e)
    return flat_members(a, rows)


def embed_contraction(a_contracted: Arrangement, n: int, i: int, j: int) -> Arrangement:
    """Image of a contracted graph's arrangement inside the original space.

    The contraction of edge {i, j} (j removed, labels above j shifted down)
    embeds by sending the merged coordinate to x_i + x_j and shifting the
    rest back up.
    """
    normals = []
    for u in a_contracted.hyperplanes:
        w = [0] * n
        for c, val in enumerate(u, start=1):
            orig = c if c < j else c + 1
            w[orig - 1] += val
            if orig == i:
                w[j - 1] += val
        normals.append(tuple(w))
    return Arrangement.from_normals(n, normals)

"""Intersection lattices of integer arrangements, with Möbius values.

Flats are identified by the set of hyperplanes containing them (a faithful
key, since every flat is the intersection of its members).  The lattice is
built level by level: for each flat we reduce all normals against a basis of
its member span; grouping the nonzero residues by direction yields every
cover of the flat together with its full member set in one pass.

The per-flat residue reduction and the Möbius recursion are the two hot
loops, so both are vectorized with numpy on int64 (entries are minors of
small integer matrices; a guard falls back to exact Python ints if they
could grow past the safe range).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import numpy as np

from .arrangements import Arrangement
from .linalg import IntVec
from .polynomials import IntPolynomial


@dataclass(frozen=True)
class Flat:
    """A lattice element: member hyperplanes and a basis of their span.

    ``members`` is a bitmask over hyperplane indices; ``normal_rows`` spans
    the normals of the members (so the flat subspace is its kernel) and
    ``codim`` is their rank.
    """

    members: int
    codim: int
    normal_rows: tuple[IntVec, ...]
    mobius: int = 0

    def member_indices(self) -> tuple[int, ...]:
        out = []
        m = self.members
        i = 0
        while m:
            if m & 1:
                out.append(i)
            m >>= 1
            i += 1
        return tuple(out)


class IntersectionLattice:
    """All flats of an arrangement, grouped by codimension."""

    def __init__(self, arrangement: Arrangement, flats: list[Flat]):
        self.arrangement = arrangement
        self.flats = flats
        self.by_codim: dict[int, list[Flat]] = {}
        for f in flats:
            self.by_codim.setdefault(f.codim, []).append(f)
        self._by_members = {f.members: f for f in flats}

    @property
    def rank(self) -> int:
        return max(self.by_codim)

    def flat_for_members(self, members: int) -> Flat:
        return self._by_members[members]

    def __len__(self) -> int:
        return len(self.flats)

    def contains(self, outer: Flat, inner: Flat) -> bool:
        """True iff the outer flat contains the inner one as subspaces."""
        return outer.members & inner.members == outer.members

    def charpoly(self) -> IntPolynomial:
        d = self.arrangement.dim
        coeffs = [0] * (d + 1)
        for f in self.flats:
            coeffs[d - f.codim] += f.mobius
        return IntPolynomial(tuple(coeffs))


def _residue_table(normals: np.ndarray, basis: list[np.ndarray], pivots: list[int]) -> np.ndarray:
    """Reduce every normal against the flat basis (Bareiss steps).

    Rows that come out zero lie in the span; the rest are scaled residues
    whose directions classify the covers of the flat.
    """
    r = normals.copy()
    prev = 1
    for row, p in zip(basis, pivots):
        piv = int(row[p])
        r = (r * piv - np.outer(r[:, p], row)) // prev
        prev = piv
    return r


def _residue_table_py(normals: list[IntVec], basis: list[tuple[int, ...]], pivots: list[int]):
    rows = [list(v) for v in normals]
    prev = 1
    for brow, p in zip(basis, pivots):
        piv = brow[p]
        for v in rows:
            c = v[p]
            for j in range(len(v)):
                v[j] = (v[j] * piv - c * brow[j]) // prev
        prev = piv
    return rows


def _canon_rows(tbl) -> list[tuple[int, ...] | None]:
    """Primitive sign-normalized form of each residue row (None if zero)."""
    out = []
    for row in tbl:
        g = 0
        for x in row:
            g = gcd(g, int(x))
        if g == 0:
            out.append(None)
            continue
        vals = [int(x) // g for x in row]
        for x in vals:
            if x:
                if x < 0:
                    vals = [-y for y in vals]
                break
        out.append(tuple(vals))
    return out


def build_lattice(a: Arrangement) -> IntersectionLattice:
    """Construct all flats and their Möbius values."""
    m = len(a.hyperplanes)
    d = a.dim
    normals_np = np.array(a.hyperplanes, dtype=np.int64).reshape(m, d)
    # Bareiss entries are minors of the normal matrix, so d^(d/2) * c^d bounds
    # them; c <= 8 keeps everything below int64 for every dimension used here.
    use_np = m > 0 and int(np.abs(normals_np).max(initial=0)) <= 8 and d <= 12

    ambient = Flat(members=0, codim=0, normal_rows=())
    levels: list[list[Flat]] = [[ambient]]
    seen: dict[int, None] = {0: None}
    # Working basis data per flat (kept separately; rows are np arrays).
    basis_data: dict[int, tuple[list, list[int]]] = {0: ([], [])}

    frontier = [ambient]
    while frontier:
        next_level: dict[int, Flat] = {}
        for flat in frontier:
            basis, pivots = basis_data[flat.members]
            if use_np:
                tbl = _residue_table(normals_np, basis, pivots)
            else:
                tbl = _residue_table_py(a.hyperplanes, basis, pivots)
            canon = _canon_rows(tbl)
            groups: dict[tuple[int, ...], list[int]] = {}
            for idx, key in enumerate(canon):
                if key is None:
                    continue
                groups.setdefault(key, []).append(idx)
            for key, idxs in groups.items():
                mask = flat.members
                for i in idxs:
                    mask |= 1 << i
                if mask in seen or mask in next_level:
                    continue
                child = Flat(members=mask, codim=flat.codim + 1, normal_rows=())
                next_level[mask] = child
                row = tbl[idxs[0]]
                if not use_np:
                    row = tuple(row)
                new_basis = basis + [row]
                lead = next(j for j in range(d) if int(row[j]) != 0)
                basis_data[mask] = (new_basis, pivots + [lead])
        frontier = sorted(next_level.values(), key=lambda f: f.members)
        for f in frontier:
            seen[f.members] = None
        levels.append(frontier)

    # Freeze normal_rows and compute Möbius values level by level.
    flats: list[Flat] = []
    word_count = (m + 63) // 64 if m else 1
    anc_masks = np.zeros((0, word_count), dtype=np.uint64)
    anc_mu = np.zeros((0,), dtype=np.int64)
    for level in levels:
        if not level:
            continue
        masks = np.zeros((len(level), word_count), dtype=np.uint64)
        for i, f in enumerate(level):
            mask = f.members
            for w in range(word_count):
                masks[i, w] = (mask >> (64 * w)) & 0xFFFFFFFFFFFFFFFF
        if len(anc_mu) == 0:
            mu_vals = np.ones(len(level), dtype=np.int64)
        else:
            mu_vals = np.zeros(len(level), dtype=np.int64)
            chunk = max(1, (1 << 22) // max(1, anc_masks.shape[0]))
            for start in range(0, len(level), chunk):
                blk = masks[start:start + chunk]
                # ancestor Y covers X iff members(Y) subset of members(X)
                sub = (anc_masks[None, :, :] & ~blk[:, None, :]) == 0
                is_anc = sub.all(axis=2).astype(np.int64)
                mu_vals[start:start + chunk] = -(is_anc @ anc_mu)
        for i, f in enumerate(level):
            basis, _ = basis_data[f.members]
            rows = tuple(tuple(int(x) for x in b) for b in basis)
            flats.append(Flat(f.members, f.codim, rows, int(mu_vals[i])))
        anc_masks = np.concatenate([anc_masks, masks], axis=0)
        anc_mu = np.concatenate([anc_mu, mu_vals])

    flats.sort(key=lambda f: (f.codim, f.members))
    return IntersectionLattice(a, flats)

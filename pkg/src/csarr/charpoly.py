"""Three independent characteristic polynomial engines and chamber counts.

The lattice/Möbius engine is the workhorse; deletion-restriction and
finite-field point counting cross-check it.  All three return identical
exact integer polynomials on valid inputs.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .arrangements import Arrangement
from .lattice import build_lattice
from .polynomials import IntPolynomial


class DimensionTooLarge(ValueError):
    """Finite-field counting requested above the supported dimension."""


def charpoly_lattice(a: Arrangement) -> IntPolynomial:
    """Characteristic polynomial via Möbius values of the flat lattice."""
    return build_lattice(a).charpoly()


def charpoly_delres(a: Arrangement, _memo: dict | None = None) -> IntPolynomial:
    """Characteristic polynomial via the deletion-restriction recursion.

    Always splits at the canonically first hyperplane; results are memoized
    on the canonical arrangement form within one computation.
    """
    memo: dict = {} if _memo is None else _memo

    def rec(arr: Arrangement) -> IntPolynomial:
        if not arr.hyperplanes:
            return IntPolynomial.monomial(arr.dim)
        key = (arr.dim, arr.hyperplanes)
        hit = memo.get(key)
        if hit is not None:
            return hit
        val = rec(arr.delete(0)) - rec(arr.restrict(0))
        memo[key] = val
        return val

    return rec(a)


def _primes_above(bound: int, count: int) -> list[int]:
    out = []
    q = max(2, bound + 1)
    while len(out) < count:
        if all(q % p for p in range(2, int(q ** 0.5) + 1)):
            out.append(q)
        q += 1
    return out


def hadamard_prime_floor(a: Arrangement) -> int:
    """d^(d/2) * cmax^d, an upper bound for all d x d minors of the normals."""
    d = a.dim
    cmax = max((abs(x) for v in a.hyperplanes for x in v), default=1)
    bound_sq = d ** d * cmax ** (2 * d)
    b = 1
    while b * b < bound_sq:
        b += 1
    return b


def count_complement_points(a: Arrangement, q: int) -> int:
    """Number of points of F_q^d lying on none of the hyperplanes.

    Counts projective representatives (first nonzero coordinate 1) with
    vectorized modular arithmetic and scales by q - 1; the origin counts
    only for the empty arrangement.
    """
    d = a.dim
    m = len(a.hyperplanes)
    if m == 0:
        return q ** d
    normals = np.array(a.hyperplanes, dtype=np.int64) % q
    proj_total = 0
    for j in range(d):
        free = d - 1 - j
        const = normals[:, j].copy()          # x_j = 1
        coeff = normals[:, j + 1:]            # free coordinates
        if free == 0:
            proj_total += int(np.all(const % q != 0))
            continue
        layer = 0
        total_pts = q ** free
        chunk = 1 << 16
        for start in range(0, total_pts, chunk):
            idx = np.arange(start, min(start + chunk, total_pts), dtype=np.int64)
            pts = np.empty((free, len(idx)), dtype=np.int64)
            rem = idx
            for c in range(free):
                pts[c] = rem % q
                rem = rem // q
            vals = (coeff @ pts + const[:, None]) % q
            layer += int(np.count_nonzero(np.all(vals != 0, axis=0)))
        proj_total += layer
    return (q - 1) * proj_total


def charpoly_finite_field(a: Arrangement, max_dim: int = 5) -> IntPolynomial:
    """Characteristic polynomial by finite-field point counts.

    Evaluates the point count at dim+1 primes above the Hadamard bound on
    the normal matrix minors (so all ranks are preserved mod q) and
    Lagrange-interpolates the degree-dim polynomial exactly.
    """
    d = a.dim
    if d > max_dim:
        raise DimensionTooLarge(f"dim {d} exceeds finite-field cap {max_dim}")
    primes = _primes_above(hadamard_prime_floor(a), d + 1)
    points = [(q, count_complement_points(a, q)) for q in primes]
    coeffs = _lagrange_int(points, d)
    return IntPolynomial(tuple(coeffs))


def _lagrange_int(points: list[tuple[int, int]], degree: int) -> list[int]:
    """Interpolate exact integer coefficients through the given points."""
    coeffs = [Fraction(0)] * (degree + 1)
    for i, (xi, yi) in enumerate(points):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for k, (xk, _) in enumerate(points):
            if k == i:
                continue
            new = [Fraction(0)] * (len(basis) + 1)
            for p, c in enumerate(basis):
                new[p] -= c * xk
                new[p + 1] += c
            basis = new
            denom *= xi - xk
        scale = Fraction(yi) / denom
        for p, c in enumerate(basis):
            coeffs[p] += c * scale
    out = []
    for c in coeffs:
        if c.denominator != 1:
            raise ArithmeticError("interpolation produced non-integer coefficient")
        out.append(int(c))
    return out


def chambers(a: Arrangement) -> int:
    """Number of chambers of a real arrangement: (-1)^dim chi(-1)."""
    chi = charpoly_lattice(a)
    val = chi(-1)
    return val if a.dim % 2 == 0 else -val


def whitney_charpoly(a: Arrangement) -> IntPolynomial:
    """Brute-force subset expansion (test oracle; |A| <= ~14 only)."""
    from itertools import combinations

    d = a.dim
    m = len(a.hyperplanes)
    coeffs = [0] * (d + 1)
    coeffs[d] += 1
    for r in range(1, m + 1):
        for combo in combinations(range(m), r):
            rk = a.rank(combo)
            coeffs[d - rk] += (-1) ** r
    return IntPolynomial(tuple(coeffs))

"""Exact integer linear algebra: ranks, Hermite forms, kernels, feasibility.

Everything here works over Z/Q with Python integers or Fractions; no
floating point is used anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

IntVec = tuple[int, ...]


def canonicalize_vector(v: Sequence[int]) -> IntVec:
    """Scale an integer vector to its canonical primitive form.

    Divides by the gcd of the entries and flips signs so the first nonzero
    entry is positive.  The zero vector is rejected.
    """
    g = 0
    for x in v:
        g = gcd(g, x)
    if g == 0:
        raise ValueError("zero vector has no canonical form")
    w = [x // g for x in v]
    for x in w:
        if x != 0:
            if x < 0:
                w = [-y for y in w]
            break
    return tuple(w)


def bareiss_echelon(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    """Fraction-free (Bareiss) row echelon form of an integer matrix.

    Returns the nonzero echelon rows; the number of rows is the rank.
    Intermediate entries are minors of the input, so they stay small for
    the small-dimension matrices used throughout.
    """
    m = [list(r) for r in rows if any(r)]
    if not m:
        return []
    ncols = len(m[0])
    echelon: list[list[int]] = []
    prev_pivot = 1
    col = 0
    while m and col < ncols:
        pivot_row = None
        for i, r in enumerate(m):
            if r[col] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            col += 1
            continue
        piv = m.pop(pivot_row)
        p = piv[col]
        reduced = []
        for r in m:
            if r[col] != 0 or True:
                new = [(p * r[j] - r[col] * piv[j]) // prev_pivot for j in range(ncols)]
            if any(new):
                reduced.append(new)
        m = reduced
        echelon.append(piv)
        prev_pivot = p
        col += 1
    return echelon


def int_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank over Q of integer row vectors (fraction-free elimination)."""
    return len(bareiss_echelon(rows))


def in_row_space(vec: Sequence[int], echelon: Sequence[Sequence[int]]) -> bool:
    """Test whether an integer vector lies in the span of echelon rows."""
    v = list(vec)
    for row in echelon:
        lead = next(j for j, x in enumerate(row) if x != 0)
        if v[lead] != 0:
            p = row[lead]
            c = v[lead]
            v = [p * v[j] - c * row[j] for j in range(len(v))]
    return not any(v)


def hermite_normal_form(rows: Sequence[Sequence[int]]) -> list[IntVec]:
    """Row-style Hermite normal form of the lattice spanned by integer rows.

    Pivots are positive, entries above each pivot are reduced into
    [0, pivot).  The result is the canonical basis of the row lattice.
    """
    m = [list(r) for r in rows if any(r)]
    if not m:
        return []
    ncols = len(m[0])
    result: list[list[int]] = []
    col = 0
    while m and col < ncols:
        work = [r for r in m if r[col] != 0]
        rest = [r for r in m if r[col] == 0]
        if not work:
            col += 1
            continue
        # Euclidean reduction on the current column.
        while len(work) > 1:
            work.sort(key=lambda r: abs(r[col]))
            base = work[0]
            new_work = [base]
            for r in work[1:]:
                q = r[col] // base[col]
                nr = [r[j] - q * base[j] for j in range(ncols)]
                if nr[col] != 0:
                    new_work.append(nr)
                elif any(nr):
                    rest.append(nr)
            if len(new_work) == len(work) and len(new_work) > 1:
                # All remaining leading entries are equal; subtract pairwise.
                base = new_work[0]
                tail = []
                for r in new_work[1:]:
                    nr = [r[j] - base[j] for j in range(ncols)]
                    if nr[col] != 0:
                        tail.append(nr)
                    elif any(nr):
                        rest.append(nr)
                new_work = [base] + tail
            work = new_work
        pivot = work[0]
        if pivot[col] < 0:
            pivot = [-x for x in pivot]
        result.append(pivot)
        m = rest
        col += 1
    # Reduce entries above pivots.
    for i in reversed(range(len(result))):
        lead = next(j for j, x in enumerate(result[i]) if x != 0)
        p = result[i][lead]
        for k in range(i):
            c = result[k][lead]
            q = c // p
            if q:
                result[k] = [result[k][j] - q * result[i][j] for j in range(len(result[k]))]
    return [tuple(r) for r in result]


def kernel_basis(v: Sequence[int]) -> list[IntVec]:
    """Canonical basis (HNF) of the integer kernel lattice {x : v.x = 0}.

    Requires a nonzero vector; the kernel is saturated, so the HNF basis is
    a canonical rational basis of the hyperplane ker(v).
    """
    rows = _kernel_rows_gcd_chain(v)
    return hermite_normal_form(rows)


def _kernel_rows_gcd_chain(v: Sequence[int]) -> list[list[int]]:
    """Kernel lattice basis via the running-gcd construction."""
    d = len(v)
    if not any(v):
        raise ValueError("kernel of zero vector is ambient space")
    # g[i] = gcd(v[0..i]), with Bezout coefficient rows c[i] s.t. c[i].v = g[i].
    rows: list[list[int]] = []
    g = 0
    coeff = [0] * d
    for i in range(d):
        if v[i] == 0:
            e = [0] * d
            e[i] = 1
            rows.append(e)
            continue
        if g == 0:
            g = abs(v[i])
            coeff = [0] * d
            coeff[i] = 1 if v[i] > 0 else -1
            continue
        new_g = gcd(g, v[i])
        # w = (v[i]/new_g) * coeff - (g/new_g) * e_i  kills v.
        w = [(v[i] // new_g) * coeff[j] for j in range(d)]
        w[i] -= g // new_g
        rows.append(w)
        # Update Bezout row: new_g = a*g + b*v[i].
        a, b = _bezout(g, v[i])
        coeff = [a * coeff[j] for j in range(d)]
        coeff[i] += b
        g = new_g
    return rows


def _bezout(a: int, b: int) -> tuple[int, int]:
    """Coefficients (x, y) with x*a + y*b = gcd(a, b)."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_s, old_t = -old_s, -old_t
    return old_s, old_t


def kernel_basis_pivot(v: Sequence[int]) -> list[IntVec]:
    """Kernel basis via pivot elimination, HNF-saturated.

    Independent construction used to cross-check ``kernel_basis``: builds
    the rational kernel from pivot relations, saturates it by clearing
    denominators of the reduced echelon form, and returns its HNF.
    """
    d = len(v)
    p = next(i for i in range(d) if v[i] != 0)
    rows = []
    for i in range(d):
        if i == p:
            continue
        w = [0] * d
        w[i] = v[p]
        w[p] = -v[i]
        rows.append(w)
    # Saturate: solve each row as a rational vector with content 1.
    saturated = [list(canonicalize_vector(r)) for r in rows]
    return hermite_normal_form(saturated)


def feasible_interior(rows: Sequence[Sequence[int]]) -> list[Fraction] | None:
    """Find x with row.x >= 1 for every row, or None if infeasible.

    This decides strict feasibility of the open cone {x : row.x > 0 for all
    rows} exactly (scale any strict solution to reach 1).  Implemented as a
    phase-I simplex over Fractions with Bland's rule.
    """
    nrows = len(rows)
    if nrows == 0:
        return []
    d = len(rows[0])
    # Variables: x = xp - xn (2d), slack s_i >= 0, artificial a_i >= 0:
    #   row.x - s_i + a_i = 1.  Minimize sum of artificials.
    ncols = 2 * d + nrows  # structural columns (artificials handled via basis)
    # Tableau: nrows x (ncols + 1); basis starts as the artificials.
    tab = []
    for i, row in enumerate(rows):
        line = [Fraction(0)] * (ncols + 1)
        for j in range(d):
            line[j] = Fraction(row[j])
            line[d + j] = Fraction(-row[j])
        line[2 * d + i] = Fraction(-1)  # slack
        line[ncols] = Fraction(1)
        tab.append(line)
    basis = [ncols + i for i in range(nrows)]  # virtual artificial ids
    # Objective row for phase I: minimize sum of artificial rows.
    obj = [Fraction(0)] * (ncols + 1)
    for line in tab:
        for j in range(ncols + 1):
            obj[j] += line[j]
    while True:
        enter = -1
        for j in range(ncols):
            if obj[j] > 0:
                enter = j
                break
        if enter < 0:
            break
        leave = -1
        best = None
        for i in range(nrows):
            if tab[i][enter] > 0:
                ratio = tab[i][ncols] / tab[i][enter]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave < 0:
            return None  # unbounded phase-I cannot happen; defensive
        piv = tab[leave][enter]
        tab[leave] = [x / piv for x in tab[leave]]
        for i in range(nrows):
            if i != leave and tab[i][enter]:
                c = tab[i][enter]
                tab[i] = [tab[i][j] - c * tab[leave][j] for j in range(ncols + 1)]
        if obj[enter]:
            c = obj[enter]
            obj = [obj[j] - c * tab[leave][j] for j in range(ncols + 1)]
        basis[leave] = enter
    if obj[ncols] != 0:
        return None  # artificials cannot be driven to zero: infeasible
    x = [Fraction(0)] * d
    for i, b in enumerate(basis):
        if b < d:
            x[b] += tab[i][ncols]
        elif b < 2 * d:
            x[b - d] -= tab[i][ncols]
    return x

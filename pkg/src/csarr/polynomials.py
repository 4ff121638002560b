"""Exact integer polynomials in one variable t."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class IntPolynomial:
    """Polynomial with integer coefficients, stored low degree first."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = self.coeffs
        while len(c) > 1 and c[-1] == 0:
            c = c[:-1]
        object.__setattr__(self, "coeffs", tuple(c))

    @staticmethod
    def zero() -> "IntPolynomial":
        return IntPolynomial((0,))

    @staticmethod
    def monomial(degree: int, coeff: int = 1) -> "IntPolynomial":
        return IntPolynomial((0,) * degree + (coeff,))

    @staticmethod
    def from_roots(roots) -> "IntPolynomial":
        p = IntPolynomial((1,))
        for r in roots:
            p = p * IntPolynomial((-r, 1))
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_monic(self) -> bool:
        return self.coeffs[-1] == 1

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return IntPolynomial(tuple(
            (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
        ))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return IntPolynomial(tuple(
            (a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)
        ))

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(tuple(out))

    def __call__(self, t: int) -> int:
        val = 0
        for c in reversed(self.coeffs):
            val = val * t + c
        return val

    def shift_degree(self, k: int) -> "IntPolynomial":
        """Multiply by t**k."""
        return IntPolynomial((0,) * k + self.coeffs)

    def divide_linear(self, r: int) -> "IntPolynomial | None":
        """Exact quotient by (t - r), or None if r is not a root."""
        if self.degree == 0:
            return None
        out = [0] * self.degree
        acc = self.coeffs[-1]
        for i in range(self.degree - 1, -1, -1):
            out[i] = acc
            acc = self.coeffs[i] + acc * r
        if acc != 0:
            return None
        return IntPolynomial(tuple(out))

    def __str__(self) -> str:
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                body = str(abs(c))
            else:
                mag = "" if abs(c) == 1 else str(abs(c))
                body = f"{mag}t" if i == 1 else f"{mag}t^{i}"
            if not terms:
                terms.append(body if c > 0 else f"-{body}")
            else:
                terms.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(terms) if terms else "0"


def integer_roots(p: IntPolynomial) -> tuple[list[int], IntPolynomial]:
    """Deflate a monic polynomial by its integer roots.

    Returns the sorted multiset of integer roots and the rootless monic
    remainder (the constant 1 when the polynomial splits completely).
    """
    if not p.is_monic():
        raise ValueError("integer root deflation requires a monic polynomial")
    roots: list[int] = []
    while p.degree > 0 and p.coeffs[0] == 0:
        roots.append(0)
        p = IntPolynomial(p.coeffs[1:])
    while p.degree > 0:
        c0 = abs(p.coeffs[0])
        found = None
        for d in sorted(_divisors(c0)):
            for r in (d, -d):
                if p(r) == 0:
                    found = r
                    break
            if found is not None:
                break
        if found is None:
            break
        roots.append(found)
        p = p.divide_linear(found)
    return sorted(roots), p


def _divisors(n: int) -> list[int]:
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return out


def factored_str(p: IntPolynomial) -> str:
    """Display using integer-root deflation, e.g. (t - 1)(t - 4)^2."""
    if not p.is_monic():
        return str(p)
    roots, rem = integer_roots(p)
    parts = []
    seen: dict[int, int] = {}
    for r in roots:
        seen[r] = seen.get(r, 0) + 1
    for r in sorted(seen):
        if r == 0:
            base = "t"
        elif r > 0:
            base = f"(t - {r})"
        else:
            base = f"(t + {-r})"
        parts.append(base if seen[r] == 1 else f"{base}^{seen[r]}")
    if rem.degree > 0:
        parts.append(f"({rem})")
    return "".join(parts) if parts else "1"

"""Small exact linear algebra over Fraction (row echelon, rank, charpoly)."""

from __future__ import annotations

from fractions import Fraction


def echelon(rows) -> list:
    """Reduced row echelon basis of the span of ``rows`` (list of Fraction lists)."""
    basis: list = []  # (pivot, row)
    for r in rows:
        v = [Fraction(x) for x in r]
        for piv, b in basis:
            if v[piv]:
                c = v[piv]
                v = [x - c * y for x, y in zip(v, b)]
        piv = next((i for i, x in enumerate(v) if x), None)
        if piv is None:
            continue
        c = v[piv]
        v = [x / c for x in v]
        for k, (p2, b) in enumerate(basis):
            if b[piv]:
                d = b[piv]
                basis[k] = (p2, [x - d * y for x, y in zip(b, v)])
        basis.append((piv, v))
    basis.sort(key=lambda pb: pb[0])
    return [b for _, b in basis]


def rank(rows) -> int:
    return len(echelon(rows))


def in_span(basis, v) -> bool:
    """Is ``v`` in the span of an echelon ``basis``?"""
    v = [Fraction(x) for x in v]
    for b in basis:
        piv = next(i for i, x in enumerate(b) if x)
        if v[piv]:
            c = v[piv]
            v = [x - c * y for x, y in zip(v, b)]
    return not any(v)


def charpoly(m) -> list:
    """Characteristic polynomial det(xI - M), coefficients lowest degree first.

    Faddeev-LeVerrier, exact over the rationals.
    """
    n = len(m)
    a = [[Fraction(x) for x in row] for row in m]
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    mk = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{n-k+1} I
        prod = [[sum(a[i][l] * mk[l][j] for l in range(n)) for j in range(n)] for i in range(n)]
        for i in range(n):
            prod[i][i] += coeffs[n - k + 1]
        mk = prod
        am = [[sum(a[i][l] * mk[l][j] for l in range(n)) for j in range(n)] for i in range(n)]
        coeffs[n - k] = -sum(am[i][i] for i in range(n)) / k
    return coeffs

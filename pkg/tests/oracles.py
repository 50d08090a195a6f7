"""Brute-force reference computations that share no code path with the package."""

from fractions import Fraction
from itertools import product


def solve_weights(rows):
    """Solve E w = 1 over the rationals by Gauss-Jordan; returns (w1,w2,w3;d) integral."""
    A = [[Fraction(v) for v in r] + [Fraction(1)] for r in rows]
    n = 3
    for c in range(n):
        p = next(r for r in range(c, n) if A[r][c] != 0)
        A[c], A[p] = A[p], A[c]
        A[c] = [v / A[c][c] for v in A[c]]
        for r in range(n):
            if r != c and A[r][c] != 0:
                f = A[r][c]
                A[r] = [a - f * b for a, b in zip(A[r], A[c])]
    w = [A[r][n] for r in range(n)]
    d = 1
    for x in w:
        d = d * x.denominator // _gcd(d, x.denominator)
    return tuple(int(x * d) for x in w) + (d,)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def column_transpose(terms):
    """Transpose of a 3x3 exponent matrix given as rows, by explicit indexing."""
    return [[terms[i][j] for i in range(3)] for j in range(3)]


def frac_det(M):
    """Determinant by Gaussian elimination over Fraction."""
    A = [[Fraction(v) for v in row] for row in M]
    n = len(A)
    det = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if A[r][c] != 0), None)
        if p is None:
            return 0
        if p != c:
            A[c], A[p] = A[p], A[c]
            det = -det
        det *= A[c][c]
        for r in range(c + 1, n):
            f = A[r][c] / A[c][c]
            A[r] = [a - f * b for a, b in zip(A[r], A[c])]
    return int(det)


def frac_rank(M):
    A = [[Fraction(v) for v in row] for row in M]
    rank = 0
    for c in range(len(A[0]) if A else 0):
        p = next((r for r in range(rank, len(A)) if A[r][c] != 0), None)
        if p is None:
            continue
        A[rank], A[p] = A[p], A[rank]
        for r in range(len(A)):
            if r != rank and A[r][c] != 0:
                f = A[r][c] / A[rank][c]
                A[r] = [a - f * b for a, b in zip(A[r], A[rank])]
        rank += 1
    return rank


def series_coeffs(num, den, n):
    """Coefficients of prod(1-t^i for i in num)/prod(1-t^j for j in den) up to t^n.

    Multiplies truncated geometric series term by term (schoolbook convolution).
    """
    a = [1] + [0] * n
    for i in num:
        f = [0] * (n + 1)
        f[0] = 1
        if i <= n:
            f[i] = -1
        a = _conv(a, f, n)
    for j in den:
        g = [1 if k % j == 0 else 0 for k in range(n + 1)]
        a = _conv(a, g, n)
    return a


def _conv(a, b, n):
    out = [0] * (n + 1)
    for i, x in enumerate(a):
        if x:
            for j in range(n + 1 - i):
                out[i + j] += x * b[j]
    return out


def lattice_count(weights, k):
    """Number of monomials x^a y^b z^c with weighted degree k, by enumeration."""
    w1, w2, w3 = weights
    return sum(1 for a, b in product(range(k // w1 + 1), range(k // w2 + 1))
               if a * w1 + b * w2 <= k and (k - a * w1 - b * w2) % w3 == 0)


def lowest_pure_powers(poly):
    """For each variable, the smallest e with x_i^e in the support (None if absent)."""
    out = []
    for j in range(3):
        es = [m[j] for m in poly.support() if m[j] and sum(m) == m[j]]
        out.append(min(es) if es else None)
    return out

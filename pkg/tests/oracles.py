"""Independent brute-force references used by the tests."""

from fractions import Fraction
from itertools import combinations
from math import gcd


def det(M):
    """Exact determinant by fraction Gaussian elimination."""
    A = [[Fraction(x) for x in row] for row in M]
    n = len(A)
    sign = 1
    for c in range(n):
        piv = next((r for r in range(c, n) if A[r][c]), None)
        if piv is None:
            return 0
        if piv != c:
            A[c], A[piv] = A[piv], A[c]
            sign = -sign
        for r in range(c + 1, n):
            f = A[r][c] / A[c][c]
            A[r] = [x - f * y for x, y in zip(A[r], A[c])]
    out = Fraction(sign)
    for i in range(n):
        out *= A[i][i]
    return int(out)


def invariant_factors_by_minors(M):
    """Invariant factors from gcds of k x k minors: d_k = D_k / D_{k-1}."""
    if not M or not M[0]:
        return ()
    rows, cols = len(M), len(M[0])
    factors = []
    prev = 1
    for k in range(1, min(rows, cols) + 1):
        D = 0
        for rs in combinations(range(rows), k):
            for cs in combinations(range(cols), k):
                D = gcd(D, det([[M[r][c] for c in cs] for r in rs]))
        if D == 0:
            break
        factors.append(D // prev)
        prev = D
    return tuple(factors)


def gf2_solutions(rows, ncols):
    """All x in GF(2)^ncols with rows . x = 0, by enumeration."""
    out = []
    for bits in range(2 ** ncols):
        x = [(bits >> (ncols - 1 - i)) & 1 for i in range(ncols)]
        if all(sum(a * b for a, b in zip(r, x)) % 2 == 0 for r in rows):
            out.append(tuple(x))
    return out

"""Integer abelianization of finite presentations via Smith normal form."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .groups import Presentation, exponent_sum

IntMatrix = list[list[int]]


@dataclass(frozen=True)
class H1Invariants:
    rank: int
    torsion: tuple[int, ...] = ()

    def __str__(self) -> str:
        parts = []
        if self.rank == 1:
            parts.append("Z")
        elif self.rank > 1:
            parts.append(f"Z^{self.rank}")
        parts += [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"

    def to_json(self) -> dict:
        return {"rank": self.rank, "torsion": list(self.torsion), "text": str(self)}


def exponent_matrix(p: Presentation) -> IntMatrix:
    index = {g: i for i, g in enumerate(p.generators)}
    rows = []
    for r in p.relators:
        row = [0] * len(p.generators)
        for g, e in r.syllables:
            row[index[g]] += e
        rows.append(row)
    return rows


def _diagonalize(rows: IntMatrix) -> list[int]:
    """Nonzero diagonal entries of some matrix equivalent to ``rows``."""
    A = [r[:] for r in rows if any(r)]
    diag = []
    while A:
        ncols = len(A[0])
        # pivot: entry of least absolute value
        best = None
        for i, row in enumerate(A):
            for j, x in enumerate(row):
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
                    if best[0] == 1:
                        break
            if best and best[0] == 1:
                break
        _, pi, pj = best
        A[0], A[pi] = A[pi], A[0]
        if pj:
            for row in A:
                row[0], row[pj] = row[pj], row[0]
        while True:
            p = A[0][0]
            dirty = False
            # clear column 0
            for row in A[1:]:
                if row[0]:
                    q = row[0] // p
                    if q:
                        for j in range(ncols):
                            row[j] -= q * A[0][j]
                    if row[0]:
                        dirty = True
            # clear row 0
            top = A[0]
            for j in range(1, ncols):
                if top[j]:
                    q = top[j] // p
                    if q:
                        for row in A:
                            row[j] -= q * row[0]
                    if top[j]:
                        dirty = True
            if not dirty:
                break
            # move the smallest remaining entry of row/col 0 to the pivot
            cand = [(abs(A[i][0]), i, 0) for i in range(len(A)) if A[i][0]]
            cand += [(abs(A[0][j]), 0, j) for j in range(ncols) if A[0][j]]
            _, i, j = min(cand)
            if i:
                A[0], A[i] = A[i], A[0]
            if j:
                for row in A:
                    row[0], row[j] = row[j], row[0]
        diag.append(abs(A[0][0]))
        A = [row[1:] for row in A[1:]]
        A = [row for row in A if any(row)]
    return diag


def smith_normal_form(M: IntMatrix) -> tuple[int, ...]:
    """Nonzero invariant factors ``d1 | d2 | ...`` of ``M`` (zeros omitted)."""
    diag = _diagonalize(M)
    # diag(a, b) ~ diag(gcd, lcm); repeat until the chain divides
    diag.sort()
    for i in range(len(diag)):
        for j in range(i + 1, len(diag)):
            a, b = diag[i], diag[j]
            d = gcd(a, b)
            diag[i], diag[j] = d, a // d * b
    return tuple(diag)


def h1(p: Presentation) -> H1Invariants:
    factors = smith_normal_form(exponent_matrix(p))
    return H1Invariants(
        rank=len(p.generators) - len(factors),
        torsion=tuple(d for d in factors if d > 1),
    )


def gf2_rank(rows: list[int]) -> int:
    """Rank over GF(2) of rows given as int bitsets."""
    basis: dict[int, int] = {}
    for r in rows:
        while r:
            top = r.bit_length() - 1
            if top not in basis:
                basis[top] = r
                break
            r ^= basis[top]
    return len(basis)


def h1_z2_dim(p: Presentation) -> int:
    rows = []
    for r in p.relators:
        bits = 0
        for i, g in enumerate(p.generators):
            if exponent_sum(r, g) % 2:
                bits |= 1 << i
        rows.append(bits)
    return len(p.generators) - gf2_rank(rows)

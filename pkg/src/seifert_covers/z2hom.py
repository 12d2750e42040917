"""Homomorphisms to Z/2 as solutions of a GF(2) linear system."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import CapacityError, PresentationError
from .groups import Presentation, exponent_sum

MAX_EPIMORPHISMS = 2 ** 20


@dataclass(frozen=True)
class Z2Hom:
    """A bit for each generator, in the presentation's generator order."""

    generators: tuple[str, ...]
    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "bits", tuple(int(b) for b in self.bits))
        if len(self.generators) != len(self.bits):
            raise PresentationError("homomorphism must assign one bit per generator")
        if any(b not in (0, 1) for b in self.bits):
            raise PresentationError("homomorphism bits must be 0 or 1")

    @classmethod
    def from_mapping(cls, generators, mapping) -> "Z2Hom":
        unknown = set(mapping) - set(generators)
        if unknown:
            raise PresentationError(f"unknown generator(s): {', '.join(sorted(unknown))}")
        return cls(tuple(generators), tuple(mapping.get(g, 0) for g in generators))

    def __getitem__(self, g: str) -> int:
        try:
            return self.bits[self.generators.index(g)]
        except ValueError:
            raise KeyError(g) from None

    def get(self, g: str, default: int = 0) -> int:
        return self[g] if g in self.generators else default

    def as_dict(self) -> dict[str, int]:
        return dict(zip(self.generators, self.bits))

    def ones(self) -> list[str]:
        return [g for g, b in zip(self.generators, self.bits) if b]

    def is_zero(self) -> bool:
        return not any(self.bits)

    def __str__(self) -> str:
        return ",".join(f"{g}={b}" for g, b in zip(self.generators, self.bits))


def parse_hom(text: str, p: Presentation) -> Z2Hom:
    """Parse ``gen=bit,...``; unlisted generators get 0."""
    mapping: dict[str, int] = {}
    for item in filter(None, (t.strip() for t in text.split(","))):
        name, sep, bit = item.partition("=")
        name, bit = name.strip(), bit.strip()
        if not sep or not name:
            raise PresentationError(f"expected gen=bit, got {item!r}")
        if name not in p.generators:
            raise PresentationError(f"unknown generator {name!r}")
        if bit not in ("0", "1"):
            raise PresentationError(f"bit for {name} must be 0 or 1, got {bit!r}")
        mapping[name] = int(bit)
    return Z2Hom.from_mapping(p.generators, mapping)


@dataclass(frozen=True)
class GF2Matrix:
    rows: tuple[tuple[int, ...], ...]
    ncols: int

    @property
    def nrows(self) -> int:
        return len(self.rows)


def constraint_matrix(p: Presentation) -> GF2Matrix:
    rows = tuple(
        tuple(exponent_sum(r, g) % 2 for g in p.generators) for r in p.relators
    )
    return GF2Matrix(rows, len(p.generators))


def gf2_nullspace(M: GF2Matrix) -> list[tuple[int, ...]]:
    """Basis of ``{x : Mx = 0}``, one vector per free column, in column order."""
    n = M.ncols
    rows = [list(r) for r in M.rows]
    pivots: list[int] = []
    rank = 0
    for col in range(n):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                rows[i] = [x ^ y for x, y in zip(rows[i], rows[rank])]
        pivots.append(col)
        rank += 1
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        x = [0] * n
        x[f] = 1
        for i, pc in enumerate(pivots):
            x[pc] = rows[i][f]
        basis.append(tuple(x))
    return basis


def enumerate_epimorphisms(p: Presentation) -> list[Z2Hom]:
    basis = gf2_nullspace(constraint_matrix(p))
    if 2 ** len(basis) > MAX_EPIMORPHISMS:
        raise CapacityError(f"{2 ** len(basis) - 1} epimorphisms exceeds the cap")
    sols = set()
    for coeffs in product((0, 1), repeat=len(basis)):
        if not any(coeffs):
            continue
        x = [0] * len(p.generators)
        for c, v in zip(coeffs, basis):
            if c:
                x = [a ^ b for a, b in zip(x, v)]
        sols.add(tuple(x))
    return [Z2Hom(p.generators, bits) for bits in sorted(sols)]


def is_valid(p: Presentation, phi: Z2Hom) -> bool:
    if phi.generators != p.generators:
        raise PresentationError("homomorphism is defined on a different generator list")
    if phi.is_zero():
        return False
    bit = phi.as_dict()
    for r in p.relators:
        if sum(e * bit[g] for g, e in r.syllables) % 2:
            return False
    return True

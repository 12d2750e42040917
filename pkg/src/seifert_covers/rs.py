"""Reidemeister-Schreier rewriting for index-2 subgroups.

The kernel of an epimorphism ``phi: G -> Z/2`` has the Schreier transversal
``{1, q}`` for any generator ``q`` with ``phi(q) = 1``.  Cosets are labelled
0 (the kernel) and 1 (``q * kernel``).  The Schreier generator for coset ``c``
and generator ``x`` is ``rep(c) x rep(c + phi(x))^-1``; it is named ``x`` for
``c = 0`` and ``x'`` for ``c = 1``.  The one trivial generator ``q`` (coset 0)
is dropped.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CapacityError, PresentationError
from .groups import Presentation, Word, free_reduce, tietze_simplify
from .z2hom import Z2Hom, is_valid

MAX_EXPONENT = 99


@dataclass(frozen=True)
class SchreierGenerator:
    coset: int
    source: str
    name: str

    def as_word(self, q: str, phi: Z2Hom) -> Word:
        """The generator as a word in the original group."""
        head = Word.gen(q) if self.coset else Word()
        tail = Word.gen(q, -1) if (self.coset + phi[self.source]) % 2 else Word()
        return free_reduce(head * Word.gen(self.source) * tail)


def default_transversal(p: Presentation, phi: Z2Hom) -> str:
    """``h`` when it maps to 1, otherwise the first generator mapping to 1."""
    if "h" in p.generators and phi["h"]:
        return "h"
    ones = phi.ones()
    if not ones:
        raise PresentationError("the zero homomorphism has no transversal")
    return ones[0]


def _check(p: Presentation, phi: Z2Hom, q: str | None) -> str:
    if not is_valid(p, phi):
        raise PresentationError(f"{phi} is not an epimorphism onto Z/2")
    if q is None:
        return default_transversal(p, phi)
    if q not in p.generators or not phi[q]:
        raise PresentationError(f"transversal generator {q!r} must map to 1")
    return q


def _kernel_name(x: str, coset: int) -> str:
    return f"{x}'" if coset else x


def schreier_generators(p: Presentation, phi: Z2Hom, q: str | None = None) -> list[SchreierGenerator]:
    q = _check(p, phi, q)
    out = []
    for x in p.generators:
        for c in (0, 1):
            if c == 0 and x == q:
                continue
            out.append(SchreierGenerator(c, x, _kernel_name(x, c)))
    names = [s.name for s in out]
    if len(set(names)) != len(names):
        raise PresentationError("kernel generator names collide; rename primed generators")
    return out


def rewrite_relator(p: Presentation, phi: Z2Hom, q: str, r: Word, coset: int) -> Word:
    """Rewrite ``u r u^-1`` (``u = 1`` or ``q``) in the Schreier generators."""
    bit = phi.as_dict()
    c = coset
    out: list[tuple[str, int]] = []
    for g, e in r.syllables:
        if abs(e) > MAX_EXPONENT:
            raise CapacityError(f"exponent {e} exceeds the rewriting cap {MAX_EXPONENT}")
        flip = bit[g]
        if e > 0:
            for _ in range(e):
                if not (c == 0 and g == q):
                    out.append((_kernel_name(g, c), 1))
                c ^= flip
        else:
            for _ in range(-e):
                c ^= flip
                if not (c == 0 and g == q):
                    out.append((_kernel_name(g, c), -1))
    if c != coset:
        raise PresentationError(f"relator {r} does not lie in the kernel")
    return free_reduce(Word(out))


def kernel_presentation(
    p: Presentation, phi: Z2Hom, q: str | None = None, simplify: bool = False
) -> Presentation:
    q = _check(p, phi, q)
    gens = tuple(s.name for s in schreier_generators(p, phi, q))
    rels = []
    for r in p.relators:
        for c in (0, 1):
            rels.append(rewrite_relator(p, phi, q, r, c))
    kernel = Presentation(gens, tuple(rels))
    return tietze_simplify(kernel) if simplify else kernel

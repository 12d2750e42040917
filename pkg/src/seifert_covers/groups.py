"""Finitely presented groups: words, free reduction, substitution, Tietze moves.

Generators are plain strings (``"s1"``, ``"v2"``, ``"h"``, ``"s1'"``).  A word
is stored as a tuple of ``(generator, exponent)`` syllables so that relators
such as ``s^9 h^-7`` stay short.
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field

from .errors import PresentationError

Syllable = tuple[str, int]

_TOKEN = re.compile(r"([A-Za-z_][A-Za-z0-9_']*)(?:\^(-?\d+))?")


class Word:
    """An element of a free group, written as syllables ``g^e``.

    The stored syllables are kept exactly as given (zero exponents dropped);
    use :func:`free_reduce` for the reduced form.
    """

    __slots__ = ("syllables",)

    def __init__(self, syllables: Iterable[Syllable] = ()):
        self.syllables: tuple[Syllable, ...] = tuple(
            (g, int(e)) for g, e in syllables if e != 0
        )

    @classmethod
    def gen(cls, name: str, exp: int = 1) -> "Word":
        return cls(((name, exp),))

    @classmethod
    def parse(cls, text: str) -> "Word":
        """Parse the debug rendering, e.g. ``"s1^2 h^-1 v1"``; ``"1"`` is empty."""
        text = text.strip()
        if text in ("", "1"):
            return cls()
        out = []
        for tok in text.split():
            m = _TOKEN.fullmatch(tok)
            if m is None:
                raise PresentationError(f"bad syllable {tok!r}")
            out.append((m.group(1), int(m.group(2) or 1)))
        return cls(out)

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.syllables + other.syllables)

    def __pow__(self, n: int) -> "Word":
        if n < 0:
            return self.inverse() ** (-n)
        return Word(self.syllables * n)

    def inverse(self) -> "Word":
        return Word((g, -e) for g, e in reversed(self.syllables))

    def letters(self) -> list[Syllable]:
        """Expand into exponent +-1 letters."""
        out = []
        for g, e in self.syllables:
            step = 1 if e > 0 else -1
            out.extend([(g, step)] * abs(e))
        return out

    def generators(self) -> set[str]:
        return {g for g, _ in self.syllables}

    def length(self) -> int:
        return sum(abs(e) for _, e in self.syllables)

    def is_empty(self) -> bool:
        return not self.syllables

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Word) and self.syllables == other.syllables

    def __hash__(self) -> int:
        return hash(self.syllables)

    def __str__(self) -> str:
        if not self.syllables:
            return "1"
        return " ".join(g if e == 1 else f"{g}^{e}" for g, e in self.syllables)

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"


def word(*parts: str | Word) -> Word:
    """Concatenate debug strings and words: ``word("s1^2", "h")``."""
    out = Word()
    for p in parts:
        out = out * (p if isinstance(p, Word) else Word.parse(p))
    return out


def commutator(x: Word, y: Word) -> Word:
    """``[x, y] = x y x^-1 y^-1``."""
    return x * y * x.inverse() * y.inverse()


def free_reduce(w: Word) -> Word:
    stack: list[list] = []
    for g, e in w.syllables:
        if stack and stack[-1][0] == g:
            stack[-1][1] += e
            if stack[-1][1] == 0:
                stack.pop()
        else:
            stack.append([g, e])
    return Word((g, e) for g, e in stack)


def cyclic_reduce(w: Word) -> Word:
    """Freely and cyclically reduce (the result is a conjugate of ``w``)."""
    syl = list(free_reduce(w).syllables)
    while len(syl) > 1 and syl[0][0] == syl[-1][0]:
        g, e = syl.pop()
        merged = syl[0][1] + e
        if merged:
            syl[0] = (g, merged)
        else:
            syl.pop(0)
    return Word(syl)


def exponent_sum(w: Word, g: str) -> int:
    return sum(e for x, e in w.syllables if x == g)


def substitute(w: Word, mapping: Mapping[str, Word]) -> Word:
    """Image of ``w`` under the homomorphism ``g -> mapping[g]``, freely reduced."""
    out: list[Syllable] = []
    for g, e in w.syllables:
        try:
            image = mapping[g]
        except KeyError:
            raise PresentationError(f"substitution undefined on generator {g!r}") from None
        out.extend((image ** e).syllables)
    return free_reduce(Word(out))


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relators: tuple[Word, ...] = field(default=())

    def __post_init__(self) -> None:
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "relators", tuple(self.relators))
        if len(set(self.generators)) != len(self.generators):
            raise PresentationError("duplicate generator names")
        declared = set(self.generators)
        for r in self.relators:
            extra = r.generators() - declared
            if extra:
                raise PresentationError(f"undeclared generators {sorted(extra)} in relator {r}")

    @classmethod
    def parse(cls, generators: str | Sequence[str], relators: Iterable[str] = ()) -> "Presentation":
        if isinstance(generators, str):
            generators = [g.strip() for g in generators.split(",") if g.strip()]
        return cls(tuple(generators), tuple(Word.parse(r) for r in relators))

    def __str__(self) -> str:
        gens = ", ".join(self.generators)
        rels = ", ".join(str(r) for r in self.relators)
        return f"< {gens} | {rels} >"


def _eliminable(rel: Word) -> list[str]:
    """Generators occurring exactly once, with exponent +-1, in ``rel``."""
    counts: dict[str, int] = {}
    for g, e in rel.syllables:
        counts[g] = counts.get(g, 0) + abs(e)
    return [g for g, c in counts.items() if c == 1]


def _solve_for(rel: Word, g: str) -> Word:
    """Given ``rel`` containing ``g^+-1`` once, return ``w`` with ``g = w``."""
    syl = rel.syllables
    i = next(i for i, (x, _) in enumerate(syl) if x == g)
    sign = syl[i][1]
    rest = Word(syl[i + 1:] + syl[:i])
    # g^sign * rest = 1 (up to conjugation)
    return rest.inverse() if sign == 1 else rest


def tietze_simplify(p: Presentation, max_rounds: int | None = None) -> Presentation:
    """Best-effort simplification by removing trivial relators and
    eliminating generators that appear exactly once with exponent +-1
    in some relator.  The group is unchanged up to isomorphism.
    """
    gens = list(p.generators)
    rels = [cyclic_reduce(r) for r in p.relators]
    budget = len(gens) if max_rounds is None else max_rounds
    while True:
        seen = set()
        kept = []
        for r in rels:
            if r.is_empty() or r in seen:
                continue
            seen.add(r)
            kept.append(r)
        rels = kept
        if budget <= 0:
            break
        choice = None
        for idx in sorted(range(len(rels)), key=lambda i: rels[i].length()):
            cands = _eliminable(rels[idx])
            if cands:
                # keep earlier-declared generators
                choice = (idx, max(cands, key=gens.index))
                break
        if choice is None:
            break
        budget -= 1
        idx, g = choice
        image = free_reduce(_solve_for(rels[idx], g))
        mapping = {x: Word.gen(x) for x in gens}
        mapping[g] = image
        rels = [cyclic_reduce(substitute(r, mapping)) for i, r in enumerate(rels) if i != idx]
        gens.remove(g)
    return Presentation(tuple(gens), tuple(rels))

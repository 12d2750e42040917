"""Seifert invariants, their validity rules and the fundamental group template."""

from __future__ import annotations

import re
from dataclasses import dataclass, field, replace
from enum import Enum
from fractions import Fraction
from math import gcd
from typing import NamedTuple

from .errors import InvalidInvariantsError, PreconditionError, PresentationError
from .groups import Presentation, Word, commutator


class TypeSymbol(str, Enum):
    O1 = "o1"
    O2 = "o2"
    N1 = "n1"
    N2 = "n2"
    N3 = "n3"
    N4 = "n4"

    @property
    def orientable_base(self) -> bool:
        return self in (TypeSymbol.O1, TypeSymbol.O2)

    @property
    def orientable_total(self) -> bool:
        return self in (TypeSymbol.O1, TypeSymbol.N2)

    @property
    def min_genus(self) -> int:
        return _MIN_GENUS[self]

    def __str__(self) -> str:
        return self.value


_MIN_GENUS = {
    TypeSymbol.O1: 0,
    TypeSymbol.O2: 1,
    TypeSymbol.N1: 1,
    TypeSymbol.N2: 1,
    TypeSymbol.N3: 2,
    TypeSymbol.N4: 3,
}


class FiberPair(NamedTuple):
    a: int
    b: int

    def __str__(self) -> str:
        return f"({self.a},{self.b})"


@dataclass(frozen=True)
class SeifertInvariants:
    """The symbol ``{e; (type, g); (a1,b1), ..., (an,bn)}``.

    Construction does not validate; call :func:`validate` or
    :func:`require_valid`.
    """

    e: int
    type: TypeSymbol
    g: int
    fibers: tuple[FiberPair, ...] = field(default=())

    def __post_init__(self) -> None:
        object.__setattr__(self, "type", TypeSymbol(self.type))
        object.__setattr__(self, "fibers", tuple(FiberPair(int(a), int(b)) for a, b in self.fibers))

    @property
    def n(self) -> int:
        return len(self.fibers)

    @property
    def gprime(self) -> int:
        """Number of ``v`` generators: ``2g`` over an orientable base, else ``g``."""
        return 2 * self.g if self.type.orientable_base else self.g

    def canonical(self) -> "SeifertInvariants":
        """Same symbol with the fiber list sorted; only used for comparisons."""
        return replace(self, fibers=tuple(sorted(self.fibers)))

    def __str__(self) -> str:
        return format_seifert(self)


@dataclass
class ValidationReport:
    ok: bool
    violations: list[str]


def validate(inv: SeifertInvariants) -> ValidationReport:
    violations = []
    if inv.g < 0:
        violations.append(f"g: genus must be non-negative, got {inv.g}")
    if inv.g < inv.type.min_genus:
        violations.append(f"g: {inv.type} requires g ≥ {inv.type.min_genus}")
    for k, (a, b) in enumerate(inv.fibers, start=1):
        if a == 0:
            violations.append(f"fiber {k}: a must be nonzero")
        elif gcd(a, b) != 1:
            violations.append(f"fiber {k}: gcd({a},{b}) ≠ 1")
    return ValidationReport(ok=not violations, violations=violations)


def require_valid(inv: SeifertInvariants) -> SeifertInvariants:
    report = validate(inv)
    if not report.ok:
        raise InvalidInvariantsError("; ".join(report.violations))
    return inv


def epsilon_vector(inv: SeifertInvariants) -> tuple[int, ...]:
    """Signs ``v_j h v_j^-1 = h^eps_j`` for ``j = 1..g'``."""
    require_valid(inv)
    n = inv.gprime
    t = inv.type
    if t in (TypeSymbol.O1, TypeSymbol.N1):
        return (1,) * n
    if t in (TypeSymbol.O2, TypeSymbol.N2):
        return (-1,) * n
    if t is TypeSymbol.N3:
        return (1,) + (-1,) * (n - 1)
    return (1, 1) + (-1,) * (n - 2)


def generator_names(inv: SeifertInvariants) -> tuple[str, ...]:
    return (
        tuple(f"s{k}" for k in range(1, inv.n + 1))
        + tuple(f"v{j}" for j in range(1, inv.gprime + 1))
        + ("h",)
    )


def fundamental_presentation(inv: SeifertInvariants) -> Presentation:
    eps = epsilon_vector(inv)
    h = Word.gen("h")
    s = [Word.gen(f"s{k}") for k in range(1, inv.n + 1)]
    v = [Word.gen(f"v{j}") for j in range(1, inv.gprime + 1)]
    rels = []
    for sk, (a, b) in zip(s, inv.fibers):
        rels.append(commutator(sk, h))
        rels.append(Word(((sk.syllables[0][0], a), ("h", b))))
    for vj, ej in zip(v, eps):
        rels.append(vj * h * vj.inverse() * h ** (-ej))
    if inv.type.orientable_base:
        V = Word()
        for i in range(0, len(v), 2):
            V = V * commutator(v[i], v[i + 1])
    else:
        V = Word(tuple((f"v{j}", 2) for j in range(1, inv.gprime + 1)))
    long_rel = h ** (-inv.e)
    for sk in s:
        long_rel = long_rel * sk
    rels.append(long_rel * V)
    return Presentation(generator_names(inv), tuple(rels))


def build_FOC(fibers) -> list[FiberPair]:
    out = []
    for a, b in fibers:
        out += [FiberPair(a, b), FiberPair(a, -b)]
    return out


def build_Fm(fibers, m: int) -> list[FiberPair]:
    fibers = list(fibers)
    if not 0 <= m <= len(fibers):
        raise PreconditionError(f"m={m} out of range for {len(fibers)} fibers")
    out = []
    for k, (a, b) in enumerate(fibers):
        if k < m:
            if a % 2:
                raise PreconditionError(f"fiber {k + 1}: a={a} is odd, cannot halve")
            out.append(FiberPair(a // 2, b))
        else:
            out += [FiberPair(a, b), FiberPair(a, b)]
    return out


def euler_number(inv: SeifertInvariants) -> Fraction:
    require_valid(inv)
    return Fraction(inv.e) + sum((Fraction(b, a) for a, b in inv.fibers), Fraction(0))


def chi_orb(inv: SeifertInvariants) -> Fraction:
    """Orbifold Euler characteristic of the base."""
    require_valid(inv)
    base = 2 - 2 * inv.g if inv.type.orientable_base else 2 - inv.g
    return Fraction(base) - sum((1 - Fraction(1, abs(a)) for a, _ in inv.fibers), Fraction(0))


def normalize_fiber_signs(inv: SeifertInvariants) -> SeifertInvariants:
    """Replace every ``(a, -b)`` by ``(a, b)``; legal only for non-orientable total spaces."""
    if inv.type.orientable_total:
        raise PreconditionError(f"cannot flip fiber signs on orientable type {inv.type}")
    return replace(inv, fibers=tuple(FiberPair(a, abs(b)) for a, b in inv.fibers))


# -- text form ---------------------------------------------------------------

_SYMBOL_TOKENS = re.compile(r"\s*(?:(?P<int>-?\d+)|(?P<type>[a-z]\d*)|(?P<punct>[{};(),]))")


class SymbolSyntaxError(PresentationError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


def format_seifert(inv: SeifertInvariants) -> str:
    fibers = ",".join(str(FiberPair(*f)) for f in inv.fibers)
    return f"{{{inv.e};({inv.type.value},{inv.g});{fibers}}}"


def parse_seifert(text: str) -> SeifertInvariants:
    """Parse ``{E;(T,G);(A1,B1),...,(An,Bn)}``; whitespace is ignored.

    Only syntax is checked here, semantic rules are left to :func:`validate`.
    """
    tokens: list[tuple[str, str, int]] = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _SYMBOL_TOKENS.match(text, pos)
        if m is None or m.end() == pos:
            raise SymbolSyntaxError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    i = 0

    def take(kind: str, value: str | None = None) -> str:
        nonlocal i
        k, v, p = tokens[i]
        if k != kind or (value is not None and v != value):
            want = value if value is not None else kind
            got = v or "end of input"
            raise SymbolSyntaxError(f"expected {want!r}, got {got!r}", p)
        i += 1
        return v

    def peek(value: str) -> bool:
        return tokens[i][1] == value

    take("punct", "{")
    e = int(take("int"))
    take("punct", ";")
    take("punct", "(")
    k, v, p = tokens[i]
    if k != "type" or v not in {t.value for t in TypeSymbol}:
        raise SymbolSyntaxError(f"unknown type symbol {v!r}", p)
    i += 1
    take("punct", ",")
    g = int(take("int"))
    take("punct", ")")
    take("punct", ";")
    fibers = []
    while not peek("}"):
        if fibers:
            take("punct", ",")
        take("punct", "(")
        a = int(take("int"))
        take("punct", ",")
        b = int(take("int"))
        take("punct", ")")
        fibers.append(FiberPair(a, b))
    take("punct", "}")
    take("end")
    return SeifertInvariants(e, TypeSymbol(v), g, tuple(fibers))

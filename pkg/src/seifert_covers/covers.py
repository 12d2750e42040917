"""Closed-form Seifert invariants of the double cover attached to ``phi``.

Two regimes:

* ``phi(h) = 1``: the fiber unwraps, the base is unchanged
  (:func:`cover_fiber_case`).
* ``phi(h) = 0``: the base orbifold is doubly covered
  (:func:`cover_base_case`), split into orientation covers, the exotic
  all-``v_j`` covers of ``n2, n3, n4``, and the ordinary covers.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum

from .errors import InternalConsistencyError, PreconditionError, PresentationError
from .seifert import (
    SeifertInvariants,
    TypeSymbol,
    build_FOC,
    build_Fm,
    epsilon_vector,
    fundamental_presentation,
    normalize_fiber_signs,
    require_valid,
)
from .z2hom import Z2Hom, is_valid

O1, O2, N1, N2, N3, N4 = TypeSymbol


class CaseTag(str, Enum):
    FIBER = "FiberCase"
    ORDINARY = "BaseOrdinary"
    EXOTIC = "BaseExotic"
    ORIENTATION_COVER = "BaseOrientationCover"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class CoverCase:
    tag: CaseTag
    m: int  # number of s_k sent to 1
    r: int  # number of v_j sent to 1
    mprime: int = 0  # FiberCase only

    def to_json(self) -> dict:
        return {"tag": self.tag.value, "m": self.m, "r": self.r, "mprime": self.mprime}


def _s_bits(inv: SeifertInvariants, phi: Z2Hom) -> list[int]:
    return [phi[f"s{k}"] for k in range(1, inv.n + 1)]


def _v_bits(inv: SeifertInvariants, phi: Z2Hom) -> list[int]:
    return [phi[f"v{j}"] for j in range(1, inv.gprime + 1)]


def _require_epimorphism(inv: SeifertInvariants, phi: Z2Hom) -> None:
    require_valid(inv)
    if not is_valid(fundamental_presentation(inv), phi):
        raise PresentationError(f"{phi} is not an epimorphism of pi1{inv}")


def _mprime(inv: SeifertInvariants, phi: Z2Hom) -> int:
    v = _v_bits(inv, phi)
    t = inv.type
    if t in (O1, N2):
        return 0
    if t in (O2, N1):
        return sum(v) % 2
    if t is N3:
        return v[0]
    return (v[0] + v[1]) % 2


def classify(inv: SeifertInvariants, phi: Z2Hom) -> CoverCase:
    _require_epimorphism(inv, phi)
    m = sum(_s_bits(inv, phi))
    vbits = _v_bits(inv, phi)
    r = sum(vbits)
    if phi["h"]:
        return CoverCase(CaseTag.FIBER, m, r, _mprime(inv, phi))
    if m % 2:
        raise InternalConsistencyError(f"odd m={m} with phi(h)=0 for {inv}")
    if m > 0:
        return CoverCase(CaseTag.ORDINARY, m, r)
    S = {j for j, b in enumerate(vbits, start=1) if b}
    everything = set(range(1, inv.gprime + 1))
    positive = {j for j, eps in enumerate(epsilon_vector(inv), start=1) if eps == 1}
    t = inv.type
    if (t in (O2, N1) and S == everything) or (t in (N3, N4) and S == positive):
        return CoverCase(CaseTag.ORIENTATION_COVER, m, r)
    if t in (N2, N3, N4) and S == everything:
        return CoverCase(CaseTag.EXOTIC, m, r)
    return CoverCase(CaseTag.ORDINARY, m, r)


def reorder_for_phi(inv: SeifertInvariants, phi: Z2Hom) -> tuple[SeifertInvariants, Z2Hom]:
    """Stably move the fibers with ``phi(s_k) = 1`` to the front."""
    if phi["h"]:
        raise PreconditionError("fiber reordering requires phi(h) = 0")
    sb = _s_bits(inv, phi)
    order = [k for k in range(inv.n) if sb[k]] + [k for k in range(inv.n) if not sb[k]]
    fibers = tuple(inv.fibers[k] for k in order)
    bits = dict(phi.as_dict())
    for new, old in enumerate(order, start=1):
        bits[f"s{new}"] = sb[old]
    return replace(inv, fibers=fibers), Z2Hom.from_mapping(phi.generators, bits)


def cover_fiber_case(inv: SeifertInvariants, phi: Z2Hom) -> SeifertInvariants:
    _require_epimorphism(inv, phi)
    if not phi["h"]:
        raise PreconditionError("fiber case requires phi(h) = 1")
    sb = _s_bits(inv, phi)
    for (a, b), bit in zip(inv.fibers, sb):
        if a % 2 == 0:
            raise InternalConsistencyError(f"even multiplicity {a} with phi(h)=1")
        if bit != b % 2:
            raise InternalConsistencyError(f"phi(s) != b mod 2 for fiber ({a},{b})")
    odd_b = sum(b % 2 for _, b in inv.fibers)
    if (inv.e + odd_b) % 2:
        raise InternalConsistencyError(f"e + m odd for {inv}")
    fibers = tuple((a, b // 2 if b % 2 == 0 else (a + b) // 2) for a, b in inv.fibers)
    e = (inv.e - odd_b) // 2 - _mprime(inv, phi)
    return SeifertInvariants(e, inv.type, inv.g, fibers)


def _finish(inv: SeifertInvariants) -> SeifertInvariants:
    if not inv.type.orientable_total:
        inv = normalize_fiber_signs(inv)
    return inv


def _kills_fiber_sign(inv: SeifertInvariants, phi: Z2Hom) -> bool:
    """True when ``phi`` on the ``v_j`` equals the fiber-reversal character."""
    reversing = [int(eps == -1) for eps in epsilon_vector(inv)]
    return _v_bits(inv, phi) == reversing


def cover_base_case(inv: SeifertInvariants, phi: Z2Hom) -> SeifertInvariants:
    """Invariants of the cover when ``phi(h) = 0``.

    The fibers with ``phi(s_k) = 1`` must come first (see :func:`reorder_for_phi`).
    """
    if phi["h"]:
        raise PreconditionError("base case requires phi(h) = 0")
    case = classify(inv, phi)
    sb = _s_bits(inv, phi)
    if sb != sorted(sb, reverse=True):
        raise PreconditionError("fibers mapped to 1 must come first; call reorder_for_phi")
    m, g, e, t = case.m, inv.g, inv.e, inv.type
    for a, _ in inv.fibers[:m]:
        if a % 2:
            raise InternalConsistencyError(f"odd multiplicity {a} on a fiber mapped to 1")
    if case.tag is CaseTag.ORIENTATION_COVER:
        foc = tuple(build_FOC(inv.fibers))
        if t is O2:
            out = SeifertInvariants(0, O1, 2 * g - 1, foc)
        elif t is N1:
            out = SeifertInvariants(0, O1, g - 1, foc)
        else:
            out = SeifertInvariants(0, N2, 2 * g - 2, foc)
    elif case.tag is CaseTag.EXOTIC:
        f0 = tuple(build_Fm(inv.fibers, 0))
        if t is N2:
            out = SeifertInvariants(2 * e, O1, g - 1, f0)
        else:
            out = SeifertInvariants(0, O2, g - 1, f0)
    else:
        new_e = 2 * e if t in (O1, N2) else 0
        new_t = N4 if t is N3 else t
        if m == 0 and t in (N3, N4) and _kills_fiber_sign(inv, phi):
            # every loop of the cover's base preserves the fiber
            new_t = N1
        G = m // 2 - 1 + 2 * g if t.orientable_base else m - 2 + 2 * g
        out = SeifertInvariants(new_e, new_t, G, tuple(build_Fm(inv.fibers, m)))
    return _finish(out)


def double_cover(inv: SeifertInvariants, phi: Z2Hom) -> SeifertInvariants:
    case = classify(inv, phi)
    if case.tag is CaseTag.FIBER:
        return cover_fiber_case(inv, phi)
    return cover_base_case(*reorder_for_phi(inv, phi))

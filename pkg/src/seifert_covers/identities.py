"""Free-group identities used to normalize surface words, as checkable certificates.

Each certificate holds explicit words for the new generators (in the old
ones), the left-hand side in the old generators and the right-hand side in
the new ones.  :meth:`SubstitutionCertificate.holds` substitutes and checks
the identity by free reduction, and checks the sign of each new generator
under a +-1 character on the old generators.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import PreconditionError
from .groups import Word, commutator, free_reduce, substitute


@dataclass
class SubstitutionCertificate:
    new_generators: dict[str, Word]
    lhs: Word
    rhs: Word  # a word in the new generator names
    expected_signs: dict[str, int] = field(default_factory=dict)
    character: dict[str, int] = field(default_factory=dict)

    def expanded_rhs(self) -> Word:
        return substitute(self.rhs, self.new_generators)

    def identity_holds(self) -> bool:
        return free_reduce(self.lhs * self.expanded_rhs().inverse()).is_empty()

    def sign(self, name: str) -> int:
        s = 1
        for g, e in self.new_generators[name].syllables:
            if e % 2:
                s *= self.character[g]
        return s

    def signs_hold(self) -> bool:
        return all(self.sign(n) == want for n, want in self.expected_signs.items())

    def holds(self) -> bool:
        return self.identity_holds() and self.signs_hold()

    def commutator_count(self) -> int:
        """Number of ``[a, b]`` factors when the rhs is a product of commutators."""
        syl = self.rhs.syllables
        return len(syl) // 4


def _g(name: str) -> Word:
    return Word.gen(name)


def _product(words) -> Word:
    out = Word()
    for w in words:
        out = out * w
    return out


def _commutator_rhs(names: list[str]) -> Word:
    return _product(commutator(_g(names[i]), _g(names[i + 1])) for i in range(0, len(names), 2))


def conjugate_product_to_commutators(k: int) -> SubstitutionCertificate:
    """``g0 ... g2k g0^-1 ... g2k^-1`` as ``[h0,h1] ... [h_{2k-2},h_{2k-1}]``."""
    if k < 0:
        raise PreconditionError("k must be non-negative")
    g = [_g(f"g{i}") for i in range(2 * k + 1)]
    lhs = _product(g) * _product(x.inverse() for x in g)

    def U(i):
        return _product(g[2 * i:])

    new = {}
    for i in range(k):
        new[f"h{2 * i}"] = free_reduce(g[2 * i] * g[2 * i + 1])
        new[f"h{2 * i + 1}"] = free_reduce(U(i + 1) * g[2 * i].inverse())
    return SubstitutionCertificate(new, lhs, _commutator_rhs(list(new)))


def interleaved_product_to_commutators(k: int) -> SubstitutionCertificate:
    """``(a1 b1 c1 d1)...(ak bk ck dk)(c1^-1 d1^-1 a1^-1 b1^-1)...`` as ``2k`` commutators.

    Built one block at a time: appending block ``i+1`` multiplies by
    ``[V^-1 a, b V] (ba) [V^-1 c, d V] (ba)^-1`` where ``V`` is the current
    inverse tail; the conjugation by ``ba`` is folded into the commutator
    entries.
    """
    if k < 0:
        raise PreconditionError("k must be non-negative")
    names = []
    new = {}
    V = Word()
    U = Word()
    for i in range(1, k + 1):
        a, b, c, d = (_g(f"{x}{i}") for x in "abcd")
        ba = b * a
        pairs = [
            (V.inverse() * a, b * V),
            (ba * V.inverse() * c * ba.inverse(), ba * d * V * ba.inverse()),
        ]
        for x, y in pairs:
            n = len(new)
            new[f"h{n}"] = free_reduce(x)
            new[f"h{n + 1}"] = free_reduce(y)
            names += [f"h{n}", f"h{n + 1}"]
        U = U * a * b * c * d
        V = V * c.inverse() * d.inverse() * a.inverse() * b.inverse()
    return SubstitutionCertificate(new, U * V, _commutator_rhs(names))


SURFACE_CASES = ("commut-to-squares", "orient-commutators", "four-squares-normalize")


def surface_word_substitution(case: str) -> SubstitutionCertificate:
    x, y, z, t = _g("x"), _g("y"), _g("z"), _g("t")
    if case == "commut-to-squares":
        new = {
            "u": x * z,
            "v": (z * x * z).inverse() * y * z,
            "w": (y * z).inverse() * z ** 2,
        }
        lhs = commutator(x, y) * z ** 2
        rhs = Word((("u", 2), ("v", 2), ("w", 2)))
        signs = {"u": -1, "v": -1, "w": -1}
        character = {"x": 1, "y": 1, "z": -1}
    elif case == "orient-commutators":
        yiz = y.inverse() * z
        new = {
            "x'": x * y * z,
            "y'": z.inverse() * x.inverse(),
            "z'": yiz.inverse() * z * yiz,
            "t'": t * z.inverse() * yiz,
        }
        lhs = commutator(x, y) * commutator(z, t)
        rhs = commutator(_g("x'"), _g("y'")) * commutator(_g("z'"), _g("t'"))
        signs = {n: -1 for n in new}
        character = {"x": 1, "y": 1, "z": -1, "t": -1}
    elif case == "four-squares-normalize":
        u, v, w = _g("u"), _g("v"), _g("w")
        # t'u' = u^2 v w,  u'w' = u v w^2,  u'v'w' = w, resolved in that order
        t1 = t * u ** 2 * v * u.inverse()
        u1 = t1.inverse() * u ** 2 * v * w
        w1 = u1.inverse() * u * v * w ** 2
        v1 = u1.inverse() * w * w1.inverse()
        new = {n: free_reduce(wd) for n, wd in (("t'", t1), ("u'", u1), ("v'", v1), ("w'", w1))}
        lhs = Word((("t", 2), ("u", 2), ("v", 2), ("w", 2)))
        rhs = Word((("t'", 2), ("u'", 2), ("v'", 2), ("w'", 2)))
        signs = {"t'": 1, "u'": -1, "v'": -1, "w'": -1}
        character = {"t": 1, "u": 1, "v": 1, "w": -1}
    else:
        raise PreconditionError(f"unknown surface case {case!r}; choose from {SURFACE_CASES}")
    return SubstitutionCertificate(new, lhs, rhs, signs, character)

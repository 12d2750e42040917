from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, strategies as st

from seifert_covers.abelian import exponent_matrix, h1
from seifert_covers.errors import InvalidInvariantsError, PreconditionError
from seifert_covers.groups import Word, commutator, word
from seifert_covers.seifert import (
    FiberPair,
    SeifertInvariants,
    TypeSymbol,
    build_FOC,
    build_Fm,
    chi_orb,
    epsilon_vector,
    euler_number,
    fundamental_presentation,
    normalize_fiber_signs,
    parse_seifert,
    validate,
)

from oracles import det

P = parse_seifert
POINCARE = "{-1;(o1,0);(2,1),(3,1),(5,1)}"


def test_validate_examples():
    assert validate(P("{0;(o1,0);}")).ok
    rep = validate(P("{0;(n4,2);}"))
    assert not rep.ok and rep.violations == ["g: n4 requires g ≥ 3"]
    rep = validate(P("{0;(o1,0);(2,4)}"))
    assert not rep.ok and "gcd(2,4) ≠ 1" in rep.violations[0]


@pytest.mark.parametrize("sym,bad", [
    ("{0;(o2,0);}", "o2 requires g ≥ 1"),
    ("{0;(n3,1);}", "n3 requires g ≥ 2"),
    ("{0;(o1,-1);}", "non-negative"),
    ("{0;(o1,0);(0,1)}", "nonzero"),
])
def test_validate_rules(sym, bad):
    rep = validate(P(sym))
    assert not rep.ok
    assert any(bad in v for v in rep.violations)


def test_epsilon_vector():
    assert epsilon_vector(P("{0;(o1,2);}")) == (1, 1, 1, 1)
    assert epsilon_vector(P("{0;(n3,2);}")) == (1, -1)
    assert epsilon_vector(P("{0;(n4,3);}")) == (1, 1, -1)
    assert epsilon_vector(P("{0;(o2,1);}")) == (-1, -1)
    with pytest.raises(InvalidInvariantsError):
        epsilon_vector(P("{0;(n4,2);}"))


def test_presentation_of_circle():
    p = fundamental_presentation(P("{0;(o1,0);}"))
    assert p.generators == ("h",)
    assert p.relators == (Word(),)
    assert h1(p).rank == 1 and h1(p).torsion == ()


def test_presentation_n2():
    p = fundamental_presentation(P("{0;(n2,1);(2,1)}"))
    s, v, h = Word.gen("s1"), Word.gen("v1"), Word.gen("h")
    assert p.generators == ("s1", "v1", "h")
    assert p.relators == (commutator(s, h), word("s1^2 h"), word("v1 h v1^-1 h"), word("s1 v1^2"))


def test_presentation_poincare_sphere():
    p = fundamental_presentation(P(POINCARE))
    assert len(p.generators) == 4 and len(p.relators) == 7
    nonzero = [r for r in exponent_matrix(p) if any(r)]
    assert abs(det(nonzero)) == 1
    assert h1(p).rank == 0 and h1(p).torsion == ()


def test_fiber_constructors():
    assert build_FOC([]) == []
    assert build_FOC([(3, 1)]) == [(3, 1), (3, -1)]
    assert build_FOC([(2, 1), (5, 2)]) == [(2, 1), (2, -1), (5, 2), (5, -2)]
    assert build_Fm([(3, 1)], 0) == [(3, 1), (3, 1)]
    assert build_Fm([(2, 1), (4, 1)], 2) == [(1, 1), (2, 1)]
    assert build_Fm([], 0) == []
    with pytest.raises(PreconditionError):
        build_Fm([(3, 1)], 1)


def test_euler_number():
    assert euler_number(P("{2;(o1,1);}")) == 2
    # -1 + 1/2 + 1/3 + 1/5 = (-30 + 15 + 10 + 6)/30
    assert euler_number(P(POINCARE)) == Fraction(1, 30)
    assert euler_number(P("{1;(o1,0);(2,1),(2,1)}")) == 2


def test_chi_orb():
    assert chi_orb(P("{0;(o1,2);}")) == -2
    assert chi_orb(P("{0;(n1,1);(2,1)}")) == Fraction(1, 2)
    # 2 - (1/2 + 2/3 + 4/5) = (60 - 15 - 20 - 24)/30
    assert chi_orb(P(POINCARE)) == Fraction(1, 30)
    assert chi_orb(P("{0;(o1,0);(-3,1)}")) == chi_orb(P("{0;(o1,0);(3,1)}"))


def test_normalize_fiber_signs():
    assert normalize_fiber_signs(P("{0;(o2,1);(3,-1)}")) == P("{0;(o2,1);(3,1)}")
    assert normalize_fiber_signs(P("{0;(n1,1);(3,1)}")) == P("{0;(n1,1);(3,1)}")
    with pytest.raises(PreconditionError):
        normalize_fiber_signs(P("{0;(o1,1);(3,-1)}"))
    with pytest.raises(PreconditionError):
        normalize_fiber_signs(P("{0;(n2,1);(3,1)}"))


coprime_pairs = st.tuples(st.integers(-9, 9).filter(bool), st.integers(-9, 9)).filter(
    lambda p: gcd(*p) == 1)


@st.composite
def symbols(draw):
    t = draw(st.sampled_from(list(TypeSymbol)))
    g = draw(st.integers(t.min_genus, t.min_genus + 2))
    fibers = draw(st.lists(coprime_pairs, max_size=4))
    return SeifertInvariants(draw(st.integers(-3, 3)), t, g, tuple(fibers))


@given(symbols())
def test_presentation_shape(inv):
    p = fundamental_presentation(inv)
    assert len(p.generators) == inv.n + inv.gprime + 1
    assert len(p.relators) == 2 * inv.n + inv.gprime + 1
    assert len(epsilon_vector(inv)) == inv.gprime


@given(symbols(), st.data())
def test_fiber_lists_stay_coprime(inv, data):
    assert len(build_FOC(inv.fibers)) == 2 * inv.n
    assert build_Fm(inv.fibers, 0) == [f for pair in inv.fibers for f in (pair, pair)]
    evens = [f for f in inv.fibers if f.a % 2 == 0]
    rest = [f for f in inv.fibers if f.a % 2]
    m = data.draw(st.integers(0, len(evens)))
    for a, b in build_Fm(evens[:m] + rest, m) + build_FOC(inv.fibers):
        assert a != 0 and gcd(a, b) == 1


@given(symbols())
def test_numerics_are_exact(inv):
    assert isinstance(chi_orb(inv), Fraction)
    assert isinstance(euler_number(inv), Fraction)

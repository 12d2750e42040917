from dataclasses import replace

from seifert_covers.covers import CaseTag
from seifert_covers.seifert import TypeSymbol, fundamental_presentation, parse_seifert
from seifert_covers.verify import (
    FuzzConfig,
    check_prediction,
    corpus,
    fuzz,
    killvj_check,
    verify_cover,
)
from seifert_covers.z2hom import enumerate_epimorphisms, parse_hom

P = parse_seifert


def phi_for(inv, text):
    return parse_hom(text, fundamental_presentation(inv))


def test_verify_fiber_case():
    inv = P("{2;(o1,0);(3,1),(3,1)}")
    rep = verify_cover(inv, phi_for(inv, "h=1,s1=1,s2=1"))
    assert rep.passed and rep.case.tag is CaseTag.FIBER
    assert rep.euler_ok is True and rep.chi_ok is True


def test_verify_n2_example():
    inv = P("{1;(n2,1);}")
    rep = verify_cover(inv, phi_for(inv, "v1=1"))
    assert rep.passed
    assert rep.predicted == P("{2;(o1,0);}")
    assert str(rep.predicted_h1) == str(rep.oracle_h1) == "Z/2"


def test_negative_control():
    inv = P("{1;(n2,1);}")
    phi = phi_for(inv, "v1=1")
    good = verify_cover(inv, phi).predicted
    rep = check_prediction(inv, phi, replace(good, e=good.e + 1))
    assert not rep.passed
    # exotic case: the euler relation does not apply, H1 alone catches it
    assert [f["stage"] for f in rep.failures] == ["h1"]


def test_invalid_prediction_is_reported():
    inv = P("{0;(o1,0);}")
    rep = check_prediction(inv, phi_for(inv, "h=1"), P("{0;(n4,1);}"))
    assert not rep.passed and rep.failures[0]["stage"] == "validate"


def test_killvj_examples():
    reports = killvj_check(P("{1;(o1,1);(2,1),(2,1)}"))
    assert len(reports) == 4 and all(r.passed for r in reports)
    assert len({r.predicted for r in reports}) == 1

    reports = killvj_check(P("{0;(n1,1);(2,1),(2,1)}"))
    assert reports and all(r.passed for r in reports)
    assert len({r.predicted for r in reports}) == 1

    assert killvj_check(P("{0;(o1,2);(3,1),(5,2)}")) == []


def test_fuzz_empty():
    out = fuzz(FuzzConfig(count=0))
    assert out["cases"] == 0 and out["epimorphisms"] == 0 and out["failures"] == []


def test_fuzz_cyclic_only():
    cfg = FuzzConfig(count=30, seed=5, max_n=0, max_g=0, types=(TypeSymbol.O1,))
    syms = corpus(cfg)
    assert all(inv.n == 0 and inv.g == 0 for inv in syms)
    assert all(len(fundamental_presentation(inv).generators) == 1 for inv in syms)
    out = fuzz(cfg)
    assert out["failures"] == []
    # <h | h^-e> has an index-2 subgroup iff e is even
    assert out["epimorphisms"] == sum(1 for inv in syms if inv.e % 2 == 0)


def test_fuzz_default_run():
    out = fuzz(FuzzConfig(count=100, seed=1))
    assert out["cases"] == 100 and out["failures"] == []


def test_fuzz_is_deterministic():
    cfg = FuzzConfig(count=15, seed=11)
    assert fuzz(cfg) == fuzz(cfg)
    assert corpus(cfg) != corpus(replace(cfg, seed=12))


def test_fuzz_parallel_matches_serial():
    cfg = FuzzConfig(count=12, seed=3)
    assert fuzz(cfg, workers=2) == fuzz(cfg)


def test_every_corpus_symbol_is_valid_and_coprime():
    from math import gcd

    from seifert_covers.seifert import validate

    for inv in corpus(FuzzConfig(count=200, seed=9, max_n=4, max_g=3)):
        assert validate(inv).ok
        assert all(gcd(a, b) == 1 for a, b in inv.fibers)
        assert all(abs(a) == 1 for a, b in inv.fibers if b == 0)


def test_reports_serialize():
    inv = P("{0;(o2,1);(2,1)}")
    for phi in enumerate_epimorphisms(fundamental_presentation(inv)):
        js = verify_cover(inv, phi).to_json()
        assert js["pass"] is True and js["case"]["tag"] in {t.value for t in CaseTag}

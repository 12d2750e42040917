import json

import pytest

from seifert_covers.cli import main
from seifert_covers.errors import PresentationError
from seifert_covers.seifert import fundamental_presentation, parse_seifert
from seifert_covers.z2hom import parse_hom


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_parse_hom_examples():
    p = fundamental_presentation(parse_seifert("{2;(o1,0);(3,1),(3,1)}"))
    assert parse_hom("h=1,s1=1,s2=1", p).as_dict() == {"s1": 1, "s2": 1, "h": 1}
    assert parse_hom("", p).is_zero()
    with pytest.raises(PresentationError):
        parse_hom("w1=1", p)
    with pytest.raises(PresentationError):
        parse_hom("h=2", p)


def test_validate(capsys):
    assert run(capsys, "validate", "{-1;(o1,0);(2,1),(3,1),(5,1)}")[:2] == (0, "ok\n")
    code, out, _ = run(capsys, "validate", "{0;(n4,1);}")
    assert code == 1 and "n4" in out
    code, _, err = run(capsys, "validate", "{0;(o9,1);}")
    assert code == 2 and "position" in err


def test_pi1_json(capsys):
    code, out, _ = run(capsys, "pi1", "{0;(o1,1);}", "--json")
    data = json.loads(out)
    assert code == 0
    assert data["generators"] == ["v1", "v2", "h"]
    assert data["h1"]["rank"] == 3 and data["h1"]["torsion"] == []


def test_enumerate_count(capsys):
    code, out, _ = run(capsys, "enumerate", "{0;(o1,1);}", "--json")
    data = json.loads(out)
    assert code == 0 and data["h1_z2_dim"] == 3 and len(data["epimorphisms"]) == 7


def test_cover(capsys):
    code, out, _ = run(capsys, "cover", "{2;(o1,0);(3,1),(3,1)}", "--phi", "h=1,s1=1,s2=1")
    assert code == 0 and out.strip() == "{0;(o1,0);(3,2),(3,2)}"
    code, out, _ = run(capsys, "cover", "{1;(n2,1);}", "--phi", "v1=1", "--show-presentation")
    assert code == 0 and "kernel presentation" in out


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "{1;(o1,1);(2,1),(2,1)}", "--all", "--json")
    data = json.loads(out)
    assert code == 0 and data["pass"] is True and len(data["reports"]) == 7
    code, out, _ = run(capsys, "verify", "{0;(o1,0);(3,1),(5,2)}")
    assert code == 0 and out.strip() == "no index-2 subgroups"


def test_fuzz(capsys):
    code, out, _ = run(capsys, "fuzz", "--count", "5", "--seed", "2", "--json")
    data = json.loads(out)
    assert code == 0 and data["cases"] == 5 and data["failures"] == []
    code, out, _ = run(capsys, "fuzz", "--count", "3", "--types", "o1,n2")
    assert code == 0 and out.startswith("cases=3")


@pytest.mark.parametrize("argv", [
    [],
    ["frobnicate"],
    ["validate"],
    ["validate", "{0;(o1,0)"],
    ["pi1", "{0;(n4,1);}"],
    ["cover", "{0;(o1,0);}"],
    ["cover", "{0;(o1,1);}", "--phi", ""],
    ["cover", "{0;(o1,1);}", "--phi", "w1=1"],
    ["cover", "{0;(o1,1);}", "--phi", "h=7"],
    ["verify", "{0;(o1,1);}", "--phi", "v1=1", "--all"],
    ["fuzz", "--count", "many"],
    ["fuzz", "--types", "o7"],
])
def test_usage_errors_exit_2(capsys, argv):
    assert run(capsys, *argv)[0] == 2

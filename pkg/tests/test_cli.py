import json
from pathlib import Path

import pytest

from tambara.cli import UsageError, execute, main, parse_job

DATA = Path(__file__).parent / "data"
MIXED = str(DATA / "graded_mixed.json")


def run(*argv):
    return execute(parse_job(list(argv)))


@pytest.mark.parametrize("argv", [
    ["universal", "--magma", "kxk", "--degree", "-1"],
    ["verify-lemmas", "--backend", "vect"],
    ["validate"],
    ["universal"],
    ["universal", "--magma", "nonsense"],
    ["bogus"],
    ["catalog", "--field", "fp:9"],
    ["verify-lemmas", "--seed", "1", "--backend", "nope"],
])
def test_usage_errors(argv, capsys):
    with pytest.raises(UsageError):
        parse_job(argv)
    assert main(argv) == 2


def test_validate_mixed():
    code, text = run("validate", MIXED)
    assert code == 1
    assert "morphism bad: FAIL" in text
    assert "structure broken: FAIL" in text
    assert "structure k[e]: ok" in text and "magma k[e]: ok" in text


def test_validate_clean(tmp_path):
    doc = json.loads(Path(MIXED).read_text())
    doc["morphisms"] = [m for m in doc["morphisms"] if m["name"] != "bad"]
    doc["structures"] = [s for s in doc["structures"] if s["name"] != "broken"]
    p = tmp_path / "ok.json"
    p.write_text(json.dumps(doc))
    code, text = run("validate", str(p))
    assert code == 0, text


@pytest.mark.parametrize("content", ["{not json", "[]", '{"objects": [{"name": "A"}]}',
                                     '{"objects": [{"name": "A", "dim": 2}], "morphisms": '
                                     '[{"name": "f", "src": "A", "dst": "A", "matrix": [["1"]]}]}',
                                     '{"field": "fp:4"}'])
def test_malformed_input(tmp_path, content):
    p = tmp_path / "bad.json"
    p.write_text(content)
    code, text = run("validate", str(p))
    assert code == 2 and text.startswith("input error")


def test_missing_file():
    assert run("validate", "/nonexistent/file.json")[0] == 2


def test_scalars_must_be_strings_or_ints(tmp_path):
    p = tmp_path / "f.json"
    p.write_text('{"objects": [{"name": "A", "dim": 1}], "morphisms": '
                 '[{"name": "f", "src": "A", "dst": "A", "matrix": [[0.5]]}]}')
    assert run("validate", str(p))[0] == 2


def test_universal_text():
    code, text = run("universal", "--magma", "dual_numbers", "--backend", "vect")
    assert code == 0
    assert "generators: a b c d" in text
    assert "  bb\n" in text and "  db + bd\n" in text
    assert "dims: 1 2 2 2 2" in text
    assert "  b -> 1(x)b + b(x)d" in text


def test_universal_graded_degrees():
    code, text = run("universal", "--magma", "dual_numbers", "--backend", "graded", "--degree", "2")
    assert code == 0
    assert "generators: a[0] b[1] c[1] d[0]" in text


def test_universal_json():
    code, text = run("universal", "--magma", "kxk", "--degree", "3", "--json")
    data = json.loads(text)
    assert data["dims"] == [1, 2, 2, 2]
    assert data["eps"] == {"a": "1", "b": "0", "c": "0", "d": "1"}
    assert all(c["ok"] for c in data["checks"])


def test_truncate_file():
    code, text = run("truncate", str(DATA / "presentation.json"), "--degree", "3")
    assert code == 0
    assert "dims: 1 2 2 2" in text


def test_catalog_single():
    code, text = run("catalog", "H4")
    assert code == 0 and "antipode order: 4" in text
    assert run("catalog", "nope")[0] == 2


def test_support_cosupport():
    code, text = run("support", MIXED, "--rho", "rho", "--b", "A", "--q", "Q")
    assert code == 0 and "support dimension: 1" in text
    code, text = run("cosupport", MIXED, "--psi", "psi", "--p", "P", "--a", "A", "--b", "A")
    assert code == 0 and "cosupport dimension: 1" in text
    assert run("support", MIXED, "--rho", "nope", "--b", "A", "--q", "Q")[0] == 2
    assert run("support", MIXED, "--rho", "rho", "--b", "A", "--q", "A")[0] == 2


def test_duality_check():
    code, text = run("duality-check", "--magma", "kxk", "--backend", "graded", "--seed", "3",
                     "--degree", "3", "--coalgebra", "group:C2", "--coalgebra", "matrix:2")
    assert code == 0
    assert text.splitlines() == ["P=group:C2 (3 samples): ok", "P=matrix:2 (3 samples): ok"]


def test_verify_lemmas_deterministic():
    argv = ["verify-lemmas", "--backend", "graded", "--seed", "5", "--trials", "3", "--field", "fp:7"]
    a, b = run(*argv), run(*argv)
    assert a == b and a[0] == 0
    assert "braid-naturality: 3/3 passed" in a[1]


def test_field_option():
    code, text = run("universal", "--magma", "kxk", "--field", "fp:5", "--degree", "2")
    assert code == 0 and "over fp:5" in text

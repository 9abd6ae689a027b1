import json

import pytest

from segrebundles.classifier import classify
from segrebundles.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err.strip()


@pytest.mark.parametrize(
    "expr, expected",
    [("(2*t1+t2)^2*t1", "t1*t2^2"), ("0", "0"), ("(t1+2*t2)^2", "4*t1*t2 + 4*t2^2")],
)
def test_ring(capsys, expr, expected):
    assert run(capsys, "ring", expr) == (0, expected, "")


def test_ring_factors_and_json(capsys):
    code, out, _ = run(capsys, "--factors", "1,1,1", "--format", "json", "ring", "(t1+t2+t3)^3")
    assert code == 0
    assert json.loads(out)["value"] == "6*t1*t2*t3"


def test_ring_parse_error(capsys):
    code, _, err = run(capsys, "ring", "t1 + $")
    assert code == 2 and "position 5" in err


@pytest.mark.parametrize(
    "argv, value",
    [
        (["--rank", "1", "--c1", "1,1"], 6),
        (["--rank", "1", "--c1", "0,0"], 1),
        (["--rank", "3", "--c1", "1,1", "--c2", "1,1", "--c3", "1"], 5),
    ],
)
def test_chi(capsys, argv, value):
    code, out, _ = run(capsys, "--format", "json", "chi", *argv)
    data = json.loads(out)
    assert code == 0 and data["chi_hrr"] == data["chi_closed_form"] == value


def test_chi_integrality_failure(capsys):
    code, _, err = run(capsys, "chi", "--rank", "1", "--c2", "1,0")
    assert code == 1 and "non-integer" in err


def test_chern(capsys):
    code, out, _ = run(capsys, "chern", "O(1,0)", "T")
    assert code == 0
    assert out.splitlines()[0] == "rank=3; c1=(1,1); c2=(1,1); c3=1"


def test_cohomology(capsys):
    code, out, _ = run(capsys, "--format", "json", "cohomology", "-2", "1")
    assert code == 0 and json.loads(out)["h"] == [0, 3, 0, 0]


def test_ci_and_curve(capsys):
    code, out, _ = run(capsys, "ci", "1", "2")
    assert code == 0 and out == "s=1 bidegree=(4,4) genus=3 degree=8 r=[3,11]"
    code, out, _ = run(capsys, "--format", "json", "curve", "--bidegree", "2,3", "--genus", "1", "--c1", "1,2")
    assert json.loads(out)["ranks"] == [3, 6]
    code, out, _ = run(capsys, "ci", "1", "0")
    assert code == 2


def test_classify_table(capsys):
    code, out, _ = run(capsys, "classify", "--c1", "2,1")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 7
    assert any("bidegree=(1,4) r=[3,8]" in line for line in lines)


def test_classify_json_matches_text(capsys):
    for c1 in ("1,1", "2,1", "1,2"):
        _, text, _ = run(capsys, "classify", "--c1", c1)
        _, js, _ = run(capsys, "--format", "json", "classify", "--c1", c1)
        entries = classify(tuple(int(v) for v in c1.split(",")))
        assert [e.to_dict() for e in entries] == json.loads(js)
        assert text == "\n".join(e.text_line() for e in entries)


def test_classify_as_c2_swaps(capsys):
    _, out, _ = run(capsys, "--format", "json", "classify", "--c1", "1,2", "--as-c2")
    rows = json.loads(out)
    assert rows[-1]["c2"] == [4, 4]
    assert [1, 2] in [r["c2"] for r in rows]


def test_classify_tsv(capsys):
    _, out, _ = run(capsys, "--format", "tsv", "classify", "--c1", "1,1")
    header, *rows = out.splitlines()
    assert header.split("\t")[:4] == ["c1", "s", "bidegree", "ranks"] and len(rows) == 3


def test_classify_unsupported(capsys):
    code, _, err = run(capsys, "classify", "--c1", "0,2")
    assert code == 2 and "Sierra-Ugaglia" in err
    assert run(capsys, "classify", "--c1", "3,3")[0] == 2


def test_classify_degenerate(capsys):
    code, out, _ = run(capsys, "classify", "--c1", "0,1")
    assert code == 0 and len(out.splitlines()) == 2


def test_verify(capsys):
    code, out, _ = run(capsys, "verify")
    assert code == 0 and out.splitlines()[-1].startswith("OVERALL PASS")
    code, out, _ = run(capsys, "--format", "json", "verify")
    assert json.loads(out)["passed"] is True

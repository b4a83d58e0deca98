import pytest

from mgk.cli import counts_table, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_farey(capsys):
    assert run(capsys, "farey", "inf", "1/2")[:2] == (0, "2\n")


def test_fill(capsys):
    code, out, _ = run(capsys, "fill", "--g", "2", "--k", "1", "--slopes", "1=3")
    assert code == 0 and out.strip() == "CensusMember(2, 0)"


def test_geom(capsys):
    code, out, _ = run(capsys, "geom", "--g", "2", "--k", "0", "--volume", "--check-canonical")
    assert code == 0
    assert "volume 6.451990270835" in out and "canonical yes r=1" in out


def test_tv(capsys, census):
    sig = census(2).cells[(2, 0)][0]
    code, out, _ = run(capsys, "tv", "--isosig", sig, "--r", "5")
    assert code == 0 and out.strip() == "1.236067977500"


def test_graphs(capsys):
    code, out, _ = run(capsys, "graphs", "--n", "3")
    assert code == 0 and out.count("ok") == 3


def test_census(capsys, tmp_path):
    path = tmp_path / "c.tsv"
    code, out, _ = run(capsys, "census", "--tets", "3", "--out", str(path))
    assert code == 0
    assert "74" in out and "M_{c-1,1}" in out
    assert len(path.read_text().splitlines()) == 1 + 75


def test_regress(capsys):
    code, out, _ = run(capsys, "regress", "2")
    assert code == 0 and "PASS  counts n=2" in out


@pytest.mark.parametrize("argv", [
    ["farey", "1/0/1", "2"],
    ["tv", "--isosig", "nope", "--r", "3"],
    ["geom", "--g", "3", "--k", "3"],
    ["census", "--tets", "9"],
    ["fill", "--g", "2", "--k", "1", "--slopes", "7=3"],
])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and "error" in err


def test_argparse_errors_exit_two():
    with pytest.raises(SystemExit) as exc:
        main(["census"])
    assert exc.value.code == 2


def test_counts_table_layout():
    text = counts_table({(4, 0): 2340, (3, 1): 12, (2, 2): 1}, 4)
    head, row = text.splitlines()
    assert row.split() == ["4", "2340", "12", "1"]

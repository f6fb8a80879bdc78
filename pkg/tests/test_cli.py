import json

import pytest

from level1kit.cli import main

SIMPLE3 = "((x2,(x1)#H1),(x3,#H1));\n"


@pytest.fixture()
def s3_file(tmp_path):
    path = tmp_path / "s3.nwk"
    path.write_text(SIMPLE3)
    return str(path)


def test_stats(s3_file, capsys):
    assert main(["stats", s3_file]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["n"] == 3 and payload["V"] == 7 and payload["A"] == 7
    assert payload["g"] == 1 and payload["c"] == 0


def test_validate_ok_and_invalid(tmp_path, s3_file, capsys):
    assert main(["validate", s3_file]) == 0
    bad = tmp_path / "bad.nwk"
    bad.write_text("(a,b,c);\n")
    assert main(["validate", str(bad)]) == 1


def test_equiv_exit_codes(tmp_path, s3_file):
    assert main(["equiv", s3_file, s3_file]) == 0
    other = tmp_path / "other.nwk"
    other.write_text("((x1,(x2)#H1),(x3,#H1));\n")
    assert main(["equiv", s3_file, str(other)]) == 1


def test_triplets_and_clusters_output(s3_file, capsys):
    assert main(["triplets", s3_file]) == 0
    out = capsys.readouterr().out.strip().splitlines()
    assert out == ["x1,x2|x3", "x1,x3|x2"]
    assert main(["clusters", s3_file, "--hardwired"]) == 0
    hard = capsys.readouterr().out.strip().splitlines()
    assert "x1,x2,x3" in hard


def test_snsets_and_cut(s3_file, capsys):
    assert main(["snsets", s3_file]) == 0
    assert capsys.readouterr().out.strip().splitlines() == ["x1", "x2", "x3"]
    assert main(["cut", s3_file]) == 0
    assert capsys.readouterr().out.strip().splitlines() == ["x1", "x2", "x3"]


def test_restrict_and_collapse(s3_file, capsys):
    assert main(["restrict", s3_file, "--keep", "x2,x3"]) == 0
    assert capsys.readouterr().out.strip() == "(x2,x3);"
    assert main(["collapse", s3_file]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == SIMPLE3.strip()


def test_enumerate_counts(capsys):
    assert main(["enumerate", "--n", "3"]) == 0
    assert len(capsys.readouterr().out.strip().splitlines()) == 12
    assert main(["enumerate", "--n", "4", "--filter", "tree"]) == 0
    assert len(capsys.readouterr().out.strip().splitlines()) == 15


def test_define_and_check_defines(tmp_path, capsys):
    net_file = tmp_path / "simple4.nwk"
    net_file.write_text("((x2,(x3,(x1)#H1)),(x4,#H1));\n")
    assert main(["define", str(net_file), "--kind", "triplets"]) == 0
    system = capsys.readouterr().out
    sys_file = tmp_path / "sys.trip"
    sys_file.write_text(system)
    assert main(["check-defines", str(net_file), "--system", str(sys_file),
                 "--kind", "triplets"]) == 0
    # a single triplet cannot pin the network down
    sys_file.write_text(system.splitlines()[0] + "\n")
    assert main(["check-defines", str(net_file), "--system", str(sys_file),
                 "--kind", "triplets"]) == 1


def test_missing_file_is_usage_error(capsys):
    assert main(["stats", "/nonexistent/net.nwk"]) == 2
    assert main(["frobnicate"]) == 2


def test_verify_json_schema(capsys):
    assert main(["verify", "--suite", "galls", "--max-n", "3", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["overall_pass"] is True
    assert payload["suites"][0]["suite"] == "galls"

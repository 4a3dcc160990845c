import json

import pytest

from grasym import center, make_field, subspace_algebra, sweedler_algebra, trivial_extension
from grasym.cli import main
from grasym.specfile import write_algebra_file


@pytest.fixture
def cyc3_spec(tmp_path):
    path = tmp_path / "cyc3.json"
    path.write_text(json.dumps({"constructor": {"name": "cyclic_algebra", "p": 3}}))
    return str(path)


@pytest.fixture
def sweedler_center_spec(tmp_path):
    t = trivial_extension(sweedler_algebra(make_field(3)))
    e = subspace_algebra(t, center(t))
    path = tmp_path / "center.json"
    write_algebra_file(e, str(path))
    return str(path)


def test_check_yes_exit_zero(cyc3_spec, capsys):
    assert main(["check", cyc3_spec, "--mode", "graded-symmetric"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["status"] == "yes" and out["gram_rank"] == 9


def test_check_no_exit_one(sweedler_center_spec, capsys):
    assert main(["check", sweedler_center_spec, "--mode", "frobenius"]) == 1
    out = json.loads(capsys.readouterr().out)
    assert out["refutation"] == "gram-det-identically-zero"


def test_check_writes_certificate_and_verify(cyc3_spec, tmp_path, capsys):
    cert = str(tmp_path / "cert.json")
    assert main(["check", cyc3_spec, "--cert", cert]) == 0
    capsys.readouterr()
    assert main(["verify", cyc3_spec, cert]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["verified"] is True


def test_verify_refutation_certificate(sweedler_center_spec, tmp_path, capsys):
    cert = str(tmp_path / "cert.json")
    main(["check", sweedler_center_spec, "--mode", "frobenius", "--cert", cert])
    capsys.readouterr()
    assert main(["verify", sweedler_center_spec, cert]) == 0


def test_verify_hash_mismatch(cyc3_spec, sweedler_center_spec, tmp_path, capsys):
    cert = str(tmp_path / "cert.json")
    main(["check", cyc3_spec, "--cert", cert])
    capsys.readouterr()
    assert main(["verify", sweedler_center_spec, cert]) == 1


def test_invariants_output(cyc3_spec, capsys):
    assert main(["invariants", cyc3_spec]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["dim"] == 9
    assert out["center_dim"] == 1
    assert out["graded_commutator_dim"] == 2
    assert out["division"]["status"] == "yes"
    assert out["support"] == [0, 1, 2]


def test_invariants_unknown_exit_two(tmp_path, capsys):
    from grasym import quaternion_algebra, rationals, ungrade
    a = ungrade(quaternion_algebra(rationals(), 1, -1))
    path = tmp_path / "q.json"
    write_algebra_file(a, str(path))
    assert main(["invariants", str(path)]) == 2


def test_replicate_single(capsys):
    assert main(["replicate", "--name", "matrix-commutator-dimension"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["passed"] is True


def test_replicate_unknown_name(capsys):
    assert main(["replicate", "--name", "nonsense"]) == 3


def test_hunt_small(tmp_path, capsys):
    report_path = str(tmp_path / "hunt.json")
    code = main(["hunt", "--char", "2", "--max-group", "2", "--max-ext", "2",
                 "--report", report_path])
    assert code == 0
    data = json.loads(capsys.readouterr().out)
    assert data["non_symmetric_instances"] == []
    with open(report_path) as fh:
        assert json.load(fh) == data


def test_hunt_checkpoint_roundtrip(tmp_path, capsys):
    ck = str(tmp_path / "ck.json")
    assert main(["hunt", "--char", "2", "--max-group", "2", "--max-ext", "1",
                 "--checkpoint", ck]) == 0
    capsys.readouterr()
    assert main(["hunt", "--char", "2", "--max-group", "2", "--max-ext", "1",
                 "--resume", ck]) == 0


def test_emit_and_check(tmp_path, capsys):
    out_path = str(tmp_path / "m2.json")
    code = main(["emit", "--constructor", "good_matrix_algebra",
                 "--field", '{"char": 2}', "--group", '{"kind":"cyclic","n":2}',
                 "--params", '{"n": 2, "sigmas": [0, 1]}', "-o", out_path])
    assert code == 0
    capsys.readouterr()
    assert main(["check", out_path]) == 0


def test_emit_unknown_constructor(capsys):
    assert main(["emit", "--constructor", "bogus"]) == 3


def test_parse_error_exit_three(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert main(["check", str(bad)]) == 3


def test_usage_error_exit_three():
    assert main(["check"]) == 3
    assert main(["no-such-command"]) == 3


def test_help_exits_zero():
    assert main(["--help"]) == 0


def test_check_undecidable_exit_two(tmp_path, capsys):
    # frobenius mode on a dim-9 algebra has a 9-dimensional trace space,
    # beyond the pencil unknown cap
    from grasym import matrix_algebra, ungrade
    a = ungrade(matrix_algebra(make_field(2), 3))
    path = tmp_path / "m3.json"
    write_algebra_file(a, str(path))
    assert main(["check", str(path), "--mode", "frobenius"]) == 2

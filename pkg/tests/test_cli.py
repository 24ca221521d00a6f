import json
import shutil

import pytest

from qinv.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out.strip(), out.err.strip()


@pytest.mark.parametrize(
    "argv, expected",
    [
        (("lmo", "presets/t3", "--order", "2"), "1 + 1·γ1 + 1·γ2"),
        (("lmo", "presets/b1-5"), "1"),
        (("lmo", "presets/s2xs1", "--order", "1"), "1 + 1/24·w[1]"),
        (("rw", "s2xs1", "k3"), "-2"),
        (("rw", "t3", "k3"), "24"),
        (("rw", "trefoil-surgery", "k3"), "22"),
        (("rw", "s2xs1", "k3xk3"), "4"),
        (("rw", "b2-sample", "k3"), "144"),
        (("pfaffian", "symplectic-4"), "1"),
    ],
)
def test_single_value_commands(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out == expected


def test_hilb_table(capsys):
    code, out, _ = run(capsys, "hilb", "--max", "2")
    assert code == 0
    assert [line.split("\t")[1] for line in out.splitlines()[1:]] == ["1", "24", "324"]


def test_lambda_on_s3(capsys):
    code, out, _ = run(capsys, "lambda", "s3-z2", "s3-g2")
    assert code == 0
    assert out.splitlines() == ["lambda^0 = 1", "lambda^1 = 0", "lambda^2 = 0"]


def test_consum(capsys):
    code, out, _ = run(capsys, "consum", "--n", "2")
    assert code == 0
    assert out.splitlines()[-1] == "identity verified"
    assert "x0*y2 + x1*y1 + x2*y0" in out


def test_vertex(capsys):
    code, out, _ = run(capsys, "vertex", "--n", "1", "--seed", "2")
    assert code == 0 and out.endswith("equal")


def test_machine_format_is_deterministic(capsys):
    first = run(capsys, "--format", "machine", "lmo", "trefoil-surgery", "--order", "2")[1]
    second = run(capsys, "lmo", "trefoil-surgery", "--order", "2", "--format", "machine")[1]
    assert first == second
    data = json.loads(first)
    assert data["terms"]["w[1]"] == "-11/24"
    assert "." not in "".join(data["terms"].values())


def test_exit_codes(capsys, tmp_path):
    assert run(capsys, "lmo", "no-such-file")[0] == 2
    bad_json = tmp_path / "bad.json"
    bad_json.write_text("{not json")
    assert run(capsys, "lmo", str(bad_json))[0] == 2
    assert run(capsys, "lmo", "s3")[0] == 3
    assert run(capsys, "rw", "s3", "k3")[0] == 3
    bad_alex = tmp_path / "m.json"
    bad_alex.write_text(json.dumps({"b1": 1, "alexander": [1, 1]}))
    assert run(capsys, "lmo", str(bad_alex))[0] == 4
    bad_space = tmp_path / "x.json"
    bad_space.write_text(json.dumps({"n": 2, "eulerChar": 1, "pairing": {"2": 1}}))
    assert run(capsys, "rw", "s2xs1", str(bad_space))[0] == 4
    bad_g = tmp_path / "g.json"
    bad_g.write_text(json.dumps({"values": ["a0", "0", "2"]}))
    assert run(capsys, "lambda", "s3-z2", str(bad_g))[0] == 4
    odd = tmp_path / "odd.json"
    odd.write_text(json.dumps({"matrix": [[0]]}))
    assert run(capsys, "pfaffian", str(odd))[0] == 4


def test_preset_dir_override(capsys, tmp_path, monkeypatch):
    from qinv.io import preset_dir

    shutil.copy(preset_dir() / "k3.json", tmp_path / "k3.json")
    (tmp_path / "mine.json").write_text(json.dumps({"name": "mine", "b1": 3, "cupTriple": 2}))
    monkeypatch.setenv("QI_PRESET_DIR", str(tmp_path))
    assert run(capsys, "rw", "mine", "k3")[1] == "96"
    assert run(capsys, "rw", "t3", "k3")[0] == 2


def test_round_trip_dicts():
    from qinv.io import load_manifold, load_space, manifold_from_dict, manifold_to_dict, space_from_dict, space_to_dict

    for name in ("s3", "s2xs1", "t3", "trefoil-surgery", "b1-5", "b2-sample"):
        d = load_manifold(name)
        assert manifold_from_dict(manifold_to_dict(d)) == d
    for name in ("k3", "t4", "k3xk3"):
        x = load_space(name)
        assert space_from_dict(space_to_dict(x)) == x


def test_space_presets_match_library():
    from qinv.io import load_space
    from qinv.rw import K3, T4, product_x

    assert load_space("k3") == K3
    assert load_space("t4") == T4
    kk = load_space("k3xk3")
    ref = product_x(K3, K3)
    assert (kk.n, kk.euler_char, kk.pairing) == (ref.n, ref.euler_char, ref.pairing)

import json
import os
import subprocess
import sys

import pytest

from complaff.algebra import ExtensionField, PrimeField
from complaff.chart import symmetric_chart
from complaff.projective import Subspace

REPO = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
SRC = os.path.join(REPO, "src")

GF2 = PrimeField(2)
GF4 = ExtensionField(2, (1, 1, 1))


def run_cli(*argv):
    env = dict(os.environ)
    env["PYTHONPATH"] = SRC + os.pathsep + env.get("PYTHONPATH", "")
    return subprocess.run([sys.executable, "-m", "complaff.cli", *argv],
                          capture_output=True, text=True, env=env)


@pytest.fixture
def cfg2(tmp_path):
    path = tmp_path / "gf2.json"
    path.write_text(json.dumps({"field": "gf(2)", "n": 4, "k": 2}))
    return str(path)


@pytest.fixture
def cfg3(tmp_path):
    path = tmp_path / "gf3.json"
    path.write_text(json.dumps({"field": "gf(3)", "n": 4, "k": 2}))
    return str(path)


@pytest.fixture
def cfgq(tmp_path):
    path = tmp_path / "quat.json"
    path.write_text(json.dumps({"field": "quat(Q)", "n": 4, "k": 2}))
    return str(path)


def spread_gammas():
    return [[[0, 0], [0, 0]], [[1, 0], [0, 1]], [[1, 1], [1, 0]], [[0, 1], [1, 1]]]


@pytest.fixture
def spread_file(tmp_path):
    path = tmp_path / "spread.json"
    path.write_text(json.dumps({"kind": "dual-spread", "gammas": spread_gammas()}))
    return str(path)


def test_enumerate_counts(cfg2, cfg3):
    out = run_cli("enumerate", "--config", cfg2, "--json")
    assert out.returncode == 0
    report = json.loads(out.stdout)
    assert report["count"] == 16 and len(report["complements"]) == 16
    out3 = run_cli("enumerate", "--config", cfg3, "--json")
    assert json.loads(out3.stdout)["count"] == 81


def test_enumerate_refuses_quaternions(cfgq):
    out = run_cli("enumerate", "--config", cfgq, "--json")
    assert out.returncode == 2
    assert "finite" in out.stderr


def test_enumerate_human_output(cfg2):
    out = run_cli("enumerate", "--config", cfg2)
    assert out.returncode == 0
    assert "|S| = 16" in out.stdout


def test_classify_lines_counts(cfg2, cfg3):
    report = json.loads(run_cli("classify-lines", "--config", cfg2,
                                "--json").stdout)
    assert report["total"] == 15
    # |GL_2(GF(2))| = 6 invertible alpha, one canonical rep each
    assert report["counts"] == {"regular": 6, "cone_exact": 9,
                                "cone_nonexact": 0}
    report3 = json.loads(run_cli("classify-lines", "--config", cfg3,
                                 "--json").stdout)
    assert report3["total"] == 40
    # 48 invertible / (q-1) = 24 regular lines, 32 rank-1 / (q-1) = 16 cones
    assert report3["counts"] == {"regular": 24, "cone_exact": 16,
                                 "cone_nonexact": 0}
    assert sum(report3["counts"].values()) == report3["total"]


def test_classify_lines_asymmetric_note(tmp_path):
    path = tmp_path / "asym.json"
    path.write_text(json.dumps({"field": "gf(2)", "n": 4, "k": 1}))
    report = json.loads(run_cli("classify-lines", "--config", str(path),
                                "--json").stdout)
    assert report["counts"]["regular"] == 0
    assert "note" in report


def test_regulus_through_files(cfg3, tmp_path):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    a.write_text(json.dumps({"gamma": [[0, 0], [0, 0]]}))
    b.write_text(json.dumps({"gamma": [[1, 0], [0, 1]]}))
    out = run_cli("regulus", "--through", str(a), str(b), "--config", cfg3,
                  "--json")
    assert out.returncode == 0
    report = json.loads(out.stdout)
    assert report["result"] == "PASS"
    assert report["regulus"]["kind"] == "regulus"
    assert len(report["regulus"]["subspaces"]) == 4
    assert report["transversals"]["kind"] == "transversals"
    assert len(report["transversals"]["subspaces"]) == 4
    assert report["w_trace_matches_z"] is True


def test_regulus_rejects_non_complementary(cfg3, tmp_path):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    a.write_text(json.dumps({"gamma": [[0, 0], [0, 0]]}))
    b.write_text(json.dumps({"gamma": [[1, 0], [0, 0]]}))
    out = run_cli("regulus", "--through", str(a), str(b), "--config", cfg3,
                  "--json")
    assert out.returncode == 1
    assert json.loads(out.stdout)["result"] == "FAIL"


def test_regulus_accepts_subspace_files(cfg2, tmp_path):
    ch = symmetric_chart(GF2, 2)
    coords = ch.all_coords()
    from complaff.jsonio import subspace_to_json
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    a.write_text(json.dumps(subspace_to_json(ch.complement(coords[0]))))
    ident = ch.coord([[1, 0], [0, 1]])
    b.write_text(json.dumps(subspace_to_json(ch.complement(ident))))
    out = run_cli("regulus", "--through", str(a), str(b), "--config", cfg2,
                  "--json")
    assert out.returncode == 0


def test_reconstruct_round_trip(cfg3, tmp_path):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    a.write_text(json.dumps({"gamma": [[0, 0], [0, 0]]}))
    b.write_text(json.dumps({"gamma": [[1, 0], [0, 1]]}))
    reg = json.loads(run_cli("regulus", "--through", str(a), str(b),
                             "--config", cfg3, "--json").stdout)
    tfile = tmp_path / "transversals.json"
    tfile.write_text(json.dumps(reg["transversals"]))   # already a valid file
    out = run_cli("reconstruct", "--transversals", str(tfile), "--config",
                  cfg3, "--json")
    assert out.returncode == 0
    rebuilt = json.loads(out.stdout)
    assert rebuilt["result"] == "PASS"
    mine = rebuilt["regulus"]["subspaces"]
    theirs = reg["regulus"]["subspaces"]
    assert sorted(json.dumps(m, sort_keys=True) for m in mine) \
        == sorted(json.dumps(m, sort_keys=True) for m in theirs)


def test_reconstruct_rejects_bad_file(cfg3, tmp_path):
    from complaff.jsonio import subspace_to_json
    GF3 = PrimeField(3)
    junk = {"kind": "transversals",
            "subspaces": [subspace_to_json(Subspace.from_rows(
                GF3, 4, [[1 if i == j else 0 for i in range(4)]]))
                for j in [0, 1, 2]]}
    tfile = tmp_path / "bad.json"
    tfile.write_text(json.dumps(junk))
    out = run_cli("reconstruct", "--transversals", str(tfile), "--config",
                  cfg3, "--json")
    assert out.returncode == 1


def test_check_dual_spread_pass(cfg2, spread_file):
    out = run_cli("check-dual-spread", spread_file, "--config", cfg2, "--json")
    assert out.returncode == 0
    assert json.loads(out.stdout)["result"] == "PASS"


def test_check_dual_spread_repeated_member_fails(cfg2, tmp_path):
    gammas = spread_gammas()
    gammas[1] = gammas[0]
    path = tmp_path / "dup.json"
    path.write_text(json.dumps({"kind": "dual-spread", "gammas": gammas}))
    out = run_cli("check-dual-spread", str(path), "--config", cfg2, "--json")
    assert out.returncode == 1
    report = json.loads(out.stdout)
    assert report["violation"]["kind"] == "DS1"


def test_check_dual_spread_missing_member_fails_ds2(cfg2, tmp_path):
    path = tmp_path / "short.json"
    path.write_text(json.dumps({"kind": "dual-spread",
                                "gammas": spread_gammas()[:3]}))
    out = run_cli("check-dual-spread", str(path), "--config", cfg2, "--json")
    assert out.returncode == 1
    report = json.loads(out.stdout)
    assert report["violation"]["kind"] == "DS2"
    assert "hyperplane" in report["violation"]


def test_extract_build_round_trip(cfg2, spread_file, tmp_path):
    fam_out = run_cli("extract-family", spread_file, "--index", "0",
                      "--config", cfg2, "--json")
    assert fam_out.returncode == 0
    fam_file = tmp_path / "family.json"
    fam_file.write_text(fam_out.stdout)
    built = run_cli("build-dual-spread", str(fam_file), "--config", cfg2,
                    "--json")
    assert built.returncode == 0
    spread = json.loads(built.stdout)
    assert spread["kind"] == "dual-spread"
    original = {json.dumps(g) for g in spread_gammas()}
    rebuilt = {json.dumps(g) for g in spread["gammas"]}
    assert rebuilt == original
    check = tmp_path / "rebuilt.json"
    check.write_text(built.stdout)
    again = run_cli("check-dual-spread", str(check), "--config", cfg2, "--json")
    assert again.returncode == 0


def test_build_dual_spread_rejects_bad_family(cfg2, tmp_path):
    fam = {"kind": "family",
           "entries": [{"u": [0, 0], "images": [[0, 0], [0, 0]]},
                       {"u": [1, 0], "images": [[0, 0], [0, 0]]}]}
    path = tmp_path / "bad_family.json"
    path.write_text(json.dumps(fam))
    out = run_cli("build-dual-spread", str(path), "--config", cfg2, "--json")
    assert out.returncode == 1


def test_usage_errors_exit_2(cfg2, tmp_path):
    assert run_cli("enumerate", "--json").returncode == 2          # no config
    missing = str(tmp_path / "missing.json")
    assert run_cli("enumerate", "--config", missing).returncode == 2
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"field": "gf(6)", "n": 4, "k": 2}))
    assert run_cli("enumerate", "--config", str(bad)).returncode == 2
    assert run_cli("no-such-command").returncode == 2


def test_extension_field_config(tmp_path):
    path = tmp_path / "gf4.json"
    path.write_text(json.dumps({"field": "gf(2^2; modulus=[1,1,1])",
                                "n": 2, "k": 1}))
    report = json.loads(run_cli("enumerate", "--config", str(path),
                                "--json").stdout)
    assert report["count"] == 4


def test_every_command_is_deterministic(cfg2, spread_file, tmp_path):
    a = tmp_path / "pa.json"
    b = tmp_path / "pb.json"
    a.write_text(json.dumps({"gamma": [[0, 0], [0, 0]]}))
    b.write_text(json.dumps({"gamma": [[1, 0], [0, 1]]}))
    fam_text = run_cli("extract-family", spread_file, "--config", cfg2,
                       "--json").stdout
    fam_file = tmp_path / "family.json"
    fam_file.write_text(fam_text)
    invocations = [
        ("enumerate", "--config", cfg2, "--json"),
        ("classify-lines", "--config", cfg2, "--json"),
        ("regulus", "--through", str(a), str(b), "--config", cfg2, "--json"),
        ("check-dual-spread", spread_file, "--config", cfg2, "--json"),
        ("build-dual-spread", str(fam_file), "--config", cfg2, "--json"),
        ("extract-family", spread_file, "--config", cfg2, "--json"),
    ]
    for argv in invocations:
        first = run_cli(*argv)
        second = run_cli(*argv)
        assert first.stdout == second.stdout
        assert first.returncode == second.returncode

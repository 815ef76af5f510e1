import json
from fractions import Fraction

import pytest

from hdx.caps import FeasibilityCaps, caps_from_env
from hdx.cli import main
from hdx.errors import ConfigError, UnknownFixture
from hdx.report import full_report, untag
from hdx.suite import SuiteConfig, resolve_fixture, run_suite

SMALL = dict(n_random_complexes=8, n_triangle_samples=30,
             n_localmin_samples=12, n_overlap_instances=2,
             n_coset_instances=6, n_random_graphs=6, n_lemma_samples=3)


def small_config(**overrides):
    return SuiteConfig(**{**SMALL, **overrides})


def test_run_suite_passes():
    report = run_suite(small_config())
    assert report.passed
    assert all(c.anchor for c in report.checks)
    ids = [c.check_id for c in report.checks]
    assert ids == sorted(ids)


def test_empty_fixture_list_rejected():
    with pytest.raises(ConfigError):
        run_suite(small_config(fixtures=()))


def test_unknown_fixture_rejected():
    with pytest.raises(UnknownFixture):
        run_suite(small_config(fixtures=("delta4_2", "nonsense")))


def test_eta_above_systole_fails():
    report = run_suite(small_config(gromov_eta=Fraction(1, 2)))
    assert not report.passed
    bad = [c for c in report.checks if not c.passed]
    assert [c.check_id for c in bad] == ["certify_gromov[rp2_6]"]


def test_report_json_deterministic():
    a = run_suite(small_config()).to_json()
    b = run_suite(small_config()).to_json()
    assert a == b
    c = run_suite(small_config(seed=1)).to_json()
    assert c != a


def test_resolve_fixture_shorthands():
    assert resolve_fixture("delta4_2").n_faces(2) == 4
    assert resolve_fixture("k5").n_faces(1) == 10
    assert resolve_fixture("flag_2_3").n_vertices() == 14
    assert resolve_fixture("octahedron_skeleton").dim == 1
    assert resolve_fixture("cycle_6").n_faces(1) == 6


def test_config_from_json_dict():
    cfg = SuiteConfig.from_json_dict({
        "seed": 5, "fixtures": ["delta4_2"], "gromov": {"eta": "1/3"},
        "params": {"epsilon": "1/5"}, "caps": {"exhaustive_bits": 20},
    })
    assert cfg.seed == 5
    assert cfg.gromov_eta == Fraction(1, 3)
    assert cfg.params.epsilon == Fraction(1, 5)
    assert cfg.caps.exhaustive_bits == 20


def test_caps_env_parsing():
    caps = caps_from_env("exhaustive_bits=20, cheeger_n=18")
    assert caps.exhaustive_bits == 20 and caps.cheeger_n == 18
    assert caps.mitm_pair_bits == FeasibilityCaps().mitm_pair_bits
    with pytest.raises(ValueError):
        caps_from_env("bogus=1")


def test_full_report_rendering(delta4):
    report = full_report(delta4)
    data = report.to_json_dict()
    eps = untag(data["constants"][0]["epsilon"])
    assert eps == Fraction(4, 3)
    assert data["constants"][0]["epsilon"]["decimal"].startswith("1.3333")
    csv_text = report.to_csv()
    assert csv_text.splitlines()[0] == "quantity,i,kind,value,decimal"
    assert report.spectral["regular"] is True


# -- command line -------------------------------------------------------------

def test_cli_gen_compute_roundtrip(tmp_path, capsys):
    out = tmp_path / "d4.json"
    assert main(["gen", "complete", "--n", "4", "--d", "2",
                 "-o", str(out)]) == 0
    data = json.loads(out.read_text())
    assert len(data["facets"]) == 4
    report_path = tmp_path / "rep.json"
    csv_path = tmp_path / "rep.csv"
    assert main(["compute", str(out), "-o", str(report_path),
                 "--csv", str(csv_path)]) == 0
    rep = json.loads(report_path.read_text())
    assert untag(rep["constants"][0]["epsilon"]) == Fraction(4, 3)
    assert untag(rep["constants"][1]["epsilon"]) == Fraction(3)
    assert all(row["dim_h"] == 0 for row in rep["constants"])
    assert csv_path.read_text().startswith("quantity,")


def test_cli_compute_single_dimension(tmp_path):
    out = tmp_path / "d4.json"
    main(["gen", "complete", "--n", "4", "--d", "2", "-o", str(out)])
    rep_path = tmp_path / "r.json"
    assert main(["compute", str(out), "--i", "1", "-o", str(rep_path)]) == 0
    rep = json.loads(rep_path.read_text())
    assert [row["i"] for row in rep["constants"]] == [1]


def test_cli_gen_flag_and_fixture(tmp_path):
    flag_path = tmp_path / "flag.json"
    assert main(["gen", "flag", "--q", "2", "--m", "3",
                 "-o", str(flag_path)]) == 0
    assert len(json.loads(flag_path.read_text())["facets"]) == 21
    fx_path = tmp_path / "rp2.json"
    assert main(["gen", "fixture", "--name", "rp2_6", "-o", str(fx_path)]) == 0
    assert len(json.loads(fx_path.read_text())["facets"]) == 10


def test_cli_gen_cayley(tmp_path):
    gens_path = tmp_path / "gens.json"
    gens_path.write_text(json.dumps(
        {"degree": 5,
         "generators": [[1, 2, 3, 4, 0], [4, 0, 1, 2, 3],
                        [2, 3, 4, 0, 1], [3, 4, 0, 1, 2]]}))
    out = tmp_path / "cayley.json"
    assert main(["gen", "cayley", "--file", str(gens_path), "--max-dim", "2",
                 "-o", str(out)]) == 0
    assert len(json.loads(out.read_text())["facets"]) == 10


def test_cli_localmin(tmp_path):
    cx = tmp_path / "d4.json"
    main(["gen", "complete", "--n", "4", "--d", "2", "-o", str(cx)])
    al = tmp_path / "alpha.json"
    al.write_text(json.dumps(
        {"dim": 1, "faces": [["v0", "v1"], ["v0", "v2"], ["v0", "v3"]]}))
    out = tmp_path / "min.json"
    assert main(["localmin", str(cx), str(al), "-o", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["minimized"]["faces"] == []
    assert data["correction"]["faces"] == [["v0"]]
    assert data["steps"] == 1


def test_cli_lemmas(tmp_path):
    cx = tmp_path / "d5.json"
    main(["gen", "complete", "--n", "5", "--d", "2", "-o", str(cx)])
    al = tmp_path / "alpha.json"
    al.write_text(json.dumps({"dim": 1, "faces": [["v0", "v1"]]}))
    out = tmp_path / "lem.json"
    assert main(["lemmas", str(cx), str(al), "--eps", "1/10",
                 "-o", str(out)]) == 0
    records = json.loads(out.read_text())["records"]
    assert all(r["pass"] in (True, None) for r in records)


def test_cli_overlap(tmp_path):
    cx = tmp_path / "d4.json"
    main(["gen", "complete", "--n", "4", "--d", "2", "-o", str(cx)])
    pts = tmp_path / "pts.json"
    pts.write_text(json.dumps({"points": {
        "v0": ["0", "0"], "v1": ["1", "0"], "v2": ["1", "1"],
        "v3": ["0", "1"]}}))
    out = tmp_path / "ov.json"
    assert main(["overlap", str(cx), str(pts), "-o", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["max_depth"] == 4
    mc_out = tmp_path / "mc.json"
    assert main(["overlap", str(cx), str(pts), "--mc", "10", "--seed", "3",
                 "-o", str(mc_out)]) == 0
    mc = json.loads(mc_out.read_text())
    assert mc["depth_lower_bound"] <= 4


def test_cli_verify_exit_codes(tmp_path):
    cfg = {**SMALL, "seed": 3}
    cfg_path = tmp_path / "cfg.json"
    cfg_path.write_text(json.dumps(cfg))
    out = tmp_path / "report.json"
    assert main(["verify", "--config", str(cfg_path), "-o", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["pass"] is True
    bad = {**cfg, "gromov": {"eta": "2/3"}}
    bad_path = tmp_path / "bad.json"
    bad_path.write_text(json.dumps(bad))
    assert main(["verify", "--config", str(bad_path),
                 "-o", str(tmp_path / "bad_rep.json")]) == 1


def test_cli_error_paths(tmp_path):
    assert main(["compute", str(tmp_path / "missing.json")]) == 2
    assert main(["gen", "complete", "--n", "3", "--d", "3",
                 "-o", str(tmp_path / "x.json")]) == 2
    assert main(["nonsense"]) == 2
    assert main(["gen", "fixture", "--name", "nope",
                 "-o", str(tmp_path / "y.json")]) == 2

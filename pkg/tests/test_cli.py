"""
Tests de la interfaz de línea de comandos.
"""

import json

import pytest

from vinoslice.cli import build_parser, main


@pytest.fixture(autouse=True)
def workdir(tmp_path, monkeypatch):
    """Cada test corre en su propio directorio (la caché de Psi se crea ahí)."""
    monkeypatch.chdir(tmp_path)
    return tmp_path


def _run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


def _entries(out):
    return json.loads(out)["entries"]


def test_count_i(capsys):
    code, out = _run(capsys, ["count-i", "--s", "1", "--k", "2", "--r", "1", "--X", "10"])
    assert code == 0
    entry = _entries(out)[0]
    assert entry["count"] == "10"
    assert entry["experiment"] == "count-i"


def test_count_i_grid_with_oracle(capsys):
    code, out = _run(
        capsys, ["count-i", "--s", "2", "--k", "3", "--r", "1", "--X", "3,5", "--oracle"]
    )
    assert code == 0
    entries = _entries(out)
    assert [e["X"] for e in entries] == [3, 5]
    assert entries[1]["count"] == "45"
    assert entries[1]["extra"]["oracle"] == "45"


@pytest.mark.parametrize("method", ["mitm", "naive"])
def test_count_i_method(capsys, method):
    code, out = _run(
        capsys,
        ["count-i", "--s", "1", "--k", "2", "--r", "1", "--X", "10", "--method", method],
    )
    assert code == 0
    entry = _entries(out)[0]
    assert entry["count"] == "10"
    assert entry["method"] == method
    assert entry["experiment"] == "count-i"


def test_count_i_naive_respects_ceiling(capsys):
    code, out = _run(
        capsys,
        [
            "--oracle-ceiling", "100",
            "count-i", "--s", "2", "--k", "3", "--r", "1", "--X", "5", "--method", "naive",
        ],
    )
    assert code == 1
    assert out == ""


@pytest.mark.parametrize(
    "argv",
    [
        ["--format", "csv", "count-j", "--sigma", "2", "--d", "1", "--X", "3"],
        ["count-j", "--sigma", "2", "--d", "1", "--X", "3", "--format", "csv"],
    ],
)
def test_global_flags_before_or_after(capsys, argv):
    code, out = _run(capsys, argv)
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("experiment,s,k,r")
    assert ",19,mitm," in lines[1]


def test_count_a_with_oracle(capsys):
    code, out = _run(
        capsys, ["count-a", "--k", "3", "--r", "1", "--s", "1", "--X", "3", "--oracle"]
    )
    assert code == 0
    entry = _entries(out)[0]
    assert entry["H"] == 3
    assert entry["count"] == entry["extra"]["oracle"]


def test_count_a_inline_tuple(capsys):
    code, out = _run(
        capsys, ["count-a", "--tuple", "1", "--r", "1", "--s", "1", "--X", "3", "--H", "3"]
    )
    assert code == 0
    assert _entries(out)[0]["count"] == "63"


def test_count_lifted(capsys):
    code, out = _run(capsys, ["count-lifted", "--s", "1", "--k", "2", "--r", "1", "--X", "2"])
    assert code == 0
    assert _entries(out)[0]["count"] == "10"


def test_bounds(capsys):
    code, out = _run(capsys, ["bounds", "--s", "3", "--k", "3", "--r", "1", "--kappa", "2"])
    assert code == 0
    entry = _entries(out)[0]
    assert entry["type"] == "bounds"
    assert entry["targets"]["s_max"] == "9/2"
    assert entry["flags"]["kappa_ok"] is True


def test_verify_identities(capsys):
    code, out = _run(capsys, ["verify-identities"])
    assert code == 0
    entry = _entries(out)[0]
    assert entry["type"] == "identities"
    assert entry["F63_bidegree"] == [6, 3]


def test_find_psi_uses_cache(capsys, workdir):
    argv = ["find-psi", "--k", "3", "--r", "1", "--n", "1"]
    code, out = _run(capsys, argv)
    assert code == 0
    entries = _entries(out)
    assert [e["type"] for e in entries] == ["psi", "phi", "phi_check"]
    assert entries[0]["psi"] == "1*w1*w3 - 1*w2^2"
    assert entries[2]["recombines"] is True
    assert (workdir / ".vinoslice_cache" / "metadata.json").exists()

    code, again = _run(capsys, argv)
    assert code == 0
    assert again == out


def test_find_psi_without_cache(capsys, workdir):
    code, _ = _run(capsys, ["find-psi", "--k", "3", "--r", "1", "--n", "1", "--no-cache"])
    assert code == 0
    assert not (workdir / ".vinoslice_cache").exists()


def test_det_check(capsys):
    code, out = _run(capsys, ["det-check", "--tuple", "0,0,1;0,1;1", "--n", "1"])
    assert code == 0
    assert _entries(out)[0]["expansion_ok"] is True


def test_theta(capsys):
    code, out = _run(capsys, ["theta", "--tuple", "0,0,0,1;0,1;1", "--m", "3"])
    assert code == 0
    entry = _entries(out)[0]
    assert entry["theta"] == "1*z1 + 1*z2 + 1*z3"
    assert entry["definite"] is True


def test_theta_from_tuple_file(capsys, workdir):
    path = workdir / "f.txt"
    path.write_text("0,0,1\n0,1\n", encoding="utf-8")
    code, out = _run(capsys, ["theta", "--tuple-file", str(path), "--m", "2"])
    assert code == 0
    assert _entries(out)[0]["theta"] == "1*z1*z2"


def test_classify(capsys):
    code, out = _run(
        capsys, ["classify", "--k", "3", "--r", "1", "--s", "2", "--X", "2", "--labels"]
    )
    assert code == 0
    entry = _entries(out)[0]
    assert entry["witnesses_verified"] is True
    assert entry["histogram"]["S_0"] == 16
    assert entry["total"] == int(entry["solutions"])
    assert len(entry["labels"]) == entry["total"]


def test_classify_grid_fits_exponents(capsys):
    code, out = _run(
        capsys, ["classify", "--k", "3", "--r", "1", "--s", "2", "--X", "2,3,4"]
    )
    entries = _entries(out)
    counts = [e for e in entries if e["type"] == "count"]
    assert [e["X"] for e in counts] == [2, 3, 4]
    experiment = next(e for e in entries if e["type"] == "experiment")
    assert code == (0 if experiment["ok"] else 1)
    extra = experiment["extra"]
    assert extra["class_exponent_targets"] == {"S_0": 4, "T_{1,0}": 3, "T_{1,1}": 4, "S_2": 4}
    assert extra["fitted_exponents"]["S_0"] == pytest.approx(4.0)
    assert set(extra["fitted_exponents"]) <= set(extra["class_exponent_targets"])
    assert extra["histograms"]["4"]["S_0"] == 256


def test_fit_points(capsys):
    code, out = _run(capsys, ["fit", "--points", "2:4,4:16,8:64", "--target", "2"])
    assert code == 0
    entry = _entries(out)[0]
    assert entry["slope"] == pytest.approx(2.0)
    assert entry["within"] is True


def test_fit_from_report(capsys, workdir):
    report = workdir / "counts.json"
    code, _ = _run(
        capsys,
        ["count-i", "--s", "1", "--k", "2", "--r", "1", "--X", "4,8,16", "--out", str(report)],
    )
    assert code == 0
    assert report.exists()

    code, out = _run(capsys, ["fit", "--report", str(report)])
    assert code == 0
    entry = _entries(out)[0]
    assert entry["experiment"] == "count-i:s=1,k=2,r=1"
    assert entry["slope"] == pytest.approx(1.0)


def test_probe_lifted(capsys):
    code, out = _run(
        capsys, ["probe", "lifted", "--k", "2", "--r", "1", "--s", "1", "--grid", "2,3"]
    )
    assert code == 0
    experiment = [e for e in _entries(out) if e["type"] == "experiment"][0]
    assert experiment["ok"] is True
    assert experiment["stats"]["counts"] == 4


def test_probe_requires_k_and_r(capsys):
    code, _ = _run(capsys, ["probe", "u2", "--s", "1"])
    assert code == 1


def test_domain_error(capsys):
    code, out = _run(capsys, ["count-i", "--s", "1", "--k", "2", "--r", "3", "--X", "5"])
    assert code == 1
    assert out == ""


def test_invalid_config(capsys):
    code, _ = _run(capsys, ["--threads", "0", "count-i", "--s", "1", "--k", "2", "--r", "1", "--X", "3"])
    assert code == 1


def test_config_file(capsys, workdir):
    path = workdir / "run.env"
    path.write_text("VINOSLICE_FORMAT=csv\n", encoding="utf-8")
    code, out = _run(
        capsys, ["--config", str(path), "count-i", "--s", "1", "--k", "2", "--r", "1", "--X", "3"]
    )
    assert code == 0
    assert out.startswith("experiment,")


def test_missing_config_file(capsys, workdir):
    code, _ = _run(
        capsys,
        ["--config", str(workdir / "none.env"), "count-i", "--s", "1", "--k", "2", "--r", "1", "--X", "3"],
    )
    assert code == 1


def test_usage_error():
    with pytest.raises(SystemExit) as excinfo:
        main(["count-i"])
    assert excinfo.value.code == 2


def test_parser_lists_commands():
    parser = build_parser()
    args = parser.parse_args(["probe", "diagonal", "--k", "3", "--r", "1", "--s", "1,2"])
    assert args.name == "diagonal"
    assert args.s == [1, 2]


@pytest.mark.parametrize("flag", ["--cap", "--degree-cap"])
def test_find_psi_cap_is_not_capacity(flag):
    args = build_parser().parse_args(
        ["find-psi", "--k", "3", "--r", "1", "--n", "1", flag, "4"]
    )
    assert args.degree_cap == 4
    assert args.capacity is None


def test_abbreviated_flags_are_rejected():
    with pytest.raises(SystemExit) as excinfo:
        build_parser().parse_args(
            ["find-psi", "--k", "3", "--r", "1", "--n", "1", "--capa", "4"]
        )
    assert excinfo.value.code == 2


def test_find_psi_with_cap(capsys):
    code, out = _run(
        capsys, ["find-psi", "--k", "3", "--r", "1", "--n", "1", "--cap", "2"]
    )
    assert code == 0
    entry = _entries(out)[0]
    assert entry["psi"] == "1*w1*w3 - 1*w2^2"
    assert entry["total_degree"] == 2

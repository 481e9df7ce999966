import json

from bicanonical import cli


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr().out
    return code, out


def write_scenario(tmp_path, payload, name="scenario.json"):
    path = tmp_path / name
    path.write_text(json.dumps(payload), encoding="utf-8")
    return str(path)


def builtin_payload(name):
    return json.loads(cli.builtin_scenario_text(name))


def test_list_builtin(capsys):
    code, out = run_cli(capsys, "list-builtin")
    assert code == 0
    names = out.strip().splitlines()
    assert len(names) == 5
    assert "inoue7" in names
    assert set(names) == {"inoue7", "beauville8", "inoue-z24", "fermat-z52",
                          "proofcheck-all"}


def test_every_builtin_resolvable(capsys):
    for name in cli.BUILTIN_ORDER:
        code, out = run_cli(capsys, "run", name)
        assert code == 0, f"{name} failed: {out}"


def test_inoue7_report_final_line(capsys):
    code, out = run_cli(capsys, "run", "inoue7")
    assert code == 0
    assert out.rstrip().splitlines()[-1] == (
        "K²=7, p_g=0, p₂=8, eigentable (7,1,0,0), "
        "bicanonical composed with γ₁, degree 2")


def test_beauville8_report_final_line(capsys):
    code, out = run_cli(capsys, "run", "beauville8")
    assert code == 0
    assert out.rstrip().splitlines()[-1] == "kernel {0, γ₃}, degree 2"


def test_inoue_z24_verdict(capsys):
    code, out = run_cli(capsys, "run", "inoue-z24")
    assert code == 0
    assert out.rstrip().splitlines()[-1] == "kernel trivial, bicanonical birational"
    assert "eigentable {4,1,1,1,1,1}, sum 9" in out


def test_run_by_path(tmp_path, capsys):
    path = write_scenario(tmp_path, builtin_payload("beauville8"))
    code, out = run_cli(capsys, "run", path)
    assert code == 0
    assert "kernel {0, γ₃}, degree 2" in out


def test_deterministic_output(capsys):
    outputs = set()
    for _ in range(2):
        for flag in ((), ("--json",)):
            code, out = run_cli(capsys, "run", "inoue7", *flag)
            assert code == 0
            outputs.add((flag, out))
    assert len(outputs) == 2  # one human, one json; identical across runs


def test_json_round_trip(capsys):
    for name in cli.BUILTIN_ORDER:
        code, out = run_cli(capsys, "run", name, "--json")
        assert code == 0
        parsed = json.loads(out)
        again = json.dumps(parsed, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
        assert again == out


def test_fermat_json_structure(capsys):
    code, out = run_cli(capsys, "run", "fermat-z52", "--json")
    assert code == 0
    data = json.loads(out)
    assert len(data["invariant_monomials"]) == 9
    assert data["verdict"] == "birational"
    assert data["weight_identity"] is True
    assert all(entry["verified"] for entry in data["ratio_identities"])
    assert all(entry["contained"] for entry in data["lattice_membership"])


def test_missing_scenario(capsys):
    code, out = run_cli(capsys, "run", "no-such-scenario")
    assert code == 1
    assert "no such file or builtin scenario" in out


def test_malformed_json_reports_location(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text('{"kind": "fermat",}', encoding="utf-8")
    code, out = run_cli(capsys, "run", str(path))
    assert code == 1
    assert "line 1" in out


def test_schema_violation_reports_path(tmp_path, capsys):
    payload = builtin_payload("beauville8")
    payload["group"] = [2, 1, 2]
    path = write_scenario(tmp_path, payload)
    code, out = run_cli(capsys, "run", path)
    assert code == 1
    assert "$.group" in out


def test_unknown_kind_rejected(tmp_path, capsys):
    path = write_scenario(tmp_path, {"kind": "mystery"})
    code, out = run_cli(capsys, "run", path)
    assert code == 1
    assert "unknown scenario kind" in out


def test_perturbed_beauville_bundle_fails_validation(tmp_path, capsys):
    payload = builtin_payload("beauville8")
    payload["curve1"]["line_bundles"][0] = 2
    path = write_scenario(tmp_path, payload)
    code, out = run_cli(capsys, "run", path)
    assert code == 1
    assert "invalid" in out


def test_perturbed_inoue_bundle_fails_validation(tmp_path, capsys):
    payload = builtin_payload("inoue7")
    payload["line_bundles"]["L1"]["e1"] = -2
    path = write_scenario(tmp_path, payload)
    code, out = run_cli(capsys, "run", path)
    assert code == 1
    assert "failed relation" in out or "INVALID" in out


def test_internal_inconsistency_exit_code(tmp_path, capsys):
    # relations hold trivially but the formal invariants cannot belong to a
    # connected surface: internal inconsistency, not validation failure
    payload = {
        "kind": "z22-surface-cover",
        "name": "degenerate",
        "branch": {"D1": {}, "D2": {}, "D3": {}},
        "line_bundles": {"L1": {}, "L2": {}},
    }
    path = write_scenario(tmp_path, payload)
    code, out = run_cli(capsys, "run", path)
    assert code == 2
    assert "internal inconsistency" in out


def test_double_cover_scenario(tmp_path, capsys):
    payload = {
        "kind": "double-cover",
        "name": "degree-four-table",
        "cases": [
            {"label": "K7-irreducible", "chi_base": 1, "pg_base": 0, "K2_base": 7,
             "M_sq": -1, "M_K": 1, "h0_K_plus_M": 4},
            {"label": "K8-blowup", "chi_base": 1, "pg_base": 0, "K2_base": 8,
             "M_sq": 0, "M_K": 2, "h0_K_plus_M": 5},
        ],
    }
    path = write_scenario(tmp_path, payload)
    code, out = run_cli(capsys, "run", path)
    assert code == 0
    assert "(16, 2, 4, 3)" in out and "(24, 3, 5, 3)" in out
    assert out.count("false") == 2


def test_linsys_scenario(tmp_path, capsys):
    payload = {
        "kind": "linsys",
        "name": "interpolation",
        "configuration": "quadrilateral",
        "systems": [
            {"degree": 5, "multiplicities": {"P1": 1, "P2": 2, "P3": 1,
                                             "P4": 2, "P5": 2, "P6": 2}},
            {"class": {"l": 4, "e1": -2, "e2": -2, "e3": -2, "e4": -1,
                       "e5": -2, "e6": -2}},
            {"degree": 2, "multiplicities": {}},
        ],
    }
    path = write_scenario(tmp_path, payload)
    code, out = run_cli(capsys, "run", path)
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[1].endswith("= 7")
    assert lines[2].endswith("= 1")
    assert lines[3].endswith("= 6")


def test_lattice_scenario(tmp_path, capsys):
    payload = {
        "kind": "lattice",
        "name": "arithmetic",
        "blowup_points": 6,
        "operations": [
            {"op": "intersect",
             "a": {"l": 5, "e1": -1, "e2": -2, "e3": -1, "e4": -2, "e5": -2, "e6": -2},
             "b": {"l": 5, "e1": -1, "e2": -2, "e3": -1, "e4": -2, "e5": -2, "e6": -2}},
            {"op": "canonical"},
            {"op": "negative-definite", "gram": [[-3, 0, 1], [0, -3, 1], [1, 1, -2]]},
            {"op": "divisible", "a": {"l": 10, "e1": -2}, "k": 2},
        ],
    }
    path = write_scenario(tmp_path, payload)
    code, out = run_cli(capsys, "run", path)
    assert code == 0
    assert "= 7" in out
    assert "-3l + e1 + e2 + e3 + e4 + e5 + e6" in out
    assert "negative definite: true" in out
    assert "divisible by 2: true" in out


def test_lattice_mismatched_class_is_validation_error(tmp_path, capsys):
    payload = {
        "kind": "lattice",
        "operations": [{"op": "intersect", "a": {"l": 1, "e9": 1}, "b": {"l": 1}}],
    }
    path = write_scenario(tmp_path, payload)
    code, out = run_cli(capsys, "run", path)
    assert code == 1


def test_verbose_adds_detail(capsys):
    code, terse = run_cli(capsys, "run", "beauville8")
    code2, verbose = run_cli(capsys, "run", "beauville8", "--verbose")
    assert code == code2 == 0
    assert len(verbose.splitlines()) > len(terse.splitlines())
    assert "character" in verbose

import json
from itertools import combinations

import pytest

from .nearspace import (
    EXIT_CLAIM_FAILED,
    EXIT_INPUT_ERROR,
    EXIT_OK,
    EXIT_RESOURCE_GUARD,
    build_parser,
    main,
    run_enumerate,
)

S3 = {"points": ["a", "b", "c"], "opens": [[], ["a"], ["a", "b"], ["a", "b", "c"]]}
D3 = {
    "points": ["a", "b", "c"],
    "opens": [[], ["a"], ["b"], ["c"], ["a", "b"], ["a", "c"], ["b", "c"], ["a", "b", "c"]],
}


@pytest.fixture
def space_file(tmp_path):
    def write(document, name="space.json") -> str:
        path = tmp_path / name
        path.write_text(json.dumps(document))
        return str(path)

    return write


def _run(capsys, argv):
    code = main(argv)
    return code, json.loads(capsys.readouterr().out)


def test_audit_reports_n0_witness_on_s3(capsys, space_file):
    """Tests that interior overlap on S3 fails N0 with witness {b,c}"""
    # Given
    path = space_file(S3)

    # When
    code, report = _run(capsys, ["audit", path, "--kind", "ex2"])

    # Then
    assert code == EXIT_OK
    assert report["kind"] == "ex2"
    assert report["space"]["t1"] is False
    assert "N0" in report["failures"]
    n0 = next(verdict for verdict in report["verdicts"] if verdict["axiom"] == "N0")
    assert n0["witness"] == {"A": ["b", "c"]}


def test_audit_discrete_space_under_intersection_holds(capsys, space_file):
    """Tests a clean audit on D3"""
    # When
    code, report = _run(capsys, ["audit", space_file(D3), "--kind", "ex1"])

    # Then
    assert code == EXIT_OK
    assert report["failures"] == []
    assert report["command"] == {"verb": "audit", "space_file": report["command"]["space_file"], "kind": "ex1"}


def test_audit_malformed_file_reports_location(capsys, tmp_path):
    """Tests that JSON syntax errors exit with code 3 and a location"""
    # Given
    path = tmp_path / "broken.json"
    path.write_text('{"points": ["a"],\n  "opens": [[] ["a"]]}')

    # When
    code, report = _run(capsys, ["audit", str(path)])

    # Then
    assert code == EXIT_INPUT_ERROR
    assert report["error"]["type"] == "ParseError"
    assert (report["error"]["line"], report["error"]["column"]) == (2, 16)


def test_audit_unknown_kind_is_input_error(capsys, space_file):
    # When
    code, report = _run(capsys, ["audit", space_file(D3), "--kind", "ex9"])

    # Then
    assert code == EXIT_INPUT_ERROR
    assert report["error"]["type"] == "UnknownKind"


@pytest.mark.parametrize("strong", ["strong-hit:ex1", "strong-hit:ex2", "strong-hit:ex3"])
def test_hyper_hit_matches_strong_hit_on_d3(capsys, space_file, strong):
    """Tests that every strong kind reproduces the hit topology on D3 and the theorem checks pass"""
    # When
    code, report = _run(capsys, ["hyper", space_file(D3), "hit", strong])

    # Then
    assert code == EXIT_OK
    assert report["comparison"] == {"verdict": "equal", "witnesses": []}
    assert report["theorems"]["status"] == "passed"
    assert report["theorems"]["checks"][0]["far_kind"] == "lodato"


def test_hyper_on_non_t1_space_skips_theorems(capsys, space_file):
    """Tests that S3 compares subbases but skips the injection checks"""
    # When
    code, report = _run(capsys, ["hyper", space_file(S3), "hit", "strong-hit:ex2"])

    # Then
    assert code == EXIT_OK
    assert report["comparison"]["verdict"] == "incomparable"
    assert [witness["side"] for witness in report["comparison"]["witnesses"]] == ["left", "right"]
    assert report["theorems"]["status"] == "skipped"


def test_hyper_without_strong_half_skips_theorems(capsys, space_file):
    # When
    code, report = _run(capsys, ["hyper", space_file(D3), "hit+miss", "hit+fell-miss"])

    # Then
    assert code == EXIT_OK
    assert report["comparison"]["verdict"] == "equal"
    assert report["theorems"] == {"status": "skipped", "reason": "no strong-hit half"}


def test_hyper_refuses_incompatible_far_miss_proximity(capsys, space_file):
    """Tests that a far-miss half over an incompatible proximity names the failing axioms"""
    # When
    code, report = _run(capsys, ["hyper", space_file(S3), "miss", "far-miss:lodato"])

    # Then
    assert code == EXIT_INPUT_ERROR
    assert report["error"]["type"] == "IncompatibleProximity"
    assert "compatibility" in report["error"]["failed_axioms"]


def test_hyper_failed_theorem_exits_with_claim_failure(capsys, space_file, mocker):
    """Tests that a failing admissibility check maps to exit code 2"""
    # Given
    failed = {"status": "failed", "checks": []}
    mocker.patch("nearspace.cli.nearspace._run_theorems", return_value=failed)

    # When
    code, report = _run(capsys, ["hyper", space_file(D3), "hit", "strong-hit:ex1"])

    # Then
    assert code == EXIT_CLAIM_FAILED
    assert report["theorems"] == failed


def test_hyper_restricted_parameters(capsys, space_file):
    # When
    code, report = _run(capsys, ["hyper", space_file(D3), "hit", "strong-hit:ex1", "--param", "a", "--param", "a,b"])

    # Then
    assert code == EXIT_OK
    assert report["comparison"]["verdict"] == "equal"


def test_scenario_thm2_dir2_defaults(capsys):
    """Tests the exact circle-through scenario with its default layout"""
    # When
    code, report = _run(capsys, ["scenario", "thm2-dir2"])

    # Then
    assert code == EXIT_OK
    assert report["scenario"]["verdict"] is True
    assert report["scenario"]["parameters"]["s"] == "11/5"


def test_scenario_thm2_dir1_defaults(capsys):
    # When
    code, report = _run(capsys, ["scenario", "thm2-dir1"])

    # Then
    assert code == EXIT_OK
    assert report["scenario"]["metadata"]["candidates"] == 484


def test_scenario_thm2_dir1_control_succeeds(capsys):
    """Tests that the closed-disk control exits cleanly when it behaves as expected"""
    # When
    code, report = _run(capsys, ["scenario", "thm2-dir1", "--e-shape", "closed-disk"])

    # Then
    assert code == EXIT_OK
    assert report["scenario"]["metadata"]["control"] is True
    assert report["scenario"]["verdict"] is True


def test_scenario_setup_invalid_exits_with_input_error(capsys):
    """Tests that a layout without the gap is refused with its failing predicate"""
    # When
    code, report = _run(capsys, ["scenario", "thm2-dir2", "--h-center", "0,0"])

    # Then
    assert code == EXIT_INPUT_ERROR
    assert report["error"]["type"] == "SetupInvalid"
    assert report["error"]["predicate"] == "gap"


def test_scenario_fig31_tangent_variant_fails_claim(capsys):
    """Tests that tangent D and E break the mixed-proximity claim"""
    # When
    code, report = _run(capsys, ["scenario", "fig31", "--variant", "tangent"])

    # Then
    assert code == EXIT_CLAIM_FAILED
    assert report["scenario"]["verdict"] is False


def test_scenario_reads_run_config(capsys, tmp_path):
    """Tests that scenario defaults come from the YAML run config"""
    # Given
    config_path = tmp_path / "run.yaml"
    config_path.write_text('scenario:\n  a_center: "13/5,0"\n  a_radius: "2/5"\n')

    # When
    code, report = _run(capsys, ["scenario", "thm2-dir2", "--config", str(config_path)])

    # Then
    assert code == EXIT_OK
    assert report["scenario"]["parameters"]["s"] == "13/5"
    assert "config" not in report["command"]


def test_scenario_oracle_flags_override_config(capsys):
    # When
    code, report = _run(capsys, ["scenario", "oracle", "--seed", "3", "--count", "50"])

    # Then
    assert code == EXIT_OK
    assert report["scenario"]["parameters"] == {"seed": 3, "count": 50}


def test_unknown_scenario_is_input_error(capsys):
    # When
    code, report = _run(capsys, ["scenario", "fig99"])

    # Then
    assert code == EXIT_INPUT_ERROR
    assert report["error"]["type"] == "UnknownScenario"


def test_enumerate_counts_four_point_topologies(capsys):
    # When
    code, report = _run(capsys, ["enumerate", "4"])

    # Then
    assert code == EXIT_OK
    assert report["count"] == 355


def test_enumerate_guard_exits_with_resource_code(capsys):
    """Tests that six points trip the enumeration guard"""
    # When
    code, report = _run(capsys, ["enumerate", "6"])

    # Then
    assert code == EXIT_RESOURCE_GUARD
    assert report["error"]["type"] == "SizeLimitExceeded"


def test_run_enumerate_brute_force_agrees():
    # When/Then
    assert run_enumerate(3, brute_force=True) == {"n": 3, "count": 29, "brute_force": True}


def test_usage_errors_are_input_errors(capsys):
    """Tests that argparse failures exit with code 3 instead of raising SystemExit"""
    # When
    code, report = _run(capsys, ["audit"])

    # Then
    assert code == EXIT_INPUT_ERROR
    assert report["error"]["type"] == "InputError"


def test_timing_only_when_requested(capsys):
    # When
    _, plain = _run(capsys, ["enumerate", "2"])
    _, timed = _run(capsys, ["enumerate", "2", "--timing"])

    # Then
    assert "wall_time_seconds" not in plain
    assert timed["wall_time_seconds"] >= 0


def test_reports_are_deterministic(capsys, space_file):
    """Tests that two runs produce byte-identical reports"""
    # Given
    argv = ["audit", space_file(S3), "--kind", "ex3"]

    # When
    main(argv)
    first = capsys.readouterr().out
    main(argv)
    second = capsys.readouterr().out

    # Then
    assert first == second


def test_parser_knows_every_verb():
    # Given
    parser = build_parser()

    # When/Then
    for argv in (["audit", "s.json"], ["hyper", "s.json", "hit", "miss"], ["scenario", "fig31"], ["enumerate", "3"]):
        assert parser.parse_args(argv).verb == argv[0]


def test_run_config_log_level_reconfigures_logging(capsys, tmp_path, mocker):
    """Tests that log_level from the run config reaches the rich handler setup"""
    # Given
    config_path = tmp_path / "run.yaml"
    config_path.write_text("log_level: debug\n")
    configure = mocker.patch("nearspace.cli.nearspace.configure_logging")

    # When
    code, _ = _run(capsys, ["enumerate", "2", "--config", str(config_path)])

    # Then
    assert code == EXIT_OK
    configure.assert_called_with("debug")


def test_missing_env_var_in_config_is_input_error(capsys, tmp_path):
    # Given
    config_path = tmp_path / "run.yaml"
    config_path.write_text("oracle:\n  seed: ${NEARSPACE_UNSET_SEED}\n")

    # When
    code, report = _run(capsys, ["enumerate", "2", "--config", str(config_path)])

    # Then
    assert code == EXIT_INPUT_ERROR
    assert "NEARSPACE_UNSET_SEED" in report["error"]["message"]


def test_audit_guard_and_override_on_five_points(capsys, space_file):
    """Tests that five points need --allow-large"""
    # Given
    points = ["a", "b", "c", "d", "e"]
    opens = [list(subset) for size in range(6) for subset in combinations(points, size)]
    path = space_file({"points": points, "opens": opens})

    # When
    guarded, refused = _run(capsys, ["audit", path])
    allowed, report = _run(capsys, ["audit", path, "--allow-large"])

    # Then
    assert guarded == EXIT_RESOURCE_GUARD
    assert refused["error"]["type"] == "SizeLimitExceeded"
    assert allowed == EXIT_OK
    assert report["failures"] == []


def test_audit_metric_kind_needs_coordinates(capsys, space_file):
    """Tests the metric kind with and without an embedding"""
    # Given
    embedded = space_file({**D3, "coordinates": {"a": [0, 0], "b": [1, 0], "c": ["7/2", 0]}}, name="embedded.json")

    # When
    missing, refused = _run(capsys, ["audit", space_file(D3), "--kind", "metric"])
    code, report = _run(capsys, ["audit", embedded, "--kind", "metric"])

    # Then
    assert missing == EXIT_INPUT_ERROR
    assert refused["error"]["type"] == "MissingCoordinates"
    assert code == EXIT_OK
    assert report["kind"].startswith("metric")

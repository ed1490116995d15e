from __future__ import annotations

import io
import json

import pytest

from tautorder.cli import PRIME_COUNT_ENV, run
from tautorder.torsion_orders import NG_CROSS_CHECK

SUBCOMMAND_SAMPLES = [
    ["ng", "3"],
    ["ng", "2", "--oracle"],
    ["bernoulli", "12"],
    ["zeta", "4"],
    ["prop", "2"],
    ["bounds", "3"],
    ["sp-order", "1", "3"],
    ["degree", "2", "3"],
    ["koblitz", "3", "3"],
    ["boundary", "6"],
    ["hurwitz", "3", "2"],
    ["verify", "von-staudt"],
]


def _run(argv: list[str]) -> tuple[int, str]:
    out = io.StringIO()
    code = run(argv, out=out)
    return code, out.getvalue()


def _assert_no_numeric_leaves(node: object) -> None:
    if isinstance(node, dict):
        for v in node.values():
            _assert_no_numeric_leaves(v)
    elif isinstance(node, list):
        for v in node:
            _assert_no_numeric_leaves(v)
    elif not isinstance(node, (str, bool)) and node is not None:
        raise AssertionError(f"non-string leaf {node!r}")


def test_text_output_golden() -> None:
    code, text = _run(["ng", "3"])
    assert code == 0
    assert text == (
        "factors.2 = 3\nfactors.3 = 2\nfactors.7 = 1\ng = 3\nroute = local\nvalue = 504\n"
    )


def test_text_rational_rendering() -> None:
    code, text = _run(["boundary", "6"])
    assert code == 0
    assert text == "g = 6\nvalue = 32760/691\n"


def test_csv_output_golden() -> None:
    code, text = _run(["zeta", "1", "--format", "csv"])
    assert code == 0
    assert text == "g,1\nvalue,-1/12\n"
    code, text = _run(["hurwitz", "3", "2", "--format", "csv"])
    assert code == 0
    assert text == "genus,3\nk,2\nl,3\n"


def test_json_envelope_shape() -> None:
    code, text = _run(["ng", "3", "--format", "json"])
    assert code == 0
    payload = json.loads(text)
    assert sorted(payload) == ["command", "format", "parameters", "result"]
    assert payload["command"] == "ng"
    assert payload["result"]["value"] == "504"
    assert payload["result"]["factors"] == {"2": "3", "3": "2", "7": "1"}


def test_json_rationals_are_num_den_objects() -> None:
    code, text = _run(["prop", "2", "--format", "json"])
    assert code == 0
    result = json.loads(text)["result"]
    assert result["signed_value"] == {"num": "-1", "den": "5760"}
    assert result["absolute_value"] == {"num": "1", "den": "5760"}
    assert result["denominator"] == "5760"


def test_json_is_byte_deterministic_and_float_free() -> None:
    for argv in SUBCOMMAND_SAMPLES:
        first = _run(argv + ["--format", "json"])
        second = _run(argv + ["--format", "json"])
        assert first == second
        code, text = first
        assert code == 0
        _assert_no_numeric_leaves(json.loads(text))


def test_text_and_csv_runs_are_deterministic() -> None:
    for argv in SUBCOMMAND_SAMPLES[:6]:
        for fmt in ("text", "csv"):
            assert _run(argv + ["--format", fmt]) == _run(argv + ["--format", fmt])


def test_usage_errors_exit_one() -> None:
    assert _run([])[0] == 1
    assert _run(["no-such-command"])[0] == 1
    assert _run(["ng"])[0] == 1
    assert _run(["ng", "3", "--format", "yaml"])[0] == 1


def test_domain_errors_exit_one_with_message(capsys: pytest.CaptureFixture) -> None:
    code, text = _run(["ng", "0"])
    assert code == 1
    assert text == ""
    assert "g must be positive" in capsys.readouterr().err
    code, _ = _run(["degree", "1", "2"])
    assert code == 1
    assert "n >= 3" in capsys.readouterr().err


def test_oracle_route_reports_parameters() -> None:
    code, text = _run(["ng", "2", "--oracle", "--format", "json"])
    assert code == 0
    result = json.loads(text)["result"]
    assert result["route"] == "oracle"
    assert result["value"] == "240"
    assert result["prime_count"] == "100"


def test_prime_count_env_override(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv(PRIME_COUNT_ENV, "60")
    code, text = _run(["ng", "1", "--oracle", "--format", "json"])
    assert code == 0
    assert json.loads(text)["result"]["prime_count"] == "60"


def test_prime_count_flag_beats_env(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv(PRIME_COUNT_ENV, "60")
    code, text = _run(["ng", "1", "--oracle", "--prime-count", "55", "--format", "json"])
    assert code == 0
    assert json.loads(text)["result"]["prime_count"] == "55"


def test_verify_text_lines() -> None:
    code, text = _run(["verify", "von-staudt"])
    assert code == 0
    lines = text.splitlines()
    assert lines[0] == "PASS von-staudt m=2"
    assert lines[-1] == "30 passed, 0 failed"
    assert all(line.startswith("PASS") for line in lines[:-1])


def test_verify_unknown_suite_rejected() -> None:
    assert _run(["verify", "no-such-suite"])[0] == 1


def test_verify_failure_exits_two(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setitem(NG_CROSS_CHECK, 2, 999)
    code, text = _run(["verify", "oracle-agreement", "--max-g", "3"])
    assert code == 2
    assert "FAIL table-anchor g=2" in text
    assert text.splitlines()[-1].endswith("1 failed")


def test_spot_values_across_subcommands() -> None:
    assert json.loads(_run(["bernoulli", "12", "--format", "json"])[1])["result"]["value"] == {
        "num": "-691",
        "den": "2730",
    }
    assert json.loads(_run(["sp-order", "1", "3", "--format", "json"])[1])["result"]["order"] == "24"
    assert json.loads(_run(["degree", "2", "3", "--format", "json"])[1])["result"]["degree"] == "9"
    assert json.loads(_run(["koblitz", "3", "3", "--format", "json"])[1])["result"]["value"] == "416"
    bounds = json.loads(_run(["bounds", "2", "--format", "json"])[1])["result"]
    assert bounds["stack_upper_bound"] == "5760"

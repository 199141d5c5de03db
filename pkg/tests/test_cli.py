"""CLI verbs, exit codes and the HTTP thin-client mode."""

import json

import httpx
import pytest

import sgquot.cli as cli
from sgquot.fixtures import brandt_b2, cyclic_group
from sgquot.tableio import render_table


@pytest.fixture
def b2_file(tmp_path):
    path = tmp_path / "b2.tbl"
    path.write_text(render_table(brandt_b2()))
    return str(path)


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_relations_verb(b2_file, capsys):
    code, out, _ = run(capsys, "relations", b2_file, "--eggbox")
    assert code == 0
    report = json.loads(out)
    assert report["schema"] == 1
    assert report["properties"]["regular"] is True
    assert "e11*" in report["eggbox"]


def test_eggbox_verb_prints_plain_text(b2_file, capsys):
    code, out, _ = run(capsys, "eggbox", b2_file)
    assert code == 0
    assert out.startswith("D-class")


def test_check_order_verb(b2_file, capsys):
    code, out, _ = run(capsys, "check-order", b2_file, "--notion", "straight-left", "--prop31")
    assert code == 0
    report = json.loads(out)
    assert report["summary"]["fails"] == 0
    assert report["checks"][0]["witnesses"]  # the full witness map


def test_check_order_failing_sub(b2_file, capsys):
    code, out, _ = run(capsys, "check-order", b2_file, "--sub", "0,1,4", "--notion", "very-large")
    assert code == 1
    report = json.loads(out)
    assert report["summary"]["fails"] == 1


def test_check_order_unclosed_sub_is_input_error(b2_file, capsys):
    code, _, err = run(capsys, "check-order", b2_file, "--sub", "1,2")
    assert code == 2
    assert "not closed" in err


def test_check_starpair_verb(b2_file, capsys):
    code, out, _ = run(capsys, "check-starpair", b2_file, "--pair", "starred")
    assert code in (0, 1)
    report = json.loads(out)
    assert any(c["check"].startswith("embed:") for c in report["checks"])


def test_check_starpair_group_all_hold(tmp_path, capsys):
    path = tmp_path / "z3.tbl"
    path.write_text(render_table(cyclic_group(3)))
    code, out, _ = run(capsys, "check-starpair", str(path))
    assert code == 0
    report = json.loads(out)
    assert report["summary"]["fails"] == 0


def test_harness_verb(capsys):
    code, out, _ = run(capsys, "harness", "--max-order", "2", "--suites", "green-laws,oracle-redundancy")
    assert code == 0
    report = json.loads(out)
    assert report["summary"]["fails"] == 0


def test_harness_unknown_suite(capsys):
    code, _, err = run(capsys, "harness", "--suites", "bogus")
    assert code == 2 and "bogus" in err


def test_example_verb(capsys):
    code, out, _ = run(capsys, "example", "bicyclic-z", "--window", "5")
    assert code == 0
    report = json.loads(out)
    names = {c["check"] for c in report["checks"]}
    assert "claim:self-order-not-semisimple" in names


def test_example_window_too_small(capsys):
    code, _, err = run(capsys, "example", "brandt-z", "--window", "3")
    assert code == 2 and "window" in err


def test_enumerate_verb(capsys):
    code, out, _ = run(capsys, "enumerate", "2", "--up-to-iso")
    assert code == 0
    report = json.loads(out)
    assert report["count"] == 8 and report["iso_classes"] == 5


def test_enumerate_too_large(capsys):
    code, _, err = run(capsys, "enumerate", "9")
    assert code == 2


def test_out_flag_writes_file(b2_file, tmp_path, capsys):
    out_path = tmp_path / "report.json"
    code, out, _ = run(capsys, "--out", str(out_path), "relations", b2_file)
    assert code == 0 and out == ""
    report = json.loads(out_path.read_text())
    assert report["schema"] == 1


def test_missing_table_file(capsys):
    code, _, err = run(capsys, "relations", "/nonexistent/table.tbl")
    assert code == 2


def test_reports_are_deterministic(b2_file, capsys):
    _, first, _ = run(capsys, "check-order", b2_file, "--notion", "weak-left")
    _, second, _ = run(capsys, "check-order", b2_file, "--notion", "weak-left")
    a, b = json.loads(first), json.loads(second)
    for rep in (a, b):
        for check in rep["checks"]:
            check.pop("elapsed_ms", None)
    assert a == b


def test_server_mode_routes_over_http(b2_file, capsys, monkeypatch):
    from fastapi.testclient import TestClient

    from sgquot.webservice import app

    test_client = TestClient(app)

    def fake_post(url, json=None, timeout=None):
        endpoint = url.split("/")[-1]
        return test_client.post(f"/{endpoint}", json=json)

    monkeypatch.setattr(httpx, "post", fake_post)
    code, out, _ = run(capsys, "--server", "http://fake:1", "check-order", b2_file, "--notion", "left")
    assert code == 0
    report = json.loads(out)
    assert report["checks"][0]["check"] == "order:left"
    code, out, _ = run(capsys, "--server", "http://fake:1", "eggbox", b2_file)
    assert code == 0 and out.startswith("D-class")


def test_server_mode_maps_422_to_input_error(b2_file, capsys, monkeypatch):
    from fastapi.testclient import TestClient

    from sgquot.webservice import app

    test_client = TestClient(app)

    def fake_post(url, json=None, timeout=None):
        endpoint = url.split("/")[-1]
        return test_client.post(f"/{endpoint}", json=json)

    monkeypatch.setattr(httpx, "post", fake_post)
    code, _, err = run(capsys, "--server", "http://fake:1", "check-order", b2_file, "--sub", "1,2")
    assert code == 2 and "NotClosed" in err

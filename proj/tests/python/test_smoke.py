# SPDX-License-Identifier: MIT
"""Smoke tests for the Python extension and the command-line JSON records."""

import csv
import json
import os
import subprocess
from fractions import Fraction

import jsonschema
import pytest

import twobridge

CLI = os.environ.get("TWOBRIDGE_CLI")
SCHEMA = os.environ.get("TWOBRIDGE_SCHEMA")


def frac(text):
    return Fraction(text)


def test_link_parameters():
    assert twobridge.link_ws(5, 3) == (2, 1)
    assert twobridge.link_ws(3, -3) == (1, -2)
    with pytest.raises(ValueError, match="link"):
        twobridge.link_ws(4, 3)


def test_catalog_counts():
    cat = twobridge.catalog(3, -3)
    excluded = {e["name"] for entries in cat["regimes"].values() for e in entries if not e["minimal"]}
    assert {"d4", "d5", "d8"} <= excluded


def test_exceptional_reducible_surface():
    d = twobridge.invariants("d26", 1, -2, 4, 2)
    assert frac(d["reduced_slope1"]) == -1
    assert frac(d["reduced_slope2"]) == -6
    assert (d["b1"], d["b2"]) == (4, 2)
    assert d["two_gprime"] == 0


def test_invariant_errors_are_value_errors():
    with pytest.raises(ValueError, match="alpha_ge_beta"):
        twobridge.invariants("c16", 1, 1, 1, 2)


def test_reducible_pairs():
    pairs = {tuple(sorted((r["gamma1"], r["gamma2"]))) for r in twobridge.reducible_surgeries(1, -2)}
    assert pairs == {(-4, -2), (-3, -3), (-6, -1)}


def test_genus_zero_unique_solution():
    sols = twobridge.genus_zero_solutions("d26", 1, -2, 64)
    assert [(s["alpha"], s["beta"]) for s in sols] == [(4, 2)]


def test_surgery_payloads():
    cable = twobridge.surgery_knot(2, 2, 1)
    assert cable["kind"] == "CableOfTorusKnot"
    assert cable["cable_k"] == -13
    assert sorted(map(abs, cable["torus_pair"])) == [2, 3]
    assert twobridge.surgery_knot(1, 1, 1)["kind"] == "TorusKnotInS3"
    assert twobridge.surgery_knot(1, -2, -1)["kind"] == "Trefoil"
    assert twobridge.surgery_knot(2, 3, "1/2")["kind"] == "None"


def test_torus_knots_and_satellites():
    [t] = [t for t in twobridge.torus_knot_surgeries("3/10") if not t["mirror"]]
    assert t["gamma"] == 1 and t["torus_pair"] == [2, -5]
    assert twobridge.satellite_candidates("5/26", 1)["status"] == "satellite"
    assert twobridge.satellite_candidates("3/10", 1)["status"] == "not-satellite"
    assert twobridge.satellite_candidates("9/40", 1)["status"] == "candidate"


def test_all_b():
    b = twobridge.all_b_invariants(3)
    assert (b["alpha"], b["beta"], b["chi"], b["genus"]) == (2, 0, -4, 2)


def test_verify_small_sweep():
    report = twobridge.verify(8, ["c2", "d26"])
    assert report["ok"]
    assert all(p["beta"] == 2 for p in report["genus_zero"]["solutions"])


# ------------------------------------------------------------ command line

needs_cli = pytest.mark.skipif(not CLI or not SCHEMA, reason="TWOBRIDGE_CLI / TWOBRIDGE_SCHEMA not set")


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True, check=False)


@pytest.fixture(scope="module")
def schema():
    with open(SCHEMA, encoding="utf-8") as fh:
        return json.load(fh)


@needs_cli
@pytest.mark.parametrize(
    "args",
    [
        ["paths", "--r", "5", "--s", "3"],
        ["invariants", "--r", "3", "--s", "-3", "--family", "d26", "--alpha", "4", "--beta", "2"],
        ["invariants", "--family", "c2", "--beta", "2", "--n", "1", "--r", "5", "--s", "3"],
        ["classify", "--r", "3", "--s", "-3"],
        ["classify", "--r", "5", "--s", "5", "--gamma", "1"],
        ["classify", "--fraction", "9/40", "--gamma", "1"],
        ["verify", "--alpha-max", "8", "--families", "c2"],
    ],
)
def test_cli_json_validates(args, schema):
    proc = run(*args, "--format", "json")
    assert proc.returncode == 0, proc.stderr
    record = json.loads(proc.stdout)
    jsonschema.validate(record, schema)
    assert record["command"] == args[0]


@needs_cli
def test_cli_matches_module():
    proc = run("invariants", "--r", "3", "--s", "-3", "--family", "d26", "--alpha", "4", "--beta", "2",
               "--format", "json")
    record = json.loads(proc.stdout)["result"]
    module = twobridge.invariants("d26", 1, -2, 4, 2)
    for key in ("slope1", "slope2", "chi", "b1", "b2", "two_gprime"):
        assert record[key] == module[key]


@needs_cli
def test_cli_formats_agree():
    js = json.loads(run("invariants", "--r", "3", "--s", "3", "--family", "c16", "--alpha", "2", "--beta", "1",
                        "--format", "json").stdout)["result"]
    csv_out = run("invariants", "--r", "3", "--s", "3", "--family", "c16", "--alpha", "2", "--beta", "1",
                  "--format", "csv").stdout.splitlines()
    row = next(csv.DictReader(csv_out))
    assert int(row["chi"]) == js["chi"] == -4
    assert js["two_gprime"] == 4


@needs_cli
def test_cli_exit_codes():
    assert run("invariants", "--r", "5").returncode == 1
    assert run("invariants", "--r", "3", "--s", "3", "--family", "c16", "--alpha", "1", "--beta", "2").returncode == 2
    assert run("paths", "--r", "4", "--s", "3").returncode == 2

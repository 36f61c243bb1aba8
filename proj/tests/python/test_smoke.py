import json
import os
import subprocess
from fractions import Fraction

import pytest

import decostab

RANK2_PAIR = {"r": 2, "d": 1, "steps": [[1, 1]], "support": [[1, -1], [0, 0]]}


def test_states_and_degree():
    states = decostab.enumerate_states({"sym": [2, {"std": 3}]})
    assert len(states) == 6
    assert states[(1, 1, 0)] == 1
    assert decostab.homogeneity_degree({"sym": [2, {"std": 3}]}) == 2


def test_mu_and_decompose():
    assert decostab.mu([[1, 0, 1], [0, 2, 0]], [-2, 1, 1]) == 1
    assert decostab.decompose([Fraction(-1), 0, 1]) == [Fraction(1, 3), Fraction(1, 3)]


def test_fan_and_critical_vectors():
    fan = decostab.state_fan([[1, 0, 1], [0, 2, 0]])
    assert fan["critical"] is True
    assert [-1, 0, 1] in fan["K"]
    assert (-1, 0, 1) in decostab.critical_weight_vectors({"sym": [2, {"std": 3}]})


def test_threshold_and_check():
    assert decostab.delta_threshold(RANK2_PAIR) == Fraction(1, 2)
    verdict = decostab.check({**RANK2_PAIR, "delta": "1/2"})
    assert verdict["boundary"] and verdict["value"] == 0


def test_profile():
    assert decostab.profile("hitchin-nilpotent", r=4)["mu"] == "-4"


def test_errors_carry_kind_and_pointer():
    with pytest.raises(decostab.DecostabError) as info:
        decostab.call("mu", {"support": [[1, 0]], "gamma": [1, -1]})
    assert info.value.pointer == "/gamma"
    with pytest.raises(decostab.BudgetExceeded):
        decostab.critical_weight_vectors({"sym": [3, {"std": 3}]}, budget=4)


def run_cli(*args, stdin="", env=None):
    exe = os.environ.get("DECOSTAB_CLI")
    if not exe:
        pytest.skip("DECOSTAB_CLI not set")
    return subprocess.run([exe, *args], input=stdin, capture_output=True, text=True,
                          env={**os.environ, **(env or {})})


def test_cli_exit_codes():
    ok = run_cli("threshold", "--file", "-", stdin=json.dumps(RANK2_PAIR))
    assert ok.returncode == 0
    assert json.loads(ok.stdout)["delta"] == "1/2"

    bad = run_cli("mu", "--json", '{"support": [[1, 0]], "gamma": [1, -1]}')
    assert bad.returncode == 2
    assert json.loads(bad.stderr)["pointer"] == "/gamma"

    over = run_cli("k-rho", "--rep", '{"sym": [3, {"std": 3}]}', env={"DECOSTAB_BUDGET": "4"})
    assert over.returncode == 3

    fail = run_cli("check", "--assert-pass", "--json", json.dumps({**RANK2_PAIR, "delta": "1/3"}))
    assert fail.returncode == 4

import json
import os
import subprocess
import sys

import pytest

from classical_pieri import suites


def test_report_mechanics():
    rep = suites.SuiteReport("demo", {"a": 1})
    assert rep.check({"x": (1,)}, 1, 1)
    assert not rep.check({"x": (2,)}, 3, 4)
    assert rep.cases == 2 and not rep.passed
    data = rep.to_json()
    assert data["mismatches"] == [{"inputs": {"x": "[2]"}, "got": 3, "expected": 4}]
    assert rep.summary().startswith("FAIL demo: 2 cases, 1 mismatches")
    json.dumps(data)


def test_unknown_suite():
    with pytest.raises(KeyError):
        suites.run_suite("nope")


def test_small_grids_pass():
    for name, grid in [("sp-pieri", {"ranks": [1], "max_size": 2, "max_r": 2}),
                       ("so-pieri", {"ranks": [1], "max_size": 2, "max_r": 2}),
                       ("dual-pieri", {"ranks": [1], "max_size": 2}),
                       ("equinumeration", {"max_total": 2, "max_k": 2, "ranks": [1],
                                           "o_ranks": [2], "max_m": 1, "burrill_k": 2})]:
        rep = suites.run_suite(name, **grid)
        assert rep.passed and rep.cases > 0, name


def test_pure_backend_end_to_end():
    env = dict(os.environ, CLASSICAL_PIERI_PURE="1")
    code = ("import classical_pieri as c, classical_pieri.suites as s;"
            "r = s.run_suite('sp-pieri', ranks=[1, 2], max_size=3, max_r=3);"
            "print(c.BACKEND, r.passed, r.cases)")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True)
    backend, passed, cases = out.stdout.split()
    assert backend == "python" and passed == "True" and int(cases) > 0

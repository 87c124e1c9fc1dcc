import os
from pathlib import Path

import pytest

import hsect

FIXTURES = Path(os.environ.get("HSECT_FIXTURE_DIR", Path(__file__).resolve().parents[2] / "fixtures"))


def fixture(name):
    return hsect.load(FIXTURES / f"{name}.json")


def test_bott():
    assert hsect.bott("A2", [-3, 0]) == {"singular": False, "degree": 2, "weight": [0, 0], "dim": 1}
    assert hsect.bott("A2", [-1, -1]) == {"singular": True}
    assert hsect.bott("E8", [0, 0, 0, 0, 0, 0, 0, 1])["dim"] == 248
    with pytest.raises(ValueError):
        hsect.bott("A2", [0, -1], levi=[2])


def test_h0_and_euler():
    assert hsect.h0(fixture("F")) == []
    assert hsect.h0(fixture("tangent_A2")) == [{"weight": [1, 1], "mult": 1, "dim": 8}]
    assert hsect.h_graded(fixture("A"), 2) == [{"weight": [0, 0], "mult": 1, "dim": 1}]
    assert hsect.euler(fixture("A")) == 0


def test_check_and_solve():
    assert hsect.check(fixture("A")) == []
    assert hsect.check(fixture("L_ell1"))
    assert hsect.solve(fixture("L_ell1")) is None
    solved = hsect.solve(fixture("B_s2"))
    assert solved == fixture("F")
    assert [hsect.solve(fixture(f"B_s{s}")) is not None for s in range(4)] == [False, False, True, False]


def test_errors():
    with pytest.raises(hsect.FormatError):
        hsect.h0("{}")
    with pytest.raises(hsect.ValidationError):
        hsect.h0(fixture("L_ell1"))


def test_run_cli():
    code, out, _ = hsect.run_cli(["h0", str(FIXTURES / "F.json")])
    assert (code, out) == (0, "total=0\n")
    code, _, err = hsect.run_cli(["bott", "B2"])
    assert code == 1 and err

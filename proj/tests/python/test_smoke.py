"""Smoke tests for the python module: pinned values only, the heavy
verification lives in the C++ suites."""

import json

import pytest

import kpm

D1 = json.dumps(
    {
        "d": 1,
        "alpha": [["0"]],
        "beta": [["0"]],
        "a": [["1", "0"]],
        "b": [["0", "1"]],
    }
)

DIAG_T = json.dumps(
    {
        "matrix": [
            [{"1": "1"}, {}],
            [{}, {"-1": "1"}],
        ]
    }
)


def test_schubert():
    assert kpm.schubert_product("eps1", "eps1") == "2*eps2"
    assert kpm.eps_product(2, 3) == {5: "10"}
    assert kpm.admissible_degree(6)
    assert not kpm.admissible_degree(7)
    r = kpm.p3_pullback(6)
    assert r["admissible"] and r["eps2"] == "18" and r["eps3"] == "36"
    assert kpm.p3_pullback(2)["obstruction_index"] == 3


def test_lattice_and_splitting():
    assert kpm.lattice_index(DIAG_T) == 1
    assert not kpm.lattice_member(DIAG_T, 0)
    assert kpm.lattice_member(DIAG_T, 3)
    assert kpm.splitting_type(DIAG_T) == 1
    assert kpm.birkhoff_exponent(DIAG_T) == 1
    assert kpm.vg_h0(DIAG_T, 0) == 2
    assert kpm.vg_h0(DIAG_T, -1) == 1


def test_monad():
    assert kpm.adhm_validate(D1)
    assert kpm.adhm_nondegenerate(D1)
    reps = kpm.adhm_fiber(D1, "0,0,1")
    assert reps == [["1", "0", "0", "0"], ["0", "1", "0", "0"]]
    assert kpm.splitting_on_line(D1, "1,0,0", "0,1,0") == 0
    assert kpm.splitting_on_line(D1, "0,1,0", "0,0,1") == 1
    scan = kpm.jumping_scan(D1, 1)
    assert len(scan) == 9
    assert all(n == 0 for (_, n, _) in scan)


def test_actions():
    scaled = json.loads(kpm.act_cstar(D1, "2"))
    assert scaled["a"] == [["2", "0"]]
    assert kpm.gl_equivalent(kpm.act_cstar(D1, "2"), D1)["status"] == "none"
    assert kpm.gl_equivalent(D1, D1)["status"] == "found"
    assert kpm.verify_scaling_equivariance(D1, "2", "0,0,1")
    assert kpm.pi_map("1,0,0", "1,1") == "[1:0:0:1]"
    assert kpm.pi_map("5,3,-2", "0,1") == "[0:0:0:1]"


def test_random_roundtrip():
    x = kpm.random_adhm(2, 7)
    assert kpm.adhm_validate(x)
    assert kpm.random_adhm(2, 7) == x


def test_errors():
    with pytest.raises(ValueError):
        kpm.adhm_validate("{}")
    with pytest.raises(ValueError):
        kpm.pi_map("0,0,0", "1,0")


def test_cli_passthrough():
    code, out, err = kpm.cli(["schubert", "degree-check", "6"])
    assert code == 0
    assert "admissible: true (c=18, e=36)" in out

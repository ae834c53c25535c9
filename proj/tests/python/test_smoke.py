import json
import pathlib

import pytest

import brq

FIXTURES = pathlib.Path(__file__).resolve().parents[2] / "fixtures"

KLEIN4 = {"kind": "abelian", "factors": [2, 2]}
A4 = {"kind": "permutation", "degree": 4, "generators": [[1, 2, 0, 3], [1, 0, 3, 2]]}


def test_schur_multipliers():
    assert brq.h2(KLEIN4)["invariant_factors"] == [2]
    assert brq.h2(A4)["invariant_factors"] == [2]
    assert brq.h2({"kind": "named", "name": "C12"})["invariant_factors"] == []


def test_h1_of_a_sign_lattice():
    doc = {"group": {"kind": "named", "name": "C2"}, "module": {"kind": "lattice", "rank": 1, "action": [[[-1]]]}}
    assert brq.h1(doc)["invariant_factors"] == [2]


def test_bogomolov_multiplier():
    assert brq.bogomolov_multiplier(KLEIN4)["invariant_factors"] == []
    report = brq.bogomolov_multiplier((FIXTURES / "order64.json").read_text(), witnesses=True)
    assert report["invariant_factors"] == [2]
    assert len(report["witnesses"]) == 1


def test_pauli_action():
    doc = json.loads((FIXTURES / "pauli.json").read_text())
    report = brq.br_nr("projective", doc)
    assert report["stack_group"]["invariant_factors"] == []
    assert report["invariant_factors"] == []
    assert brq.br_nr("grassmannian", doc, r=1) == {**report, "kind": "grassmannian"}


def test_stack():
    assert brq.stack((FIXTURES / "klein4_p3.json").read_text()) == [2]
    assert brq.stack((FIXTURES / "m06_pic.json").read_text(), max_rank=16) == [2, 2]


def test_errors():
    with pytest.raises(brq.DomainError):
        brq.br_nr("toric", (FIXTURES / "bad_toric.json").read_text())
    with pytest.raises(brq.DomainError):
        brq.h2("{not json")
    with pytest.raises(brq.SizeLimitError):
        brq.h2((FIXTURES / "order64.json").read_text(), max_order=32)
    with pytest.raises(brq.DomainError):
        brq.stack((FIXTURES / "klein4_no_fixed_point.json").read_text())


def test_cli_and_suites():
    code, out, err = brq.run_cli("b0", str(FIXTURES / "klein4.json"), "--json")
    assert code == 0 and err == ""
    assert json.loads(out)["invariant_factors"] == []
    assert brq.run_cli("frobnicate")[0] == 2
    result = brq.verify("plucker-oracle")
    assert result["cases"] and all(c["pass"] for c in result["cases"])
    assert "fixtures" in brq._core.suite_names()

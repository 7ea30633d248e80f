"""Identity checks: the registry, verdicts, and fault injection."""

import json

import pytest

from degenpoly.identities import (
    REGISTRY,
    Verdict,
    check_L2,
    run_all,
    run_check,
    verdict_to_dict,
    verdicts_to_json,
)
from degenpoly.render import value_from_json
from degenpoly.families import e_lambda_series, exp_series

ALL_IDS = [c.id for c in REGISTRY]


def test_registry_shape():
    assert len(REGISTRY) == 18
    assert ALL_IDS == sorted(ALL_IDS)
    assert len(set(ALL_IDS)) == len(ALL_IDS)
    for c in REGISTRY:
        assert c.description
        assert c.perturbation
        assert isinstance(c.params, dict)


@pytest.mark.parametrize("check_id", ALL_IDS)
def test_check_passes(check_id):
    v = run_check(check_id)
    assert v.ok, v.counterexample
    assert v.id == check_id
    assert v.counterexample is None
    assert v.status == "pass"


@pytest.mark.parametrize("check_id", ALL_IDS)
def test_negative_control_flips(check_id):
    v = run_check(check_id, perturbed=True)
    assert not v.ok
    assert v.status == "fail"
    ce = v.counterexample
    assert ce is not None
    assert set(ce) == {"indices", "lhs", "rhs"}
    assert ce["lhs"] != ce["rhs"]
    assert isinstance(ce["indices"], dict) and ce["indices"]


def test_run_all_default_green():
    verdicts = run_all()
    assert [v.id for v in verdicts] == ALL_IDS
    assert all(v.ok for v in verdicts)


def test_run_all_prefix():
    verdicts = run_all("GF")
    assert all(v.id.startswith("GF") for v in verdicts)
    assert len(verdicts) == 4
    with pytest.raises(ValueError):
        run_all("ZZZ")


def test_run_all_targeted_control():
    small = {"n_max": 8, "m_max": 4, "k_max": 8, "d_max": 3, "r_max": 2, "order": 8}
    verdicts = run_all(overrides=small, negative_control="T7")
    failed = [v.id for v in verdicts if not v.ok]
    assert failed == ["T7"]
    with pytest.raises(ValueError):
        run_all(negative_control="T99")


def test_run_all_full_control_flips_everything():
    small = {"n_max": 8, "m_max": 4, "k_max": 8, "d_max": 3, "r_max": 2, "order": 8}
    verdicts = run_all(overrides=small, negative_control=True)
    assert all(not v.ok for v in verdicts), [v.id for v in verdicts if v.ok]


def test_run_check_overrides():
    v = run_check("T8", {"n_max": 5})
    assert v.ok
    assert v.checked_range["n_max"] == 5
    # unknown keys and None values fall back to defaults
    v = run_check("T8", {"n_max": None, "bogus": 3})
    assert v.checked_range["n_max"] == 30
    with pytest.raises(ValueError):
        run_check("NOPE")


def test_reproducible():
    assert run_check("T1") == run_check("T1")
    assert run_check("E57", perturbed=True) == run_check("E57", perturbed=True)


def test_derivative_expansion_custom_base():
    # the derivative-expansion identity holds for any smooth enough base
    v = check_L2(n_max=6, g=exp_series(20, "x"))
    assert v.ok
    v = check_L2(n_max=6, g=e_lambda_series(20, "x"))
    assert v.ok
    with pytest.raises(ValueError):
        check_L2(n_max=10, g=exp_series(4, "x"))


def test_verdict_json_round_trip():
    verdicts = [run_check("T8", {"n_max": 4}), run_check("T8", {"n_max": 4}, perturbed=True)]
    blob = verdicts_to_json(verdicts)
    loaded = json.loads(blob)
    assert loaded[0]["status"] == "pass"
    assert loaded[1]["status"] == "fail"
    ce = loaded[1]["counterexample"]
    # serialized sides reconstruct to exact values that still disagree
    assert value_from_json(ce["lhs"]) != value_from_json(ce["rhs"])
    assert loaded[1]["checked_range"] == {"n_max": 4}


def test_verdict_to_dict_passing():
    d = verdict_to_dict(run_check("E44", {"m_max": 4, "k_max": 6}))
    assert d["status"] == "pass"
    assert "counterexample" not in d
    assert d["id"] == "E44"
    assert d["description"]


def test_verdict_ok_property():
    v = Verdict("x", "pass", {}, "d", {})
    assert v.ok
    assert not Verdict("x", "fail", {}, "d", {}).ok

"""Verification suite behavior: checks pass, the negative controls fail,
reports are deterministic and schema-stable."""
import json

import pytest

from akzeta.verify import (
    VerifyConfig,
    check_connection,
    check_cube_transform,
    check_difference,
    check_divided_difference,
    check_generating_product,
    check_multistep_difference,
    check_order_reduction,
    check_refuted_variant,
    check_route_agreement,
    check_simplex_transform,
    run_all,
)


def test_exact_checks_pass_on_small_grid():
    assert check_order_reduction(6, 3).status == "pass"
    assert check_connection(6, 3).status == "pass"
    assert check_difference(6, 3).status == "pass"
    assert check_multistep_difference(5, 3, 3).status == "pass"
    assert check_divided_difference(6, 3).status == "pass"
    assert check_generating_product(2, 6).status == "pass"
    assert check_cube_transform(5, 3).status == "pass"
    assert check_simplex_transform(5, 3).status == "pass"


def test_refuted_variant_finds_witnesses():
    chk = check_refuted_variant(6, 3)
    assert chk.status == "pass"
    assert set(chk.witness) == {"reading_1", "reading_2"}
    for w in chk.witness.values():
        assert w["n"] <= 6 and w["k"] <= 3
    # n = 0 can never witness: both sides are 1
    assert all(w["n"] > 0 for w in chk.witness.values())


def test_corrupt_hook_fails_with_witness():
    chk = check_route_agreement(4, 2, corrupt=True)
    assert chk.status == "fail"
    assert chk.witness is not None
    assert chk.lhs is not None and chk.rhs is not None


def test_run_all_narrow_config():
    rep = run_all(VerifyConfig(n_max=3, k_max=2, m_max=2, suite="recurrence"))
    assert not rep.has_failures
    assert rep.totals["fail"] == 0
    assert rep.totals["pass"] == len(rep.checks)


def test_run_all_corrupt_gives_failure():
    rep = run_all(VerifyConfig(n_max=3, k_max=2, suite="transforms", corrupt=True))
    assert rep.has_failures
    failed = [c for c in rep.checks if c.status == "fail"]
    assert failed and failed[0].witness is not None


def test_report_bytes_deterministic():
    cfg = VerifyConfig(n_max=4, k_max=2, m_max=2, suite="recurrence")
    a = run_all(cfg).to_json_text()
    b = run_all(cfg).to_json_text()
    assert a == b
    assert a.encode() == b.encode()


def test_report_order_fixed_by_name():
    rep = run_all(VerifyConfig(n_max=3, k_max=2, suite="umbral"))
    names = [c.name for c in rep.checks]
    assert names == sorted(names)


def test_report_json_schema():
    rep = run_all(VerifyConfig(n_max=3, k_max=2, m_max=2, suite="zeta"))
    obj = json.loads(rep.to_json_text())
    assert set(obj) == {"checks", "config", "totals"}
    for c in obj["checks"]:
        assert {"name", "params", "status"} <= set(c)
        if "tolerance" in c:
            assert isinstance(c["tolerance"], float)
    # numeric checks carry their tolerance; exact ones do not
    by_name = {c["name"]: c for c in obj["checks"]}
    assert "tolerance" in by_name["zeta-reference-values"]


def test_exact_checks_record_no_tolerance():
    assert check_order_reduction(3, 2).tolerance is None
    assert check_cube_transform(3, 2).tolerance is None


def test_config_validation():
    with pytest.raises(ValueError):
        VerifyConfig(suite="bogus")


def test_run_all_default_config_passes():
    # the full default grid; by far the slowest single test outside acceptance
    rep = run_all()
    assert not rep.has_failures, rep.to_text()
    assert rep.totals["pass"] == len(rep.checks) == 23


def test_text_rendering():
    rep = run_all(VerifyConfig(n_max=3, k_max=2, suite="umbral"))
    text = rep.to_text()
    assert "PASS" in text
    assert "passed" in text.splitlines()[-1]

import json
import os
import subprocess
from fractions import Fraction

import numpy as np
import pytest

import rigcert


def test_eval_const_encloses_pi():
    enc = rigcert.eval_const("pi", 128)
    assert float(enc["lo"]) <= 3.141592653589793 <= float(enc["hi"])


def test_parse_error_is_value_error():
    with pytest.raises(ValueError):
        rigcert.eval_const("1 + * 2")


def test_sturm_count_quadratic():
    assert rigcert.sturm_count("1,-pi,e")["count"] == 0
    assert rigcert.sturm_count([1, 0, -1])["count"] == 2


def test_factorable_quadratic_is_exact():
    r1, r2 = rigcert.solve_factorable_quadratic(12345678, 87654321)
    assert r1 == -1
    assert r2 == Fraction(-9739369, 1371742)
    assert 12345678 * r2**2 + 99999999 * r2 + 87654321 == 0


def test_certify_single_claim():
    ledger = rigcert.certify(["sec4.pi_bound"])
    assert ledger["schema"] == 1
    assert ledger["overall"] == "pass"
    assert [e["claim_id"] for e in ledger["entries"]] == ["sec4.pi_bound"]


def test_certify_all_claims():
    ledger = rigcert.certify()
    assert ledger["overall"] == "pass"
    assert len(ledger["entries"]) == len(rigcert.claim_ids())


def test_unknown_claim():
    with pytest.raises(ValueError):
        rigcert.certify(["bogus.claim"])


def test_gauss_bound():
    ledger = rigcert.gauss(1, 2)
    bound = next(e for e in ledger["entries"] if e["claim_id"] == "sec4.gauss.bound")
    assert bound["verdict"] == "CERTIFIED"
    assert bound["detail"]["witness"]["pi_half_interior"] is True
    value = rigcert.integrate_gaussian(1, 2)["value"]
    assert abs(float(value["lo"]) - 0.135257257949995) < 1e-12


def test_ybe_family_and_matrices():
    ledger = rigcert.ybe(samples=20)
    assert ledger["overall"] == "pass"
    j = rigcert.make_j(2)
    assert j.shape == (4, 4)
    assert j[0, 3] == 0.5j and j[3, 0] == 2j
    np.testing.assert_allclose(j @ j, -np.eye(4), atol=1e-15)
    np.testing.assert_allclose(rigcert.r_of_x(1 + 1j, 0.0), np.eye(4), atol=1e-15)
    with pytest.raises(ValueError):
        rigcert.ybe(0)


def test_json_is_deterministic():
    assert rigcert.ybe(1, samples=10, seed=3) == rigcert.ybe(1, samples=10, seed=3)


@pytest.mark.skipif("RIGCERT_CLI" not in os.environ, reason="command line tool not built")
def test_cli_matches_module():
    out = subprocess.run(
        [os.environ["RIGCERT_CLI"], "certify", "sec4.pi_bound", "--json"], capture_output=True, text=True, check=True
    )
    cli = json.loads(out.stdout)
    lib = rigcert.certify(["sec4.pi_bound"])
    assert cli["entries"] == lib["entries"]

import pytest
from fastapi.testclient import TestClient

from multiset_eulerian.service import create_app


@pytest.fixture(scope="module")
def client():
    with TestClient(create_app()) as c:
        yield c


A212_TERMS = [
    {"i": 1, "num": "1", "den": "1"},
    {"i": 2, "num": "12", "den": "1"},
    {"i": 3, "num": "15", "den": "1"},
    {"i": 4, "num": "2", "den": "1"},
]


class TestHealth:
    def test_health(self, client):
        body = client.get("/health").json()
        assert body["status"] == "ok"
        assert body["default_budget"] > 0


class TestCompute:
    def test_all_routes_agree(self, client):
        r = client.post("/compute", json={"spec": "2,1,2", "bivariate": True})
        assert r.status_code == 200
        body = r.json()
        assert body["agree"] is True
        assert sorted(body["routes_run"]) == ["enum", "macmahon", "operators"]
        assert body["polynomial"] == A212_TERMS
        assert body["bivariate"][0] == {"i": 1, "j": 5, "num": "1", "den": "1"}

    def test_univariate_terms_drop_j(self, client):
        body = client.post("/compute", json={"spec": "1,1"}).json()
        assert all("j" not in t for t in body["polynomial"])

    def test_empty_spec_convention(self, client):
        body = client.post("/compute", json={"spec": ""}).json()
        assert body["polynomial"] == [{"i": 1, "num": "1", "den": "1"}]

    def test_operators_unsupported_multiplicity(self, client):
        r = client.post("/compute", json={"spec": "3,2", "method": "operators"})
        assert r.status_code == 400
        assert r.json()["detail"]["error"] == "UnsupportedMultiplicity"

    def test_method_all_skips_inapplicable_routes(self, client):
        body = client.post("/compute", json={"spec": "3,2"}).json()
        assert "operators" not in body["routes_run"]
        assert body["agree"] is True

    def test_budget_exceeded_single_method(self, client):
        r = client.post("/compute", json={"spec": "1,1,1,1,1", "method": "enum", "budget": 10})
        assert r.status_code == 400
        assert r.json()["detail"]["error"] == "BudgetExceeded"

    def test_parse_error(self, client):
        r = client.post("/compute", json={"spec": "2,x,1"})
        assert r.status_code == 400
        assert r.json()["detail"]["error"] == "InvalidSpec"

    def test_coefficients_are_decimal_strings(self, client):
        body = client.post("/compute", json={"spec": "1^14", "method": "macmahon"}).json()
        coeffs = [int(t["num"]) for t in body["polynomial"]]
        assert sum(coeffs) == 87178291200  # 14!


class TestCheck:
    def test_a212_report(self, client):
        body = client.post("/check", json={"spec": "2,1,2"}).json()
        assert body["n"] == 5
        assert body["expansion_type"] == "III"
        assert body["bi_gamma_positive"] is True
        assert body["gamma_a"]["gammas"] == ["0", "1", "8"]
        assert body["gamma_b"]["gammas"] == ["0", "1", "2"]

    def test_all_one_spec_has_zero_a(self, client):
        body = client.post("/check", json={"spec": "1,1,1"}).json()
        assert body["expansion_type"] == "I"
        assert body["decomposition"]["a"] == []

    def test_all_two_spec_has_zero_b(self, client):
        body = client.post("/check", json={"spec": "2,2"}).json()
        assert body["expansion_type"] == "II"
        assert body["decomposition"]["b"] == []
        assert body["gamma_positive"] is True

    def test_explicit_n(self, client):
        body = client.post("/check", json={"spec": "2,1,2", "n_param": "4"}).json()
        assert body["alternatingly_increasing"] is False
        assert body["bi_gamma_positive"] is False

    def test_n_deg(self, client):
        body = client.post("/check", json={"spec": "2,2", "n_param": "deg"}).json()
        assert body["n"] == 3
        assert body["symmetric"] is False

    def test_bad_n_param(self, client):
        r = client.post("/check", json={"spec": "2,2", "n_param": "middle"})
        assert r.status_code == 400


class TestGamma:
    def test_symmetric(self, client):
        body = client.post("/gamma", json={"coeffs": ["1", "4", "1"], "n": 2}).json()
        assert body["symmetric"] is True
        assert body["gammas"] == ["1", "2"]
        assert body["gamma_positive"] is True

    def test_not_symmetric_reports_residual(self, client):
        body = client.post("/gamma", json={"coeffs": ["0", "1", "2"], "n": 2}).json()
        assert body["symmetric"] is False
        assert body["residual"]

    def test_rational_coefficients(self, client):
        body = client.post("/gamma", json={"coeffs": ["1/2", "1", "1/2"], "n": 2}).json()
        assert body["gammas"] == ["1/2", "0"]

    def test_degree_guard(self, client):
        r = client.post("/gamma", json={"coeffs": ["1", "1", "1"], "n": 1})
        assert r.status_code == 400


class TestVerify:
    def test_small_sweep_clean(self, client):
        body = client.post("/verify", json={"max_m": 5}).json()
        assert body["violation_count"] == 0
        assert body["spec_count"] == 11
        assert body["first_violation"] is None

    def test_empty_sweep(self, client):
        body = client.post("/verify", json={"max_m": 0}).json()
        assert body["spec_count"] == 0
        assert body["violation_count"] == 0

    def test_wider_multiplicities_report_only(self, client):
        body = client.post("/verify", json={"max_m": 4, "multiplicities": [1, 2, 3]}).json()
        assert body["violation_count"] == 0
        rows = {tuple(r["spec"]): r for r in body["results"]}
        assert rows[(3,)]["bi_asserted"] is False
        assert rows[(2, 1)]["bi_asserted"] is True

    def test_budget_zero_drops_enum_route(self, client):
        body = client.post("/verify", json={"max_m": 4, "budget": 0}).json()
        assert body["violation_count"] == 0
        assert all("enum" not in r["routes"] for r in body["results"])

    def test_usage_error(self, client):
        r = client.post("/verify", json={"max_m": 3, "multiplicities": [0]})
        assert r.status_code == 400

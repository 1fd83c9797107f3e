import pytest
from fastapi.testclient import TestClient

from geocompress import __version__
from geocompress.service import create_app


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


BARCELONA_CLUSTER = [
    {"lat": 41.37, "lon": 2.15, "attributes": {"city": "Barcelona"}},
    {"lat": 41.371, "lon": 2.151, "attributes": {"city": "Barcelona"}},
    {"lat": 41.3705, "lon": 2.1502, "attributes": {"city": "Barcelona"}},
]
PARIS_POINT = {"lat": 48.8566, "lon": 2.3522, "attributes": {"city": "Paris"}}


class TestHealth:
    def test_health_ok(self, client):
        resp = client.get("/health")
        assert resp.status_code == 200
        assert resp.json() == {"status": "ok", "version": __version__}


class TestCompressJson:
    def test_two_site_compression(self, client):
        resp = client.post("/compress", json={"points": BARCELONA_CLUSTER + [PARIS_POINT]})
        assert resp.status_code == 200
        body = resp.json()
        assert body["summary"] == {
            "clusters": 2,
            "original": 4,
            "reduced": 2,
            "compression_pct": 50.0,
            "noise": 0,
        }
        first, second = body["points"]
        assert first["cluster_label"] == 0
        assert first["cluster_size"] == 3
        assert first["attributes"] == {"city": "Barcelona"}
        assert first["row_index"] in (0, 1, 2)
        assert second == {
            "lat": 48.8566,
            "lon": 2.3522,
            "row_index": 3,
            "cluster_label": 1,
            "cluster_size": 1,
            "attributes": {"city": "Paris"},
        }

    def test_defaults_match_cli_defaults(self, client):
        resp = client.post("/compress", json={"points": [{"lat": 1.0, "lon": 2.0}]})
        assert resp.status_code == 200
        assert resp.json()["summary"]["clusters"] == 1

    def test_min_samples_produces_noise(self, client):
        resp = client.post(
            "/compress",
            json={"points": BARCELONA_CLUSTER + [PARIS_POINT], "min_samples": 2},
        )
        assert resp.status_code == 200
        assert resp.json()["summary"]["noise"] == 1

    def test_out_of_range_latitude_is_422(self, client):
        resp = client.post("/compress", json={"points": [{"lat": 91.0, "lon": 0.0}]})
        assert resp.status_code == 422

    def test_empty_point_list_is_422(self, client):
        resp = client.post("/compress", json={"points": []})
        assert resp.status_code == 422

    def test_bad_eps_is_422(self, client):
        resp = client.post(
            "/compress", json={"points": [{"lat": 0.0, "lon": 0.0}], "eps_km": 0}
        )
        assert resp.status_code == 422

    def test_ragged_attributes_fill_empty(self, client):
        points = [
            {"lat": 0.0, "lon": 0.0, "attributes": {"a": "1"}},
            {"lat": 30.0, "lon": 30.0, "attributes": {"b": "2"}},
        ]
        resp = client.post("/compress", json={"points": points})
        assert resp.status_code == 200
        reps = resp.json()["points"]
        assert reps[0]["attributes"] == {"a": "1", "b": ""}
        assert reps[1]["attributes"] == {"a": "", "b": "2"}


class TestCompressCsv:
    CSV = "lat,lon,city\n41.37,2.15,Barcelona\n41.371,2.151,Barcelona\n48.8566,2.3522,Paris\n"

    def test_csv_in_csv_out(self, client):
        resp = client.post(
            "/compress/csv", content=self.CSV, headers={"content-type": "text/csv"}
        )
        assert resp.status_code == 200
        assert resp.headers["content-type"].startswith("text/csv")
        assert resp.headers["x-summary"] == (
            "clusters=2 original=3 reduced=2 compression=33.3% noise=0"
        )
        lines = resp.text.splitlines()
        assert lines[0] == "lat,lon,city,cluster_label,cluster_size"
        assert len(lines) == 3

    def test_custom_columns_via_query(self, client):
        csv_text = "y,x\n1.0,2.0\n"
        resp = client.post(
            "/compress/csv",
            params={"lat_col": "y", "lon_col": "x"},
            content=csv_text,
            headers={"content-type": "text/csv"},
        )
        assert resp.status_code == 200
        assert resp.text.splitlines()[0] == "y,x,cluster_label,cluster_size"

    def test_invalid_csv_is_422(self, client):
        resp = client.post(
            "/compress/csv", content="lat,lon\n99.0,0.0\n", headers={"content-type": "text/csv"}
        )
        assert resp.status_code == 422
        assert "row 1" in resp.json()["detail"]

    def test_missing_column_is_422(self, client):
        resp = client.post(
            "/compress/csv", content="a,b\n1,2\n", headers={"content-type": "text/csv"}
        )
        assert resp.status_code == 422


class TestCompressSvg:
    def test_svg_marker_count(self, client):
        resp = client.post(
            "/compress/svg", json={"points": BARCELONA_CLUSTER + [PARIS_POINT]}
        )
        assert resp.status_code == 200
        assert resp.headers["content-type"].startswith("image/svg+xml")
        assert resp.text.count("<circle") == 4 + 2

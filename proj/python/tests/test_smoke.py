import math

import networkx as nx
import numpy as np
import pytest

import kabminor


def dense_radius(edges, n, alpha):
    a = np.zeros((n, n))
    for u, v in edges:
        a[u, v] = a[v, u] = 1
    m = alpha * np.diag(a.sum(1)) + (1 - alpha) * a
    return max(np.linalg.eigvalsh(m))


def test_graph6_matches_networkx():
    g = kabminor.Graph.from_spec("petersen")
    ours = nx.from_graph6_bytes(g.graph6().encode())
    assert nx.is_isomorphic(ours, nx.petersen_graph())
    assert g.size() == 15


@pytest.mark.parametrize("spec", ["S:5,2", "Kbe:6", "fab-complement:2,5", "petersen-complement", "Kab:3,4"])
@pytest.mark.parametrize("alpha", [0.0, 0.35, 0.9])
def test_radius_against_numpy(spec, alpha):
    g = kabminor.Graph.from_spec(spec)
    r = kabminor.spectral_radius(g, alpha)
    assert math.isclose(r["lambda"], dense_radius(g.edges(), g.order(), alpha), rel_tol=1e-10)
    assert r["residual"] <= 1e-10


def test_minor_witness():
    w = kabminor.has_minor("petersen", "K:5")
    assert w["verdict"] == "contains"
    assert len(w["branch_sets"]) == 5
    assert kabminor.has_minor("C:4", "star:3")["verdict"] == "free"


def test_petersen_complement_block():
    r = kabminor.ab_property("petersen-complement", 3, 8)
    assert r["overall"] and not r["inconclusive"]


def test_predict_and_search():
    p = kabminor.predict(2, 3, 8)
    assert p["clause"] == "T1.4-ii"
    assert p["verified"] == "free"
    reports = kabminor.search(6, "star-minor-free:3", [0.0, 0.5])
    assert all(r["prediction"]["agrees"] is True for r in reports)


def test_checks():
    assert "lemma-updown" in kabminor.check_names()
    assert kabminor.run_check("lemma-updown")["status"] == "pass"


def test_errors_surface():
    with pytest.raises(ValueError):
        kabminor.Graph.from_spec("bogus:1")
    with pytest.raises(ValueError):
        kabminor.spectral_radius("K:3", 1.0)

"""Python access to the kabminor core: graphs, A_alpha spectra, minors, search and checks."""

import json

from ._kabminor import Graph, __version__, check_names, star_minor_free
from . import _kabminor as _core

__all__ = [
    "Graph",
    "__version__",
    "ab_property",
    "check_names",
    "has_minor",
    "predict",
    "run_check",
    "search",
    "spectral_radius",
    "star_minor_free",
]


def _graph(g):
    return Graph.from_spec(g) if isinstance(g, str) else g


def spectral_radius(g, alpha):
    """Radius, Perron vector and residual of A_alpha(g); g may be a family spec string."""
    return json.loads(_core.spectral_radius_json(_graph(g), alpha))


def has_minor(g, h, budget=100_000_000):
    return json.loads(_core.has_minor_json(_graph(g), _graph(h), budget))


def ab_property(g, a, b, budget=100_000_000):
    return json.loads(_core.ab_property_json(_graph(g), a, b, budget))


def predict(a, b, n, alpha=0.5):
    return json.loads(_core.predict_json(a, b, n, alpha))


def search(n, constraint, alphas, jobs=1):
    """Maximise the radius over connected graphs of order n (n <= 8) satisfying the constraint."""
    return json.loads(_core.search_json(n, constraint, list(alphas), jobs))


def run_check(name, seed=20240917):
    return json.loads(_core.run_check_json(name, seed))

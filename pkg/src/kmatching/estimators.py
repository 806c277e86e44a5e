"""scikit-learn compatible transformers over collections of graphs.

``X`` is a sequence of graphs, each given as a :class:`~kmatching.graph.Graph`,
as edge-list text, or as an ``(n, edges)`` pair. Outputs are 2-D object
arrays of Python ints so counts stay exact; pass ``dtype=float`` to get a
float matrix for downstream estimators.
"""

from __future__ import annotations

from numbers import Integral

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .formulas import p_formula
from .graph import Graph, parse_edge_list
from .invariants import degree_invariants, incidence_invariants
from .matchings import count_matchings_oracle, count_matchings_recurrence

__all__ = ["check_graph", "check_graphs", "DegreeInvariantTransformer", "MatchingCountTransformer"]


def check_graph(x) -> Graph:
    """Coerce one input to a :class:`Graph`, raising ``ValueError`` otherwise."""
    if isinstance(x, Graph):
        return x
    if isinstance(x, str):
        return parse_edge_list(x)
    if isinstance(x, tuple) and len(x) == 2 and isinstance(x[0], Integral):
        n, edges = x
        return Graph(int(n), ((int(u), int(v)) for u, v in edges))
    raise ValueError(f"cannot interpret {type(x).__name__} as a graph")


def check_graphs(X) -> list[Graph]:
    if isinstance(X, (str, Graph)):
        raise ValueError("expected a sequence of graphs, got a single graph; wrap it in a list")
    graphs = [check_graph(x) for x in X]
    if not graphs:
        raise ValueError("found an empty sequence of graphs; at least one is required")
    return graphs


class DegreeInvariantTransformer(TransformerMixin, BaseEstimator):
    """Map each graph to its degree- and incidence-based invariants.

    Columns are ``m, M1, M2, F, EM1, EM2, alpha, beta, gamma``, followed by
    ``M1^lam`` and ``M2^lam`` for each exponent in ``lambdas``.
    """

    _BASE = ("m", "M1", "M2", "F", "EM1", "EM2", "alpha", "beta", "gamma")

    def __init__(self, lambdas=(4, 5), dtype=object):
        self.lambdas = lambdas
        self.dtype = dtype

    def fit(self, X, y=None):
        check_graphs(X)
        self.lambdas_ = tuple(sorted(set(int(lam) for lam in self.lambdas)))
        names = list(self._BASE)
        names += [f"M1^{lam}" for lam in self.lambdas_]
        names += [f"M2^{lam}" for lam in self.lambdas_]
        self.feature_names_out_ = np.asarray(names, dtype=object)
        self.n_features_out_ = len(names)
        return self

    def transform(self, X):
        check_is_fitted(self, "feature_names_out_")
        rows = []
        for g in check_graphs(X):
            d = degree_invariants(g, self.lambdas_)
            i = incidence_invariants(g)
            row = [d.m, d.m1, d.m2, d.f, d.em1, d.em2, i.alpha, i.beta, i.gamma]
            row += [d.m1_general[lam] for lam in self.lambdas_]
            row += [d.m2_general[lam] for lam in self.lambdas_]
            rows.append(row)
        return np.array(rows, dtype=self.dtype)

    def get_feature_names_out(self, input_features=None):
        check_is_fitted(self, "feature_names_out_")
        return self.feature_names_out_.copy()


class MatchingCountTransformer(TransformerMixin, BaseEstimator):
    """Map each graph to ``p(G;0), ..., p(G;k_max)``.

    method : {"oracle", "recurrence", "formula"}
        ``"formula"`` supports ``k_max <= 5`` and raises on graphs outside a
        formula's girth hypothesis unless ``force=True``.
    """

    def __init__(self, k_max=5, method="oracle", force=False, dtype=object):
        self.k_max = k_max
        self.method = method
        self.force = force
        self.dtype = dtype

    def _validate_params(self):
        if not isinstance(self.k_max, Integral) or self.k_max < 0:
            raise ValueError(f"k_max must be a non-negative integer, got {self.k_max!r}")
        if self.method not in ("oracle", "recurrence", "formula"):
            raise ValueError(f"unknown method {self.method!r}")
        if self.method == "formula" and self.k_max > 5:
            raise ValueError("closed forms exist only up to k=5")

    def fit(self, X, y=None):
        self._validate_params()
        check_graphs(X)
        self.n_features_out_ = self.k_max + 1
        return self

    def _count(self, g: Graph, k: int):
        if self.method == "oracle":
            return count_matchings_oracle(g, k).value
        if self.method == "recurrence":
            return count_matchings_recurrence(g, k).value
        if k == 0:
            return 1
        if k == 1:
            return g.m
        return p_formula(g, k, force=self.force).value

    def transform(self, X):
        check_is_fitted(self, "n_features_out_")
        graphs = check_graphs(X)
        return np.array(
            [[self._count(g, k) for k in range(self.k_max + 1)] for g in graphs],
            dtype=self.dtype,
        )

    def get_feature_names_out(self, input_features=None):
        check_is_fitted(self, "n_features_out_")
        return np.asarray([f"p{k}" for k in range(self.k_max + 1)], dtype=object)

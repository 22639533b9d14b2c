"""Cached quadrature nodes shared by the normalization and transform code."""

from __future__ import annotations

from functools import lru_cache

import numpy as np
from scipy.linalg import eigh_tridiagonal
from scipy.special import roots_legendre


@lru_cache(maxsize=None)
def gauss_laguerre(n: int):
    """Nodes/weights for integral of f(x) exp(-x) on [0, inf).

    Built by Golub-Welsch on the symmetric Jacobi matrix (diagonal 2k+1,
    off-diagonal k) because the library rules return NaN weights above a
    few hundred nodes.  Weights are the squared first components of the
    unit eigenvectors; the tiniest ones underflow to 0.0, which is the
    correct limit for integrands that stay subexponential.
    """
    if n < 1:
        raise ValueError("need at least one node")
    nodes, vectors = eigh_tridiagonal(2.0 * np.arange(n) + 1.0,
                                      np.arange(1.0, n))
    return nodes, vectors[0] ** 2


@lru_cache(maxsize=None)
def gauss_legendre(n: int):
    """Nodes/weights on [-1, 1]."""
    x, w = roots_legendre(n)
    return np.asarray(x), np.asarray(w)


def panel_nodes(boundaries: np.ndarray, order: int):
    """Gauss-Legendre nodes/weights for a chain of contiguous panels.

    ``boundaries`` is an increasing 1-d array; every consecutive pair
    becomes one panel.  Returns flat node and weight arrays.
    """
    gx, gw = gauss_legendre(order)
    lo = boundaries[:-1]
    hi = boundaries[1:]
    half = 0.5 * (hi - lo)
    mid = 0.5 * (hi + lo)
    nodes = (mid[:, None] + half[:, None] * gx[None, :]).ravel()
    weights = (half[:, None] * gw[None, :]).ravel()
    return nodes, weights

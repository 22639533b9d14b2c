"""Quadrature rules: moment exactness and large-node stability.

The Laguerre rule is built by Golub-Welsch instead of the library routines
because those return NaN weights somewhere above 250 nodes; the whole point
of these tests is that big rules stay finite and accurate.
"""

import math

import numpy as np
import pytest

from hydro2d.quadrature import gauss_laguerre, gauss_legendre, panel_nodes


@pytest.mark.parametrize("n", [8, 64, 256, 512, 1024])
def test_gauss_laguerre_moments(n):
    x, w = gauss_laguerre(n)
    assert np.all(np.isfinite(x)) and np.all(np.isfinite(w))
    assert np.all(x > 0.0)
    for k in range(0, 12, 3):
        got = float(np.sum(w * x**k))
        assert got == pytest.approx(math.factorial(k), rel=1e-12)


def test_gauss_laguerre_polynomial_exactness():
    # An n-node rule integrates degree 2n-1 exactly; check right at the edge.
    n = 10
    x, w = gauss_laguerre(n)
    k = 2 * n - 1
    assert float(np.sum(w * x**k)) == pytest.approx(math.factorial(k), rel=1e-12)


def test_gauss_laguerre_rejects_empty_rule():
    with pytest.raises(ValueError):
        gauss_laguerre(0)


def test_gauss_legendre_moments():
    x, w = gauss_legendre(20)
    for k in range(0, 10, 2):
        assert float(np.sum(w * x**k)) == pytest.approx(2.0 / (k + 1), rel=1e-13)
    assert float(np.sum(w * x**3)) == pytest.approx(0.0, abs=1e-15)


def test_panel_nodes_integrate_sine():
    bounds = np.linspace(0.0, math.pi, 9)
    x, w = panel_nodes(bounds, 12)
    assert float(np.sum(w * np.sin(x))) == pytest.approx(2.0, rel=1e-13)

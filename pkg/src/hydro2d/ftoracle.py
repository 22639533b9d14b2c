"""Numerical Fourier-transform oracle for the momentum-space wavefunctions.

Implements the unitary transform

    psi(p, phi_p) = (1/2 pi) integral e^(-i p.r) psi(rho, phi) d^2 r

directly from position-space data, so the closed-form momentum expressions
can be checked against something that never saw their derivation.  Two
routes are provided:

``ft_hankel``
    reduces the angular integral with the plane-wave harmonic expansion,
    leaving (-i)^|m| e^(i m phi_p) times the radial integral
    integral_0^inf R_{n,m}(rho) J_|m|(p rho) rho d rho.  In w = q0 rho the
    integrand is w^(m+1) e^(-w) L(2w) J_m(2cw) with c = p/(2 q0); plain
    Gauss-Laguerre converges like c^(2 N) there, so it is used for
    c <= 3/4 and the integral switches to Gauss-Legendre panels of width
    pi/p (half a Bessel oscillation) on a truncated range otherwise.

``ft_direct_2d``
    brute-force polar quadrature of the double integral, trapezoid in phi
    (periodic, so spectrally exact; the node count grows with p rho_max to
    keep the aliased Bessel orders negligible) times the same two radial
    rules.  Slower, but free of the angular reduction, which makes the
    two routes genuinely different derivations.

Independence: this module imports only the momentum-plane point type from
``momentum``; the closed-form wavefunction code is touched exclusively
inside ``oracle_report``, where the comparison is the whole point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .momentum import MomentumPoint
from .polys import NEG_I_POW, bessel_j, laguerre
from .position import QuantumNumbers, normalization, radial_wavefunction
from .quadrature import gauss_laguerre, panel_nodes
from .reporting import VerificationReport

__all__ = ["OracleConfig", "ft_hankel", "ft_direct_2d", "oracle_report"]

_METHODS = ("hankel_reduced", "direct_2d")

# Gauss-Laguerre handles the radial integral while the Bessel factor
# oscillates slower than the e^(-w) weight decays; c = p/(2 q0) <= 3/4
# keeps its c^(2N) error term far below every tolerance in the suite.
_GL_SWITCH = 0.75
_PANEL_ORDER = 16


@dataclass(frozen=True)
class OracleConfig:
    radial_nodes: int = 512
    p_max_tail_tol: float = 1e-9
    method: str = "hankel_reduced"

    def __post_init__(self):
        if self.radial_nodes < 64:
            raise ValueError("oracle needs at least 64 radial nodes")
        if self.p_max_tail_tol <= 0.0:
            raise ValueError("tail tolerance must be > 0")
        if self.method not in _METHODS:
            raise ValueError(f"method must be one of {_METHODS}")


def _cutoff_v(n: int, q0: float, tol: float) -> float:
    """Truncation point of the scaled radial variable v = 2 q0 rho.

    The radial integrand is bounded by poly(v) e^(-v/2) with polynomial
    degree at most n + 2 and modest coefficients; iterating
    v = 2 (log(1/tol) + (n+2) log(v+2) + margin) to its fixed point makes
    the discarded tail a comfortable factor below tol.
    """
    margin = math.log(1.0 + 1.0 / (q0 * q0)) + 6.0
    v = 60.0
    for _ in range(60):
        v = 2.0 * (math.log(1.0 / tol) + (n + 2) * math.log(v + 2.0) + margin)
    return v


def _radial_integral(qn: QuantumNumbers, p: float, cfg: OracleConfig) -> float:
    """integral_0^inf R_{n,m}(rho) J_|m|(p rho) rho d rho."""
    am = abs(qn.m)
    q0 = 1.0 / (qn.n + 0.5)
    c = p / (2.0 * q0)
    if c <= _GL_SWITCH:
        x, w = gauss_laguerre(cfg.radial_nodes)
        poly = x ** (am + 1) * laguerre(qn.n - am, 2 * am, 2.0 * x)
        bess = bessel_j(am, 2.0 * c * x)
        return normalization(qn) * 2.0**am / (q0 * q0) * float(np.sum(w * poly * bess))

    rho_max = _cutoff_v(qn.n, q0, cfg.p_max_tail_tol) / (2.0 * q0)
    n_panels = max(8, math.ceil(p * rho_max / math.pi))
    bounds = np.linspace(0.0, rho_max, n_panels + 1)
    rho, wts = panel_nodes(bounds, _PANEL_ORDER)
    vals = radial_wavefunction(qn, rho) * bessel_j(am, p * rho) * rho
    return float(np.sum(wts * vals))


def ft_hankel(qn: QuantumNumbers, mp: MomentumPoint,
              cfg: OracleConfig = OracleConfig()) -> complex:
    """Oracle momentum wavefunction via the angular-reduction route.

    Assembled as (real radial integral) * (-i)^|m| * e^(i m phi_p), the
    same construction order as the closed forms, so phase comparisons are
    not polluted by arithmetic reordering.
    """
    am = abs(qn.m)
    radial = _radial_integral(qn, mp.p, cfg)
    val0 = radial * NEG_I_POW[am % 4]
    return val0 * complex(math.cos(qn.m * mp.phi_p), math.sin(qn.m * mp.phi_p))


def _phi_count(x_osc: float) -> int:
    """Number of trapezoid angles needed at p rho_max = x_osc.

    Aliasing leaks the Bessel orders k = n_phi - |m|, n_phi + |m|, ... into
    the angular sum; n_phi >= 1.25 x_osc + 64 (floored at 256) keeps them
    in the superexponentially small regime J_k(x) with k/x >= 1.25.
    """
    n_phi = 256
    while n_phi < 1.25 * x_osc + 64.0:
        n_phi *= 2
    return n_phi


def ft_direct_2d(qn: QuantumNumbers, mp: MomentumPoint,
                 cfg: OracleConfig = OracleConfig()) -> complex:
    """Oracle momentum wavefunction via brute-force polar quadrature."""
    am = abs(qn.m)
    q0 = 1.0 / (qn.n + 0.5)
    rho_max = _cutoff_v(qn.n, q0, cfg.p_max_tail_tol) / (2.0 * q0)

    c = mp.p / (2.0 * q0)
    if c <= _GL_SWITCH:
        x, w = gauss_laguerre(cfg.radial_nodes)
        rho = x / q0
        base = (normalization(qn) * 2.0**am / (q0 * q0)
                * w * x ** (am + 1) * laguerre(qn.n - am, 2 * am, 2.0 * x))
    else:
        n_panels = max(8, math.ceil(mp.p * rho_max / math.pi))
        bounds = np.linspace(0.0, rho_max, n_panels + 1)
        rho, wts = panel_nodes(bounds, _PANEL_ORDER)
        base = wts * rho * radial_wavefunction(qn, rho)

    n_phi = _phi_count(mp.p * rho_max)
    phi = 2.0 * math.pi * np.arange(n_phi) / n_phi
    ang = np.exp(1j * qn.m * phi) / n_phi
    cosines = np.cos(phi - mp.phi_p)

    total = 0.0 + 0.0j
    chunk = max(1, (1 << 21) // n_phi)
    for lo in range(0, rho.size, chunk):
        r_blk = rho[lo:lo + chunk]
        kernel = np.exp(-1j * mp.p * np.outer(r_blk, cosines))
        total += np.dot(base[lo:lo + chunk], kernel @ ang)
    return complex(total)


def oracle_report(n_max: int, grid: Sequence[MomentumPoint],
                  cfg: OracleConfig = OracleConfig(),
                  tol: float = 1e-6) -> VerificationReport:
    """Compare the closed-form momentum wavefunctions against the oracle.

    Scans every |m| <= n <= n_max over the grid, recording the worst
    absolute and relative deviation; passes iff the absolute one is within
    tol.  The closed forms are imported here, not at module level, so the
    oracle itself stays structurally independent of them.
    """
    from .momentum import psi_momentum

    name = "momentum-vs-ft-oracle"
    notes = ("unitary 1/(2pi) transform; closed form carries (-i)^|m|, "
             f"oracle method {cfg.method}")
    if len(grid) == 0:
        return VerificationReport(name, f"n <= {n_max}, empty grid", 0.0, 0.0,
                                  tol, True, notes + "; vacuous: no comparisons")

    oracle = ft_hankel if cfg.method == "hankel_reduced" else ft_direct_2d
    max_abs = 0.0
    max_rel = 0.0
    for n in range(n_max + 1):
        for m in range(-n, n + 1):
            qn = QuantumNumbers(n, m)
            for mp in grid:
                want = oracle(qn, mp, cfg)
                got = psi_momentum(qn, mp)
                err = abs(got - want)
                max_abs = max(max_abs, err)
                if abs(want) > 1e-8:
                    max_rel = max(max_rel, err / abs(want))
    desc = f"|m| <= n <= {n_max}, {len(grid)} momentum points"
    return VerificationReport.from_abs(name, desc, max_abs, max_rel, tol, notes)

"""Conformal squaring map and the Gaussian reduction of the momentum transform.

The map (u1, u2) -> (x, y) = (u1^2 - u2^2, 2 u1 u2) is the real form of
w -> w^2 on the complex plane.  It squares distances, rho = u1^2 + u2^2,
and doubles angles, so the u-plane covers the (x, y)-plane twice: u and -u
land on the same point.  Its Jacobian determinant is 4(u1^2 + u2^2), and
pulling an integral back through the double covering gives

    integral f(x, y) dx dy  =  2 integral f(x(u), y(u)) (u1^2 + u2^2) d^2 u

with the factor 2 (not 4) because the full u-plane on the right counts every
(x, y) twice.  ``lc_measure_factor`` returns this constant and the
verification suite measures it independently by quadrature.

The payoff is that exp(-i p.r - a rho + b(x + iy)) becomes a Gaussian in u:
with A = (1+z) q0/(1-z) + beta and B = 2 t z q0/(1-z)^2 the exponent is
-(a11 u1^2 + 2 a12 u1 u2 + a22 u2^2) where

    a11 = A - B + i p_x,   a22 = A + B - i p_x,   a12 = i (p_y - B)

and the standard Gaussian formula turns the momentum-space transform of the
position generating function into 1/sqrt(det X) up to bookkeeping.  The
determinant collapses to

    det X = S(beta) / (1-z)^2,
    S(beta) = [(1+z) q0 + beta (1-z)]^2 + p^2 (1-z)^2 + 4 i t z q0 p e^(i phi_p)

and the generating-function pair returned by ``gen_func_momentum`` is

    g_beta = S(beta)^(-1/2)
    g      = [-d g_beta / d beta]_{beta=0} = (1 - z^2) q0 S(0)^(-3/2).

The overall constant of g is anchored so that its (z^0 t^0) coefficient is
the unitary Fourier transform of e^(-q0 rho), namely q0/(p^2 + q0^2)^(3/2);
every verification that depends on the constant measures it rather than
assuming one.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import NamedTuple

from .momentum import MomentumPoint

__all__ = [
    "UPoint",
    "GenFuncParams",
    "QuadraticFormMatrix",
    "GenFuncValues",
    "lc_map",
    "lc_jacobian",
    "lc_measure_factor",
    "quadratic_form_matrix",
    "det_x",
    "gen_func_momentum",
]


@dataclass(frozen=True)
class UPoint:
    """Point in the covering plane.  No constraints, the whole plane is used."""

    u1: float
    u2: float


@dataclass(frozen=True)
class GenFuncParams:
    """Parameters of the generating-function machinery.

    z is the principal expansion variable (strictly inside the unit disk so
    every series in sight converges), t tags the angular-momentum ladder,
    q0 > 0 sets the length scale, and beta >= 0 is the convergence regulator
    that is differentiated away at the end.
    """

    z: complex
    t: complex
    q0: float
    beta: float = 0.0

    def __post_init__(self):
        if abs(self.z) >= 1.0:
            raise ValueError("generating variable must satisfy |z| < 1")
        if self.q0 <= 0.0:
            raise ValueError("scale q0 must be > 0")
        if self.beta < 0.0:
            raise ValueError("regulator beta must be >= 0")


@dataclass(frozen=True)
class QuadraticFormMatrix:
    """Symmetric 2x2 complex matrix of the Gaussian exponent.

    For admissible parameters the real part of the associated quadratic form
    is positive definite, which is what makes the Gaussian integral converge.
    """

    a11: complex
    a12: complex
    a21: complex
    a22: complex

    def __post_init__(self):
        if self.a12 != self.a21:
            raise ValueError("quadratic-form matrix must be symmetric")

    def det(self) -> complex:
        return self.a11 * self.a22 - self.a12 * self.a21

    def trace(self) -> complex:
        return self.a11 + self.a22


class GenFuncValues(NamedTuple):
    g_beta: complex
    g: complex


def lc_map(u: UPoint) -> tuple[float, float, float]:
    """Map a covering-plane point to (x, y, rho) with rho = sqrt(x^2 + y^2)."""
    x = u.u1 * u.u1 - u.u2 * u.u2
    y = 2.0 * u.u1 * u.u2
    return x, y, u.u1 * u.u1 + u.u2 * u.u2


def lc_jacobian(u: UPoint) -> float:
    """Absolute Jacobian determinant of ``lc_map``, 4(u1^2 + u2^2)."""
    return 4.0 * (u.u1 * u.u1 + u.u2 * u.u2)


def lc_measure_factor() -> float:
    """Constant c in  integral f d^2r = c * integral f(u) u^2 d^2u.

    The Jacobian contributes 4 u^2 but the full u-plane covers the target
    plane twice (u and -u are the same point downstream), so c = 4/2 = 2.
    """
    return 2.0


def _ab(gp: GenFuncParams) -> tuple[complex, complex]:
    one_minus = 1.0 - gp.z
    a = (1.0 + gp.z) * gp.q0 / one_minus + gp.beta
    b = 2.0 * gp.t * gp.z * gp.q0 / (one_minus * one_minus)
    return a, b


def quadratic_form_matrix(gp: GenFuncParams, p: MomentumPoint) -> QuadraticFormMatrix:
    """Matrix X of the exponent -(a11 u1^2 + 2 a12 u1 u2 + a22 u2^2).

    Assembled from -i p.r - A rho + B (x + iy) pulled back through the
    squaring map, with A and B as in the module docstring.
    """
    a, b = _ab(gp)
    px = p.p * math.cos(p.phi_p)
    py = p.p * math.sin(p.phi_p)
    a11 = a - b + 1j * px
    a22 = a + b - 1j * px
    a12 = 1j * py - 1j * b
    return QuadraticFormMatrix(a11=a11, a12=a12, a21=a12, a22=a22)


def _s_invariant(gp: GenFuncParams, p: MomentumPoint, beta: float) -> complex:
    one_minus = 1.0 - gp.z
    head = (1.0 + gp.z) * gp.q0 + beta * one_minus
    circ = p.p * cmath.exp(1j * p.phi_p)
    return head * head + p.p * p.p * one_minus * one_minus + 4j * gp.t * gp.z * gp.q0 * circ


def det_x(gp: GenFuncParams, p: MomentumPoint) -> complex:
    """Closed-form determinant of ``quadratic_form_matrix``:  S(beta)/(1-z)^2."""
    one_minus = 1.0 - gp.z
    return _s_invariant(gp, p, gp.beta) / (one_minus * one_minus)


def _principal_sqrt(s: complex) -> complex:
    """Principal square root, rejecting arguments on the branch cut."""
    if s == 0.0 or (s.real < 0.0 and abs(s.imag) <= 1e-12 * abs(s.real)):
        raise ValueError("square-root argument is on the negative real axis; "
                         "parameters are outside the admissible domain")
    return cmath.sqrt(s)


def gen_func_momentum(gp: GenFuncParams, p: MomentumPoint) -> GenFuncValues:
    """Momentum-space generating functions (g_beta, g).

    g_beta = S(beta)^(-1/2) evaluated at gp.beta; g is its negated beta
    derivative at beta = 0, in closed form (1 - z^2) q0 S(0)^(-3/2).  The
    (n, m) Taylor coefficient of g in z and t is 1/m! times the unitary
    momentum transform of the bare scaled basis function at fixed q0.
    """
    s_beta = _s_invariant(gp, p, gp.beta)
    g_beta = 1.0 / _principal_sqrt(s_beta)
    s0 = _s_invariant(gp, p, 0.0)
    g = (1.0 - gp.z * gp.z) * gp.q0 / (s0 * _principal_sqrt(s0))
    return GenFuncValues(g_beta=g_beta, g=g)

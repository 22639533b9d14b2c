"""Momentum-space states: unitary normalization, spectral variable, two forms.

The transform convention is the unitary 1/(2 pi) one, which pins the ground
state at p = 0 to exactly 1/sqrt(2 pi).  Everything here cross-checks the
two closed forms against each other and against hand-derived special points;
the quadrature-based comparison with the Fourier oracle lives in
test_ftoracle and the verification suites.
"""

import cmath
import math

import pytest

from hydro2d.momentum import (
    MomentumPoint,
    psi_momentum,
    psi_momentum_gegenbauer,
    q_of_p,
)
from hydro2d.position import QuantumNumbers

INV_SQRT_2PI = 1.0 / math.sqrt(2.0 * math.pi)


def test_momentum_point_validation():
    MomentumPoint(0.0, 3.0)
    with pytest.raises(ValueError):
        MomentumPoint(-0.1, 0.0)


def test_q_of_p_special_points():
    assert q_of_p(0.0, 2.0) == -1.0
    assert q_of_p(2.0 / 3.0, 2.0 / 3.0) == 0.0
    assert q_of_p(1.2, 0.6) == pytest.approx(0.6, rel=1e-15)  # p = 2 q0 gives 3/5
    with pytest.raises(ValueError):
        q_of_p(-1.0, 2.0)
    with pytest.raises(ValueError):
        q_of_p(1.0, 0.0)


def test_q_of_p_range():
    for p in (0.0, 0.01, 1.0, 7.0, 300.0):
        q = q_of_p(p, 0.4)
        assert -1.0 <= q < 1.0


def test_ground_state_at_zero_momentum():
    # q0 = 2 makes (2 q0/(p^2+q0^2))^(3/2) = 1 and P_0(-1) = 1, so the value
    # is the bare unitary constant.
    val = psi_momentum(QuantumNumbers(0, 0), MomentumPoint(0.0, 0.0))
    assert val == complex(INV_SQRT_2PI, 0.0)
    assert val.real == pytest.approx(0.3989422804014327, abs=0.0)


def test_nodes_of_low_states():
    # P_1(q) = q vanishes at q = 0, i.e. p = q0.
    assert psi_momentum(QuantumNumbers(1, 0), MomentumPoint(2.0 / 3.0, 0.0)) == 0.0
    # P_1^1(q) vanishes at q = -1, i.e. p = 0 (and the p^|m| route agrees).
    assert psi_momentum(QuantumNumbers(1, 1), MomentumPoint(0.0, 0.0)) == 0.0
    assert psi_momentum_gegenbauer(QuantumNumbers(1, 1), MomentumPoint(0.0, 0.0)) == 0.0


def test_two_closed_forms_agree():
    worst = 0.0
    for n in range(9):
        for m in range(n + 1):
            for p in (0.05, 0.3, 1.0, 2.5):
                for phi in (0.0, 1.1):
                    a = psi_momentum(QuantumNumbers(n, m), MomentumPoint(p, phi))
                    b = psi_momentum_gegenbauer(QuantumNumbers(n, m), MomentumPoint(p, phi))
                    if abs(a) > 0.0:
                        worst = max(worst, abs(a - b) / abs(a))
    assert worst <= 1e-12  # measured 1.0e-13


def test_phase_factorization_is_exact():
    # psi(p, phi_p) = psi(p, 0) e^(i m phi_p) bit for bit, because that is
    # literally how the value is assembled.
    for n, m in ((2, 1), (3, -2), (5, 5)):
        qn = QuantumNumbers(n, m)
        base = psi_momentum(qn, MomentumPoint(0.8, 0.0))
        for phi in (0.7, -2.2):
            expect = base * complex(math.cos(m * phi), math.sin(m * phi))
            assert psi_momentum(qn, MomentumPoint(0.8, phi)) == expect


def test_negative_m_symmetries():
    qn_plus, qn_minus = QuantumNumbers(2, 1), QuantumNumbers(2, -1)
    mp = MomentumPoint(0.7, 1.3)
    # flipping m equals flipping the azimuth
    assert psi_momentum(qn_minus, mp) == psi_momentum(qn_plus, MomentumPoint(0.7, -1.3))
    # and equals (-1)^|m| times the conjugate at the same azimuth
    assert psi_momentum(qn_minus, mp) == -psi_momentum(qn_plus, mp).conjugate()
    # modulus never depends on the sign
    assert abs(psi_momentum(qn_minus, mp)) == abs(psi_momentum(qn_plus, mp))


def test_phase_is_minus_i_per_angular_unit():
    # At phi_p = 0 the m = 1 value must be purely imaginary with negative
    # imaginary part near p = 0.5 (the (-i)^|m| factor), not purely real.
    val = psi_momentum(QuantumNumbers(1, 1), MomentumPoint(0.5, 0.0))
    assert val.real == 0.0
    assert val.imag < 0.0
    # m = 2 picks up (-i)^2 = -1: purely real and negative at small p
    val2 = psi_momentum(QuantumNumbers(2, 2), MomentumPoint(0.5, 0.0))
    assert val2.imag == 0.0
    assert val2.real < 0.0


def test_large_p_envelope():
    # |psi| ~ (2 q0)^(3/2) / (2 pi)^(1/2) / p^3 for n = 0; check the decade scaling.
    a = abs(psi_momentum(QuantumNumbers(0, 0), MomentumPoint(100.0, 0.0)))
    b = abs(psi_momentum(QuantumNumbers(0, 0), MomentumPoint(1000.0, 0.0)))
    assert a / b == pytest.approx(1e3, rel=1e-2)


def test_gegenbauer_route_uses_signed_phase_too():
    qn = QuantumNumbers(3, -2)
    mp = MomentumPoint(1.1, 0.6)
    assert psi_momentum_gegenbauer(qn, mp) == pytest.approx(
        psi_momentum(qn, mp), rel=1e-12)
    assert cmath.isclose(
        psi_momentum_gegenbauer(qn, MomentumPoint(1.1, -0.6)),
        psi_momentum_gegenbauer(QuantumNumbers(3, 2), mp), rel_tol=1e-15)

import numpy as np
import pytest
from scipy.integrate import quad

from srbflow.entropy import (
    GalerkinState,
    c_squared,
    entropy,
    even_to_galerkin,
    galerkin_rhs_even,
    galerkin_to_even,
    gateaux_g,
    gateaux_h,
    odd_frequencies,
    pde_rhs_even,
    pde_rhs_n2,
    riesz_gradient,
    sobolev_gradient_n2,
)
from srbflow.errors import DomainError
from srbflow.spectral import FourierRep, GridRep, InverseDerivative, TangentVector, to_grid
from srbflow.verify import random_density, random_tangent

# closed-form value of -int_0^2 pi*cos(pi*y) * ln(1/2 + 1/4 cos(pi*y)) dy,
# via int_0^{2pi} cos(t) ln(1 + a cos t) dt = 2*pi*(1 - sqrt(1-a^2))/a
DH_CLOSED = -2.0 * np.pi * (2.0 - np.sqrt(3.0))

COS_QUARTER = FourierRep(2.0, 0.5, [0.25], [0.0])  # h = 1/2 + (1/4) cos(pi y)


def h_cos_quarter():
    return InverseDerivative(COS_QUARTER, 2)


def test_entropy_uniform():
    assert entropy(InverseDerivative(FourierRep(2.0, 0.5, [0.0], [0.0]), 2)) == \
        pytest.approx(np.log(2.0), abs=1e-13)
    assert entropy(InverseDerivative(FourierRep(3.0, 1 / 3, [0.0], [0.0]), 3)) == \
        pytest.approx(np.log(3.0), abs=1e-13)


def test_entropy_cos_quarter_against_quadrature_oracle():
    oracle, err = quad(lambda y: -(0.5 + 0.25 * np.cos(np.pi * y))
                       * np.log(0.5 + 0.25 * np.cos(np.pi * y)), 0.0, 2.0, limit=200)
    assert err < 1e-10
    assert oracle == pytest.approx(0.6285090485394579, abs=1e-12)  # frozen
    assert entropy(h_cos_quarter()) == pytest.approx(oracle, abs=1e-10)


def test_entropy_domain_guard():
    with pytest.raises(DomainError):
        entropy(InverseDerivative(FourierRep(2.0, 0.5, [0.5], [0.0]), 2))
    with pytest.raises(DomainError):
        entropy(InverseDerivative(GridRep(2.0, np.full(8, 1e-12)), 2))


def test_entropy_upper_bound_random():
    rng = np.random.default_rng(17)
    for n in (2, 3, 5):
        for _ in range(20):
            h = random_density(rng, n)
            assert entropy(h) <= np.log(n) + 1e-12


def test_gateaux_h_constant_h():
    h = InverseDerivative(FourierRep(2.0, 0.5, [0.0], [0.0]), 2)
    psi = TangentVector(FourierRep(2.0, 0.0, [0.3], [0.1]), 2)
    assert gateaux_h(h, psi) == pytest.approx(0.0, abs=1e-14)


def test_gateaux_h_closed_form():
    psi = TangentVector(FourierRep(2.0, 0.0, [np.pi], [0.0]), 2)  # pi cos(pi y)
    assert gateaux_h(h_cos_quarter(), psi) == pytest.approx(DH_CLOSED, rel=1e-10)


def test_gateaux_h_linearity():
    rng = np.random.default_rng(5)
    h = random_density(rng, 2)
    psi = random_tangent(rng, 2)
    base = gateaux_h(h, psi)
    scaled = TangentVector(FourierRep(2.0, 0.0, 3.5 * psi.rep.cos, 3.5 * psi.rep.sin), 2)
    assert gateaux_h(h, scaled) == pytest.approx(3.5 * base, rel=1e-12)


def test_gateaux_g_constant_gprime():
    g = InverseDerivative(FourierRep(2.0, 0.5, [0.0], [0.0]), 2)
    phi = TangentVector(FourierRep(2.0, 0.0, [0.2], [0.4]), 2)
    assert gateaux_g(g, phi) == pytest.approx(0.0, abs=1e-14)


def test_gateaux_g_closed_form():
    phi = TangentVector(FourierRep(2.0, 0.0, [0.0], [1.0]), 2)  # sin(pi y)
    assert gateaux_g(h_cos_quarter(), phi) == pytest.approx(DH_CLOSED, rel=1e-10)


def test_gateaux_g_matches_gateaux_h_of_derivative():
    # -int ln g' phi' dy must equal DH_h(psi) with psi = phi'
    rng = np.random.default_rng(9)
    h = random_density(rng, 2)
    phi = random_tangent(rng, 2)
    from srbflow.spectral import differentiate
    psi = TangentVector(differentiate(phi.rep), 2)
    assert gateaux_g(h, phi) == pytest.approx(gateaux_h(h, psi), abs=1e-9)


def test_gateaux_g_integration_by_parts_form():
    # the (g''/g') phi form, evaluated by independent quadrature
    phi = TangentVector(FourierRep(2.0, 0.0, [0.0], [1.0]), 2)
    val, err = quad(lambda y: (-0.25 * np.pi * np.sin(np.pi * y))
                    / (0.5 + 0.25 * np.cos(np.pi * y)) * np.sin(np.pi * y), 0.0, 2.0,
                    limit=200)
    assert err < 1e-6
    assert gateaux_g(h_cos_quarter(), phi) == pytest.approx(val, abs=1e-7)


def test_riesz_gradient_constant_h():
    h = InverseDerivative(FourierRep(2.0, 0.5, [0.0], [0.0]), 2)
    assert np.max(np.abs(riesz_gradient(h).rep.samples)) == 0.0


def test_riesz_gradient_point_value():
    R = riesz_gradient(h_cos_quarter())
    # at y = 0: (ln h(1) - ln h(0)) / 2 = -ln(3)/2
    assert R.rep.samples[0] == pytest.approx(-0.5 * np.log(3.0), rel=1e-12)


def test_riesz_defining_identity_random():
    rng = np.random.default_rng(23)
    for n in (2, 3):
        h = random_density(rng, n)
        R = riesz_gradient(h)
        s = R.rep.samples
        w = n / s.size
        from srbflow.entropy import density_samples
        hs = density_samples(h, s.size)
        for _ in range(100):
            p = to_grid(random_tangent(rng, n).rep, s.size).samples
            lhs = w * np.sum(s * p)
            rhs = -w * np.sum(p * np.log(hs))
            assert lhs == pytest.approx(rhs, abs=1e-8)


def test_riesz_gradient_is_tangent():
    rng = np.random.default_rng(31)
    for n in (2, 3, 5):
        h = random_density(rng, n)
        from srbflow.spectral import tangent_residual
        assert tangent_residual(riesz_gradient(h)) <= 1e-10


def test_sobolev_gradient_zero_state():
    g = sobolev_gradient_n2(GalerkinState([0.0], [0.0]))
    assert np.all(g.a == 0.0) and np.all(g.b == 0.0)


def test_sobolev_gradient_even_case_closed_form():
    # B1 = 1/4 means b1 = 1/(4 pi); Bdot1 = -pi c1^2 * 2 pi (2 - sqrt 3)
    state = even_to_galerkin([0.25, 0.0, 0.0])
    g = sobolev_gradient_n2(state)
    bdot1_expect = -np.pi * c_squared(1) * 2.0 * np.pi * (2.0 - np.sqrt(3.0)) / np.pi
    assert g.b[0] == pytest.approx(bdot1_expect, rel=1e-9)
    assert np.max(np.abs(g.a)) < 1e-15  # parity: no cosine components appear


def test_sobolev_gradient_parity_random_even_states():
    rng = np.random.default_rng(40)
    for _ in range(20):
        state = GalerkinState(np.zeros(3), rng.uniform(-0.01, 0.01, 3))
        g = sobolev_gradient_n2(state)
        assert np.max(np.abs(g.a)) < 1e-13


def test_galerkin_rhs_even_equilibrium():
    assert np.all(galerkin_rhs_even([0.0, 0.0, 0.0]) == 0.0)


def test_galerkin_rhs_even_closed_form_and_oracle():
    B = np.array([0.25, 0.0, 0.0])
    out = galerkin_rhs_even(B)
    expect1 = -np.pi * c_squared(1) * 2.0 * np.pi * (2.0 - np.sqrt(3.0))
    assert out[0] == pytest.approx(expect1, rel=1e-10)
    # higher modes via independent adaptive quadrature
    for m in (2, 3):
        k = 2 * m - 1
        val, err = quad(lambda t, k=k: (0.25 * np.sin(t)) / (0.5 + 0.25 * np.cos(t))
                        * np.sin(k * t), 0.0, 2.0 * np.pi, limit=400)
        assert err < 1e-9
        expect = -np.pi * k * c_squared(k) * val
        assert out[m - 1] == pytest.approx(expect, rel=1e-6, abs=1e-12)
        assert out[m - 1] != 0.0


def test_galerkin_rhs_even_linearization_rate():
    B = np.array([1e-6, 0.0, 0.0])
    out = galerkin_rhs_even(B)
    rate = 2.0 * np.pi**2 * c_squared(1)
    assert rate == pytest.approx(0.1823059, abs=1e-4)
    assert out[0] / B[0] == pytest.approx(-rate, rel=1e-4)


def test_even_formula_cross_checks_general_formula():
    # the tau-domain reduction and the y-domain Galerkin system must agree
    # under B_k = pi (2k-1) b_{2k-1}
    rng = np.random.default_rng(51)
    for _ in range(10):
        B = rng.uniform(-0.05, 0.05, 3)
        state = even_to_galerkin(B)
        g = sobolev_gradient_n2(state)
        from_even = galerkin_rhs_even(B)
        np.testing.assert_allclose(galerkin_to_even(GalerkinState(np.zeros(3), g.b)),
                                   from_even, atol=1e-12)


def test_pde_proportionality():
    rng = np.random.default_rng(60)
    c2 = c_squared(odd_frequencies(3))
    for _ in range(10):
        state = GalerkinState(rng.uniform(-0.004, 0.004, 3), rng.uniform(-0.004, 0.004, 3))
        g = sobolev_gradient_n2(state)
        p = pde_rhs_n2(state)
        np.testing.assert_allclose(g.a, c2 * p.a, atol=1e-14)
        np.testing.assert_allclose(g.b, c2 * p.b, atol=1e-14)
        B = rng.uniform(-0.05, 0.05, 3)
        np.testing.assert_allclose(galerkin_rhs_even(B), c2 * pde_rhs_even(B), atol=1e-14)


def test_sobolev_gradient_matches_basis_projection():
    # independent route: coefficient m of the gradient is
    # c_{2m-1}^2 * DH_g(cos/sin basis vector), with DH_g from gateaux_g
    rng = np.random.default_rng(71)
    state = GalerkinState(rng.uniform(-0.003, 0.003, 3), rng.uniform(-0.003, 0.003, 3))
    g = sobolev_gradient_n2(state)
    a_full = np.zeros(5)  # frequencies 1..5; odd slots populated
    b_full = np.zeros(5)
    a_full[0::2] = state.a
    b_full[0::2] = state.b
    # g' = 1/2 + pi sum (2k-1)(-a sin + b cos), written as Fourier data
    k = np.arange(1, 6)
    gp = FourierRep(2.0, 0.5, np.pi * k * b_full, -np.pi * k * a_full)
    gprime = InverseDerivative(gp, 2)
    for m in range(3):
        km = 2 * m + 1
        e_cos = np.zeros(5)
        e_cos[km - 1] = 1.0
        phi_cos = TangentVector(FourierRep(2.0, 0.0, e_cos, np.zeros(5)), 2)
        phi_sin = TangentVector(FourierRep(2.0, 0.0, np.zeros(5), e_cos), 2)
        assert g.a[m] == pytest.approx(c_squared(km) * gateaux_g(gprime, phi_cos), abs=1e-9)
        assert g.b[m] == pytest.approx(c_squared(km) * gateaux_g(gprime, phi_sin), abs=1e-9)

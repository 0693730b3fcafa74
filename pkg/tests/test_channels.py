import math

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hawking_qfi.channels import (
    CORRELATED,
    INDEPENDENT,
    ChannelCoeffs,
    SgadParams,
    apply_channel,
    is_hermitian,
    kraus_ad,
    kraus_gad,
    kraus_sgad,
    kraus_sgad_from_coeffs,
    literal_trace,
    paper_literal_sgad_rho,
    thermal_coeffs,
)
from hawking_qfi.errors import DimensionError, NotHermitianError, ParameterDomainError, UnphysicalError
from hawking_qfi.linalg import eig_hermitian
from hawking_qfi.state import ASSIGNMENTS, DilatedState, dilated_coefficients

unit = st.floats(0, 1)


def mp_thermal(Q, r, g, w, T):
    """The bath coefficients at 40 digits, written without any rearrangement."""
    mp.mp.dps = 40
    Q, r, g, w, T = (mp.mpf(x) for x in (Q, r, g, w, T))
    n = 1 / (mp.exp(w / T) - 1)
    N = n * (mp.cosh(r) ** 2 + mp.sinh(r) ** 2) + mp.sinh(r) ** 2
    a = mp.sinh(2 * r) * (2 * n + 1)
    rate = g * (2 * N + 1)
    mu = (2 * N + 1) / (2 * N * (1 - Q)) * mp.sinh(g * a / 2) ** 2 / mp.sinh(rate / 2) ** 2 * mp.exp(-rate / 2)
    v = N / ((1 - Q) * (2 * N + 1)) * (1 - mp.exp(-rate))
    lam = (1 - (1 - Q) * (mu + v) - mp.exp(-rate)) / Q
    return float(mu), float(v), float(lam)


@pytest.mark.parametrize("args", [
    (0.5, 1.0, 0.5, 5.0, 2.0),
    (0.5, 0.0, 0.5, 5.0, 0.5),
    (0.3, 0.4, 0.2, 1.0, 3.0),
    (0.9, 2.0, 0.05, 2.0, 1.0),
])
def test_thermal_coeffs_match_high_precision(args):
    tc = thermal_coeffs(SgadParams(args[0], args[1], 0.0, *args[2:]), check_physical=False)
    mu, v, lam = mp_thermal(*args)
    assert tc.mu == pytest.approx(mu, rel=1e-12, abs=1e-15)
    assert tc.v == pytest.approx(v, rel=1e-12)
    assert tc.lam == pytest.approx(lam, rel=1e-11)


def test_thermal_coeffs_frozen():
    tc = thermal_coeffs(SgadParams(0.5, 1.0, 0.0, 0.5, 5.0, 2.0))
    assert tc.mu == pytest.approx(0.770836905094925, rel=1e-13)
    assert tc.v == pytest.approx(0.6901962282234133, rel=1e-13)
    assert tc.lam == pytest.approx(0.321212336184278, rel=1e-12)
    raw = thermal_coeffs(SgadParams(0.5), check_physical=False)
    assert raw.n_th == pytest.approx(1 / (math.e - 1), rel=1e-15)
    assert raw.v == pytest.approx(0.47609619048016866, rel=1e-13)
    assert raw.lam == pytest.approx(1.294163623180819, rel=1e-12)
    assert raw.mu == 0.0


def test_unphysical_and_domain_errors():
    with pytest.raises(UnphysicalError) as info:
        thermal_coeffs(SgadParams(0.5))
    assert info.value.term == "lambda"
    with pytest.raises(ParameterDomainError) as info:
        thermal_coeffs(SgadParams(1.0))
    assert info.value.term == "1-Q"
    with pytest.raises(ParameterDomainError):
        thermal_coeffs(SgadParams(0.0))
    with pytest.raises(ParameterDomainError) as info:
        thermal_coeffs(SgadParams(0.5, omega=1000.0))
    assert info.value.term == "N"
    for bad in ({"squeezing_r": -1.0}, {"gamma0": 0.0}, {"channel_temp": -2.0}, {"bath_coupling_Q": 1.5}):
        with pytest.raises(ParameterDomainError):
            SgadParams(**{"bath_coupling_Q": 0.5, **bad})


def test_large_rate_does_not_overflow():
    tc = thermal_coeffs(SgadParams(0.5, 3.0, 0.0, 400.0, 1.0, 1.0), check_physical=False)
    assert math.isfinite(tc.mu) and math.isfinite(tc.lam)


@settings(max_examples=200)
@given(unit, unit, unit, unit, st.floats(-7, 7))
def test_kraus_completeness(Q, lam, mu, v, Phi):
    for ks in (kraus_sgad_from_coeffs(Q, lam, mu, v, Phi), kraus_gad(Q, lam), kraus_ad(lam)):
        assert np.allclose(ks.completeness(), np.eye(2), atol=1e-12)


def test_kraus_sets_are_read_only():
    ks = kraus_ad(0.3)
    assert len(ks) == 2
    with pytest.raises(ValueError):
        ks.operators[0][0, 0] = 2.0


def test_reduction_chain_at_operator_level():
    for Q, lam in ((0.3, 0.6), (0.8, 0.1), (0.5, 1.0)):
        sgad = kraus_sgad_from_coeffs(Q, lam, 0.0, lam, 0.0)
        gad = kraus_gad(Q, lam)
        for e, f in zip(sgad, gad):
            assert np.array_equal(e, f)
    gad1, ad = kraus_gad(1.0, 0.37), kraus_ad(0.37)
    assert np.array_equal(gad1.operators[0], ad.operators[0])
    assert np.array_equal(gad1.operators[1], ad.operators[1])
    assert not np.any(gad1.operators[2]) and not np.any(gad1.operators[3])


def test_kraus_sgad_from_bath():
    p = SgadParams(0.5, 1.0, 0.3, 0.5, 5.0, 2.0)
    ks = kraus_sgad(p)
    assert ks.label == "SGAD" and len(ks) == 4
    assert np.allclose(ks.completeness(), np.eye(2), atol=1e-14)


def test_amplitude_damping_of_excited_state():
    out = apply_channel(np.diag([0.0, 1.0]), kraus_ad(0.25), [0])
    assert np.allclose(out, np.diag([0.25, 0.75]))


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 2**32 - 1), unit, unit, unit, unit, st.sampled_from([INDEPENDENT, CORRELATED]))
def test_apply_channel_is_trace_preserving_and_positive(seed, Q, lam, mu, v, mode):
    rng = np.random.default_rng(seed)
    m = rng.normal(size=(8, 8)) + 1j * rng.normal(size=(8, 8))
    rho = m @ m.conj().T
    rho /= np.trace(rho)
    out = apply_channel(rho, kraus_sgad_from_coeffs(Q, lam, mu, v), [0, 1], mode)
    if mode == INDEPENDENT:
        assert np.trace(out).real == pytest.approx(1.0, abs=1e-12)
    assert is_hermitian(out, 1e-12)
    assert eig_hermitian(out).eigenvalues.min() > -1e-12


def test_correlated_mode_shares_the_index():
    ks = kraus_ad(0.5)
    rho = np.zeros((4, 4))
    rho[3, 3] = 1.0
    out = apply_channel(rho, ks, [0, 1], CORRELATED)
    # only E0 x E0 and E1 x E1 act: |11> -> 0.25 |11>, |00> gets 0.25
    assert np.allclose(np.diag(out).real, [0.25, 0.0, 0.0, 0.25])


def test_apply_channel_argument_checks():
    with pytest.raises(DimensionError):
        apply_channel(np.eye(4) / 4, kraus_ad(0.1), [0, 0])
    with pytest.raises(DimensionError):
        apply_channel(np.eye(4) / 4, kraus_ad(0.1), [2])
    with pytest.raises(DimensionError):
        apply_channel(np.eye(3) / 3, kraus_ad(0.1), [0])
    with pytest.raises(ValueError):
        apply_channel(np.eye(2) / 2, kraus_ad(0.1), [0], "sequential")


@settings(max_examples=100, deadline=None)
@given(st.floats(0, 3.2), st.floats(0, 6.3), st.floats(0, 20), unit, unit, unit,
       st.sampled_from(ASSIGNMENTS))
def test_literal_matrix_trace_and_spectrum(theta, phi, x, lam, mu, Q, assignment):
    state = DilatedState(*dilated_coefficients(theta, phi, x, assignment))
    c = ChannelCoeffs(lam, mu, Q)
    rho = paper_literal_sgad_rho(state, c)
    assert is_hermitian(rho)
    assert np.trace(rho).real == pytest.approx(literal_trace(state, c), abs=1e-14)
    assert np.trace(rho).real <= 1.0 + 1e-12
    assert eig_hermitian(rho).eigenvalues[3:] == pytest.approx([0.0] * 5, abs=1e-15)


def test_literal_matrix_identity_channel_is_accessible_state():
    from hawking_qfi.state import accessible_density_matrix

    state = DilatedState(*dilated_coefficients(0.5, 0.2, 1.3))
    assert np.allclose(paper_literal_sgad_rho(state, ChannelCoeffs(0.0)), accessible_density_matrix(state))


def test_literal_matrix_squeezing_angle():
    state = DilatedState(*dilated_coefficients(0.5, 0.2, 1.3, "kruskal"))
    c = ChannelCoeffs(0.4, 0.5, 0.5, Phi=0.3)
    with pytest.raises(NotHermitianError):
        paper_literal_sgad_rho(state, c)
    raw = paper_literal_sgad_rho(state, c, literal_complex=True)
    assert raw[1, 1].imag != 0
    # e^{2i Phi} is real at Phi = pi/2
    assert is_hermitian(paper_literal_sgad_rho(state, ChannelCoeffs(0.4, 0.5, 0.5, Phi=math.pi / 2)))


def test_literal_matrix_from_bath_params():
    p = SgadParams(0.5, 1.0, 0.0, 0.5, 5.0, 2.0)
    state = DilatedState(*dilated_coefficients(0.5, 0.0, 1.0))
    assert np.array_equal(paper_literal_sgad_rho(state, p), paper_literal_sgad_rho(state, ChannelCoeffs.from_params(p)))


def test_channel_coeff_constructors():
    assert ChannelCoeffs.gad(0.3, 0.2) == ChannelCoeffs(0.2, 0.0, 0.3)
    ad = ChannelCoeffs.ad(0.2)
    assert (ad.lam, ad.mu, ad.Q, ad.v) == (0.2, 0.0, 1.0, 0.2)
    with pytest.raises(ParameterDomainError):
        ChannelCoeffs(1.2)

"""Amplitude-damping family channels acting on Alice and Bob.

Bath parameters (Q, r, Phi, gamma0, omega, T_C) fix the SGAD coefficients
(lambda, mu, v). Many bath settings are unphysical, so this script scans
for a region where every coefficient stays in [0, 1].
"""
import numpy as np

from hawking_qfi import (
    ChannelCoeffs,
    DilatedState,
    SgadParams,
    UnphysicalError,
    apply_channel,
    kraus_ad,
    kraus_gad,
    kraus_sgad,
    paper_literal_sgad_rho,
    thermal_coeffs,
)
from hawking_qfi.state import KRUSKAL, accessible_density_matrix, dilated_coefficients

bath = SgadParams(bath_coupling_Q=0.5, squeezing_r=1.0, gamma0=0.5, omega=5.0, channel_temp=2.0)
tc = thermal_coeffs(bath)
print(f"n_th = {tc.n_th:.6f}  N = {tc.big_n:.6f}  mu = {tc.mu:.6f}  v = {tc.v:.6f}  lambda = {tc.lam:.6f}")

for ks in (kraus_sgad(bath), kraus_gad(0.5, tc.lam), kraus_ad(tc.lam)):
    err = np.max(np.abs(ks.completeness() - np.eye(2)))
    print(f"{ks.label:<5} {len(ks)} operators, |sum E^dag E - I| = {err:.1e}")

# Which (gamma0, T_C) pairs are physical at Q = 0.5, omega = 5?
print("\nphysical bath settings (x), r = 1:")
temps = np.linspace(0.5, 5.0, 10)
print("gamma0 \\ T_C " + " ".join(f"{t:4.1f}" for t in temps))
for g in (0.25, 0.5, 1.0, 2.0):
    marks = []
    for t in temps:
        try:
            thermal_coeffs(SgadParams(0.5, 1.0, 0.0, g, 5.0, t))
            marks.append("   x")
        except UnphysicalError:
            marks.append("   .")
    print(f"{g:<13}" + " ".join(marks))

# Two ways to push the state through the channel. The Kraus route is trace
# preserving; the closed-form matrix keeps only the terms that feed the
# QFI expressions, so its trace is below one.
state = DilatedState(*dilated_coefficients(0.6, 0.0, 1.0, KRUSKAL))
physical = apply_channel(accessible_density_matrix(state), kraus_sgad(bath), (0, 1))
literal = paper_literal_sgad_rho(state, ChannelCoeffs.from_params(bath))
print(f"\ntrace via Kraus operators: {np.trace(physical).real:.12f}")
print(f"trace of closed-form channel output: {np.trace(literal).real:.6f}")
print("smallest eigenvalue via Kraus:", f"{np.linalg.eigvalsh(physical).min():.2e}")

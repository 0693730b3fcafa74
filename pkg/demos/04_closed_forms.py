"""Closed-form QFI expressions against the numeric engine.

The closed forms take (theta, w/T, lambda, mu, Q, Phi). The numeric side
differentiates the closed-form channel output. Which amplitude carries the
phase matters, and the comparison below makes that visible.
"""
import math

from hawking_qfi import ChannelCoeffs, ClosedFormInput, literal_family, qfi_sld
from hawking_qfi.closed_forms import PHI_FORMS, THETA_FORMS, theta_zero_value
from hawking_qfi.state import ASSIGNMENTS

point = dict(theta=0.7, phi=0.3, w_over_T=1.2, lam=0.35, mu=0.45, Q=0.7)
inp = ClosedFormInput(**point)
c = ChannelCoeffs(point["lam"], point["mu"], point["Q"])

print("SGAD at", point)
for assignment in ASSIGNMENTS:
    ft = qfi_sld(literal_family("theta", inp.theta, inp.phi, inp.w_over_T, c, assignment), inp.theta).value
    fp = qfi_sld(literal_family("phi", inp.theta, inp.phi, inp.w_over_T, c, assignment), inp.phi).value
    print(f"  numeric, {assignment:<8} F_theta = {ft:.10f}  F_phi = {fp:.10f}")
print(f"  closed form        F_theta = {THETA_FORMS['sgad'](inp):.10f}  F_phi = {PHI_FORMS['sgad'](inp):.10f}")
print(f"  printed grouping   F_theta = {THETA_FORMS['sgad'](inp, variant='printed'):.10f}")

# At theta = 0 the weight QFI no longer depends on the Hawking temperature.
print("\ntheta = 0, lambda = 0.35, mu = 0.45, Q = 0.7")
for x in (0.1, 1.0, 10.0):
    v = THETA_FORMS["sgad"](ClosedFormInput(0.0, 0.0, x, 0.35, 0.45, 0.7))
    print(f"  w/T = {x:<5} F_theta = {v:.12f}")
print(f"  4Q[(1-l)^2 Q + l(1-mu)(1-Q)] = {theta_zero_value(0.35, 0.45, 0.7):.12f}")

# Identity channel at zero Hawking temperature: the GHZ-like pure state.
print("\nidentity channel, w/T -> inf: F_phi = sin^2(2 theta)")
for theta in (0.1, math.pi / 8, math.pi / 4):
    v = PHI_FORMS["ad"](ClosedFormInput(theta, 0.0, math.inf))
    print(f"  theta = {theta:.4f}  F_phi = {v:.12f}  sin^2(2 theta) = {math.sin(2 * theta) ** 2:.12f}")

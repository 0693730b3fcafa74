"""Two numeric routes to the quantum Fisher information.

``qfi_sld`` needs only d rho in the eigenbasis of rho. ``qfi_spectral``
differentiates eigenvalues and eigenvectors and splits the result into a
classical part, a pure-state part and a mixing correction.
"""
import math

import numpy as np

from hawking_qfi import ChannelCoeffs, ParamFamily, literal_family, qfi_sld, qfi_spectral

X = np.array([[0, 1], [1, 0]], dtype=complex)
Z = np.diag([1.0, -1.0]).astype(complex)


def bloch(r, angle):
    return (np.eye(2) + r * (math.cos(angle) * Z + math.sin(angle) * X)) / 2


# A qubit with Bloch radius 0.8 rotated by an angle: the QFI is r^2.
fam = ParamFamily(lambda a: bloch(0.8, a), "angle")
for fn in (qfi_sld, qfi_spectral):
    res = fn(fam, 0.3)
    print(f"{res.method:<9} F = {res.value:.10f}  classical {res.classical_term:.3e}  "
          f"pure {res.pure_term:.6f}  mixing {res.mixture_correction:.6f}")

# The closed-form channel output, as a function of the weight angle.
c = ChannelCoeffs(lam=0.3, mu=0.4, Q=0.6)
fam = literal_family("theta", 0.7, 0.2, 1.5, c)
print("\nchannel output, theta = 0.7:")
print(f"  sld      {qfi_sld(fam, 0.7).value:.12f}")
print(f"  spectral {qfi_spectral(fam, 0.7).value:.12f}")

# At theta = 0 one eigenvalue of rho touches zero. The plain SLD sum is
# discontinuous there; continuous=True returns the limit from either side.
fam0 = literal_family("theta", 0.0, 0.0, 1.5, c)
print("\nthe limit at a rank change:")
print(f"  theta = 1e-4        {qfi_sld(literal_family('theta', 1e-4, 0.0, 1.5, c), 1e-4).value:.8f}")
print(f"  theta = 0 (plain)   {qfi_sld(fam0, 0.0).value:.8f}")
print(f"  theta = 0 (limit)   {qfi_sld(fam0, 0.0, continuous=True).value:.8f}")

# Step-size sensitivity of the fourth-order stencil.
print("\nfinite-difference step vs result:")
for h in (1e-2, 1e-3, 1e-4, 1e-5, 1e-6):
    print(f"  h = {h:.0e}  F = {qfi_sld(fam, 0.7, h=h).value:.12f}")

"""The tripartite state and what the horizon does to it.

Caleb's qubit is split between the exterior and interior modes by the
Kruskal vacuum. Tracing out the interior leaves a mixed three-qubit state
whose mixing is set by omega / T_H.
"""
import math

import numpy as np

from hawking_qfi import (
    DilatedState,
    ModeSpec,
    StateParams,
    accessible_density_matrix,
    build_dilated_state,
    hawking_temperature,
    kruskal_split,
)
from hawking_qfi.state import KRUSKAL, traced_density_matrix

np.set_printoptions(precision=4, suppress=True)

# A solar-mass-scale black hole in natural units is cold; a small one is hot.
for mass in (0.05, 0.5, 5.0):
    print(f"M = {mass:<5} T_H = {hawking_temperature(mass):.5f}")

print("\nKruskal amplitudes (c0, c1) against omega / T_H")
for x in (0.0, 0.5, 1.0, 3.0, 10.0, 800.0):
    c0, c1 = kruskal_split(x)
    print(f"  x = {x:<6} c0 = {c0:.6f}  c1 = {c1:.6f}  c0^2 + c1^2 = {c0 * c0 + c1 * c1:.15f}")

# The four-qubit pure state lives on |0000>, |1110> and |0011>.
sp = StateParams(theta=math.pi / 3, phi=0.4)
mode = ModeSpec(omega=1.0, hawking_temp=1.0)
state = build_dilated_state(sp, mode, assignment=KRUSKAL)
print("\namplitudes (A, B, F):", np.round([state.coeff_A, state.coeff_B, state.coeff_F], 4))
print("norm:", round(state.norm_sq, 15))

# Tracing out the interior: entry by entry, and by an explicit partial trace.
rho = accessible_density_matrix(state)
same = np.allclose(rho, traced_density_matrix(state))
print("accessible state (nonzero block on |000>, |001>, |111>):")
print(rho[np.ix_([0, 1, 7], [0, 1, 7])])
print("matches partial trace of the dilated projector:", same)

# Purity drops as the black hole heats up.
for th in (0.1, 1.0, 10.0):
    s = build_dilated_state(sp, ModeSpec(1.0, th), KRUSKAL)
    r = accessible_density_matrix(s)
    print(f"T_H = {th:<5} purity Tr(rho^2) = {np.trace(r @ r).real:.6f}")

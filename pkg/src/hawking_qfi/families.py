"""Density-matrix families fed to the QFI engine."""
from __future__ import annotations

from .channels import ChannelCoeffs, paper_literal_sgad_rho
from .qfi import ParamFamily
from .state import KRUSKAL, DilatedState, dilated_coefficients

PARAMETERS = ("theta", "phi")

# the closed-form QFI expressions are the QFI of this assignment
DEFAULT_ASSIGNMENT = KRUSKAL


def literal_rho(theta: float, phi: float, ratio: float, coeffs: ChannelCoeffs,
                assignment: str = DEFAULT_ASSIGNMENT):
    state = DilatedState(*dilated_coefficients(theta, phi, ratio, assignment))
    return paper_literal_sgad_rho(state, coeffs)


def literal_family(parameter: str, theta: float, phi: float, ratio: float,
                   coeffs: ChannelCoeffs, assignment: str = DEFAULT_ASSIGNMENT) -> ParamFamily:
    """Closed-form channel output as a function of ``theta`` or ``phi``.

    ``ratio`` is omega / T_H. AD and GAD are the SGAD matrix with their
    coefficient substitutions already made in ``coeffs``.
    """
    context = {"theta": theta, "phi": phi, "w_over_T": ratio, "lambda": coeffs.lam,
               "mu": coeffs.mu, "Q": coeffs.Q, "Phi": coeffs.Phi, "assignment": assignment}
    if parameter == "theta":
        return ParamFamily(lambda t: literal_rho(t, phi, ratio, coeffs, assignment), "theta", context)
    if parameter == "phi":
        return ParamFamily(lambda f: literal_rho(theta, f, ratio, coeffs, assignment), "phi", context)
    raise ValueError(f"parameter must be one of {PARAMETERS}, got {parameter!r}")

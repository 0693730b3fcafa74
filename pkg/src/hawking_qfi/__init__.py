"""Quantum Fisher information of a tripartite Dirac state near a Schwarzschild horizon.

The state ``cos|000> + sin e^{i phi}|111>`` has its third qubit split by
the Kruskal vacuum, its first two qubits sent through an amplitude
damping family channel, and its QFI with respect to ``theta`` and ``phi``
evaluated both numerically and from closed-form expressions.
"""
from .channels import (
    ChannelCoeffs,
    KrausSet,
    SgadParams,
    ThermalCoeffs,
    apply_channel,
    kraus_ad,
    kraus_gad,
    kraus_sgad,
    kraus_sgad_from_coeffs,
    paper_literal_sgad_rho,
    thermal_coeffs,
)
from .closed_forms import (
    ClosedFormInput,
    eigenvalue_triple,
    sf_phi_ad,
    sf_phi_gad,
    sf_phi_sgad,
    sf_theta_ad,
    sf_theta_gad,
    sf_theta_sgad,
)
from .errors import (
    ConvergenceError,
    DegenerateSpectrumError,
    DimensionError,
    GaugeError,
    NegativeQfiError,
    NotHermitianError,
    ParameterDomainError,
    QfiError,
    UnphysicalError,
)
from .families import literal_family, literal_rho
from .linalg import EigenSystem, dagger, eig_hermitian, kron, kron_all, partial_trace
from .qfi import ParamFamily, QfiResult, qfi_sld, qfi_spectral
from .state import (
    DilatedState,
    ModeSpec,
    StateParams,
    accessible_density_matrix,
    build_dilated_state,
    hawking_temperature,
    kruskal_coefficients,
    kruskal_split,
)

__version__ = "0.1.0"

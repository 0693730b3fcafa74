"""Closed forms against the numeric QFI engine.

Every closed-form expression is compared with :func:`qfi_sld` on the
closed-form channel output over a seeded random grid. The report is plain
text with one PASS/FAIL line per check, followed by an informational
block that repeats the comparison with the alternative state assignment.
"""
from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, replace

import numpy as np

from .channels import ChannelCoeffs, paper_literal_sgad_rho
from .closed_forms import (
    PRINTED as PRINTED_VARIANT,
    REGROUPED,
    ClosedFormInput,
    eigenvalue_triple,
    sf_phi_ad,
    sf_phi_gad,
    sf_phi_sgad,
    sf_theta_ad,
    sf_theta_gad,
    sf_theta_sgad,
)
from .errors import ParameterDomainError
from .families import DEFAULT_ASSIGNMENT, literal_family
from .linalg import eig_hermitian
from .qfi import DEFAULT_EPS, DEFAULT_STEP, qfi_sld
from .state import ASSIGNMENTS, DilatedState, dilated_coefficients
from .sweep import fmt

TOLERANCE = 1e-6
EIGEN_TOLERANCE = 1e-10
DEFAULT_POINTS = 200
DEFAULT_SEED = 20251014


@dataclass(frozen=True)
class Expression:
    label: str
    channel: str
    parameter: str
    func: object
    variant: str | None = None

    def __call__(self, inp: ClosedFormInput) -> float:
        if self.variant is None:
            return float(self.func(inp))
        return float(self.func(inp, variant=self.variant))


EXPRESSIONS = (
    Expression("sf_theta_sgad[regrouped]", "sgad", "theta", sf_theta_sgad, REGROUPED),
    Expression("sf_theta_sgad[printed]", "sgad", "theta", sf_theta_sgad, PRINTED_VARIANT),
    Expression("sf_phi_sgad", "sgad", "phi", sf_phi_sgad),
    Expression("sf_theta_gad", "gad", "theta", sf_theta_gad),
    Expression("sf_phi_gad", "gad", "phi", sf_phi_gad),
    Expression("sf_theta_ad", "ad", "theta", sf_theta_ad),
    Expression("sf_phi_ad", "ad", "phi", sf_phi_ad),
)


@dataclass(frozen=True)
class CheckResult:
    section: str
    name: str
    deviation: float
    tolerance: float
    worst: ClosedFormInput | None = None
    note: str = ""

    @property
    def passed(self) -> bool:
        return self.deviation <= self.tolerance

    @property
    def status(self) -> str:
        return "PASS" if self.passed else "FAIL"


def default_grid(points: int = DEFAULT_POINTS, seed: int = DEFAULT_SEED) -> list[ClosedFormInput]:
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(points):
        theta, phi = rng.uniform(0.0, math.pi), rng.uniform(0.0, 2.0 * math.pi)
        x = rng.uniform(0.05, 10.0)
        lam, mu, Q = rng.uniform(0.0, 1.0, 3)
        out.append(ClosedFormInput(theta, phi, x, float(lam), float(mu), float(Q)))
    return out


def restrict(inp: ClosedFormInput, channel: str) -> ClosedFormInput:
    """Apply the channel's coefficient substitutions to a grid point."""
    if channel == "ad":
        return ClosedFormInput(inp.theta, inp.phi, inp.w_over_T, inp.lam, 0.0, 1.0)
    if channel == "gad":
        return ClosedFormInput(inp.theta, inp.phi, inp.w_over_T, inp.lam, 0.0, inp.Q)
    return inp


def numeric_qfi(inp: ClosedFormInput, parameter: str, assignment: str = DEFAULT_ASSIGNMENT,
                h: float = DEFAULT_STEP, eps: float = DEFAULT_EPS) -> float:
    c = ChannelCoeffs(inp.lam, inp.mu, inp.Q, inp.Phi)
    fam = literal_family(parameter, inp.theta, inp.phi, inp.w_over_T, c, assignment)
    x = inp.theta if parameter == "theta" else inp.phi
    return qfi_sld(fam, x, h, eps, continuous=True).value


def relative_deviation(closed: float, numeric: float) -> float:
    return abs(closed - numeric) / max(1.0, abs(numeric))


def compare(expr: Expression, grid, section: str, assignment: str = DEFAULT_ASSIGNMENT,
            h: float = DEFAULT_STEP, eps: float = DEFAULT_EPS) -> CheckResult:
    worst, worst_at, failures = -1.0, None, 0
    for point in grid:
        inp = restrict(point, expr.channel)
        try:
            closed = expr(inp)
        except ParameterDomainError:
            failures += 1
            dev = math.inf
        else:
            dev = relative_deviation(closed, numeric_qfi(inp, expr.parameter, assignment, h, eps))
        if dev > worst:
            worst, worst_at = dev, inp
    note = f"{failures} points undefined" if failures else ""
    return CheckResult(section, expr.label, worst, TOLERANCE, worst_at, note)


def identity_grid() -> list[ClosedFormInput]:
    return [ClosedFormInput(float(t), 0.0, x, 0.0, 0.0, 1.0)
            for x in (0.5, 2.0, 8.0) for t in np.linspace(0.0, math.pi, 21)]


def phi_alias_check(grid) -> CheckResult:
    mismatched = sum(sf_phi_gad(restrict(p, "gad")) != sf_phi_sgad(restrict(p, "gad")) for p in grid)
    return CheckResult("alias", "sf_phi_gad == sf_phi_sgad (bitwise)", float(mismatched), 0.0,
                       note=f"{mismatched} of {len(grid)} differ")


def eigen_check(grid, assignment: str = DEFAULT_ASSIGNMENT) -> CheckResult:
    worst, worst_at = -1.0, None
    for inp in grid:
        state = DilatedState(*dilated_coefficients(inp.theta, inp.phi, inp.w_over_T, assignment))
        rho = paper_literal_sgad_rho(state, ChannelCoeffs(inp.lam, inp.mu, inp.Q))
        top = eig_hermitian(rho).eigenvalues[:3]
        ref = np.sort(eigenvalue_triple(inp, state.coeff_A, state.coeff_B, state.coeff_F))[::-1]
        dev = float(np.max(np.abs(top - ref)))
        if dev > worst:
            worst, worst_at = dev, inp
    return CheckResult("eigen", "eigenvalue_triple vs eig_hermitian", worst, EIGEN_TOLERANCE, worst_at)


@dataclass
class Report:
    results: list

    @property
    def failed(self) -> bool:
        return any(not r.passed for r in self.results if r.section != "info")

    def text(self) -> str:
        lines = ["closed-form verification (relative deviation |c - n| / max(1, |n|))"]
        current = None
        for r in self.results:
            if r.section != current:
                current = r.section
                lines.append("")
                lines.append(f"[{_TITLES[current]}]")
            tag = r.status if r.section != "info" else ("match" if r.passed else "differs")
            line = f"{tag:<8}{r.name:<42}max_dev={r.deviation:.3e}  tol={r.tolerance:.0e}"
            if r.note:
                line += f"  ({r.note})"
            lines.append(line)
            if r.worst is not None and not r.passed:
                lines.append(" " * 8 + "worst at " + describe(r.worst))
        return "\n".join(lines) + "\n"

    def csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(("section", "check", "status", "max_deviation", "tolerance",
                    "theta", "phi", "w_over_T", "lambda", "mu", "Q", "note"))
        for r in self.results:
            p = r.worst
            tup = ["", "", "", "", "", ""] if p is None else [
                fmt(v) for v in (p.theta, p.phi, p.w_over_T, p.lam, p.mu, p.Q)]
            w.writerow([r.section, r.name, r.status, fmt(r.deviation), fmt(r.tolerance), *tup, r.note])
        return buf.getvalue()


_TITLES = {
    "grid": "closed form vs numeric, random grid",
    "identity": "identity channel (lambda = mu = 0, Q = 1)",
    "alias": "phase expressions",
    "eigen": "spectrum of the channel output",
    "info": "other state assignment (informational, not counted)",
}


def describe(p: ClosedFormInput) -> str:
    return (f"theta={fmt(p.theta)} phi={fmt(p.phi)} w/T={fmt(p.w_over_T)} "
            f"lambda={fmt(p.lam)} mu={fmt(p.mu)} Q={fmt(p.Q)} Phi={fmt(p.Phi)}")


def run_verify(points: int = DEFAULT_POINTS, seed: int = DEFAULT_SEED,
               h: float = DEFAULT_STEP, eps: float = DEFAULT_EPS,
               assignment: str = DEFAULT_ASSIGNMENT, informational: bool = True) -> Report:
    grid = default_grid(points, seed)
    results = [compare(e, grid, "grid", assignment, h, eps) for e in EXPRESSIONS]
    ident = identity_grid()
    results += [compare(e, ident, "identity", assignment, h, eps) for e in EXPRESSIONS]
    results.append(phi_alias_check(grid))
    results.append(eigen_check(grid, assignment))
    if informational:
        other = [a for a in ASSIGNMENTS if a != assignment]
        for alt in other:
            results += [replace(compare(e, grid, "info", alt, h, eps), name=f"{e.label} @{alt}")
                        for e in EXPRESSIONS]
    return Report(results)

"""Resistance Laplacian energy and its bounds.

The energy is built from the eigenvalues of the resistance Laplacian,
re-centered at the mean transmission: with U_j = RTr(j) and
eta_i = gamma_i - mean(U), the eta sum to zero, their squares sum to 2F,
and LE_R = sum |eta_i|. E_R = sum |gamma_i| over the resistance matrix
spectrum; for transmission-regular graphs the two energies coincide.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, NegativeRadicand
from .graph import Graph
from .resistance import ResistanceBundle, resistance_bundle, resistance_matrix
from .spectral import Spectrum, eigenvalues_symmetric

#: Radicands above this (negative) floor are treated as rounding noise and
#: clamped to zero; anything lower raises NegativeRadicand. Equality cases
#: (K_2) sit exactly on the radicand boundary.
RADICAND_FLOOR = -1e-9

BOUND_NAMES = ("lower_2sqrtF", "upper_sqrt2nF", "upper_meanU", "upper_eta1")


@dataclass(frozen=True)
class BoundCheck:
    """One evaluated bound: its value, whether it holds, and the margin.

    slack is the signed margin (le_r - value for lower bounds, value - le_r
    for upper bounds); it is nonnegative, up to tolerance, when satisfied.
    """

    value: float
    satisfied: bool
    slack: float


@dataclass(frozen=True)
class EnergyReport:
    """Everything the energy pipeline produces for one connected graph."""

    n: int
    mean_transmission: float
    eta: np.ndarray
    f: float
    F: float
    le_r: float
    e_r: float
    bounds: dict[str, BoundCheck]


def centered_eigenvalues(rl_spectrum: Spectrum, transmissions: np.ndarray) -> np.ndarray:
    """eta_i: the resistance Laplacian eigenvalues minus mean transmission.

    Keeps the spectrum's descending order; the entries sum to zero.
    """
    rtr = np.asarray(transmissions, dtype=float)
    if len(rl_spectrum) != rtr.size:
        raise DimensionMismatch(
            f"spectrum has {len(rl_spectrum)} values but {rtr.size} transmissions"
        )
    return rl_spectrum.values - rtr.mean()


def energy_moments(r: np.ndarray, transmissions: np.ndarray) -> tuple[float, float]:
    """(f, F): squared resistances over unordered pairs, and the corrected
    second moment F = f + (1/2) sum (U_i - mean U)^2.

    f is summed over i < j so that trace((R^L)^2) = sum U_i^2 + 2f and
    sum eta_i^2 = 2F hold exactly.
    """
    r = np.asarray(r, dtype=float)
    rtr = np.asarray(transmissions, dtype=float)
    iu = np.triu_indices(r.shape[0], k=1)
    f = float((r[iu] ** 2).sum())
    big_f = f + 0.5 * float(((rtr - rtr.mean()) ** 2).sum())
    return f, big_f


def _safe_sqrt(radicand: float) -> float:
    if radicand < RADICAND_FLOOR:
        raise NegativeRadicand(f"radicand {radicand:.3e} below floor {RADICAND_FLOOR:g}")
    return math.sqrt(max(radicand, 0.0))


def _evaluate_bounds(
    n: int, mean_u: float, big_f: float, eta1: float, le_r: float, tol: float
) -> dict[str, BoundCheck]:
    lower = 2.0 * math.sqrt(max(big_f, 0.0))
    upper = math.sqrt(max(2.0 * n * big_f, 0.0))
    upper_mean = mean_u + _safe_sqrt((n - 1) * (2.0 * big_f - mean_u * mean_u))
    upper_eta1 = eta1 + _safe_sqrt((n - 1) * (2.0 * big_f - eta1 * eta1))
    out: dict[str, BoundCheck] = {}
    out["lower_2sqrtF"] = BoundCheck(lower, le_r >= lower - tol, le_r - lower)
    for name, value in (
        ("upper_sqrt2nF", upper),
        ("upper_meanU", upper_mean),
        ("upper_eta1", upper_eta1),
    ):
        out[name] = BoundCheck(value, le_r <= value + tol, value - le_r)
    return out


def check_bounds(report: EnergyReport, tol: float = 1e-9) -> dict[str, BoundCheck]:
    """Evaluate all four energy bounds for an existing report.

    lower_2sqrtF and upper_sqrt2nF bracket LE_R by 2*sqrt(F) and
    sqrt(2nF); upper_meanU and upper_eta1 are the mean-transmission and
    eta_1 refinements. Tiny negative radicands (rounding at equality
    cases) are clamped; genuinely negative ones raise NegativeRadicand.
    """
    eta1 = float(report.eta[0]) if len(report.eta) else 0.0
    return _evaluate_bounds(
        report.n, report.mean_transmission, report.F, eta1, report.le_r, tol
    )


def resistance_laplacian_energy(g: Graph, tol: float = 1e-9) -> EnergyReport:
    """Full energy report for a connected graph: eta, f, F, LE_R, E_R and
    all four bounds with satisfaction flags and signed slack."""
    bundle: ResistanceBundle = resistance_bundle(g)
    rl_spectrum = eigenvalues_symmetric(bundle.rl)
    eta = centered_eigenvalues(rl_spectrum, bundle.rtr)
    f, big_f = energy_moments(bundle.r, bundle.rtr)
    le_r = float(np.abs(eta).sum())
    e_r = float(np.abs(eigenvalues_symmetric(bundle.r).values).sum())
    mean_u = float(bundle.rtr.mean())
    eta1 = float(eta[0]) if eta.size else 0.0
    bounds = _evaluate_bounds(g.n, mean_u, big_f, eta1, le_r, tol)
    return EnergyReport(
        n=g.n,
        mean_transmission=mean_u,
        eta=eta,
        f=f,
        F=big_f,
        le_r=le_r,
        e_r=e_r,
        bounds=bounds,
    )


def resistance_energy(g: Graph) -> float:
    """E_R: sum of absolute eigenvalues of the resistance matrix."""
    values = eigenvalues_symmetric(resistance_matrix(g)).values
    return float(np.abs(values).sum())

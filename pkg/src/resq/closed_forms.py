"""Exact resistance Laplacian matrices and spectra for standard families.

Complete graphs, complete bipartite graphs, and cycles admit closed forms
for R^L and R^Q and for their spectra. These serve as independent oracles
against the numeric pipeline: the numbers here come from formula
evaluation, never from an eigensolver.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidFamilyParams
from .graph import FamilySpec
from .spectral import Spectrum, circulant_eigenvalues


@dataclass(frozen=True)
class ClosedForm:
    """Analytic matrices and spectra for one family instance."""

    family: FamilySpec
    rl_matrix: np.ndarray
    rq_matrix: np.ndarray
    rl_spectrum: Spectrum
    rq_spectrum: Spectrum


def _require_positive(**params: int) -> None:
    for name, value in params.items():
        if not isinstance(value, int) or value < 1:
            raise InvalidFamilyParams(f"{name} must be a positive integer, got {value!r}")


def complete_rl(n: int) -> np.ndarray:
    """R^L(K_n) = 2I - (2/n)J."""
    _require_positive(n=n)
    return 2.0 * np.eye(n) - (2.0 / n) * np.ones((n, n))


def complete_rq(n: int) -> np.ndarray:
    """R^Q(K_n) = (2/n)J + (2 - 4/n)I."""
    _require_positive(n=n)
    return (2.0 / n) * np.ones((n, n)) + (2.0 - 4.0 / n) * np.eye(n)


def complete_rl_spectrum(n: int) -> Spectrum:
    """Eigenvalues 2 with multiplicity n-1, and 0."""
    _require_positive(n=n)
    if n == 1:
        return Spectrum.from_values([0.0])
    return Spectrum.from_values([2.0] * (n - 1) + [0.0])


def complete_rq_spectrum(n: int) -> Spectrum:
    """Eigenvalues 4 - 4/n once and 2 - 4/n with multiplicity n-1."""
    _require_positive(n=n)
    if n == 1:
        return Spectrum.from_values([0.0])
    return Spectrum.from_values([4.0 - 4.0 / n] + [2.0 - 4.0 / n] * (n - 1))


def _bipartite_blocks(p: int, q: int, sign: float) -> np.ndarray:
    """Assemble Diag(RTr) + sign * R for K_{p,q} from its block structure.

    Within the size-p part the resistance is 2/q, within the size-q part
    2/p, and across parts (p+q-1)/(pq); transmissions follow by summation.
    """
    cross = (p + q - 1.0) / (p * q)
    rtr_p = 2.0 * (p - 1) / q + (p + q - 1.0) / p
    rtr_q = 2.0 * (q - 1) / p + (p + q - 1.0) / q
    top = (rtr_p - sign * 2.0 / q) * np.eye(p) + sign * (2.0 / q) * np.ones((p, p))
    bottom = (rtr_q - sign * 2.0 / p) * np.eye(q) + sign * (2.0 / p) * np.ones((q, q))
    off = sign * cross * np.ones((p, q))
    return np.block([[top, off], [off.T, bottom]])


def bipartite_rl(p: int, q: int) -> np.ndarray:
    """R^L(K_{p,q}) in block form: [2p/q + (p+q-1)/p]I - (2/q)J on the first
    part, the mirrored expression on the second, and -(p+q-1)/(pq) across."""
    _require_positive(p=p, q=q)
    return _bipartite_blocks(p, q, sign=-1.0)


def bipartite_rq(p: int, q: int) -> np.ndarray:
    """R^Q(K_{p,q}) in block form: [2(p-2)/q + (p+q-1)/p]I + (2/q)J on the
    first part, mirrored on the second, and +(p+q-1)/(pq) across."""
    _require_positive(p=p, q=q)
    return _bipartite_blocks(p, q, sign=1.0)


def bipartite_rl_spectrum(p: int, q: int) -> Spectrum:
    """Four-value spectrum of R^L(K_{p,q}):

    0 and ((p+q)^2 - p - q)/(pq) once each, 2p/q + (p+q-1)/p with
    multiplicity p-1, and 2q/p + (p+q-1)/q with multiplicity q-1.
    """
    _require_positive(p=p, q=q)
    s = p + q
    values = [0.0, (s * s - s) / (p * q)]
    values += [2.0 * p / q + (s - 1.0) / p] * (p - 1)
    values += [2.0 * q / p + (s - 1.0) / q] * (q - 1)
    return Spectrum.from_values(values)


def bipartite_rq_quotient(p: int, q: int) -> np.ndarray:
    """2x2 row-sum quotient of R^Q(K_{p,q}) under the two-part partition.

    Row sums of the diagonal blocks are 2(2p-2)/q + (p+q-1)/p and
    2(2q-2)/p + (p+q-1)/q; the off-diagonal row sums are (p+q-1)/p and
    (p+q-1)/q.
    """
    _require_positive(p=p, q=q)
    s = p + q - 1.0
    return np.array(
        [
            [2.0 * (2 * p - 2) / q + s / p, s / p],
            [s / q, 2.0 * (2 * q - 2) / p + s / q],
        ]
    )


def _eig_2x2(m: np.ndarray) -> tuple[float, float]:
    """Eigenvalues of a real 2x2 matrix with nonnegative off-diagonal
    product, descending. The discriminant is then nonnegative."""
    a, b = m[0]
    c, d = m[1]
    half_trace = (a + d) / 2.0
    disc = math.sqrt(max((a - d) ** 2 + 4.0 * b * c, 0.0)) / 2.0
    return half_trace + disc, half_trace - disc


def bipartite_rq_quotient_eigenvalues(p: int, q: int) -> tuple[float, float]:
    """The two eigenvalues of the R^Q(K_{p,q}) row-sum quotient, descending."""
    return _eig_2x2(bipartite_rq_quotient(p, q))


def bipartite_rq_spectrum(p: int, q: int) -> Spectrum:
    """Spectrum of R^Q(K_{p,q}).

    2(p-2)/q + (p+q-1)/p with multiplicity p-1, 2(q-2)/p + (p+q-1)/q with
    multiplicity q-1, and the two eigenvalues of the row-sum quotient of
    the block matrix.
    """
    _require_positive(p=p, q=q)
    s = p + q - 1.0
    hi, lo = bipartite_rq_quotient_eigenvalues(p, q)
    values = [hi, lo]
    values += [2.0 * (p - 2) / q + s / p] * (p - 1)
    values += [2.0 * (q - 2) / p + s / q] * (q - 1)
    return Spectrum.from_values(values)


def bipartite_rq_pm_formula(p: int, q: int) -> tuple[float, float]:
    """Legacy +/- radical expression for the two quotient eigenvalues of
    R^Q(K_{p,q}):

        (5p^2 + (2p-5)q + 5q^2 - 5p +/- sqrt(9p^2 - 14pq + 9q^2(p+q-1)))
        / (2pq)

    It disagrees with the verified block quotient already at p = q = 2 and
    is kept only so reports can show the discrepancy. Returns NaNs when
    the radicand is negative.
    """
    _require_positive(p=p, q=q)
    radicand = 9.0 * p * p - 14.0 * p * q + 9.0 * q * q * (p + q - 1)
    if radicand < 0.0:
        return (math.nan, math.nan)
    root = math.sqrt(radicand)
    base = 5.0 * p * p + (2.0 * p - 5.0) * q + 5.0 * q * q - 5.0 * p
    return ((base + root) / (2.0 * p * q), (base - root) / (2.0 * p * q))


def cycle_resistance_row(n: int) -> np.ndarray:
    """First row of R(C_n): entry k is k(n-k)/n (two parallel arc paths)."""
    _require_positive(n=n)
    if n < 3:
        raise InvalidFamilyParams(f"cycle needs n >= 3, got {n}")
    k = np.arange(n, dtype=float)
    return k * (n - k) / n


def _circulant(row: np.ndarray) -> np.ndarray:
    n = row.size
    idx = (np.arange(n)[None, :] - np.arange(n)[:, None]) % n
    return row[idx]


def cycle_rl(n: int) -> np.ndarray:
    """R^L(C_n): circulant with diagonal (n^2-1)/6 and entries -k(n-k)/n."""
    row = -cycle_resistance_row(n)
    row[0] = (n * n - 1.0) / 6.0
    return _circulant(row)


def cycle_rq(n: int) -> np.ndarray:
    """R^Q(C_n): circulant with diagonal (n^2-1)/6 and entries +k(n-k)/n."""
    row = cycle_resistance_row(n)
    row[0] = (n * n - 1.0) / 6.0
    return _circulant(row)


def cycle_spectra(n: int) -> tuple[Spectrum, Spectrum]:
    """(R^L, R^Q) spectra of C_n via roots of unity.

    With g the first-row polynomial of R(C_n) and h = (n^2-1)/6 the common
    transmission, the eigenvalues are h - g(w^k) and h + g(w^k). Since
    g(1) = h, the R^L spectrum contains 0 exactly once.
    """
    g = circulant_eigenvalues(cycle_resistance_row(n)).values
    h = (n * n - 1.0) / 6.0
    return Spectrum.from_values(h - g), Spectrum.from_values(h + g)


def closed_form(family: FamilySpec) -> ClosedForm:
    """Analytic R^L/R^Q matrices and spectra for one family instance.

    Paths have no closed form here and are rejected.
    """
    family.validate()
    if family.kind == "complete":
        (n,) = family.params
        return ClosedForm(
            family, complete_rl(n), complete_rq(n),
            complete_rl_spectrum(n), complete_rq_spectrum(n),
        )
    if family.kind == "bipartite":
        p, q = family.params
        return ClosedForm(
            family, bipartite_rl(p, q), bipartite_rq(p, q),
            bipartite_rl_spectrum(p, q), bipartite_rq_spectrum(p, q),
        )
    if family.kind == "cycle":
        (n,) = family.params
        rl_spec, rq_spec = cycle_spectra(n)
        return ClosedForm(family, cycle_rl(n), cycle_rq(n), rl_spec, rq_spec)
    raise InvalidFamilyParams(f"no closed form for family {family.kind!r}")

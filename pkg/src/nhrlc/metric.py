"""Metric operators, the similar Hamiltonian h, and intertwining algebra.

H and H^dag are never intertwined by an invertible operator (they are not
isospectral), but each phase admits a pair of mutually inverse operators
mapping one eigenfamily onto the other:

* broken phase: the positive sums S_phi f = sum <phi_a, f> phi_a and
  S_psi f = sum <psi_a, f> psi_a, which satisfy S_phi psi_pm = phi_pm;
* unbroken phase: the crossed sums T_phi f = <phi+, f> phi- + <phi-, f> phi+
  (and the psi analogue), which satisfy T_phi psi_pm = phi_pm there.

Conjugating H with the pair produces h = S_psi H S_phi (resp. T_psi H T_phi),
isospectral to H with h psi_a = lambda_a psi_a, and the intertwining
relations H S_phi = S_phi h etc. hold. The same h arises from the antilinear
map U f = sum <f, phi_a> psi_a as h = U H^dag U.

Antilinear maps are kept as procedures on vectors; representing them as
matrices would silently linearize them.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .circuit import Phase
from .cxmat import as_cmat, as_cvec2, operator_norm, outer
from .errors import ExceptionalPointError
from .spectral import BiorthogonalSystem, pairing

# Singular values below this fraction of the largest count as zero when
# extracting intertwiner nullspaces.
NULLSPACE_RTOL = 1e-10


@dataclass(frozen=True)
class MetricPair:
    """Mutually inverse mapping pair; kind "S" is Hermitian positive."""

    s_phi: np.ndarray
    s_psi: np.ndarray
    kind: str  # "S" (positive sums) or "T" (crossed sums)


@dataclass(frozen=True)
class IntertwinerReport:
    """Operator-norm residuals of the three intertwining relations."""

    residual_h_sphi: float  # H S_phi - S_phi h
    residual_spsi_h: float  # S_psi H - h S_psi
    residual_adjoint: float  # H^dag S_psi - S_psi h^dag


def metric_pair(system: BiorthogonalSystem) -> MetricPair:
    """Phase-adapted mapping pair: S-kind in the broken phase, T-kind in the unbroken."""
    if system.phase is Phase.EXCEPTIONAL:
        raise ExceptionalPointError("no mapping pair exists at the exceptional point")
    if system.phase is Phase.BROKEN:
        return positive_pair(system)
    t_phi = outer(system.phi_minus, system.phi_plus) + outer(system.phi_plus, system.phi_minus)
    t_psi = outer(system.psi_minus, system.psi_plus) + outer(system.psi_plus, system.psi_minus)
    return MetricPair(s_phi=t_phi, s_psi=t_psi, kind="T")


def positive_pair(system: BiorthogonalSystem) -> MetricPair:
    """Hermitian positive sums over each eigenfamily, mutually inverse in both phases.

    In the broken phase these map psi_pm -> phi_pm; in the unbroken phase
    they map with a label swap, psi_pm -> phi_mp, which is what the
    fermionization square roots need.
    """
    if system.phase is Phase.EXCEPTIONAL:
        raise ExceptionalPointError("no mapping pair exists at the exceptional point")
    s_phi = outer(system.phi_plus, system.phi_plus) + outer(system.phi_minus, system.phi_minus)
    s_psi = outer(system.psi_plus, system.psi_plus) + outer(system.psi_minus, system.psi_minus)
    return MetricPair(s_phi=s_phi, s_psi=s_psi, kind="S")


def similar_hamiltonian(system: BiorthogonalSystem, pair: MetricPair, h) -> np.ndarray:
    """h = S_psi H S_phi (T_psi H T_phi in the unbroken phase).

    The result is isospectral to H with the psi vectors as eigenvectors,
    h psi_a = lambda_a psi_a; its adjoint has the phi vectors as
    eigenvectors with the mu eigenvalues.
    """
    if system.phase is Phase.EXCEPTIONAL:
        raise ExceptionalPointError("no similarity transform exists at the exceptional point")
    return pair.s_psi @ as_cmat(h, 2) @ pair.s_phi


def antilinear_u(system: BiorthogonalSystem, f) -> np.ndarray:
    """Antilinear map U f = sum_a <f, phi_a> psi_a (conjugate-linear in f).

    In the broken phase U fixes psi_pm; in the unbroken phase it swaps them,
    U psi_pm = psi_mp, which is exactly what makes U H^dag U isospectral to
    H there.
    """
    vec = as_cvec2(f)
    return (
        pairing(vec, system.phi_plus) * system.psi_plus
        + pairing(vec, system.phi_minus) * system.psi_minus
    )


def similar_hamiltonian_via_u(system: BiorthogonalSystem, h_dagger) -> np.ndarray:
    """Evaluate the linear operator U H^dag U columnwise on the standard basis.

    Agrees with :func:`similar_hamiltonian` on the pair from
    :func:`metric_pair`; the antilinear U is only ever applied, never stored
    as a matrix.
    """
    hd = as_cmat(h_dagger, 2)
    cols = []
    for basis_vec in (np.array([1.0, 0.0]), np.array([0.0, 1.0])):
        cols.append(antilinear_u(system, hd @ antilinear_u(system, basis_vec)))
    return np.column_stack(cols)


def verify_intertwining(h, h_similar, pair: MetricPair) -> IntertwinerReport:
    """Operator-norm residuals of H S_phi = S_phi h and its companions."""
    a = as_cmat(h, 2)
    b = as_cmat(h_similar, 2)
    return IntertwinerReport(
        residual_h_sphi=operator_norm(a @ pair.s_phi - pair.s_phi @ b),
        residual_spsi_h=operator_norm(pair.s_psi @ a - b @ pair.s_psi),
        residual_adjoint=operator_norm(
            a.conj().T @ pair.s_psi - pair.s_psi @ b.conj().T
        ),
    )


def solve_intertwiners(a, b) -> list[np.ndarray]:
    """Basis of {X : A X = X B}, via the flattened 4x4 homogeneous system.

    The map X -> A X - X B is vectorized row-major as
    kron(A, I) - kron(I, B^T); its nullspace is read off an SVD, counting
    singular values below ``NULLSPACE_RTOL`` times the largest as zero. The
    reversed relation X A = B X is the same problem with swapped arguments:
    ``solve_intertwiners(B, A)``.
    """
    amat = as_cmat(a, 2)
    bmat = as_cmat(b, 2)
    eye = np.eye(2, dtype=complex)
    sylvester = np.kron(amat, eye) - np.kron(eye, bmat.T)
    _, svals, vh = np.linalg.svd(sylvester)
    tol = NULLSPACE_RTOL * (svals[0] if svals.size else 0.0)
    return [np.conj(vh[i]).reshape(2, 2) for i in range(4) if svals[i] <= tol]

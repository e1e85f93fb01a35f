"""Series RLC circuit as a non-Hermitian two-level generator.

The current of a source-free series RLC circuit obeys

    I'' + 2*alpha*I' + omega0^2 * I = 0,   alpha = R/(2L),  omega0 = 1/sqrt(LC),

which in first-order form i*Phi' = H*Phi (with x2 = x1' and x1 = I) is
generated by the manifestly non-Hermitian

    H = i * [[0, 1], [-omega0^2, -2*alpha]].

The adjoint H^dagger generates the same equation with alpha -> -alpha, i.e.
the gain circuit obtained by flipping the sign of the resistor. Depending on
alpha vs omega0 the spectrum of H is purely imaginary (unbroken phase,
overdamped), genuinely complex (broken phase, underdamped), or coalescent
(exceptional point, critically damped).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .cxmat import as_cmat

# Exceptional-point detection band, relative to omega0. Exact equality of
# two derived floats is measure zero; everything inside the band is treated
# as critically damped.
EP_BAND_RTOL = 1e-12


class Phase(enum.Enum):
    """Dynamical phase of the circuit generator."""

    UNBROKEN = "UP"
    BROKEN = "BP"
    EXCEPTIONAL = "EP"


@dataclass(frozen=True)
class CircuitParams:
    """Physical circuit parameters reduced to the damping/frequency pair.

    ``alpha`` is the damping rate R/(2L) (may be negative for a gain
    element) and ``omega0`` the natural frequency 1/sqrt(LC) (> 0). The raw
    component values are retained when the instance is built via
    :meth:`from_rlc`.
    """

    alpha: float
    omega0: float
    resistance: float | None = None
    inductance: float | None = None
    capacitance: float | None = None

    def __post_init__(self):
        if not np.isfinite(self.alpha) or not np.isfinite(self.omega0):
            raise ValueError("alpha and omega0 must be finite")
        if self.omega0 <= 0:
            raise ValueError("omega0 must be positive")

    @classmethod
    def from_rlc(cls, resistance: float, inductance: float, capacitance: float) -> "CircuitParams":
        if inductance <= 0:
            raise ValueError("inductance must be positive")
        if capacitance <= 0:
            raise ValueError("capacitance must be positive")
        alpha = resistance / (2.0 * inductance)
        omega0 = 1.0 / np.sqrt(inductance * capacitance)
        return cls(
            alpha=float(alpha),
            omega0=float(omega0),
            resistance=float(resistance),
            inductance=float(inductance),
            capacitance=float(capacitance),
        )

    @classmethod
    def from_rates(cls, alpha: float, omega0: float) -> "CircuitParams":
        return cls(alpha=float(alpha), omega0=float(omega0))


def hamiltonian(params: CircuitParams) -> np.ndarray:
    """Generator H = i*[[0, 1], [-omega0^2, -2*alpha]] of i*Phi' = H*Phi."""
    return 1j * np.array(
        [[0.0, 1.0], [-params.omega0 ** 2, -2.0 * params.alpha]], dtype=complex
    )


def gain_hamiltonian(params: CircuitParams) -> np.ndarray:
    """Adjoint generator; its first component obeys y'' - 2*alpha*y' + omega0^2*y = 0."""
    return hamiltonian(params).conj().T


def hermitian_split(h) -> tuple[np.ndarray, np.ndarray]:
    """Split H into (H + H^dag)/2 and (H - H^dag)/2.

    The first part is Hermitian (a lossless LC generator), the second
    anti-Hermitian and carries all of the resistive loss/gain. Computed from
    the defining combinations, so the symmetry properties hold to rounding.
    """
    a = as_cmat(h, 2)
    herm = (a + a.conj().T) / 2.0
    # equal to (a - a^dag)/2, but written so herm + anti == a exactly
    anti = a - herm
    return herm, anti


def classify(params: CircuitParams) -> Phase:
    """Phase of the circuit: UP (alpha > omega0), BP (alpha < omega0), EP band."""
    if abs(params.alpha - params.omega0) <= EP_BAND_RTOL * params.omega0:
        return Phase.EXCEPTIONAL
    if params.alpha > params.omega0:
        return Phase.UNBROKEN
    return Phase.BROKEN

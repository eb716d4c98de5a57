"""Atomic Bloch vector, reduced density matrix and entanglement measures."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dynamics import AmplitudeTable
from .model import ModelParams



@dataclass(frozen=True)
class BlochVector:
    """(rho_x, rho_y, rho_z) = 2 (<S_x>, <S_y>, <S_z>)."""

    rho_x: float
    rho_y: float
    rho_z: float

    @property
    def length(self) -> float:
        return float(np.sqrt(self.rho_x**2 + self.rho_y**2 + self.rho_z**2))

    @property
    def inversion(self) -> float:
        """<S_z> in [-1/2, 1/2]."""
        return 0.5 * self.rho_z

    def as_array(self) -> np.ndarray:
        return np.array([self.rho_x, self.rho_y, self.rho_z])


@dataclass(frozen=True)
class AtomDensityMatrix:
    """2x2 reduced atomic state in the (|up>, |down>) basis."""

    matrix: np.ndarray

    @property
    def trace(self) -> complex:
        return complex(np.trace(self.matrix))

    def eigenvalues(self) -> np.ndarray:
        return np.linalg.eigvalsh(self.matrix)

    def purity(self) -> float:
        return float(np.real(np.trace(self.matrix @ self.matrix)))

    def bloch_vector(self) -> BlochVector:
        m = self.matrix
        coh = 2.0 * m[1, 0]
        return BlochVector(float(coh.real), float(coh.imag), float(np.real(m[0, 0] - m[1, 1])))


def bloch_vector(table: AmplitudeTable, eta: float) -> BlochVector:
    """Bloch vector of the reduced atomic state.

    ``table`` must hold amplitudes with the Kerr phase factored out (as from
    :func:`bimodal_jc.dynamics.evolve`); the coherence sum re-applies the
    residual phase exp(2i eta T (2n+1)). Pass ``eta=0`` for tables that
    already carry the phase.
    """
    f1, f2 = table.f1, table.f2
    n = np.arange(len(f1))
    rho_z = np.sum(np.abs(f1) ** 2 - np.abs(f2) ** 2)
    # F1(N+1) lies beyond the truncation and is taken as 0
    f1_next = np.zeros_like(f1)
    f1_next[:-1] = f1[1:]
    phase = np.exp(2j * eta * table.t_scaled * (2 * n + 1))
    coh = 2.0 * np.sum(phase * np.conj(f1_next) * f2)
    return BlochVector(float(coh.real), float(coh.imag), float(rho_z))


def inversion_closed_form(params: ModelParams, t_scaled):
    """Closed-form <S_z(T)> for eta = 0, as printed for this model.

    Matches the amplitude series when sin(theta) sin(phi) = 0. Otherwise the
    coherence term carries a factor z that the series does not produce.
    """
    if params.eta != 0:
        raise ValueError("closed-form inversion requires eta = 0")
    t = np.asarray(t_scaled, dtype=float)
    z = params.z
    c2 = np.cos(2 * t)
    s2 = np.sin(2 * t)
    num = (c2 - z**2) * np.cos(params.theta) + z * np.sin(params.theta) * np.sin(params.phi) * s2
    den = 2.0 * ((1 - z**2 * c2) ** 2 + z**4 * s2**2) * np.cosh(params.r) ** 2
    out = num / den
    return float(out) if out.ndim == 0 else out


def reduced_density(table: AmplitudeTable, eta: float) -> AtomDensityMatrix:
    b = bloch_vector(table, eta)
    return density_from_bloch(b)


def density_from_bloch(b: BlochVector) -> AtomDensityMatrix:
    m = 0.5 * np.array(
        [
            [1.0 + b.rho_z, b.rho_x - 1j * b.rho_y],
            [b.rho_x + 1j * b.rho_y, 1.0 - b.rho_z],
        ]
    )
    return AtomDensityMatrix(m)


def linear_entropy(b: BlochVector) -> float:
    """1 - Tr rho_a^2 = (1 - |rho|^2) / 2."""
    return 0.5 * (1.0 - (b.rho_x**2 + b.rho_y**2 + b.rho_z**2))


def von_neumann_entropy(b: BlochVector) -> float:
    """Entropy in nats, with 0 ln 0 = 0."""
    length = min(b.length, 1.0)
    s = 0.0
    for lam in (0.5 * (1 + length), 0.5 * (1 - length)):
        if lam > 0:
            s -= lam * np.log(lam)
    return float(s)

"""Brute-force cross-check: truncated interaction Hamiltonian, exact exponentiation, partial trace.

Only the analytic-free ingredients are used here: matrix elements of the
Kerr and exchange terms in the coupled basis, and linear algebra. At
resonance the free Hamiltonian is constant inside each coupled pair, so it is
dropped (interaction picture).

Basis order: |down,0,0>, then (|up,n,n>, |down,n+1,n+1>) for n = 0..N.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .dynamics import AmplitudeTable
from .model import ModelParams, tms_coefficients
from .observables import AtomDensityMatrix


@dataclass(frozen=True)
class CoupledBasis:
    n_trunc: int

    @property
    def labels(self) -> list[tuple[str, int]]:
        """(atomic level, k) with k the photon number in each mode, |k,k>."""
        out = [("down", 0)]
        for n in range(self.n_trunc + 1):
            out += [("up", n), ("down", n + 1)]
        return out

    @property
    def dim(self) -> int:
        return 2 * self.n_trunc + 3


def kerr_energy(k: int, eta: float) -> float:
    # <k,k| a1^+2 a1^2 + a2^+2 a2^2 |k,k> / lambda
    return 2.0 * eta * k * (k - 1)


def block_hamiltonian(n: int, eta: float) -> np.ndarray:
    """H_n / lambda on (|up,n,n>, |down,n+1,n+1>)."""
    coupling = float(n + 1)  # <n+1,n+1| a1^+ a2^+ |n,n>
    return np.array(
        [
            [kerr_energy(n, eta), coupling],
            [coupling, kerr_energy(n + 1, eta)],
        ]
    )


def full_hamiltonian(n_trunc: int, eta: float) -> np.ndarray:
    basis = CoupledBasis(n_trunc)
    h = np.zeros((basis.dim, basis.dim))
    h[0, 0] = kerr_energy(0, eta)
    for n in range(n_trunc + 1):
        i = 1 + 2 * n
        h[i : i + 2, i : i + 2] = block_hamiltonian(n, eta)
    mask = np.zeros_like(h, dtype=bool)
    mask[0, 0] = True
    for n in range(n_trunc + 1):
        i = 1 + 2 * n
        mask[i : i + 2, i : i + 2] = True
    assert not np.any(h[~mask]), "coupling outside the declared blocks"
    return h


def block_propagator(h: np.ndarray, t_scaled: float) -> np.ndarray:
    """exp(-i T h) for a real symmetric 2x2 h via its Pauli decomposition."""
    mean = 0.5 * (h[0, 0] + h[1, 1])
    hz = 0.5 * (h[0, 0] - h[1, 1])
    hx = h[0, 1]
    w = np.hypot(hx, hz)
    if w == 0:
        return np.exp(-1j * mean * t_scaled) * np.eye(2)
    unit = np.array([[hz, hx], [hx, -hz]]) / w
    return np.exp(-1j * mean * t_scaled) * (
        np.cos(w * t_scaled) * np.eye(2) - 1j * np.sin(w * t_scaled) * unit
    )


def initial_state(params: ModelParams) -> np.ndarray:
    """Initial vector in the coupled basis.

    The lower atomic level of pair n is loaded with C_n, matching the
    amplitude convention of the analytic solution; |down,0,0> stays empty.
    """
    c = tms_coefficients(params).c
    psi = np.zeros(CoupledBasis(params.n_trunc).dim, dtype=complex)
    psi[1::2] = c * np.cos(params.theta / 2)
    psi[2::2] = c * np.exp(1j * params.phi) * np.sin(params.theta / 2)
    return psi


def evolve_state(params: ModelParams, t_scaled: float, dense: bool = False) -> np.ndarray:
    psi0 = initial_state(params)
    if dense:
        h = full_hamiltonian(params.n_trunc, params.eta)
        evals, evecs = scipy.linalg.eigh(h)
        return evecs @ (np.exp(-1j * evals * t_scaled) * (evecs.conj().T @ psi0))
    psi = np.empty_like(psi0)
    psi[0] = np.exp(-1j * kerr_energy(0, params.eta) * t_scaled) * psi0[0]
    for n in range(params.n_trunc + 1):
        i = 1 + 2 * n
        u = block_propagator(block_hamiltonian(n, params.eta), t_scaled)
        psi[i : i + 2] = u @ psi0[i : i + 2]
    return psi


def brute_force_evolve(params: ModelParams, t_scaled: float, dense: bool = False) -> AmplitudeTable:
    """Amplitudes of the evolved state, Kerr phase included.

    Compare against ``evolve(...).with_phase(kerr_phase(...))``.
    """
    psi = evolve_state(params, t_scaled, dense=dense)
    return AmplitudeTable(float(t_scaled), psi[1::2].copy(), psi[2::2].copy())


def partial_trace_field(psi: np.ndarray, n_trunc: int) -> np.ndarray:
    """Reduced atomic matrix of a coupled-basis vector, traced over |k,k>."""
    # amplitude grid: rows (up, down), columns k = 0..N+1
    grid = np.zeros((2, n_trunc + 2), dtype=complex)
    for idx, (level, k) in enumerate(CoupledBasis(n_trunc).labels):
        grid[0 if level == "up" else 1, k] = psi[idx]
    return grid @ grid.conj().T


def brute_force_reduced_density(params: ModelParams, t_scaled: float, dense: bool = False) -> AtomDensityMatrix:
    psi = evolve_state(params, t_scaled, dense=dense)
    return AtomDensityMatrix(partial_trace_field(psi, params.n_trunc))


def block_gaps(n_trunc: int, eta: float) -> np.ndarray:
    """Eigenvalue splitting of each 2x2 block, computed numerically."""
    gaps = np.empty(n_trunc + 1)
    for n in range(n_trunc + 1):
        ev = np.linalg.eigvalsh(block_hamiltonian(n, eta))
        gaps[n] = ev[1] - ev[0]
    return gaps

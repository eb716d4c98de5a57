"""Atomic Husimi Q-function on the Bloch sphere and the atomic Wehrl entropy."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .observables import BlochVector

MIN_THETA_NODES = 8
MIN_PHI_NODES = 8
LN_4PI = float(np.log(4 * np.pi))
# |rho| -> 1 limit of the Wehrl entropy: 1/2 + ln(2 pi)
PURE_STATE_WEHRL = 0.5 + float(np.log(2 * np.pi))


@dataclass(frozen=True)
class SphereGrid:
    """Product rule: Gauss-Legendre in cos(Theta) times trapezoid in Phi.

    Weights already include the sin(Theta) dTheta dPhi surface element and sum to 4 pi.
    """

    theta: np.ndarray = field(repr=False)
    phi: np.ndarray = field(repr=False)
    weights: np.ndarray = field(repr=False)
    n_theta: int = 0
    n_phi: int = 0

    @classmethod
    def build(cls, n_theta: int = 128, n_phi: int = 256) -> "SphereGrid":
        if n_theta < MIN_THETA_NODES or n_phi < MIN_PHI_NODES:
            raise ValueError(
                f"sphere grid {n_theta}x{n_phi} below minimum {MIN_THETA_NODES}x{MIN_PHI_NODES}"
            )
        u, wu = np.polynomial.legendre.leggauss(n_theta)
        phi = 2 * np.pi * np.arange(n_phi) / n_phi
        wphi = np.full(n_phi, 2 * np.pi / n_phi)
        th_grid, phi_grid = np.meshgrid(np.arccos(u), phi, indexing="ij")
        weights = np.outer(wu, wphi)
        for a in (th_grid, phi_grid, weights):
            a.setflags(write=False)
        return cls(th_grid, phi_grid, weights, n_theta, n_phi)

    def integrate(self, values: np.ndarray) -> float:
        return float(np.sum(self.weights * values))

    def refined(self) -> "SphereGrid":
        return SphereGrid.build(2 * self.n_theta, 2 * self.n_phi)


_DEFAULT_GRID: SphereGrid | None = None


def default_grid() -> SphereGrid:
    global _DEFAULT_GRID
    if _DEFAULT_GRID is None:
        _DEFAULT_GRID = SphereGrid.build()
    return _DEFAULT_GRID


def atomic_q(b: BlochVector, theta_c, phi_c):
    """Q_a(Theta, Phi) = (1 + rho . n(Theta, Phi)) / (4 pi); broadcasts over angles."""
    theta_c = np.asarray(theta_c, dtype=float)
    phi_c = np.asarray(phi_c, dtype=float)
    q = (
        1.0
        + b.rho_z * np.cos(theta_c)
        + (b.rho_x * np.cos(phi_c) + b.rho_y * np.sin(phi_c)) * np.sin(theta_c)
    ) / (4 * np.pi)
    return float(q) if q.ndim == 0 else q


def q_function_field(b: BlochVector, grid: SphereGrid | None = None) -> np.ndarray:
    grid = grid or default_grid()
    return atomic_q(b, grid.theta, grid.phi)


def wehrl_density(q: np.ndarray) -> np.ndarray:
    """Pointwise -Q ln Q with the x ln x -> 0 limit at Q = 0."""
    q = np.asarray(q, dtype=float)
    out = np.zeros_like(q)
    pos = q > 0
    out[pos] = -q[pos] * np.log(q[pos])
    return out


def wehrl_entropy(b: BlochVector, grid: SphereGrid | None = None) -> float:
    grid = grid or default_grid()
    return grid.integrate(wehrl_density(q_function_field(b, grid)))


def wehrl_closed_form_revival(rho_z0: float) -> float:
    """Exact Wehrl entropy of Q = (1 + rho_z0 cos Theta) / (4 pi).

    Defined for |rho_z0| < 1; returns ln(4 pi) at rho_z0 = 0.
    """
    rho = float(rho_z0)
    if abs(rho) >= 1:
        raise ValueError(f"closed form is singular for |rho_z0| >= 1 (limit {PURE_STATE_WEHRL})")
    if rho == 0:
        return LN_4PI
    return (
        0.5
        + LN_4PI
        - (1 + rho**2) / (2 * rho) * np.arctanh(rho)
        - 0.5 * np.log1p(-(rho**2))
    )

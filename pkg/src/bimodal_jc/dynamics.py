"""Closed-form time evolution of the dressed amplitudes.

The state at scaled time T = lambda t is

    sum_n exp(-2i eta T n^2) [F1(n,T) |up,n,n> + F2(n,T) |down,n+1,n+1>]

and an :class:`AmplitudeTable` stores F1 and F2 *without* the Kerr phase
exp(-2i eta T n^2); use :func:`kerr_phase` to restore it.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .model import ModelParams, TmsCoefficients, rabi_frequency


@dataclass(frozen=True)
class AmplitudeTable:
    t_scaled: float
    f1: np.ndarray = field(repr=False)
    f2: np.ndarray = field(repr=False)

    @property
    def norm(self) -> float:
        return float(np.sum(np.abs(self.f1) ** 2 + np.abs(self.f2) ** 2))

    def with_phase(self, phase: np.ndarray) -> "AmplitudeTable":
        return AmplitudeTable(self.t_scaled, self.f1 * phase, self.f2 * phase)


def kerr_phase(n_trunc: int, eta: float, t_scaled: float) -> np.ndarray:
    n = np.arange(n_trunc + 1)
    return np.exp(-2j * eta * t_scaled * n**2)


def _initial(params: ModelParams, coeffs: TmsCoefficients):
    c = coeffs.c
    up = c * np.cos(params.theta / 2)
    down = c * np.exp(1j * params.phi) * np.sin(params.theta / 2)
    return up, down


def evolve(params: ModelParams, coeffs: TmsCoefficients, t_scaled: float) -> AmplitudeTable:
    if not np.isfinite(t_scaled):
        raise ValueError(f"t_scaled must be finite, got {t_scaled}")
    n = np.arange(len(coeffs.c))
    omega = rabi_frequency(n, params.eta)
    cos_t = np.cos(t_scaled * omega)
    sin_t = np.sin(t_scaled * omega)
    up, down = _initial(params, coeffs)
    kerr = 2.0 * params.eta * n
    f1 = up * cos_t + 1j * (kerr * up - (n + 1) * down) * sin_t / omega
    f2 = down * cos_t - 1j * (kerr * down + (n + 1) * up) * sin_t / omega
    return AmplitudeTable(float(t_scaled), f1, f2)


def evolve_grid(params: ModelParams, coeffs: TmsCoefficients, t_values) -> list[AmplitudeTable]:
    return [evolve(params, coeffs, t) for t in np.asarray(t_values, dtype=float)]


def special_state_t_mpi(params: ModelParams, coeffs: TmsCoefficients, m: int) -> AmplitudeTable:
    """State at T = m*pi for eta = 0, built from its product form.

    Field component |k,k> picks up exp(i m (k+1) pi) and the lower atomic
    level an extra exp(-i m pi). F2(n) sits on |n+1,n+1>, hence k = n+1 there.
    """
    if params.eta != 0:
        raise ValueError("the T = m*pi product state requires eta = 0")
    n = np.arange(len(coeffs.c))
    f1 = coeffs.c * np.exp(1j * m * (n + 1) * np.pi) * np.cos(params.theta / 2)
    f2 = (
        coeffs.c
        * np.exp(1j * m * (n + 2) * np.pi)
        * np.sin(params.theta / 2)
        * np.exp(1j * (params.phi - m * np.pi))
    )
    return AmplitudeTable(float(m * np.pi), f1, f2)


def is_trapping(params: ModelParams, atol: float = 1e-14) -> bool:
    return (
        abs(params.theta - np.pi / 2) <= atol
        and abs(params.phi) <= atol
        and params.eta == 0
    )


def trapped_state(params: ModelParams, coeffs: TmsCoefficients, t_scaled: float) -> AmplitudeTable:
    """Amplitudes for (theta, phi, eta) = (pi/2, 0, 0): F1 = F2 = C_n exp(-i(n+1)T)/sqrt(2)."""
    if not is_trapping(params):
        raise ValueError("trapped_state needs (theta, phi, eta) = (pi/2, 0, 0)")
    n = np.arange(len(coeffs.c))
    amp = coeffs.c * np.exp(-1j * (n + 1) * t_scaled) / np.sqrt(2.0)
    return AmplitudeTable(float(t_scaled), amp, amp.copy())

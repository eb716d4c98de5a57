"""Physical parameters, two-mode squeezed vacuum coefficients and Rabi frequencies."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

DEFAULT_TAIL_TOL = 1e-12
MAX_TRUNCATION = 10_000


class CapacityError(RuntimeError):
    """Raised when the Fock truncation needed for a tolerance exceeds the hard cap."""


def log_tanh(r: float) -> float:
    """ln(tanh r), accurate where tanh(r) rounds to 1."""
    if r < 1:
        return float(np.log(np.tanh(r)))
    e = np.exp(-2.0 * r)
    return float(np.log1p(-e) - np.log1p(e))


def choose_truncation(r: float, tail_tol: float = DEFAULT_TAIL_TOL, cap: int = MAX_TRUNCATION) -> int:
    """Smallest N such that the discarded squeezed-vacuum mass z**(2(N+1)) is below ``tail_tol``."""
    if r < 0:
        raise ValueError(f"squeeze parameter must be >= 0, got {r}")
    if not 0 < tail_tol < 1:
        raise ValueError(f"tail_tol must lie in (0, 1), got {tail_tol}")
    if r == 0:
        return 1
    log_z2 = 2.0 * log_tanh(r)
    ratio = np.log(tail_tol) / log_z2 if log_z2 < 0 else np.inf
    if ratio > cap + 1:
        raise CapacityError(f"r={r} needs N > cap {cap} for tail_tol={tail_tol}")
    n = max(1, int(np.ceil(ratio)) - 1)
    # ceil can land one short when the ratio is an exact integer
    while (n + 1) * log_z2 >= np.log(tail_tol):
        n += 1
    if n > cap:
        raise CapacityError(f"r={r} needs N={n} > cap {cap} for tail_tol={tail_tol}")
    return n


@dataclass(frozen=True)
class ModelParams:
    """Inputs of the two-mode Jaynes-Cummings model.

    ``theta``/``phi`` fix the initial atomic superposition
    cos(theta/2)|up> + exp(i phi) sin(theta/2)|down>, ``eta`` is the Kerr
    to coupling ratio chi/lambda and ``n_trunc`` the highest Fock index kept.
    """

    r: float
    theta: float = 0.0
    phi: float = 0.0
    eta: float = 0.0
    n_trunc: int = 0
    tail_tol: float = DEFAULT_TAIL_TOL

    def __post_init__(self):
        if self.r < 0:
            raise ValueError(f"r must be >= 0, got {self.r}")
        if self.eta < 0:
            raise ValueError(f"eta must be >= 0, got {self.eta}")
        if not 0 < self.tail_tol < 1:
            raise ValueError(f"tail_tol must lie in (0, 1), got {self.tail_tol}")
        if self.n_trunc == 0:
            object.__setattr__(self, "n_trunc", choose_truncation(self.r, self.tail_tol))
        if self.n_trunc < 1:
            raise ValueError(f"n_trunc must be >= 1, got {self.n_trunc}")

    @classmethod
    def from_sinh2r(cls, sinh2r: float, **kwargs) -> "ModelParams":
        return cls(r=float(np.arcsinh(np.sqrt(sinh2r))), **kwargs)

    @property
    def z(self) -> float:
        return float(np.tanh(self.r))

    @property
    def mean_photon_number(self) -> float:
        """Total mean photon number of both modes, 2 sinh^2 r."""
        return 2.0 * np.sinh(self.r) ** 2

    @property
    def tail_mass(self) -> float:
        return self.z ** (2 * (self.n_trunc + 1))


@dataclass(frozen=True)
class TmsCoefficients:
    c: np.ndarray = field(repr=False)

    @property
    def n_trunc(self) -> int:
        return len(self.c) - 1

    @property
    def norm(self) -> float:
        return float(np.sum(self.c**2))


def _inv_cosh(r: float) -> float:
    # 2 e^-r / (1 + e^-2r) stays finite where cosh(r) overflows
    e = np.exp(-r)
    return 2.0 * e / (1.0 + e * e)


def tms_coefficients(params: ModelParams) -> TmsCoefficients:
    """C_n = tanh(r)**n / cosh(r) for n = 0..N."""
    n = np.arange(params.n_trunc + 1)
    if params.r == 0:
        c = (n == 0).astype(float)
    else:
        c = np.exp(n * log_tanh(params.r)) * _inv_cosh(params.r)
    c.setflags(write=False)
    return TmsCoefficients(c)


def rabi_frequency(n, eta: float):
    """Generalized Rabi frequency sqrt(4 eta^2 n^2 + (n+1)^2); vectorized over ``n``."""
    n = np.asarray(n, dtype=float)
    return np.sqrt(4.0 * eta**2 * n**2 + (n + 1.0) ** 2)

"""Command-line sweeps over scaled time and figure-data presets.

    bimodal-jc --quantity linear-entropy --sinh2r 10 --t-stop 9.42 --t-steps 500
    bimodal-jc --quantity verify --draws 100 --seed 1
    bimodal-jc figures 2 --out fig2.csv
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import asdict, dataclass

import numpy as np

from .dynamics import evolve, kerr_phase
from .husimi_wehrl import SphereGrid, atomic_q, wehrl_entropy
from .model import DEFAULT_TAIL_TOL, CapacityError, ModelParams, tms_coefficients
from .observables import bloch_vector, linear_entropy, reduced_density, von_neumann_entropy
from .oracle import brute_force_evolve, brute_force_reduced_density

QUANTITIES = ("inversion", "linear-entropy", "vn-entropy", "wehrl", "qfunction", "verify")


@dataclass
class RunConfig:
    quantity: str = "inversion"
    sinh2r: float | None = None
    r: float | None = None
    theta: float = 0.0
    phi: float = 0.0
    eta: float = 0.0
    t_start: float = 0.0
    t_stop: float = 3 * np.pi
    t_steps: int = 1001
    t_fixed: float | None = None
    tail_tol: float = DEFAULT_TAIL_TOL
    grid_theta: int = 128
    grid_phi: int = 256
    draws: int = 100
    seed: int = 0
    out: str | None = None
    format: str = "csv"

    def __post_init__(self):
        if self.sinh2r is None and self.r is None:
            self.sinh2r = 10.0

    def validate(self):
        if self.quantity not in QUANTITIES:
            raise ValueError(f"unknown quantity {self.quantity!r}; choose from {', '.join(QUANTITIES)}")
        if (self.sinh2r is None) == (self.r is None):
            raise ValueError("give exactly one of --sinh2r / --r")
        if self.sinh2r is not None and self.sinh2r < 0:
            raise ValueError("--sinh2r must be >= 0")
        if self.t_steps < 2:
            raise ValueError("--t-steps must be >= 2")
        if not self.t_start < self.t_stop:
            raise ValueError("--t-start must be below --t-stop")
        if self.format not in ("csv", "json"):
            raise ValueError("--format must be csv or json")
        if self.draws < 1:
            raise ValueError("--draws must be >= 1")

    def params(self) -> ModelParams:
        kw = dict(theta=self.theta, phi=self.phi, eta=self.eta, tail_tol=self.tail_tol)
        if self.sinh2r is not None:
            return ModelParams.from_sinh2r(self.sinh2r, **kw)
        return ModelParams(r=self.r, **kw)

    def t_grid(self) -> np.ndarray:
        return np.linspace(self.t_start, self.t_stop, self.t_steps)


def _trajectory(params: ModelParams, t_values):
    coeffs = tms_coefficients(params)
    for t in t_values:
        yield t, bloch_vector(evolve(params, coeffs, t), params.eta)


def sweep_rows(params: ModelParams, quantity: str, t_values, grid: SphereGrid | None = None):
    """Rows (T, value) of one observable along a time grid."""
    if quantity == "wehrl":
        grid = grid or SphereGrid.build()
    fn = {
        "inversion": lambda b: b.inversion,
        "linear-entropy": linear_entropy,
        "vn-entropy": von_neumann_entropy,
        "wehrl": lambda b: wehrl_entropy(b, grid),
    }[quantity]
    return [{"T": float(t), "value": float(fn(b))} for t, b in _trajectory(params, t_values)]


def qfunction_rows(params: ModelParams, t_scaled: float, grid: SphereGrid):
    coeffs = tms_coefficients(params)
    b = bloch_vector(evolve(params, coeffs, t_scaled), params.eta)
    q = atomic_q(b, grid.theta, grid.phi)
    return [
        {"Theta": float(th), "Phi": float(ph), "weight": float(w), "Q": float(v)}
        for th, ph, w, v in zip(grid.theta.ravel(), grid.phi.ravel(), grid.weights.ravel(), q.ravel())
    ]


def verify_rows(cfg: RunConfig):
    """Analytic vs brute-force deviations over seeded random parameter draws."""
    rng = np.random.default_rng(cfg.seed)
    rows = []
    for _ in range(cfg.draws):
        p = ModelParams(
            r=rng.uniform(0, 2),
            theta=rng.uniform(0, np.pi),
            phi=rng.uniform(0, 2 * np.pi),
            eta=rng.uniform(0, 0.1),
            tail_tol=cfg.tail_tol,
        )
        t = rng.uniform(cfg.t_start, cfg.t_stop)
        analytic = evolve(p, tms_coefficients(p), t)
        phased = analytic.with_phase(kerr_phase(p.n_trunc, p.eta, t))
        brute = brute_force_evolve(p, t)
        amp_dev = max(np.max(np.abs(phased.f1 - brute.f1)), np.max(np.abs(phased.f2 - brute.f2)))
        rho_dev = np.max(
            np.abs(reduced_density(analytic, p.eta).matrix - brute_force_reduced_density(p, t).matrix)
        )
        rows.append(
            {"T": t, "value": float(amp_dev), "rho_dev": float(rho_dev),
             "r": p.r, "theta": p.theta, "phi": p.phi, "eta": p.eta}
        )
    return rows


def run_sweep(cfg: RunConfig):
    cfg.validate()
    if cfg.quantity == "verify":
        return verify_rows(cfg)
    params = cfg.params()
    grid = SphereGrid.build(cfg.grid_theta, cfg.grid_phi) if cfg.quantity in ("wehrl", "qfunction") else None
    if cfg.quantity == "qfunction":
        return run_qfunction_snapshot(cfg, params, grid)
    return sweep_rows(params, cfg.quantity, cfg.t_grid(), grid)


def run_qfunction_snapshot(cfg: RunConfig, params: ModelParams | None = None, grid: SphereGrid | None = None):
    params = params or cfg.params()
    grid = grid or SphereGrid.build(cfg.grid_theta, cfg.grid_phi)
    t = cfg.t_start if cfg.t_fixed is None else cfg.t_fixed
    return qfunction_rows(params, t, grid)


# figure presets: (label, theta, phi, eta[, T])
FIGURES = {
    1: ("inversion", [("a_0_0_0", 0.0, 0.0, 0.0), ("b_pi2_pi6_0", np.pi / 2, np.pi / 6, 0.0),
                      ("text_pi2_pi2_0", np.pi / 2, np.pi / 2, 0.0)]),
    2: ("linear-entropy", [("a_0_0_0", 0.0, 0.0, 0.0), ("b_pi2_pi6_0", np.pi / 2, np.pi / 6, 0.0),
                           ("c_0_0_0.03", 0.0, 0.0, 0.03)]),
    3: ("qfunction", [("a_0_0_pi2_0", 0.0, 0.0, 0.0, np.pi / 2), ("b_pi2_pi2_pi_0", np.pi / 2, np.pi / 2, 0.0, np.pi),
                      ("c_0_0_pi2_0.03", 0.0, 0.0, 0.03, np.pi / 2)]),
    4: ("wehrl", [("a_0_0_0", 0.0, 0.0, 0.0), ("b_0_0_0.03", 0.0, 0.0, 0.03)]),
}


def figure_rows(number: int, cfg: RunConfig):
    quantity, curves = FIGURES[number]
    rows = []
    for label, theta, phi, eta, *rest in curves:
        params = RunConfig(**{**asdict(cfg), "theta": theta, "phi": phi, "eta": eta}).params()
        if quantity == "qfunction":
            grid = SphereGrid.build(cfg.grid_theta, cfg.grid_phi)
            rows += [{"curve": label, **row} for row in qfunction_rows(params, rest[0], grid)]
        else:
            grid = SphereGrid.build(cfg.grid_theta, cfg.grid_phi) if quantity == "wehrl" else None
            rows += [{"curve": label, **row} for row in sweep_rows(params, quantity, cfg.t_grid(), grid)]
    return rows


def _fmt(v):
    return float(f"{v:.12g}") if isinstance(v, float) else v


def format_rows(rows, cfg: RunConfig) -> str:
    if cfg.format == "json":
        config = {k: _fmt(v) for k, v in asdict(cfg).items() if k not in ("out", "format")}
        return json.dumps({"config": config, "rows": [{k: _fmt(v) for k, v in r.items()} for r in rows]}) + "\n"
    buf = io.StringIO()
    if rows:
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(list(rows[0]))
        for r in rows:
            writer.writerow([f"{v:.12g}" if isinstance(v, float) else v for v in r.values()])
    return buf.getvalue()


def _add_common(p: argparse.ArgumentParser):
    g = p.add_mutually_exclusive_group()
    g.add_argument("--sinh2r", type=float, help="sinh^2 r (default 10)")
    g.add_argument("--r", type=float, help="squeeze parameter r")
    p.add_argument("--t-start", type=float, default=0.0)
    p.add_argument("--t-stop", type=float, default=3 * np.pi)
    p.add_argument("--t-steps", type=int, default=1001)
    p.add_argument("--tail-tol", type=float, default=DEFAULT_TAIL_TOL)
    p.add_argument("--grid-theta", type=int, default=128)
    p.add_argument("--grid-phi", type=int, default=256)
    p.add_argument("--out", help="output file (default stdout)")
    p.add_argument("--format", choices=("csv", "json"), default="csv")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="bimodal-jc", description=__doc__.splitlines()[0])
    p.add_argument("--quantity", choices=QUANTITIES, default="inversion")
    p.add_argument("--theta", type=float, default=0.0)
    p.add_argument("--phi", type=float, default=0.0)
    p.add_argument("--eta", type=float, default=0.0)
    p.add_argument("--t", dest="t_fixed", type=float, help="snapshot time for --quantity qfunction")
    p.add_argument("--draws", type=int, default=100, help="random draws for --quantity verify")
    p.add_argument("--seed", type=int, default=0)
    _add_common(p)
    return p


def build_figures_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="bimodal-jc figures", description="regenerate figure data")
    p.add_argument("figure", type=int, choices=sorted(FIGURES))
    _add_common(p)
    return p


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    figures = bool(argv) and argv[0] == "figures"
    parser = build_figures_parser() if figures else build_parser()
    args = parser.parse_args(argv[1:] if figures else argv)
    opts = vars(args)
    number = opts.pop("figure", None)
    try:
        cfg = RunConfig(**opts)
        cfg.validate()
        rows = figure_rows(number, cfg) if figures else run_sweep(cfg)
    except ValueError as exc:
        parser.error(str(exc))
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    _emit(format_rows(rows, cfg), cfg.out)
    if cfg.quantity == "verify" and not figures:
        worst = max(max(r["value"], r["rho_dev"]) for r in rows)
        print(f"max |analytic - oracle| = {worst:.3e}", file=sys.stderr)
    return 0

"""Time integration of a single Fourier mode.

Two models share the machinery:

* ``hyperbolic`` -- the damped-wave mode system, first-order in (u, w)
  with w = du/dt.  The stream function of the mode and of w enter through
  the nonlocal shear terms; the auxiliary wave state (psi, dpsi/dt) is
  co-integrated in the same loop, forced by the running stream function,
  so its derivative traces are available without storing the u history.
* ``classical`` -- the first-order (parabolic) comparison model.

All steps are one IMEX update: trapezoidal rule on the stiff
wave/diffusion block via a prefactored tridiagonal solve, an explicit
two-stage second-order rule on everything else.  The explicit terms are
zeroth order in y, so the time-step limit is frequency-driven.
"""

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import backend
from .grid import Grid, as_field, build_grid, dy_centered, l2_norm
from .shear import ShearFlow

HYPERBOLIC = "hyperbolic"
CLASSICAL = "classical"
MODELS = (HYPERBOLIC, CLASSICAL)


def stability_limit(k, shear: ShearFlow):
    """Largest admissible dt for the explicit terms at frequency k."""
    return min(0.1, 0.5 / (1.0 + abs(k) * (shear.sup0 + shear.sup1)))


@dataclass(frozen=True)
class SolverConfig:
    """Per-trajectory discretisation parameters."""

    dt: float
    t_end: float
    n: int
    sample_stride: Optional[int] = None
    store_full: bool = False
    enforce_stability: bool = True

    def __post_init__(self):
        if self.dt <= 0.0:
            raise ValueError(f"dt must be positive, got {self.dt}")
        if self.t_end < 0.0:
            raise ValueError(f"t_end must be nonnegative, got {self.t_end}")
        if self.sample_stride is not None and self.sample_stride < 1:
            raise ValueError(f"sample_stride must be >= 1, got {self.sample_stride}")


@dataclass
class ModeState:
    """State of one mode: profile u, time derivative w (hyperbolic only)."""

    k: int
    t: float
    u: np.ndarray
    w: Optional[np.ndarray]
    model: str

    def __post_init__(self):
        if self.model not in MODELS:
            raise ValueError(f"model must be one of {MODELS}, got {self.model!r}")
        if self.model == HYPERBOLIC and self.w is None:
            raise ValueError("hyperbolic state needs the time derivative w")
        if self.w is not None and self.w.shape != self.u.shape:
            raise ValueError("u and w must live on the same grid")


@dataclass
class FullTrace:
    """Per-step fields kept when SolverConfig.store_full is set."""

    ts: np.ndarray
    u_fields: np.ndarray
    psi_fields: Optional[np.ndarray]
    psidot_fields: Optional[np.ndarray]
    norm_dt1_dypsi: Optional[np.ndarray]
    norm_dyypsi: Optional[np.ndarray]
    run_sup_psi: Optional[np.ndarray]


@dataclass
class Trajectory:
    """Sampled norm history of one mode run."""

    model: str
    k: int
    grid: Grid
    dt: float
    ts: np.ndarray
    norm_u: np.ndarray
    norm_dyu: np.ndarray
    norm_dtu: np.ndarray
    norm_psi: Optional[np.ndarray]
    norm_dypsi: Optional[np.ndarray]
    norm_dtdypsi: Optional[np.ndarray]
    norm_dt1_dypsi: Optional[np.ndarray]
    norm_dyypsi: Optional[np.ndarray]
    energy: Optional[np.ndarray]
    run_sup_psi: Optional[np.ndarray]
    blown_up: Optional[int] = None
    full: Optional[FullTrace] = None

    @property
    def amplification(self):
        """Peak of ||u(t)|| over the run relative to ||u(0)||."""
        if self.norm_u[0] == 0.0:
            return math.nan
        return float(np.max(self.norm_u) / self.norm_u[0])


def _wave_prefactor(n, dt, h):
    return backend.tridiag_prefactor(n, dt * dt / (4.0 * h * h))


def _heat_prefactor(n, dt, h):
    return backend.tridiag_prefactor(n, dt / (2.0 * h * h))


def _require_shear_on_grid(shear, n):
    if shear.u0.shape[0] != n:
        raise ValueError(
            f"shear sampled on {shear.u0.shape[0]} nodes, solver grid has {n}"
        )


def _check_dt(k, shear, dt, enforce=True):
    limit = stability_limit(k, shear)
    if enforce and dt > limit * (1.0 + 1e-12):
        raise ValueError(
            f"dt={dt:g} exceeds the stability limit {limit:g} for k={k} "
            f"with shear {shear.name!r}"
        )


def step_hyperbolic(state: ModeState, shear: ShearFlow, dt):
    """Advance a hyperbolic ModeState by one IMEX step."""
    if state.model != HYPERBOLIC:
        raise ValueError(f"step_hyperbolic needs a hyperbolic state, got {state.model!r}")
    n = state.u.shape[0]
    _require_shear_on_grid(shear, n)
    _check_dt(state.k, shear, dt)
    h = 1.0 / (n + 1)
    pre = _wave_prefactor(n, dt, h)
    u1, w1 = backend.step_hyperbolic(
        np.ascontiguousarray(state.u, dtype=np.complex128),
        np.ascontiguousarray(state.w, dtype=np.complex128),
        shear.u0, shear.u1, float(state.k), dt, h, pre,
    )
    return ModeState(k=state.k, t=state.t + dt, u=u1, w=w1, model=HYPERBOLIC)


def step_classical(state: ModeState, shear: ShearFlow, dt):
    """Advance a classical ModeState by one IMEX step."""
    if state.model != CLASSICAL:
        raise ValueError(f"step_classical needs a classical state, got {state.model!r}")
    n = state.u.shape[0]
    _require_shear_on_grid(shear, n)
    _check_dt(state.k, shear, dt)
    h = 1.0 / (n + 1)
    pre = _heat_prefactor(n, dt, h)
    u1 = backend.step_classical(
        np.ascontiguousarray(state.u, dtype=np.complex128),
        shear.u0, shear.u1, float(state.k), dt, h, pre,
    )
    return ModeState(k=state.k, t=state.t + dt, u=u1, w=None, model=CLASSICAL)


def energy(state: ModeState, grid: Grid):
    """A-priori energy 0.5 (||(d/dt + 1) u||^2 + ||du/dy||^2)."""
    if state.model != HYPERBOLIC:
        raise ValueError("energy is defined for the hyperbolic model")
    z = l2_norm(state.w + state.u, grid)
    g = l2_norm(dy_centered(state.u, grid), grid)
    return 0.5 * (z * z + g * g)


def _classical_dtu(u, shear, k, grid):
    rhs = backend.laplacian(u, grid.h)
    ik = 1j * float(k)
    rhs = rhs - ik * shear.u0 * u + ik * shear.u1 * backend.cumulative_trapezoid(u, grid.h)
    return rhs


def simulate_mode(cfg: SolverConfig, shear: ShearFlow, k, u_in, w_in, model):
    """Integrate one mode on [0, t_end] and record its norm history.

    The number of steps is round(t_end / dt); dt is nudged so the steps
    tile [0, t_end] exactly.  Non-finite values abort the run, keeping
    every sample taken so far and recording the offending step index.
    """
    if model not in MODELS:
        raise ValueError(f"model must be one of {MODELS}, got {model!r}")
    grid = build_grid(cfg.n)
    _require_shear_on_grid(shear, cfg.n)
    u = as_field(u_in, grid)
    w = as_field(w_in, grid) if model == HYPERBOLIC else None

    if cfg.t_end == 0.0:
        steps = 0
        dt = cfg.dt
    else:
        steps = max(1, int(round(cfg.t_end / cfg.dt)))
        dt = cfg.t_end / steps
    _check_dt(k, shear, dt, enforce=cfg.enforce_stability)

    stride = cfg.sample_stride or max(1, steps // 200)
    h = grid.h
    kf = float(k)
    ik = 1j
    hyper = model == HYPERBOLIC

    if hyper:
        pre_wave = _wave_prefactor(cfg.n, dt, h)
        a_coef = np.ascontiguousarray(1.0 + 1j * kf * shear.u0, dtype=np.complex128)
        b_coef = np.ascontiguousarray(1j * kf * shear.u0, dtype=np.complex128)
        psi = np.zeros(cfg.n, dtype=np.complex128)
        chi = np.zeros(cfg.n, dtype=np.complex128)
    else:
        pre_heat = _heat_prefactor(cfg.n, dt, h)

    samples = {
        "t": [], "u": [], "dyu": [], "dtu": [], "psi": [], "dypsi": [],
        "dtdypsi": [], "dt1dypsi": [], "dyypsi": [], "energy": [], "runsup": [],
    }
    full_ts = []
    full_u = []
    full_psi = []
    full_chi = []
    full_n_dt1 = []
    full_n_dyy = []
    full_runsup = []

    run_sup = 0.0
    blown_up = None

    def psi_norms():
        dt1 = backend.dy_centered(chi, h) + backend.dy_centered(psi, h)
        dyy = backend.laplacian(psi, h)
        return (
            float(np.sqrt(h * np.sum(np.abs(dt1) ** 2))),
            float(np.sqrt(h * np.sum(np.abs(dyy) ** 2))),
        )

    def record_sample(t):
        samples["t"].append(t)
        nu = l2_norm(u, grid)
        samples["u"].append(nu)
        samples["dyu"].append(l2_norm(dy_centered(u, grid), grid))
        if hyper:
            samples["dtu"].append(l2_norm(w, grid))
            samples["psi"].append(l2_norm(psi, grid))
            samples["dypsi"].append(l2_norm(dy_centered(psi, grid), grid))
            samples["dtdypsi"].append(l2_norm(dy_centered(chi, grid), grid))
            n_dt1, n_dyy = psi_norms()
            samples["dt1dypsi"].append(n_dt1)
            samples["dyypsi"].append(n_dyy)
            z = l2_norm(w + u, grid)
            g = samples["dyu"][-1]
            samples["energy"].append(0.5 * (z * z + g * g))
            samples["runsup"].append(run_sup)
        else:
            samples["dtu"].append(l2_norm(_classical_dtu(u, shear, k, grid), grid))
        return nu

    def record_full(t):
        full_ts.append(t)
        full_u.append(u.copy())
        if hyper:
            full_psi.append(psi.copy())
            full_chi.append(chi.copy())
            n_dt1, n_dyy = psi_norms()
            full_n_dt1.append(n_dt1)
            full_n_dyy.append(n_dyy)
            full_runsup.append(run_sup)

    if hyper:
        n_dt1, n_dyy = psi_norms()
        run_sup = n_dt1 + n_dyy
    record_sample(0.0)
    if cfg.store_full:
        record_full(0.0)

    for m in range(1, steps + 1):
        t = m * dt
        if hyper:
            phi0 = backend.cumulative_trapezoid(u, h)
            u, w = backend.step_hyperbolic(u, w, shear.u0, shear.u1, kf, dt, h, pre_wave)
            phi1 = backend.cumulative_trapezoid(u, h)
            psi, chi = backend.step_forced_wave(
                psi, chi, a_coef, b_coef, phi0, phi1, dt, h, pre_wave
            )
            n_dt1, n_dyy = psi_norms()
            run_sup = max(run_sup, n_dt1 + n_dyy)
            probe = float(np.abs(u[0]) + np.abs(w[0])) + n_dt1
        else:
            u = backend.step_classical(u, shear.u0, shear.u1, kf, dt, h, pre_heat)
            probe = float(np.abs(u[0]))
        if not math.isfinite(probe) or not np.all(np.isfinite(u.view(np.float64))):
            blown_up = m
            break
        if cfg.store_full:
            record_full(t)
        if m % stride == 0 or m == steps:
            record_sample(t)

    full = None
    if cfg.store_full:
        full = FullTrace(
            ts=np.array(full_ts),
            u_fields=np.array(full_u),
            psi_fields=np.array(full_psi) if hyper else None,
            psidot_fields=np.array(full_chi) if hyper else None,
            norm_dt1_dypsi=np.array(full_n_dt1) if hyper else None,
            norm_dyypsi=np.array(full_n_dyy) if hyper else None,
            run_sup_psi=np.array(full_runsup) if hyper else None,
        )

    def arr(key):
        return np.array(samples[key], dtype=np.float64)

    return Trajectory(
        model=model,
        k=int(k),
        grid=grid,
        dt=dt,
        ts=arr("t"),
        norm_u=arr("u"),
        norm_dyu=arr("dyu"),
        norm_dtu=arr("dtu"),
        norm_psi=arr("psi") if hyper else None,
        norm_dypsi=arr("dypsi") if hyper else None,
        norm_dtdypsi=arr("dtdypsi") if hyper else None,
        norm_dt1_dypsi=arr("dt1dypsi") if hyper else None,
        norm_dyypsi=arr("dyypsi") if hyper else None,
        energy=arr("energy") if hyper else None,
        run_sup_psi=arr("runsup") if hyper else None,
        blown_up=blown_up,
        full=full,
    )

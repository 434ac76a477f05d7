"""Numba-compiled time-stepping kernels.

All kernels operate on raw contiguous arrays (complex128 fields, float64
coefficients) so the whole inner loop stays inside nopython code.  The
pure-numpy twins live in ``_stepper_numpy``; both modules expose the same
signatures and are selected in ``backend``.  ``pre`` is the opaque output
of ``tridiag_prefactor`` and must not be inspected by callers.
"""

import numpy as np
from numba import njit

BACKEND_NAME = "numba"


@njit(cache=True)
def laplacian(f, h):
    """Second difference with zero ghost values at both walls."""
    n = f.shape[0]
    out = np.empty(n, dtype=np.complex128)
    inv_h2 = 1.0 / (h * h)
    if n == 1:
        out[0] = -2.0 * f[0] * inv_h2
        return out
    out[0] = (f[1] - 2.0 * f[0]) * inv_h2
    for j in range(1, n - 1):
        out[j] = (f[j - 1] - 2.0 * f[j] + f[j + 1]) * inv_h2
    out[n - 1] = (f[n - 2] - 2.0 * f[n - 1]) * inv_h2
    return out


@njit(cache=True)
def dy_centered(f, h):
    """Centered first difference with zero ghost values at both walls."""
    n = f.shape[0]
    out = np.empty(n, dtype=np.complex128)
    inv_2h = 0.5 / h
    if n == 1:
        out[0] = 0.0 + 0.0j
        return out
    out[0] = f[1] * inv_2h
    for j in range(1, n - 1):
        out[j] = (f[j + 1] - f[j - 1]) * inv_2h
    out[n - 1] = -f[n - 2] * inv_2h
    return out


@njit(cache=True)
def cumulative_trapezoid(f, h):
    """Antiderivative vanishing at y=0, trapezoid rule with f(0)=0."""
    n = f.shape[0]
    out = np.empty(n, dtype=np.complex128)
    out[0] = 0.5 * h * f[0]
    for j in range(1, n):
        out[j] = out[j - 1] + 0.5 * h * (f[j - 1] + f[j])
    return out


def tridiag_prefactor(n, r):
    """Forward-elimination data for the constant matrix tridiag(-r, 1+2r, -r)."""
    return _thomas_prefactor(n, float(r))


@njit(cache=True)
def _thomas_prefactor(n, r):
    d = 1.0 + 2.0 * r
    cp = np.empty(n, dtype=np.float64)
    den = np.empty(n, dtype=np.float64)
    den[0] = d
    cp[0] = -r / d
    for i in range(1, n):
        den[i] = d + r * cp[i - 1]
        cp[i] = -r / den[i]
    return cp, den, r


@njit(cache=True)
def tridiag_solve(pre, rhs):
    """Thomas substitution sweeps with the precomputed elimination."""
    cp, den, r = pre
    n = rhs.shape[0]
    x = np.empty(n, dtype=np.complex128)
    x[0] = rhs[0] / den[0]
    for i in range(1, n):
        x[i] = (rhs[i] + r * x[i - 1]) / den[i]
    for i in range(n - 2, -1, -1):
        x[i] = x[i] - cp[i] * x[i + 1]
    return x


@njit(cache=True)
def step_hyperbolic(u, w, U, dU, k, dt, h, pre):
    """One IMEX step of the damped-wave mode system.

    Trapezoidal rule on the wave/diffusion coupling (one tridiagonal solve
    per stage, matrix I - dt^2/4 * Lap), explicit two-stage second-order
    rule on damping, transport and the nonlocal shear terms.
    """
    n = u.shape[0]
    ik = 1j * k
    Du = laplacian(u, h)
    Dw = laplacian(w, h)
    phi_u = cumulative_trapezoid(u, h)
    phi_w = cumulative_trapezoid(w, h)

    base = np.empty(n, dtype=np.complex128)
    n0 = np.empty(n, dtype=np.complex128)
    rhs = np.empty(n, dtype=np.complex128)
    for j in range(n):
        n0[j] = -(1.0 + ik * U[j]) * w[j] - ik * U[j] * u[j] \
            + ik * dU[j] * (phi_u[j] + phi_w[j])
        base[j] = w[j] + dt * Du[j] + 0.25 * dt * dt * Dw[j]
        rhs[j] = base[j] + dt * n0[j]
    ws = tridiag_solve(pre, rhs)
    us = np.empty(n, dtype=np.complex128)
    for j in range(n):
        us[j] = u[j] + 0.5 * dt * (w[j] + ws[j])

    phi_us = cumulative_trapezoid(us, h)
    phi_ws = cumulative_trapezoid(ws, h)
    for j in range(n):
        n1 = -(1.0 + ik * U[j]) * ws[j] - ik * U[j] * us[j] \
            + ik * dU[j] * (phi_us[j] + phi_ws[j])
        rhs[j] = base[j] + 0.5 * dt * (n0[j] + n1)
    w1 = tridiag_solve(pre, rhs)
    u1 = np.empty(n, dtype=np.complex128)
    for j in range(n):
        u1[j] = u[j] + 0.5 * dt * (w[j] + w1[j])
    return u1, w1


@njit(cache=True)
def step_forced_wave(p, q, a, b, f0, f1, dt, h, pre):
    """IMEX step for d/dt p = q, d/dt q = Lap p - a*q - b*p + forcing.

    Same scheme family as step_hyperbolic; ``f0``/``f1`` are the forcing
    fields at the beginning and end of the step.
    """
    n = p.shape[0]
    Dp = laplacian(p, h)
    Dq = laplacian(q, h)

    base = np.empty(n, dtype=np.complex128)
    g0 = np.empty(n, dtype=np.complex128)
    rhs = np.empty(n, dtype=np.complex128)
    for j in range(n):
        g0[j] = f0[j] - a[j] * q[j] - b[j] * p[j]
        base[j] = q[j] + dt * Dp[j] + 0.25 * dt * dt * Dq[j]
        rhs[j] = base[j] + dt * g0[j]
    qs = tridiag_solve(pre, rhs)
    ps = np.empty(n, dtype=np.complex128)
    for j in range(n):
        ps[j] = p[j] + 0.5 * dt * (q[j] + qs[j])

    for j in range(n):
        g1 = f1[j] - a[j] * qs[j] - b[j] * ps[j]
        rhs[j] = base[j] + 0.5 * dt * (g0[j] + g1)
    q1 = tridiag_solve(pre, rhs)
    p1 = np.empty(n, dtype=np.complex128)
    for j in range(n):
        p1[j] = p[j] + 0.5 * dt * (q[j] + q1[j])
    return p1, q1


@njit(cache=True)
def step_classical(u, U, dU, k, dt, h, pre):
    """IMEX step of the first-order (parabolic) mode equation.

    Crank-Nicolson diffusion (matrix I - dt/2 * Lap), explicit two-stage
    rule on transport and the nonlocal shear term.
    """
    n = u.shape[0]
    ik = 1j * k
    Du = laplacian(u, h)
    phi = cumulative_trapezoid(u, h)

    base = np.empty(n, dtype=np.complex128)
    n0 = np.empty(n, dtype=np.complex128)
    rhs = np.empty(n, dtype=np.complex128)
    for j in range(n):
        n0[j] = -ik * U[j] * u[j] + ik * dU[j] * phi[j]
        base[j] = u[j] + 0.5 * dt * Du[j]
        rhs[j] = base[j] + dt * n0[j]
    us = tridiag_solve(pre, rhs)

    phi_s = cumulative_trapezoid(us, h)
    for j in range(n):
        n1 = -ik * U[j] * us[j] + ik * dU[j] * phi_s[j]
        rhs[j] = base[j] + 0.5 * dt * (n0[j] + n1)
    return tridiag_solve(pre, rhs)


@njit(cache=True)
def gronwall_rk4(g, lam3, dt):
    """Integrate w''' = g + lam3*w, zero data, classical RK4.

    ``g`` is tabulated on the step grid and held constant on each interval
    (right-continuous step function), so every sub-step sees smooth data.
    Returns w on the same grid.
    """
    m = g.shape[0]
    out = np.empty(m, dtype=np.float64)
    y0 = 0.0
    y1 = 0.0
    y2 = 0.0
    out[0] = 0.0
    for i in range(m - 1):
        gi = g[i]
        a0 = y1
        a1 = y2
        a2 = gi + lam3 * y0
        b0 = y1 + 0.5 * dt * a1
        b1 = y2 + 0.5 * dt * a2
        b2 = gi + lam3 * (y0 + 0.5 * dt * a0)
        c0 = y1 + 0.5 * dt * b1
        c1 = y2 + 0.5 * dt * b2
        c2 = gi + lam3 * (y0 + 0.5 * dt * b0)
        d0 = y1 + dt * c1
        d1 = y2 + dt * c2
        d2 = gi + lam3 * (y0 + dt * c0)
        y0 += dt / 6.0 * (a0 + 2.0 * b0 + 2.0 * c0 + d0)
        y1 += dt / 6.0 * (a1 + 2.0 * b1 + 2.0 * c1 + d1)
        y2 += dt / 6.0 * (a2 + 2.0 * b2 + 2.0 * c2 + d2)
        out[i + 1] = y0
    return out

"""Pure-numpy fallback for the time-stepping kernels.

Same signatures as ``_stepper_numba``.  Field operators are vectorised;
the tridiagonal systems have constant coefficients, so the fallback
prefactors a dense inverse once per trajectory and each solve is a
single matvec.  Selected with STRIPLAB_BACKEND=numpy (see ``backend``).
"""

import numpy as np

BACKEND_NAME = "numpy"


def laplacian(f, h):
    """Second difference with zero ghost values at both walls."""
    out = -2.0 * f.astype(np.complex128, copy=True)
    out[:-1] += f[1:]
    out[1:] += f[:-1]
    out /= h * h
    return out


def dy_centered(f, h):
    """Centered first difference with zero ghost values at both walls."""
    out = np.zeros(f.shape[0], dtype=np.complex128)
    out[:-1] += f[1:]
    out[1:] -= f[:-1]
    out /= 2.0 * h
    return out


def cumulative_trapezoid(f, h):
    """Antiderivative vanishing at y=0, trapezoid rule with f(0)=0."""
    out = np.cumsum(f, dtype=np.complex128) * h
    out -= 0.5 * h * f
    return out


def tridiag_prefactor(n, r):
    """Dense inverse of the constant matrix tridiag(-r, 1+2r, -r)."""
    mat = np.diag(np.full(n, 1.0 + 2.0 * r))
    idx = np.arange(n - 1)
    mat[idx, idx + 1] = -r
    mat[idx + 1, idx] = -r
    return np.linalg.inv(mat)


def tridiag_solve(pre, rhs):
    return pre @ rhs


def step_hyperbolic(u, w, U, dU, k, dt, h, pre):
    """One IMEX step of the damped-wave mode system (see numba twin)."""
    ik = 1j * k
    base = w + dt * laplacian(u, h) + 0.25 * dt * dt * laplacian(w, h)
    n0 = -(1.0 + ik * U) * w - ik * U * u \
        + ik * dU * (cumulative_trapezoid(u, h) + cumulative_trapezoid(w, h))
    ws = tridiag_solve(pre, base + dt * n0)
    us = u + 0.5 * dt * (w + ws)
    n1 = -(1.0 + ik * U) * ws - ik * U * us \
        + ik * dU * (cumulative_trapezoid(us, h) + cumulative_trapezoid(ws, h))
    w1 = tridiag_solve(pre, base + 0.5 * dt * (n0 + n1))
    u1 = u + 0.5 * dt * (w + w1)
    return u1, w1


def step_forced_wave(p, q, a, b, f0, f1, dt, h, pre):
    """IMEX step for d/dt p = q, d/dt q = Lap p - a*q - b*p + forcing."""
    base = q + dt * laplacian(p, h) + 0.25 * dt * dt * laplacian(q, h)
    g0 = f0 - a * q - b * p
    qs = tridiag_solve(pre, base + dt * g0)
    ps = p + 0.5 * dt * (q + qs)
    g1 = f1 - a * qs - b * ps
    q1 = tridiag_solve(pre, base + 0.5 * dt * (g0 + g1))
    p1 = p + 0.5 * dt * (q + q1)
    return p1, q1


def step_classical(u, U, dU, k, dt, h, pre):
    """IMEX step of the first-order (parabolic) mode equation."""
    ik = 1j * k
    base = u + 0.5 * dt * laplacian(u, h)
    n0 = -ik * U * u + ik * dU * cumulative_trapezoid(u, h)
    us = tridiag_solve(pre, base + dt * n0)
    n1 = -ik * U * us + ik * dU * cumulative_trapezoid(us, h)
    return tridiag_solve(pre, base + 0.5 * dt * (n0 + n1))


def gronwall_rk4(g, lam3, dt):
    """Integrate w''' = g + lam3*w, zero data, classical RK4.

    ``g`` is held constant on each interval (right-continuous step
    function).  Returns w on the same grid.
    """
    m = g.shape[0]
    out = np.empty(m, dtype=np.float64)
    y0 = y1 = y2 = 0.0
    out[0] = 0.0
    for i in range(m - 1):
        gi = g[i]
        a0, a1, a2 = y1, y2, gi + lam3 * y0
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

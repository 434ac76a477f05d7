"""Discrete function space on the strip cross-section (0, 1).

A field is a plain complex ndarray of values at the interior nodes
y_j = j*h, j = 1..n, h = 1/(n+1); the walls y = 0 and y = 1 carry
implicit zeros (homogeneous Dirichlet data, handled by elimination).
Every operator checks that the field length matches the grid.
"""

from dataclasses import dataclass, field

import numpy as np

from . import backend


@dataclass(frozen=True)
class Grid:
    """Uniform interior grid on (0, 1) with Dirichlet walls eliminated."""

    n: int
    h: float
    nodes: np.ndarray = field(repr=False)

    def __post_init__(self):
        if self.n < 3:
            raise ValueError(f"grid needs at least 3 interior nodes, got n={self.n}")


def build_grid(n):
    """Uniform grid with n interior nodes, spacing h = 1/(n+1)."""
    if n < 3:
        raise ValueError(f"grid needs at least 3 interior nodes, got n={n}")
    h = 1.0 / (n + 1)
    nodes = h * np.arange(1, n + 1)
    return Grid(n=int(n), h=h, nodes=nodes)


def as_field(values, grid):
    """Validate and return values as a contiguous complex field on ``grid``."""
    f = np.ascontiguousarray(values, dtype=np.complex128)
    if f.ndim != 1 or f.shape[0] != grid.n:
        raise ValueError(
            f"field has shape {np.shape(values)}, expected ({grid.n},) on this grid"
        )
    return f


def _check(f, grid):
    if f.ndim != 1 or f.shape[0] != grid.n:
        raise ValueError(
            f"field of length {f.shape[0] if f.ndim == 1 else f.shape} "
            f"does not live on a grid with n={grid.n}"
        )


def apply_dirichlet_laplacian(f, grid):
    """Second-order central difference of -(-d2/dy2), zero wall values."""
    _check(f, grid)
    return backend.laplacian(np.ascontiguousarray(f, dtype=np.complex128), grid.h)


def dy_centered(f, grid):
    """Centered first derivative, zero ghost values at the walls.

    Intended for fields satisfying the Dirichlet conditions; used for the
    H^1-type norms and the first-derivative traces.
    """
    _check(f, grid)
    return backend.dy_centered(np.ascontiguousarray(f, dtype=np.complex128), grid.h)


def cumulative_integral(f, grid):
    """Trapezoid antiderivative from the wall: F(y_j) ~ int_0^{y_j} f.

    The wall value f(0) = 0 enters the first panel, so the result vanishes
    at y = 0 by construction.
    """
    _check(f, grid)
    return backend.cumulative_trapezoid(
        np.ascontiguousarray(f, dtype=np.complex128), grid.h
    )


def l2_norm(f, grid):
    """Trapezoid L2(0,1) norm with zero wall values.

    With both wall values zero the trapezoid rule collapses to
    sqrt(h * sum |f_j|^2).
    """
    _check(f, grid)
    acc = float(np.sum(np.abs(f) ** 2))
    return float(np.sqrt(grid.h * acc))

"""Catalog of shear profiles with analytic derivatives and sup norms.

The stability constants downstream depend on the sup norms of U'' and
U''', so derivatives are supplied analytically per catalog entry rather
than by differencing the sampled profile.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .grid import Grid


@dataclass(frozen=True)
class ShearFlow:
    """Shear profile U(y) with derivatives up to third order.

    u0..u3 are the sampled values of U, U', U'', U''' at the grid nodes;
    sup0..sup3 the corresponding analytic sup norms over [0, 1].
    """

    name: str
    params: tuple
    u0: np.ndarray = field(repr=False)
    u1: np.ndarray = field(repr=False)
    u2: np.ndarray = field(repr=False)
    u3: np.ndarray = field(repr=False)
    sup0: float
    sup1: float
    sup2: float
    sup3: float

    @property
    def sup_sum(self):
        return self.sup0 + self.sup1 + self.sup2 + self.sup3

    @property
    def curvature_combo(self):
        """||U'''||_inf + 2 ||U''||_inf, the combination driving the radii."""
        return self.sup3 + 2.0 * self.sup2


def make_shear(name, params, grid: Grid):
    """Build a catalog shear profile sampled on ``grid``.

    Catalog: zero; constant(c); linear(a, b) = a + b*y;
    poiseuille(a) = a*y*(1-y); cosine(a) = a*cos(pi*y).
    """
    params = tuple(float(p) for p in params)
    if not all(math.isfinite(p) for p in params):
        raise ValueError(f"shear parameters must be finite, got {params}")
    y = grid.nodes
    zeros = np.zeros(grid.n)

    if name == "zero":
        _expect_params(name, params, 0)
        u = (zeros, zeros, zeros, zeros)
        sups = (0.0, 0.0, 0.0, 0.0)
    elif name == "constant":
        _expect_params(name, params, 1)
        (c,) = params
        u = (np.full(grid.n, c), zeros, zeros, zeros)
        sups = (abs(c), 0.0, 0.0, 0.0)
    elif name == "linear":
        _expect_params(name, params, 2)
        a, b = params
        u = (a + b * y, np.full(grid.n, b), zeros, zeros)
        sups = (max(abs(a), abs(a + b)), abs(b), 0.0, 0.0)
    elif name == "poiseuille":
        _expect_params(name, params, 1)
        (a,) = params
        u = (a * y * (1.0 - y), a * (1.0 - 2.0 * y), np.full(grid.n, -2.0 * a), zeros)
        sups = (abs(a) / 4.0, abs(a), 2.0 * abs(a), 0.0)
    elif name == "cosine":
        _expect_params(name, params, 1)
        (a,) = params
        pi = math.pi
        u = (
            a * np.cos(pi * y),
            -a * pi * np.sin(pi * y),
            -a * pi * pi * np.cos(pi * y),
            a * pi ** 3 * np.sin(pi * y),
        )
        sups = (abs(a), abs(a) * pi, abs(a) * pi * pi, abs(a) * pi ** 3)
    else:
        raise ValueError(
            f"unknown shear {name!r}; catalog: zero, constant, linear, "
            f"poiseuille, cosine"
        )

    return ShearFlow(
        name=name,
        params=params,
        u0=np.ascontiguousarray(u[0], dtype=np.float64),
        u1=np.ascontiguousarray(u[1], dtype=np.float64),
        u2=np.ascontiguousarray(u[2], dtype=np.float64),
        u3=np.ascontiguousarray(u[3], dtype=np.float64),
        sup0=sups[0],
        sup1=sups[1],
        sup2=sups[2],
        sup3=sups[3],
    )


def _expect_params(name, params, count):
    if len(params) != count:
        raise ValueError(f"shear {name!r} takes {count} parameter(s), got {len(params)}")

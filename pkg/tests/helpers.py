"""Shared test utilities: independent oracles and parameter draws.

The RK4 routine and the finite-difference stencil here are written from
scratch so that kernel results (matrix exponentials, closed-form
trajectories, scalar ODE residuals) are checked against code that shares
nothing with the package implementation.
"""

import numpy as np

from nhrlc import CircuitParams, classify


def rk4_states(gen, state0, times, step):
    """Independent fixed-step RK4 for y' = gen @ y, sampled on ``times``."""
    gen = np.asarray(gen, dtype=complex)
    y = np.asarray(state0, dtype=complex).copy()
    ts = np.asarray(times, dtype=float)
    out = np.empty((ts.size, y.size), dtype=complex)
    out[0] = y
    for k in range(1, ts.size):
        span = ts[k] - ts[k - 1]
        n_sub = max(1, int(np.ceil(span / step - 1e-12)))
        h = span / n_sub
        for _ in range(n_sub):
            k1 = gen @ y
            k2 = gen @ (y + 0.5 * h * k1)
            k3 = gen @ (y + 0.5 * h * k2)
            k4 = gen @ (y + h * k3)
            y = y + (h / 6.0) * (k1 + 2 * k2 + 2 * k3 + k4)
        out[k] = y
    return out


def deriv5(values, dt):
    """Five-point central first derivative; returns the interior [2:-2]."""
    y = np.asarray(values)
    return (-y[4:] + 8.0 * y[3:-1] - 8.0 * y[1:-3] + y[:-4]) / (12.0 * dt)


def draw_params(rng, phase, bound=3.0):
    """Uniform draw of (alpha, omega0) in (0, bound)^2 conditioned on the phase."""
    while True:
        alpha = float(rng.uniform(0.0, bound))
        omega0 = float(rng.uniform(0.0, bound))
        if omega0 <= 1e-9:
            continue
        params = CircuitParams.from_rates(alpha, omega0)
        if classify(params) is phase:
            return params


def random_invertible(rng, n, min_det=0.1):
    """Random real invertible matrix with determinant bounded away from zero."""
    while True:
        m = rng.uniform(-1.0, 1.0, size=(n, n))
        if abs(np.linalg.det(m)) > min_det:
            return m

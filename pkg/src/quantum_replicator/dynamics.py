"""Replicator vector fields and fixed-step trajectory integration.

The planar field covers both forms of the game at once: the classical flow is
the special case (K1, K2) = (1, 0), any other admissible pair comes from a
quantized initial state.  The field is a polynomial defined on all of the
plane; population-valid states live in the unit square, whose faces are
invariant lines.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .games import InitialStateWeights, SimplifiedGame, ValidationError, k_params

__all__ = [
    "ReplicatorField",
    "Trajectory",
    "NPopulationState",
    "field_eval",
    "replicator_field_n",
    "integrate",
    "phase_portrait",
    "DEFAULT_STEP",
    "DEFAULT_MAX_STEPS",
    "DEFAULT_CONVERGENCE_TOL",
]

DEFAULT_STEP = 0.01
DEFAULT_MAX_STEPS = 100_000
DEFAULT_CONVERGENCE_TOL = 1e-10

# Allow tiny numerical overshoot past the faces before clamping back.
CLAMP_GUARD = 1e-9
# Integration stops once the state wanders this far outside the unit square.
DOMAIN_MARGIN = 0.1


@dataclass(frozen=True)
class ReplicatorField:
    """Planar replicator field for reduced payoffs (a, b, c, d) and state (K1, K2).

    dx/dt = x(1-x) [a K1 + b K2 - (a+b)(K1+K2) y]
    dy/dt = y(1-y) [c K1 + d K2 - (c+d)(K1+K2) x]
    """

    a: float
    b: float
    c: float
    d: float
    K1: float = 1.0
    K2: float = 0.0

    @classmethod
    def classical(cls, game: SimplifiedGame) -> "ReplicatorField":
        return cls(game.a, game.b, game.c, game.d, 1.0, 0.0)

    @classmethod
    def quantum(cls, game: SimplifiedGame, state: InitialStateWeights) -> "ReplicatorField":
        k = k_params(state)
        return cls(game.a, game.b, game.c, game.d, k.K1, k.K2)

    @property
    def x_constant(self):
        """Constant term of the x-equation bracket, a K1 + b K2."""
        return self.a * self.K1 + self.b * self.K2

    @property
    def x_slope(self):
        """Coefficient of y in the x-equation bracket, -(a+b)(K1+K2)."""
        return -(self.a + self.b) * (self.K1 + self.K2)

    @property
    def y_constant(self):
        return self.c * self.K1 + self.d * self.K2

    @property
    def y_slope(self):
        return -(self.c + self.d) * (self.K1 + self.K2)

    def __call__(self, x, y):
        return field_eval(self, x, y)


def field_eval(fld: ReplicatorField, x: float, y: float):
    """Closed-form velocities (dx/dt, dy/dt); defined everywhere in the plane."""
    xdot = x * (1.0 - x) * (fld.x_constant + fld.x_slope * y)
    ydot = y * (1.0 - y) * (fld.y_constant + fld.y_slope * x)
    return xdot, ydot


@dataclass(frozen=True)
class NPopulationState:
    """Frequency vector on the simplex together with an n x n payoff matrix."""

    frequencies: tuple
    payoffs: tuple = field(repr=False, default=())

    def __post_init__(self):
        x = np.asarray(self.frequencies, dtype=float)
        A = np.asarray(self.payoffs, dtype=float)
        if A.shape != (x.size, x.size):
            raise ValidationError(
                f"payoff matrix shape {A.shape} does not match {x.size} strategies")
        if np.any(x < 0.0):
            raise ValidationError("frequencies must be nonnegative")
        if abs(float(x.sum()) - 1.0) > 1e-12:
            raise ValidationError(f"frequencies must sum to 1, got {x.sum()!r}")
        object.__setattr__(self, "frequencies", tuple(float(v) for v in x))
        object.__setattr__(self, "payoffs", tuple(tuple(float(v) for v in row) for row in A))


def replicator_field_n(state: NPopulationState):
    """Single-population replicator velocities x_i ((A x)_i - x.A.x).

    The components sum to zero, so the flow stays tangent to the simplex.
    """
    x = np.asarray(state.frequencies, dtype=float)
    A = np.asarray(state.payoffs, dtype=float)
    fitness = A @ x
    mean = float(x @ fitness)
    return x * (fitness - mean)


@dataclass(frozen=True)
class Trajectory:
    """Fixed-step samples of one integrated orbit."""

    times: tuple
    xs: tuple
    ys: tuple
    status: str  # converged | max-steps | left-domain

    def __len__(self):
        return len(self.times)

    @property
    def final(self):
        return (self.xs[-1], self.ys[-1])


def _rk4_step(fld, x, y, h):
    k1x, k1y = field_eval(fld, x, y)
    k2x, k2y = field_eval(fld, x + 0.5 * h * k1x, y + 0.5 * h * k1y)
    k3x, k3y = field_eval(fld, x + 0.5 * h * k2x, y + 0.5 * h * k2y)
    k4x, k4y = field_eval(fld, x + h * k3x, y + h * k3y)
    return (x + h * (k1x + 2.0 * k2x + 2.0 * k3x + k4x) / 6.0,
            y + h * (k1y + 2.0 * k2y + 2.0 * k3y + k4y) / 6.0)


def _clamp(v):
    # Pull integration noise back onto the faces; genuine excursions are kept.
    if -CLAMP_GUARD < v < 0.0:
        return 0.0
    if 1.0 < v < 1.0 + CLAMP_GUARD:
        return 1.0
    return v


def integrate(fld: ReplicatorField, start, step=DEFAULT_STEP,
              max_steps=DEFAULT_MAX_STEPS,
              convergence_tol=DEFAULT_CONVERGENCE_TOL) -> Trajectory:
    """Integrate with classical fixed-step RK4 from ``start``.

    Stops early once the sup-norm of the velocity drops below
    ``convergence_tol`` (status "converged") or the state leaves the widened
    square [-0.1, 1.1]^2 (status "left-domain"); otherwise runs ``max_steps``
    steps (status "max-steps").
    """
    if step <= 0.0:
        raise ValidationError(f"step must be positive, got {step}")
    if max_steps <= 0:
        raise ValidationError(f"max_steps must be positive, got {max_steps}")
    x, y = float(start[0]), float(start[1])
    if x != x or y != y or abs(x) == float("inf") or abs(y) == float("inf"):
        raise ValidationError(f"start must be finite, got {start!r}")

    times = [0.0]
    xs = [x]
    ys = [y]
    status = "max-steps"
    for n in range(max_steps + 1):
        vx, vy = field_eval(fld, x, y)
        if max(abs(vx), abs(vy)) < convergence_tol:
            status = "converged"
            break
        if not (-DOMAIN_MARGIN <= x <= 1.0 + DOMAIN_MARGIN
                and -DOMAIN_MARGIN <= y <= 1.0 + DOMAIN_MARGIN):
            status = "left-domain"
            break
        if n == max_steps:
            break
        x, y = _rk4_step(fld, x, y, step)
        x, y = _clamp(x), _clamp(y)
        times.append((n + 1) * step)
        xs.append(x)
        ys.append(y)
    return Trajectory(tuple(times), tuple(xs), tuple(ys), status)


def phase_portrait(fld: ReplicatorField, grid_n: int, step=DEFAULT_STEP,
                   max_steps=DEFAULT_MAX_STEPS,
                   convergence_tol=DEFAULT_CONVERGENCE_TOL):
    """Integrate one trajectory per seed of a grid_n x grid_n lattice in (0,1)^2.

    Seeds landing exactly on an equilibrium are skipped; output order follows
    the lattice (row-major in x, then y).
    """
    if grid_n < 2:
        raise ValidationError(f"grid_n must be at least 2, got {grid_n}")
    trajectories = []
    for i in range(grid_n):
        for j in range(grid_n):
            sx = (i + 1) / (grid_n + 1)
            sy = (j + 1) / (grid_n + 1)
            vx, vy = field_eval(fld, sx, sy)
            if vx == 0.0 and vy == 0.0:
                continue
            trajectories.append(
                integrate(fld, (sx, sy), step=step, max_steps=max_steps,
                          convergence_tol=convergence_tol))
    return trajectories

"""Verified showcase instances and a simplex scan for stability flips.

Three stock instances demonstrate how the choice of initial state changes the
character of the corner (1, 0) and of the interior rest point:

* case a: attractor in both forms, ESS only after quantization;
* case b: attractor in both forms, ESS only classically;
* case c: interior linear center classically, saddle after quantization.

Each constructor re-checks every defining inequality and refuses to build an
instance that does not satisfy its own story.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ess import FLIP_NONE, compare_classical_quantum
from .games import InitialStateWeights, SimplifiedGame, k_params
from .stability import interior_lambda_sq

__all__ = [
    "ScenarioInstance",
    "Check",
    "make_case_a",
    "make_case_b",
    "make_case_c",
    "scan_flip",
]


@dataclass(frozen=True)
class Check:
    name: str
    value: float
    ok: bool


@dataclass(frozen=True)
class ScenarioInstance:
    game: SimplifiedGame
    state: InitialStateWeights
    case_label: str
    verification: tuple

    def __post_init__(self):
        failed = [c.name for c in self.verification if not c.ok]
        if failed:
            raise ValueError(
                f"case {self.case_label}: verification failed for {failed}")


def _positive(name, value):
    return Check(name, value, value > 0.0)


def _negative(name, value):
    return Check(name, value, value < 0.0)


def make_case_a() -> ScenarioInstance:
    """Corner attractor that is no ESS classically but becomes one when quantized.

    Needs a, d > 0 and b, c < 0 with weight ordering w21 < w22 < w11 < w12.
    """
    game = SimplifiedGame(a=1.0, b=-1.0, c=-1.0, d=1.0)
    state = InitialStateWeights(0.3, 0.4, 0.1, 0.2)
    report = compare_classical_quantum(game, state)
    checks = (
        _positive("a > 0", game.a),
        _positive("d > 0", game.d),
        _negative("b < 0", game.b),
        _negative("c < 0", game.c),
        _positive("w22 - w21", state.w22 - state.w21),
        _positive("w11 - w22", state.w11 - state.w22),
        _positive("w12 - w11", state.w12 - state.w11),
        _negative("classical root 1", report.classical.roots[0]),
        _negative("classical root 2", report.classical.roots[1]),
        _negative("classical m_female (non-ESS)", report.classical.margins.m_female),
        _negative("quantum root 1", report.quantum.roots[0]),
        _negative("quantum root 2", report.quantum.roots[1]),
        _positive("quantum m_male", report.quantum.margins.m_male),
        _positive("quantum m_female", report.quantum.margins.m_female),
    )
    return ScenarioInstance(game, state, "a", checks)


def make_case_b() -> ScenarioInstance:
    """Classical ESS attractor that loses the ESS property when quantized.

    Needs a, c, d > 0 and b < 0 with ordering w22 < w21 < w11 < w12 and the
    side condition c(w12 - w22) < d(w11 - w21).
    """
    game = SimplifiedGame(a=1.0, b=-1.0, c=1.0, d=2.0)
    state = InitialStateWeights(0.35, 0.40, 0.15, 0.10)
    report = compare_classical_quantum(game, state)
    checks = (
        _positive("a > 0", game.a),
        _positive("c > 0", game.c),
        _positive("d > 0", game.d),
        _negative("b < 0", game.b),
        _positive("w21 - w22", state.w21 - state.w22),
        _positive("w11 - w21", state.w11 - state.w21),
        _positive("w12 - w11", state.w12 - state.w11),
        _positive("side condition d(w11-w21) - c(w12-w22)",
                  game.d * (state.w11 - state.w21) - game.c * (state.w12 - state.w22)),
        _positive("classical m_male", report.classical.margins.m_male),
        _positive("classical m_female", report.classical.margins.m_female),
        _negative("classical root 1", report.classical.roots[0]),
        _negative("classical root 2", report.classical.roots[1]),
        _negative("quantum root 1", report.quantum.roots[0]),
        _negative("quantum root 2", report.quantum.roots[1]),
        _negative("quantum m_female (non-ESS)", report.quantum.margins.m_female),
    )
    return ScenarioInstance(game, state, "b", checks)


def make_case_c() -> ScenarioInstance:
    """Interior linear center classically, saddle of the planar field quantized.

    The quantized rest point leaves the unit square for this instance; the
    sign flip of the squared root is only attainable that way, which the
    instance records as an explicit check.
    """
    game = SimplifiedGame(a=1.0, b=3.0, c=-2.0, d=-1.0)
    state = InitialStateWeights(0.25, 0.60, 0.05, 0.10)
    k = k_params(state)
    lam_sq_classical = interior_lambda_sq(game.a, game.b, game.c, game.d, 1.0, 0.0)
    lam_sq_quantum = interior_lambda_sq(game.a, game.b, game.c, game.d, k.K1, k.K2)
    x_cl = game.c / (game.c + game.d)
    y_cl = game.a / (game.a + game.b)
    ksum = k.K1 + k.K2
    x_q = (game.c * k.K1 + game.d * k.K2) / ((game.c + game.d) * ksum)
    y_q = (game.a * k.K1 + game.b * k.K2) / ((game.a + game.b) * ksum)
    checks = (
        _negative("classical lambda^2 (center)", lam_sq_classical),
        _positive("quantum lambda^2 (saddle)", lam_sq_quantum),
        Check("classical interior inside unit square", x_cl,
              0.0 < x_cl < 1.0 and 0.0 < y_cl < 1.0),
        Check("quantum interior outside unit square", y_q,
              not (0.0 < x_q < 1.0 and 0.0 < y_q < 1.0)),
    )
    return ScenarioInstance(game, state, "c", checks)


def make_case(label: str) -> ScenarioInstance:
    try:
        return {"a": make_case_a, "b": make_case_b, "c": make_case_c}[label]()
    except KeyError:
        raise ValueError(f"unknown case {label!r}; expected a, b or c") from None


def scan_flip(game: SimplifiedGame, resolution: int):
    """Scan the weight simplex on a uniform lattice for stability flips.

    Enumerates all weight tuples (k11, k12, k21, k22)/resolution with integer
    parts summing to ``resolution``, in lexicographic order, and returns the
    (weights, flip) pairs whose classical-vs-quantum comparison flips.
    """
    if resolution < 1:
        raise ValueError(f"resolution must be a positive integer, got {resolution}")
    hits = []
    r = resolution
    for k11 in range(r + 1):
        for k12 in range(r + 1 - k11):
            for k21 in range(r + 1 - k11 - k12):
                k22 = r - k11 - k12 - k21
                state = InitialStateWeights(k11 / r, k12 / r, k21 / r, k22 / r)
                flip = compare_classical_quantum(game, state).flip
                if flip != FLIP_NONE:
                    hits.append((state, flip))
    return hits

"""Bi-matrix games, initial-state weights and the probabilistic-flip quantization.

A 2x2 bi-matrix game is played by a row player ("male", strategies X1/X2) and
a column player ("female", strategies Y1/Y2).  The quantized version keeps the
classical payoff constants but mixes them through the squared amplitudes of a
shared two-qubit initial state; only those squared magnitudes (weights) enter
any formula here, so that is all we store.
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = [
    "ClassicalBimatrix",
    "SimplifiedGame",
    "InitialStateWeights",
    "KParams",
    "PayoffMatrixPair",
    "ValidationError",
    "quantum_transform",
    "k_params",
    "payoff_male",
    "payoff_female",
    "mw_scheme_oracle",
]

WEIGHT_SUM_TOL = 1e-12


class ValidationError(ValueError):
    """Raised when an input violates a documented invariant."""


def _require_finite(name, value):
    v = float(value)
    if v != v or v in (float("inf"), float("-inf")):
        raise ValidationError(f"{name} must be a finite real, got {value!r}")
    return v


@dataclass(frozen=True)
class ClassicalBimatrix:
    """Payoff constants (a_ij, b_ij): rows = male strategy, columns = female."""

    a11: float
    a12: float
    a21: float
    a22: float
    b11: float
    b12: float
    b21: float
    b22: float

    def __post_init__(self):
        for name in ("a11", "a12", "a21", "a22", "b11", "b12", "b21", "b22"):
            object.__setattr__(self, name, _require_finite(name, getattr(self, name)))

    @property
    def male_matrix(self):
        return ((self.a11, self.a12), (self.a21, self.a22))

    @property
    def female_matrix(self):
        return ((self.b11, self.b12), (self.b21, self.b22))


@dataclass(frozen=True)
class SimplifiedGame:
    """Reduced payoff constants (a, b, c, d).

    Embeds into the full bi-matrix with zero diagonal payoffs:
    a12=a, a21=b, b12=c, b21=d; the replicator flow only sees these four
    combinations, so nothing is lost.
    """

    a: float
    b: float
    c: float
    d: float

    def __post_init__(self):
        for name in ("a", "b", "c", "d"):
            object.__setattr__(self, name, _require_finite(name, getattr(self, name)))

    def to_bimatrix(self) -> ClassicalBimatrix:
        return ClassicalBimatrix(
            a11=0.0, a12=self.a, a21=self.b, a22=0.0,
            b11=0.0, b12=self.c, b21=self.d, b22=0.0,
        )

    @classmethod
    def from_bimatrix(cls, game: ClassicalBimatrix) -> "SimplifiedGame":
        """Reduce a full bi-matrix to the four constants driving the flow.

        The planar replicator field depends on the payoffs only through
        a12-a22, a21-a11, b12-b22, b21-b11; games with equal reductions have
        identical dynamics.
        """
        return cls(
            a=game.a12 - game.a22,
            b=game.a21 - game.a11,
            c=game.b12 - game.b22,
            d=game.b21 - game.b11,
        )


@dataclass(frozen=True)
class InitialStateWeights:
    """Squared magnitudes of the initial-state amplitudes, one per basis pair.

    Phases never enter the payoff math, so weights are the whole state as far
    as this package is concerned.
    """

    w11: float
    w12: float
    w21: float
    w22: float

    def __post_init__(self):
        for name in ("w11", "w12", "w21", "w22"):
            v = _require_finite(name, getattr(self, name))
            if not 0.0 <= v <= 1.0:
                raise ValidationError(f"{name} must lie in [0, 1], got {v}")
            object.__setattr__(self, name, v)
        total = self.w11 + self.w12 + self.w21 + self.w22
        if abs(total - 1.0) > WEIGHT_SUM_TOL:
            raise ValidationError(f"weights must sum to 1, got {total!r}")

    @classmethod
    def classical(cls) -> "InitialStateWeights":
        """The product state putting all weight on |11>; embeds the classical game."""
        return cls(1.0, 0.0, 0.0, 0.0)

    @classmethod
    def renormalized(cls, w11, w12, w21, w22) -> "InitialStateWeights":
        """Scale nonnegative raw weights so they sum to 1."""
        raw = [_require_finite(n, v) for n, v in
               (("w11", w11), ("w12", w12), ("w21", w21), ("w22", w22))]
        if any(v < 0.0 for v in raw):
            raise ValidationError("weights must be nonnegative")
        total = sum(raw)
        if total <= 0.0:
            raise ValidationError("weights must not all be zero")
        return cls(*(v / total for v in raw))

    def as_tuple(self):
        return (self.w11, self.w12, self.w21, self.w22)


@dataclass(frozen=True)
class KParams:
    """State parameters K1 = w11 - w21, K2 = w22 - w12 driving the quantum field."""

    K1: float
    K2: float


@dataclass(frozen=True)
class PayoffMatrixPair:
    """Quantized payoff matrices: omega for the male player, chi for the female."""

    omega11: float
    omega12: float
    omega21: float
    omega22: float
    chi11: float
    chi12: float
    chi21: float
    chi22: float

    @property
    def omega(self):
        return ((self.omega11, self.omega12), (self.omega21, self.omega22))

    @property
    def chi(self):
        return ((self.chi11, self.chi12), (self.chi21, self.chi22))


def quantum_transform(game: ClassicalBimatrix, state: InitialStateWeights) -> PayoffMatrixPair:
    """Mix the classical payoffs through the state weights.

    Each entry of omega (chi) is the classical payoff vector contracted with a
    permutation of the weights: entry (i, j) uses the weights relabelled as if
    the basis state had been flipped into |ij> from |11>.
    """
    w11, w12, w21, w22 = state.as_tuple()

    def mix(m11, m12, m21, m22):
        return (
            m11 * w11 + m12 * w12 + m21 * w21 + m22 * w22,
            m11 * w12 + m12 * w11 + m21 * w22 + m22 * w21,
            m11 * w21 + m12 * w22 + m21 * w11 + m22 * w12,
            m11 * w22 + m12 * w21 + m21 * w12 + m22 * w11,
        )

    o11, o12, o21, o22 = mix(game.a11, game.a12, game.a21, game.a22)
    c11, c12, c21, c22 = mix(game.b11, game.b12, game.b21, game.b22)
    return PayoffMatrixPair(o11, o12, o21, o22, c11, c12, c21, c22)


def k_params(state: InitialStateWeights) -> KParams:
    return KParams(K1=state.w11 - state.w21, K2=state.w22 - state.w12)


def _check_probability(name, p):
    p = _require_finite(name, p)
    if not 0.0 <= p <= 1.0:
        raise ValidationError(f"{name} must lie in [0, 1], got {p}")
    return p


def _bilinear(matrix, x, y):
    (m11, m12), (m21, m22) = matrix
    return (x * (y * m11 + (1.0 - y) * m12)
            + (1.0 - x) * (y * m21 + (1.0 - y) * m22))


def payoff_male(pair: PayoffMatrixPair, x: float, y: float) -> float:
    """Expected male payoff when X1 is played w.p. x and Y1 w.p. y."""
    x = _check_probability("x", x)
    y = _check_probability("y", y)
    return _bilinear(pair.omega, x, y)


def payoff_female(pair: PayoffMatrixPair, x: float, y: float) -> float:
    """Expected female payoff when X1 is played w.p. x and Y1 w.p. y."""
    x = _check_probability("x", x)
    y = _check_probability("y", y)
    return _bilinear(pair.chi, x, y)


def mw_scheme_oracle(game: ClassicalBimatrix, state: InitialStateWeights,
                     x: float, y: float):
    """Expected payoffs by direct enumeration of the four operator branches.

    The male applies identity w.p. x and a spin flip w.p. 1-x; the female
    likewise with y.  A flip on the first qubit swaps weights w1j <-> w2j, on
    the second qubit wi1 <-> wi2.  Each branch then pays sum(payoff * weight).
    This deliberately avoids the closed-form transformed matrices so it can
    serve as an independent cross-check of :func:`quantum_transform`.
    """
    x = _check_probability("x", x)
    y = _check_probability("y", y)
    w11, w12, w21, w22 = state.as_tuple()
    branches = (
        (x * y, (w11, w12, w21, w22)),                    # I (x) I
        (x * (1.0 - y), (w12, w11, w22, w21)),            # I (x) flip
        ((1.0 - x) * y, (w21, w22, w11, w12)),            # flip (x) I
        ((1.0 - x) * (1.0 - y), (w22, w21, w12, w11)),    # flip (x) flip
    )
    pm = 0.0
    pf = 0.0
    for prob, (v11, v12, v21, v22) in branches:
        pm += prob * (game.a11 * v11 + game.a12 * v12 + game.a21 * v21 + game.a22 * v22)
        pf += prob * (game.b11 * v11 + game.b12 * v12 + game.b21 * v21 + game.b22 * v22)
    return pm, pf

"""Mass-dependent QED beta function and RGE evolution of alpha.

A single fermion of mass m contributes a closed-form beta that vanishes
like Q^2/m^2 far below threshold and saturates at 2 alpha^2 / 3 pi far
above it. The full beta sums the contributions of the nine charged
fermions with exact color/charge weights N_c Q_f^2. Evolution runs in
t = ln(Q / 1 GeV) with an adaptive embedded integrator.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np
from scipy.integrate import solve_ivp
from scipy.optimize import brentq

from .constants import DEFAULT_CONSTANTS, ParticleTable, PhysicalConstants
from .errors import NumericsError, ValidationError

# ODE start: the boundary condition holds at Q -> 0; below this the total
# beta is ~1e-11 and alpha is frozen well past the 1e-10 local tolerance.
Q_START_GEV = 1e-6

_ODE_RTOL = 1e-10
_ODE_ATOL = 1e-14

# fermion-loop shape switches from the log form to its series expansion
# here; both are the same analytic function, the series is just stable
_SERIES_X = 0.5


@dataclass(frozen=True)
class BetaModel:
    table: ParticleTable
    crossover_ratio: float = 0.01

    def __post_init__(self):
        if not 0.0 < self.crossover_ratio <= 0.1:
            raise ValidationError("crossover_ratio must lie in (0, 0.1]")


@dataclass(frozen=True)
class CouplingCurve:
    """Monotone-Q samples of a running coupling."""

    samples: tuple       # ((q_gev, alpha), ...)
    model_id: str

    def __post_init__(self):
        qs = [q for q, _ in self.samples]
        if any(b <= a for a, b in zip(qs, qs[1:])):
            raise ValidationError("curve Q values must be strictly increasing")

    def alpha_at(self, q: float) -> float:
        qs = np.array([s[0] for s in self.samples])
        if not qs[0] <= q <= qs[-1]:
            raise ValidationError(
                f"Q = {q} outside sampled range [{qs[0]}, {qs[-1]}]"
            )
        alphas = np.array([s[1] for s in self.samples])
        return float(np.interp(math.log(q), np.log(qs), alphas))


@dataclass(frozen=True)
class FitResult:
    scale_factor: float
    achieved_inverse_alpha: float
    iterations: int

    def __post_init__(self):
        if self.scale_factor <= 0:
            raise ValidationError("scale_factor must be positive")


def _loop_shape(x: float) -> float:
    """Fermion-loop factor h(x), x = Q/m: h -> x^2/5 small x, -> 1 large x.

    For x < 0.5 the equivalent series in powers of x^2/s^2 (s^2 = x^2 + 4)
    is used; the log form loses all significance there to cancellation.
    """
    if x == 0.0:
        return 0.0
    s_sq = x * x + 4.0
    if x < _SERIES_X:
        # h = 1 - 6/s^2 + sum_{k>=1} 24 x^(2k-2) / ((2k+1) s^(2k+2))
        total = 1.0 - 6.0 / s_sq
        x_pow = 1.0                      # x^(2k-2)
        s_pow = s_sq * s_sq              # s^(2k+2)
        k = 1
        while True:
            term = 24.0 * x_pow / ((2 * k + 1) * s_pow)
            total += term
            if term < 1e-18:
                break
            x_pow *= x * x
            s_pow *= s_sq
            k += 1
            if k > 200:
                raise NumericsError("loop-shape series failed to converge")
        return total
    s = math.sqrt(s_sq)
    g = 1.0 + (2.0 / (x * s)) * math.log((s - x) / (s + x))
    return 1.0 - (6.0 / (x * x)) * g


def beta_single(alpha: float, q: float, m: float,
                crossover_ratio: float = 0.01) -> float:
    """One-species beta; series form below the crossover, closed form above."""
    if m <= 0:
        raise ValidationError("fermion mass must be positive")
    if alpha <= 0:
        raise ValidationError("alpha must be positive")
    if q < 0:
        raise ValidationError("Q must be nonnegative")
    if q == 0.0:
        return 0.0
    x = q / m
    scale = 2.0 * alpha * alpha / (3.0 * math.pi)
    if x < crossover_ratio:
        return scale * x * x / 5.0
    return scale * _loop_shape(x)


def beta_total(alpha: float, q: float, model: BetaModel) -> float:
    """Charge-weighted sum over the table: sum N_c Q_f^2 beta_single."""
    total = 0.0
    for species in model.table:
        weight = float(species.charge_weight)
        total += weight * beta_single(alpha, q, species.mass,
                                      model.crossover_ratio)
    return total


def _final_alpha(q_max: float, model: BetaModel, alpha0: float,
                 rtol: float = _ODE_RTOL, atol: float = _ODE_ATOL) -> float:
    def rhs(t, y):
        return [beta_total(y[0], math.exp(t), model)]

    sol = solve_ivp(
        rhs, (math.log(Q_START_GEV), math.log(q_max)), [alpha0],
        method="RK45", rtol=rtol, atol=atol,
    )
    if not sol.success:
        raise NumericsError(f"evolution failed: {sol.message}")
    return float(sol.y[0][-1])


def evolve_alpha(q_max: float, model: BetaModel, steps: int = None,
                 constants: PhysicalConstants = DEFAULT_CONSTANTS,
                 rtol: float = _ODE_RTOL, atol: float = _ODE_ATOL
                 ) -> CouplingCurve:
    """Run alpha up from the Thomson limit to q_max.

    With steps=None the curve holds the integrator's accepted steps;
    a positive steps count requests that many log-spaced samples instead.
    """
    if q_max <= 0:
        raise ValidationError("q_max must be positive")
    alpha0 = constants.alpha
    model_id = f"qed:{len(model.table)}species"
    if q_max <= Q_START_GEV:
        # below every mass the coupling is frozen at the boundary value
        return CouplingCurve(((q_max, alpha0),), model_id)

    def rhs(t, y):
        return [beta_total(y[0], math.exp(t), model)]

    t_span = (math.log(Q_START_GEV), math.log(q_max))
    t_eval = None
    if steps is not None:
        if steps < 2:
            raise ValidationError("steps must be at least 2")
        t_eval = np.linspace(t_span[0], t_span[1], steps)
    sol = solve_ivp(rhs, t_span, [alpha0], method="RK45",
                    rtol=rtol, atol=atol, t_eval=t_eval)
    if not sol.success:
        raise NumericsError(f"evolution failed: {sol.message}")
    samples = tuple(
        (math.exp(t), float(a)) for t, a in zip(sol.t, sol.y[0])
    )
    return CouplingCurve(samples, model_id)


def landau_solution(q: float, m: float, alpha0: float) -> float:
    """Massless one-loop closed form with its pole guarded."""
    if q <= 0 or m <= 0 or alpha0 <= 0:
        raise ValidationError("q, m, alpha0 must be positive")
    denom = 1.0 - (2.0 * alpha0 / (3.0 * math.pi)) * math.log(q / m)
    if denom <= 0.0:
        pole = m * math.exp(3.0 * math.pi / (2.0 * alpha0))
        raise NumericsError(
            f"massless running diverges at the pole scale {pole:.6g} GeV"
        )
    return alpha0 / denom


def _scaled_table(table: ParticleTable, scale: float) -> ParticleTable:
    light = {"u", "d", "s"}
    species = tuple(
        replace(sp, mass=sp.mass * scale) if sp.name in light else sp
        for sp in table
    )
    return ParticleTable(species)


def fit_light_quarks(model: BetaModel, target_inverse_alpha: float,
                     constants: PhysicalConstants = DEFAULT_CONSTANTS
                     ) -> FitResult:
    """Fit a common scale on the three light-quark masses.

    One-dimensional bracketed search so that 1/alpha at the Z mass matches
    the target; leptons and heavy quarks stay fixed. Inverse alpha at M_Z
    grows monotonically with the scale (heavier quarks run less).
    """
    alpha0 = constants.alpha
    q_max = constants.m_z
    evaluations = [0]

    def inverse_alpha(scale):
        evaluations[0] += 1
        scaled = BetaModel(_scaled_table(model.table, scale),
                           model.crossover_ratio)
        return 1.0 / _final_alpha(q_max, scaled, alpha0)

    lo_u, hi_u = -3.0, 3.0   # log10 of the scale bracket
    ia_lo = inverse_alpha(10.0 ** lo_u)
    ia_hi = inverse_alpha(10.0 ** hi_u)
    if not ia_lo <= target_inverse_alpha <= ia_hi:
        raise NumericsError(
            f"target 1/alpha = {target_inverse_alpha} outside the reachable "
            f"range [{ia_lo:.6f}, {ia_hi:.6f}] for light-quark scales in "
            "[1e-3, 1e3]"
        )

    def residual(u):
        return inverse_alpha(10.0 ** u) - target_inverse_alpha

    u = brentq(residual, lo_u, hi_u, xtol=1e-5)
    scale = 10.0 ** u
    achieved = inverse_alpha(scale)
    if abs(achieved - target_inverse_alpha) > 1e-3:
        raise NumericsError(
            f"fit stalled: achieved {achieved:.6f} vs target "
            f"{target_inverse_alpha:.6f}"
        )
    return FitResult(scale_factor=scale, achieved_inverse_alpha=achieved,
                     iterations=evaluations[0])

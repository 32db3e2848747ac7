"""Strong-coupling running: the standard one-loop scale scheme, the
mu-anchored solution and its inversion, a quark-mass-retaining evolution
model, and hadronization-threshold arithmetic.

The mass-retaining beta keeps every quark's loop factor alive instead of
truncating to an active-flavor count:

    Q d alpha_s / dQ = -(alpha_s^2 / 2 pi) [ 11 - (2/3) sum_q F(Q, m_q) ]

with F the same fermion-loop shape as in the electromagnetic beta
(F -> 1 for Q >> m, F -> Q^2/5m^2 for Q << m). The probed-flavor label on
a curve is metadata; the beta always sums all quarks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import solve_ivp

from .constants import DEFAULT_CONSTANTS, ParticleTable, PhysicalConstants
from .errors import NumericsError, ValidationError
from .qed import CouplingCurve, _loop_shape

HBARC_GEV_FM = 0.19733        # hbar c in GeV fm

# evolution guard: report blow-up once the coupling passes 4 pi
ALPHA_S_GUARD = 4.0 * math.pi

_ODE_RTOL = 1e-10
_ODE_ATOL = 1e-14


@dataclass(frozen=True)
class QcdScheme:
    n_f: int
    beta0: float
    lambda_gev: float

    def __post_init__(self):
        if not 3 <= self.n_f <= 6:
            raise ValidationError("n_f must lie in [3, 6]")
        if self.beta0 <= 0:
            raise ValidationError("beta0 must be positive")
        if self.lambda_gev <= 0:
            raise ValidationError("lambda must be positive")


def beta0_for(n_f: int) -> float:
    if not 3 <= n_f <= 6:
        raise ValidationError("n_f must lie in [3, 6]")
    return 11.0 - 2.0 * n_f / 3.0


def make_scheme(n_f: int, lambda_gev: float) -> QcdScheme:
    return QcdScheme(n_f=n_f, beta0=beta0_for(n_f), lambda_gev=lambda_gev)


@dataclass(frozen=True)
class MassiveQcdModel:
    table: ParticleTable          # quarks drive the beta; leptons ignored
    alpha_s_mz: float
    flavor: str

    def __post_init__(self):
        if not 0.0 < self.alpha_s_mz < 1.0:
            raise ValidationError("alpha_s anchor must lie in (0, 1)")
        names = {s.name for s in self.table.quarks()}
        if self.flavor not in names:
            raise ValidationError(
                f"flavor '{self.flavor}' not among quarks {sorted(names)}"
            )


@dataclass(frozen=True)
class ThresholdEstimate:
    lambda_i: float       # GeV
    alpha_max: float
    length_scale: float   # fm
    energy: float         # GeV


@dataclass(frozen=True)
class MassiveEvolution:
    curve: CouplingCurve
    lambda_peak: float    # None when the curve has no interior maximum
    alpha_max: float      # None when the curve has no interior maximum


def lambda_qcd(alpha_s_mz: float, n_f: int,
               constants: PhysicalConstants = DEFAULT_CONSTANTS) -> float:
    """Divergence scale of the one-loop coupling anchored at the Z mass."""
    if not 0.0 < alpha_s_mz < 1.0:
        raise ValidationError("alpha_s(M_Z) must lie in (0, 1)")
    if not 3 <= n_f <= 6:
        raise ValidationError("n_f must lie in [3, 6]")
    return constants.m_z_strong * math.exp(
        -2.0 * math.pi / (alpha_s_mz * beta0_for(n_f))
    )


def alpha_s_lambda(q: float, scheme: QcdScheme) -> float:
    """One-loop coupling in the scale form, 2 pi / (beta0 ln(Q/Lambda))."""
    if q <= scheme.lambda_gev:
        raise NumericsError(
            f"coupling diverges at and below Lambda = "
            f"{scheme.lambda_gev:.6g} GeV (infrared confinement)"
        )
    return 2.0 * math.pi / (scheme.beta0 * math.log(q / scheme.lambda_gev))


def alpha_s_mu(q: float, mu: float, alpha_mu: float, n_f: int) -> float:
    """One-loop coupling anchored at (mu, alpha_mu)."""
    if q <= 0 or mu <= 0:
        raise ValidationError("Q and mu must be positive")
    if alpha_mu <= 0:
        raise ValidationError("alpha_s(mu) must be positive")
    if not 3 <= n_f <= 6:
        raise ValidationError("n_f must lie in [3, 6]")
    denom = 1.0 + alpha_mu * (beta0_for(n_f) / (2.0 * math.pi)) \
        * math.log(q / mu)
    if denom <= 0.0:
        raise NumericsError(
            f"pole crossed: anchored form has nonpositive denominator "
            f"{denom:.6g} at Q = {q:.6g} GeV"
        )
    return alpha_mu / denom


def _massive_beta(alpha_s: float, q: float, quarks) -> float:
    flavor_sum = sum(_loop_shape(q / sp.mass) for sp in quarks)
    return -(alpha_s * alpha_s / (2.0 * math.pi)) \
        * (11.0 - (2.0 / 3.0) * flavor_sum)


def evolve_alpha_s_massive(model: MassiveQcdModel, q_min: float,
                           steps: int = None,
                           constants: PhysicalConstants = DEFAULT_CONSTANTS,
                           rtol: float = _ODE_RTOL, atol: float = _ODE_ATOL
                           ) -> MassiveEvolution:
    """Integrate the mass-retaining beta down from the Z-mass anchor.

    Raises a blow-up report if the coupling passes 4 pi before q_min is
    reached. The returned curve is ascending in Q; a maximum is reported
    only if an interior one exists (the reconstructed beta never produces
    one, so lambda_peak/alpha_max are None in practice).
    """
    if q_min <= 0:
        raise ValidationError("q_min must be positive")
    m_z = constants.m_z_strong
    if q_min >= m_z:
        raise ValidationError("q_min must lie below the Z mass anchor")
    quarks = model.table.quarks()

    def rhs(t, y):
        return [_massive_beta(y[0], math.exp(t), quarks)]

    def guard(t, y):
        return y[0] - ALPHA_S_GUARD
    guard.terminal = True
    guard.direction = 1.0

    t_span = (math.log(m_z), math.log(q_min))
    t_eval = None
    if steps is not None:
        if steps < 2:
            raise ValidationError("steps must be at least 2")
        t_eval = np.linspace(t_span[0], t_span[1], steps)
    sol = solve_ivp(rhs, t_span, [model.alpha_s_mz], method="RK45",
                    rtol=rtol, atol=atol, t_eval=t_eval, events=guard)
    if not sol.success:
        raise NumericsError(f"evolution failed: {sol.message}")
    if sol.status == 1:           # guard event fired before q_min
        last_q = math.exp(float(sol.t_events[0][0]))
        raise NumericsError(
            f"coupling exceeded 4 pi before reaching q_min; last valid "
            f"Q = {last_q:.6g} GeV"
        )

    # integration ran downward; curve contract wants ascending Q
    pairs = sorted(
        (math.exp(t), float(a)) for t, a in zip(sol.t, sol.y[0])
    )
    curve = CouplingCurve(tuple(pairs),
                          model_id=f"qcd-massive:{model.flavor}")

    lambda_peak = None
    alpha_max = None
    alphas = [a for _, a in pairs]
    qs = [q for q, _ in pairs]
    for i in range(1, len(pairs) - 1):
        if alphas[i] > alphas[i - 1] and alphas[i] > alphas[i + 1]:
            lambda_peak, alpha_max = qs[i], alphas[i]
            break
    return MassiveEvolution(curve=curve, lambda_peak=lambda_peak,
                            alpha_max=alpha_max)


def hadronization_threshold(lambda_i: float, alpha_max: float
                            ) -> ThresholdEstimate:
    """Length and energy scales from a divergence scale and a peak coupling.

    length = hbar c / Lambda in fm; energy = alpha_max * Lambda, both exact
    products of the inputs.
    """
    if lambda_i <= 0 or alpha_max <= 0:
        raise ValidationError("lambda_i and alpha_max must be positive")
    return ThresholdEstimate(
        lambda_i=lambda_i,
        alpha_max=alpha_max,
        length_scale=HBARC_GEV_FM / lambda_i,
        energy=alpha_max * lambda_i,
    )

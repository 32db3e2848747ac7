"""Hydrogenlike level arithmetic: reduced-mass Dirac energies, the
noncovariant radiative coefficients, the p^4 level shift, and the
assembled 2S-2P splitting.

Masses are in MeV throughout this module (atomic scale); frequencies leave
in Hz. The radiative piece runs on the renormalized momentum-quartic
coefficient b2r; the vacuum-polarization and nuclear-size terms are
external inputs with defaults rederived here (see uehling_2s_shift).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .constants import DEFAULT_CONSTANTS, PhysicalConstants
from .errors import ValidationError

# external additive terms for the 2S-2P assembly, MHz
DEFAULT_VP_MHZ = -27.13        # Uehling 2S shift, see uehling_2s_shift
DEFAULT_NUCLEAR_MHZ = 0.10     # proton size effect, borrowed value

CONVENTIONS = ("standard_2l", "alt_3l")
COEFFICIENT_MODES = ("formula", "frozen_constant")

_B2R_FROZEN = 1.99808


@dataclass(frozen=True)
class AtomConfig:
    z: int
    nuclear_mass: float     # MeV
    n: int
    l: int
    j: float

    def __post_init__(self):
        if self.z < 1:
            raise ValidationError("Z must be at least 1")
        if self.nuclear_mass <= 0:
            raise ValidationError("nuclear mass must be positive")
        if self.n < 1:
            raise ValidationError("n must be at least 1")
        if not 0 <= self.l < self.n:
            raise ValidationError("l must satisfy 0 <= l < n")
        if self.j <= 0 or abs(abs(self.j - self.l) - 0.5) > 1e-12:
            raise ValidationError("j must be l +/- 1/2 and positive")


@dataclass(frozen=True)
class RadiativeCoefficients:
    b1: float      # MeV^-1, zero once the first constant is fixed
    b2: float      # MeV^-3
    b0p: float     # zero once the quartic-sector constants are fixed
    b1p: float     # MeV^-1
    b2p: float     # MeV^-3
    beta: float    # dimensionless mass-shift ratio
    b2r: float     # MeV^-3, renormalized coefficient
    coefficient_mode: str


@dataclass(frozen=True)
class TransitionReport:
    baseline: float                # Hz
    radiative: float               # Hz
    vacuum_polarization: float     # Hz
    nuclear_size: float            # Hz
    total: float                   # Hz


def reduced_mass(m_e: float, m_n: float) -> float:
    if m_e <= 0 or m_n <= 0:
        raise ValidationError("masses must be positive")
    return m_e * m_n / (m_e + m_n)


def bohr_binding(z: int, n: int, mu: float,
                 constants: PhysicalConstants = DEFAULT_CONSTANTS) -> float:
    """Nonrelativistic binding energy Z^2 alpha^2 mu / 2 n^2 (positive)."""
    if n < 1:
        raise ValidationError("n must be at least 1")
    alpha = constants.alpha
    return (z * z) * alpha * alpha * mu / (2.0 * n * n)


def rde_level(cfg: AtomConfig,
              constants: PhysicalConstants = DEFAULT_CONSTANTS) -> float:
    """Dirac point-nucleus level with the reduced mass, in MeV.

    E = mu ([1 + (Z alpha / (n - delta_j))^2]^(-1/2) - 1), negative for
    bound states; delta_j = (j + 1/2) - sqrt((j + 1/2)^2 - (Z alpha)^2).
    """
    alpha = constants.alpha
    z_alpha = cfg.z * alpha
    kappa = cfg.j + 0.5
    if z_alpha >= kappa:
        raise ValidationError(
            f"Z alpha = {z_alpha:.6g} reaches the j + 1/2 = {kappa} bound; "
            "the point-nucleus level collapses"
        )
    mu = reduced_mass(constants.electron_mass, cfg.nuclear_mass)
    delta_j = kappa - math.sqrt(kappa * kappa - z_alpha * z_alpha)
    ratio = z_alpha / (cfg.n - delta_j)
    return mu * (1.0 / math.sqrt(1.0 + ratio * ratio) - 1.0)


def _mev_to_hz(e_mev: float, constants: PhysicalConstants) -> float:
    return e_mev * 1e6 * constants.ev_to_hz


_ATOMS = {"H": "proton_mass", "D": "deuteron_mass"}


def rde_transition_1s2s(atom: str,
                        constants: PhysicalConstants = DEFAULT_CONSTANTS
                        ) -> float:
    """1S-2S interval in Hz for hydrogen or deuterium."""
    if atom not in _ATOMS:
        raise ValidationError("atom must be 'H' or 'D'")
    m_n = getattr(constants, _ATOMS[atom])
    e1 = rde_level(AtomConfig(z=1, nuclear_mass=m_n, n=1, l=0, j=0.5),
                   constants)
    e2 = rde_level(AtomConfig(z=1, nuclear_mass=m_n, n=2, l=0, j=0.5),
                   constants)
    return _mev_to_hz(e2 - e1, constants)


def radiative_coefficients(mu: float, g: float, mode: str,
                           constants: PhysicalConstants = DEFAULT_CONSTANTS
                           ) -> RadiativeCoefficients:
    """Momentum-expansion coefficients of the noncovariant self-energy.

    b1 and b0p vanish by the constants-fixing choices (recorded as zeros);
    the surviving quartic coefficients combine with the mass-shift ratio
    beta into the renormalized b2r. Two b2r modes: the assembled formula,
    and a frozen reference constant; they differ by 1.5 percent and are
    never silently mixed.
    """
    if mu <= 0:
        raise ValidationError("mass must be positive")
    if mode not in COEFFICIENT_MODES:
        raise ValidationError(f"mode must be one of {COEFFICIENT_MODES}")
    alpha = constants.alpha
    g_sq_4 = 0.25 * g * g
    mu3 = mu ** 3
    angular = 4.0 * math.log(2.0) / 3.0 + 2.0
    b2 = -2.0 * alpha / (15.0 * math.pi * mu3)
    b1p = g_sq_4 * (alpha / (math.pi * mu)) * angular
    b2p = -g_sq_4 * alpha / (15.0 * math.pi * mu3)
    beta = (g * g * alpha / (2.0 * math.pi)) * angular
    if mode == "formula":
        b2r = b2 + b2p + (3.0 * beta + 3.0 * beta ** 2 + beta ** 3) \
            / (8.0 * mu3)
    else:
        b2r = _B2R_FROZEN * alpha / (math.pi * mu3)
    return RadiativeCoefficients(
        b1=0.0, b2=b2, b0p=0.0, b1p=b1p, b2p=b2p, beta=beta, b2r=b2r,
        coefficient_mode=mode,
    )


def observed_mass(mu: float, beta: float) -> float:
    """Mass after the radiative shift; always below the input mass."""
    if mu <= 0:
        raise ValidationError("mass must be positive")
    if beta <= 0:
        raise ValidationError("beta must be positive")
    return mu / (1.0 + beta)


def _bracket(n: int, l: int, convention: str) -> float:
    if convention == "standard_2l":
        den = 2 * l + 1
    elif convention == "alt_3l":
        den = 3 * l + 1
    else:
        raise ValidationError(f"convention must be one of {CONVENTIONS}")
    return 8.0 * n / den - 3.0


def p4_level_shift(cfg: AtomConfig, mu_obs: float, b2r: float,
                   convention: str = "standard_2l",
                   constants: PhysicalConstants = DEFAULT_CONSTANTS
                   ) -> float:
    """Radiative p^4 shift of one level, in MeV.

    shift = [8n/(2l+1) - 3] b2r (Z alpha)^4 mu_obs^4 / n^4, with the
    alternative 3l+1 denominator kept selectable.
    """
    if mu_obs <= 0:
        raise ValidationError("mass must be positive")
    alpha = constants.alpha
    z_alpha = cfg.z * alpha
    return _bracket(cfg.n, cfg.l, convention) * b2r \
        * z_alpha ** 4 * mu_obs ** 4 / cfg.n ** 4


def lamb_2s_2p(mu_obs: float, b2r: float,
               vp_mhz: float = DEFAULT_VP_MHZ,
               nuclear_mhz: float = DEFAULT_NUCLEAR_MHZ,
               convention: str = "standard_2l",
               nuclear_mass: float = None,
               constants: PhysicalConstants = DEFAULT_CONSTANTS
               ) -> TransitionReport:
    """Assemble the 2S(1/2)-2P(1/2) splitting.

    The point-nucleus baseline cancels exactly (same n and j); what
    remains is the radiative p^4 difference plus the two external terms.
    """
    if nuclear_mass is None:
        nuclear_mass = constants.proton_mass
    cfg_2s = AtomConfig(z=1, nuclear_mass=nuclear_mass, n=2, l=0, j=0.5)
    cfg_2p = AtomConfig(z=1, nuclear_mass=nuclear_mass, n=2, l=1, j=0.5)
    baseline = _mev_to_hz(
        rde_level(cfg_2s, constants) - rde_level(cfg_2p, constants),
        constants,
    )
    radiative = _mev_to_hz(
        p4_level_shift(cfg_2s, mu_obs, b2r, convention, constants)
        - p4_level_shift(cfg_2p, mu_obs, b2r, convention, constants),
        constants,
    )
    vp = vp_mhz * 1e6
    nuclear = nuclear_mhz * 1e6
    return TransitionReport(
        baseline=baseline,
        radiative=radiative,
        vacuum_polarization=vp,
        nuclear_size=nuclear,
        total=baseline + radiative + vp + nuclear,
    )


def uehling_2s_shift(mass_mev: float,
                     constants: PhysicalConstants = DEFAULT_CONSTANTS
                     ) -> float:
    """Standard vacuum-polarization 2S shift, -alpha^5 m / 30 pi, in MHz.

    Evaluated with the electron mass this gives -27.13 MHz, the default
    vacuum-polarization input of the 2S-2P assembly.
    """
    if mass_mev <= 0:
        raise ValidationError("mass must be positive")
    alpha = constants.alpha
    shift_mev = -alpha ** 5 * mass_mev / (30.0 * math.pi)
    return _mev_to_hz(shift_mev, constants) / 1e6

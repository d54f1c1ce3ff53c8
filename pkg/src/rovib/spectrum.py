"""
spectrum.py

Closed-form ro-vibrational energies for the effective P-form potential

    U_eff(r) = Pt1 + Pt2/(e^{b r} + q) + Pt3/(e^{b r} + q)^2

obtained by factorizing the radial Hamiltonian with the superpotential
W(r) = Q1 + Q2/(e^{b r} + q).  With k = hbar^2/(2 mu) and the shorthand

    T = (Pt3 + q Pt2) / (k q^2 b^2),
    D = 1 + 4 Pt3 / (k q^2 b^2),
    s = -(1 + 2 nu) + sign(q) sqrt(D),

the level energy is E = Pt1 - k b^2 (T/s - s/4)^2.  The sign(q) branch
keeps the ground state normalizable on either side of q = 0; the q -> 0
(Morse) limit is singular here and is served by morse_vibrational_energy
instead.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .potentials import (
    PForm,
    SingularRadiusError,
    SpectroscopicParams,
    derive,
    from_params,
    to_pform,
)
from .rotational import EffectiveCoefficients, badawi_coefficients, effective_coefficients
from .units import kinetic_factor


class MorseLimitError(ValueError):
    """Raised when q = 0; use morse_vibrational_energy for that limit."""


@dataclass(frozen=True)
class EnergyLevel:
    nu: int
    J: int
    E: float  # cm^-1, measured from the potential minimum
    bound: bool  # False once the formula has left its monotone range


@dataclass(frozen=True)
class SusyIntermediates:
    """Superpotential coefficients and the factorization ground state."""

    Q1t: float  # 1/Angstrom, negative for a normalizable state
    Q2t: float  # 1/Angstrom, positive root of the factorization quadratic
    E0: float  # cm^-1
    branch: str  # "plus" for q > 0, "minus" for q < 0


@dataclass(frozen=True)
class WavefunctionSample:
    r: float  # Angstrom
    value: float  # unnormalized psi(r)


@dataclass(frozen=True)
class LevelFailure:
    nu: int
    J: int
    error: str


def _check_quantum_number(label: str, value: int) -> None:
    if value != int(value) or value < 0:
        raise ValueError(f"{label} must be a non-negative integer, got {value}")


def _shorthands(pform: PForm, eff: EffectiveCoefficients, mu: float):
    if pform.q == 0.0:
        raise MorseLimitError(
            "q = 0 has no P-form spectrum; use morse_vibrational_energy"
        )
    k = kinetic_factor(mu)
    kq2b2 = k * pform.q**2 * pform.b**2
    T = (eff.Pt3 + pform.q * eff.Pt2) / kq2b2
    D = 1.0 + 4.0 * eff.Pt3 / kq2b2
    return k, T, D


def energy(
    pform: PForm, eff: EffectiveCoefficients, nu: int, mu: float
) -> EnergyLevel:
    """Closed-form level energy; (b, q) from pform, Pt_i from eff.

    Raises MorseLimitError for q = 0 and ValueError when the
    discriminant D turns negative (no real solution at this J).  Past
    the monotone range in nu the value is still returned, flagged
    bound=False.
    """
    _check_quantum_number("nu", nu)
    k, T, D = _shorthands(pform, eff, mu)
    if D < 0.0:
        raise ValueError(
            f"no real solution: discriminant {D:.6g} < 0 at nu={nu}, J={eff.J}"
        )
    s = -(1.0 + 2.0 * nu) + math.copysign(math.sqrt(D), pform.q)
    if s == 0.0:
        raise ValueError(
            f"degenerate quantum-number shift s = 0 at nu={nu}, J={eff.J}"
        )
    bracket = T / s - s / 4.0
    E = eff.Pt1 - k * pform.b**2 * bracket**2
    return EnergyLevel(nu=nu, J=eff.J, E=E, bound=bracket < 0.0)


def susy_intermediates(
    pform: PForm, eff: EffectiveCoefficients, mu: float
) -> SusyIntermediates:
    """Superpotential coefficients Q1t, Q2t and the exact ground level.

    Q2t is the positive root of Q2t^2 + b q Q2t = Pt3/k; Q1t follows
    from (q Pt2 + Pt3)/k = 2 q Q1t Q2t + Q2t^2.  Taking the positive
    root realizes the plus branch for q > 0 and the minus branch for
    q < 0 without a case split.  E0 = Pt1 - k Q1t^2 coincides with
    energy(nu=0) identically.
    """
    k, _, _ = _shorthands(pform, eff, mu)
    bq_half = pform.b * pform.q / 2.0
    radicand = bq_half**2 + eff.Pt3 / k
    if radicand < 0.0:
        raise ValueError(f"no real superpotential: radicand {radicand:.6g} < 0")
    Q2t = -bq_half + math.sqrt(radicand)
    if Q2t == 0.0:
        raise ValueError("superpotential degenerates (Q2t = 0)")
    Q1t = ((pform.q * eff.Pt2 + eff.Pt3) / k - Q2t**2) / (2.0 * pform.q * Q2t)
    return SusyIntermediates(
        Q1t=Q1t,
        Q2t=Q2t,
        E0=eff.Pt1 - k * Q1t**2,
        branch="plus" if pform.q > 0.0 else "minus",
    )


def wavefunction(
    intermediates: SusyIntermediates, pform: PForm, r: float
) -> WavefunctionSample:
    """Unnormalized nodeless ground state at one radius.

    ln psi(r) = Q1t r - (Q2t / (b q)) ln(1 + q e^{-b r}); the log-domain
    form keeps large exponents from overflowing, and the amplitude may
    underflow to 0 far from the well, which is harmless for ratio and
    decay checks.
    """
    if r <= 0.0:
        raise ValueError(f"r must be positive, got {r}")
    arg = pform.q * math.exp(-pform.b * r)
    if arg <= -1.0:
        raise SingularRadiusError("radius at or inside a pole of the potential")
    ln_psi = intermediates.Q1t * r - (
        intermediates.Q2t / (pform.b * pform.q)
    ) * math.log1p(arg)
    return WavefunctionSample(r=r, value=math.exp(ln_psi))


def log_wavefunction(
    intermediates: SusyIntermediates, pform: PForm, r: float
) -> float:
    """ln of the unnormalized ground state; for decay-rate checks."""
    if r <= 0.0:
        raise ValueError(f"r must be positive, got {r}")
    arg = pform.q * math.exp(-pform.b * r)
    if arg <= -1.0:
        raise SingularRadiusError("radius at or inside a pole of the potential")
    return intermediates.Q1t * r - (
        intermediates.Q2t / (pform.b * pform.q)
    ) * math.log1p(arg)


def morse_vibrational_energy(De: float, we: float, nu: int) -> float:
    """Morse level we (nu + 1/2) - we^2 (nu + 1/2)^2 / (4 De), J = 0.

    Valid while nu + 1/2 < 2 De / we; beyond that the Morse well holds
    no further bound states and ValueError is raised.
    """
    _check_quantum_number("nu", nu)
    if De <= 0.0 or we <= 0.0:
        raise ValueError("De and we must be positive")
    x = nu + 0.5
    if x >= 2.0 * De / we:
        raise ValueError(
            f"nu={nu} beyond the Morse bound spectrum (nu + 1/2 >= 2 De/we)"
        )
    return we * x - we**2 * x**2 / (4.0 * De)


def level(params: SpectroscopicParams, nu: int, J: int) -> EnergyLevel:
    """Full pipeline for one level: derive, factorize, shift, solve."""
    _check_quantum_number("J", J)
    derived = derive(params)
    pform = to_pform(from_params(params))
    coeffs = badawi_coefficients(derived.u, params.eta)
    eff = effective_coefficients(pform, coeffs, J, params.mu, params.re)
    return energy(pform, eff, nu, params.mu)


def level_table(
    params: SpectroscopicParams,
    nu_list: list[int],
    J_list: list[int],
) -> tuple[list[EnergyLevel], list[LevelFailure]]:
    """Levels for every (nu, J) pair, row-major in nu then J.

    Entries that fail (negative discriminant, Morse limit) are collected
    as LevelFailure records instead of aborting the table.
    """
    if not nu_list or not J_list:
        raise ValueError("nu_list and J_list must be non-empty")
    rows: list[EnergyLevel] = []
    failures: list[LevelFailure] = []
    for nu in nu_list:
        for J in J_list:
            try:
                rows.append(level(params, nu, J))
            except (ValueError, SingularRadiusError) as exc:
                failures.append(LevelFailure(nu=nu, J=J, error=str(exc)))
    return rows, failures

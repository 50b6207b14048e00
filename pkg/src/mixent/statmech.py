"""Partition functions, Boltzmann occupations, and counting-model entropies.

Reduced units throughout: k_B = 1, temperatures in energy units, entropies
in nats.  Multiply by Boltzmann's constant at the presentation layer if SI
values are wanted; nothing in here needs to know.

The same most-probable occupation set {n_i} feeds three entropy variants
that differ only in how microstates are counted:

    distinguishable     ln[N! prod(g_i^n_i / n_i!)]
    gibbs-corrected     ln[   prod(g_i^n_i / n_i!)]
    bose-approximate    sum ln(g_i^n_i / n_i!)  (dilute multiset count)

The corrected and bose-approximate expressions coincide term by term; both
tags are kept because they arrive at the expression from different counting
stories, and reports should say which story was asked for.  ln n! is taken
under a selectable Stirling form; the two-term form makes the corrected
entropy exactly extensive.
"""

from __future__ import annotations

import math
import operator
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

import numpy as np

from .combinatorics import StirlingForm
from .errors import DomainError

__all__ = [
    "CountingModel",
    "LevelSpec",
    "EnsembleSpec",
    "EntropyResult",
    "partition_function",
    "log_partition_function",
    "occupations",
    "internal_energy",
    "entropy_from_levels",
    "ideal_gas_entropy",
    "gibbs_shannon_entropy",
    "helmholtz_free_energy",
]


class CountingModel(Enum):
    """How microstates are counted when turning occupations into entropy."""

    DISTINGUISHABLE = "distinguishable"
    GIBBS_CORRECTED = "gibbs-corrected"
    BOSE_APPROXIMATE = "bose-approximate"


@dataclass(frozen=True)
class LevelSpec:
    """One energy level: energy in reduced units, integer degeneracy >= 1."""

    energy: float
    degeneracy: int = 1

    def __post_init__(self) -> None:
        energy = float(self.energy)
        if not math.isfinite(energy):
            raise DomainError(f"level energy must be finite, got {self.energy!r}")
        object.__setattr__(self, "energy", energy)
        try:
            degeneracy = operator.index(self.degeneracy)
        except TypeError:
            raise DomainError(
                f"degeneracy must be an integer, got {self.degeneracy!r}"
            ) from None
        if degeneracy < 1:
            raise DomainError(f"degeneracy must be >= 1, got {degeneracy}")
        object.__setattr__(self, "degeneracy", degeneracy)


@dataclass(frozen=True)
class EnsembleSpec:
    """N particles at temperature T over a fixed set of levels."""

    levels: tuple[LevelSpec, ...]
    N: int
    T: float

    def __post_init__(self) -> None:
        levels = tuple(
            lv if isinstance(lv, LevelSpec) else LevelSpec(*lv)
            for lv in self.levels
        )
        if not levels:
            raise DomainError("ensemble needs at least one level")
        object.__setattr__(self, "levels", levels)
        try:
            N = operator.index(self.N)
        except TypeError:
            raise DomainError(f"N must be an integer, got {self.N!r}") from None
        if N < 1:
            raise DomainError(f"N must be >= 1, got {N}")
        object.__setattr__(self, "N", N)
        T = float(self.T)
        if not (math.isfinite(T) and T > 0):
            raise DomainError(f"T must be finite and > 0, got {self.T!r}")
        object.__setattr__(self, "T", T)


@dataclass(frozen=True)
class EntropyResult:
    """Entropy in units of k_B, tagged with how it was counted."""

    S: float
    per_particle: float
    model: CountingModel
    stirling_form: StirlingForm


def _as_levels(levels: Iterable[LevelSpec]) -> tuple[LevelSpec, ...]:
    out = tuple(
        lv if isinstance(lv, LevelSpec) else LevelSpec(*lv) for lv in levels
    )
    if not out:
        raise DomainError("need at least one level")
    return out


def _check_temperature(T: float) -> float:
    T = float(T)
    if not (math.isfinite(T) and T > 0):
        raise DomainError(f"T must be finite and > 0, got {T!r}")
    return T


def _level_arrays(levels: tuple[LevelSpec, ...]) -> tuple[np.ndarray, np.ndarray]:
    energies = np.array([lv.energy for lv in levels], dtype=float)
    degeneracies = np.array([lv.degeneracy for lv in levels], dtype=float)
    return energies, degeneracies


def log_partition_function(levels: Iterable[LevelSpec], T: float) -> float:
    """ln Z for a single particle over the given levels.

    Shifts by the minimum energy before exponentiating, so deep levels at
    tiny T do not underflow everything to zero.
    """
    lvls = _as_levels(levels)
    T = _check_temperature(T)
    energies, degeneracies = _level_arrays(lvls)
    shift = float(energies.min())
    weights = degeneracies * np.exp(-(energies - shift) / T)
    return -shift / T + math.log(float(weights.sum()))


def partition_function(levels: Iterable[LevelSpec], T: float) -> float:
    """Single-particle partition sum Z = sum g_i exp(-e_i / T)."""
    return math.exp(log_partition_function(levels, T))


def occupations(ensemble: EnsembleSpec) -> np.ndarray:
    """Most-probable (Boltzmann) occupations n_i = N g_i e^{-e_i/T} / Z.

    Real-valued ndarray, one entry per level, summing to N.  Computed from
    max-shifted ratios so extreme e/T stay finite.
    """
    energies, degeneracies = _level_arrays(ensemble.levels)
    shift = float(energies.min())
    weights = degeneracies * np.exp(-(energies - shift) / ensemble.T)
    return ensemble.N * weights / float(weights.sum())


def internal_energy(ensemble: EnsembleSpec) -> float:
    """U = sum n_i e_i at the most-probable occupations."""
    energies, _ = _level_arrays(ensemble.levels)
    n = occupations(ensemble)
    return float(n @ energies)


def entropy_from_levels(
    ensemble: EnsembleSpec,
    model: CountingModel,
    stirling_form: StirlingForm = StirlingForm.TWO_TERM,
) -> EntropyResult:
    """Entropy of the most-probable occupation set under a counting model.

    Evaluates ln W with ln n! taken under ``stirling_form``.  Levels with
    zero occupation contribute nothing (the n ln n -> 0 limit).  Under the
    two-term form the distinguishable entropy collapses to the classic
    N ln Z + U/T; that identity is a good end-to-end check and holds to
    ~1e-9 relative in double precision.
    """
    if not isinstance(model, CountingModel):
        raise DomainError(f"unknown counting model: {model!r}")
    _, degeneracies = _level_arrays(ensemble.levels)
    n = occupations(ensemble)
    f = stirling_form.log_factorial
    core = 0.0
    for n_i, g_i in zip(n, degeneracies):
        if n_i > 0.0:
            core += n_i * math.log(g_i) - f(n_i)
    if model is CountingModel.DISTINGUISHABLE:
        S = f(float(ensemble.N)) + core
    else:
        # gibbs-corrected == distinguishable - ln N!; bose-approximate
        # arrives at the same per-level sum from the multiset count
        S = core
    return EntropyResult(
        S=S, per_particle=S / ensemble.N, model=model, stirling_form=stirling_form
    )


def _ideal_gas_S(
    n: float,
    V: float,
    T: float,
    model: CountingModel,
    stirling_form: StirlingForm,
    constant: float,
) -> float:
    """Ideal-gas entropy for a (possibly non-integer) particle number.

    S = n ln V + (3/2) n ln T + C, minus ln n! under the chosen form for
    the corrected models.  Shared by the public integer-N wrapper and the
    mixing code, which slices gases into real-valued parts.
    """
    S = n * math.log(V) + 1.5 * n * math.log(T) + constant
    if model is not CountingModel.DISTINGUISHABLE and n > 0:
        S -= stirling_form.log_factorial(n)
    return S


def ideal_gas_entropy(
    N: int,
    V: float,
    T: float,
    model: CountingModel,
    stirling_form: StirlingForm = StirlingForm.TWO_TERM,
    constant: float = 0.0,
) -> EntropyResult:
    """Monatomic ideal-gas entropy, additive constant left configurable.

    Distinguishable counting gives S = N ln V + (3/2) N ln T + C, which is
    not extensive in N.  The corrected models subtract ln N!; under the
    two-term form that lands on N ln(V/N) + (3/2) N ln T + N + C, which is.
    Only entropy differences at fixed N are meaningful unless the caller
    pins down ``constant``.
    """
    if not isinstance(model, CountingModel):
        raise DomainError(f"unknown counting model: {model!r}")
    try:
        N = operator.index(N)
    except TypeError:
        raise DomainError(f"N must be an integer, got {N!r}") from None
    if N < 1:
        raise DomainError(f"N must be >= 1, got {N}")
    V = float(V)
    if not (math.isfinite(V) and V > 0):
        raise DomainError(f"V must be finite and > 0, got {V!r}")
    T = _check_temperature(T)
    S = _ideal_gas_S(float(N), V, T, model, stirling_form, float(constant))
    return EntropyResult(
        S=S, per_particle=S / N, model=model, stirling_form=stirling_form
    )


def gibbs_shannon_entropy(probabilities: Sequence[float]) -> float:
    """-sum p ln p over a probability vector.

    Zero entries contribute nothing (p ln p -> 0).  The vector must be
    nonnegative and sum to 1 within 1e-9; anything else is a DomainError,
    not a silent renormalization.
    """
    p = np.asarray(probabilities, dtype=float)
    if p.ndim != 1 or p.size == 0:
        raise DomainError("probability vector must be 1-d and non-empty")
    if np.any(p < 0) or not np.all(np.isfinite(p)):
        raise DomainError("probabilities must be finite and nonnegative")
    total = float(p.sum())
    if abs(total - 1.0) > 1e-9:
        raise DomainError(f"probabilities sum to {total!r}, not 1")
    positive = p[p > 0]
    return float(-(positive * np.log(positive)).sum())


def helmholtz_free_energy(
    ensemble: EnsembleSpec,
    model: CountingModel,
    stirling_form: StirlingForm = StirlingForm.TWO_TERM,
) -> float:
    """F = U - T S with S counted under the given model."""
    U = internal_energy(ensemble)
    S = entropy_from_levels(ensemble, model, stirling_form).S
    return U - ensemble.T * S

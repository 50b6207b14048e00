"""Entropy bookkeeping for joining, partitioning, and mixing ideal gases.

Scenarios are isothermal: compartments share one temperature and the walls
between them are removed (or inserted) without heat exchange against a
bath.  Entropy changes then come entirely from counting, which is where
the interesting paradoxes live:

  * Under distinguishable counting, merely splitting a gas into parts
    changes its entropy; the corrected (N!-divided) count restores
    extensivity and makes the split a non-event.
  * Mixing two different gases at matched densities gains ln 2 per
    particle; the same operation on one gas gains nothing.  The jump
    between those two answers is discontinuous in the species label but
    continuous in the quantum overlap between the species' states, which
    is what :func:`overlap_weighted_mixing_entropy` interpolates.

Reduced units: k_B = 1, entropies in nats, work in T-units of energy.
"""

from __future__ import annotations

import itertools
import math
import operator
from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from .combinatorics import StirlingForm
from .errors import DomainError
from .statmech import CountingModel, EntropyResult, _ideal_gas_S

__all__ = [
    "GasCompartment",
    "SpeciesOverlap",
    "Weighting",
    "MixingScenario",
    "MixingReport",
    "partition_change_entropy",
    "mixing_entropy",
    "overlap_weighted_mixing_entropy",
    "separation_work",
    "spin_field_scenario",
]

_REL_TOL = 1e-12


def _check_positive_float(name: str, value: float) -> float:
    value = float(value)
    if not (math.isfinite(value) and value > 0):
        raise DomainError(f"{name} must be finite and > 0, got {value!r}")
    return value


def _check_positive_int(name: str, value: int) -> int:
    try:
        n = operator.index(value)
    except TypeError:
        raise DomainError(f"{name} must be an integer, got {value!r}") from None
    if n < 1:
        raise DomainError(f"{name} must be >= 1, got {n}")
    return n


@dataclass(frozen=True)
class GasCompartment:
    """One compartment of ideal gas: a species label, N, V, and T."""

    species: str
    N: int
    V: float
    T: float

    def __post_init__(self) -> None:
        if not isinstance(self.species, str) or not self.species:
            raise DomainError(f"species must be a non-empty string, got {self.species!r}")
        object.__setattr__(self, "N", _check_positive_int("N", self.N))
        object.__setattr__(self, "V", _check_positive_float("V", self.V))
        object.__setattr__(self, "T", _check_positive_float("T", self.T))


@dataclass(frozen=True)
class SpeciesOverlap:
    """Quantum overlap |<a|b>|^2 between the internal states of two species.

    0 means fully orthogonal (classically distinct), 1 means the labels
    name the same state.  The pair is unordered; the constructor sorts it.
    """

    species_a: str
    species_b: str
    overlap: float

    def __post_init__(self) -> None:
        a, b = self.species_a, self.species_b
        for name in (a, b):
            if not isinstance(name, str) or not name:
                raise DomainError(f"species must be a non-empty string, got {name!r}")
        if a == b:
            raise DomainError(f"overlap of species {a!r} with itself is fixed at 1")
        if b < a:
            a, b = b, a
        object.__setattr__(self, "species_a", a)
        object.__setattr__(self, "species_b", b)
        q = float(self.overlap)
        if not (0.0 <= q <= 1.0) or not math.isfinite(q):
            raise DomainError(f"overlap must lie in [0, 1], got {self.overlap!r}")
        object.__setattr__(self, "overlap", q)

    @property
    def pair(self) -> frozenset[str]:
        return frozenset((self.species_a, self.species_b))


class Weighting(Enum):
    """How the overlap q scales the inter-species part of mixing entropy.

    COMPLEMENT multiplies by (1 - q^2): full mixing entropy at q = 0,
    none at q = 1, which is the continuous interpolation consistent with
    the quantum (density-matrix) entropy of combining two overlapping
    single-particle states.  LITERAL multiplies by q^2 itself and is kept
    for contrast; it gets the endpoints backwards.
    """

    COMPLEMENT = "complement"
    LITERAL = "literal"


@dataclass(frozen=True)
class MixingScenario:
    """Initial compartments plus the single final volume they merge into.

    Isothermal by construction: all compartment temperatures must agree
    (1e-12 relative), and final_volume must equal the summed compartment
    volumes (1e-12 relative); violations are domain errors since the
    entropy bookkeeping here has no terms for heat or compression work.
    """

    compartments: tuple[GasCompartment, ...]
    final_volume: float
    overlaps: tuple[SpeciesOverlap, ...] = ()
    model: CountingModel = CountingModel.GIBBS_CORRECTED
    stirling_form: StirlingForm = StirlingForm.TWO_TERM
    weighting: Weighting = Weighting.COMPLEMENT

    def __post_init__(self) -> None:
        comps = tuple(self.compartments)
        if not comps:
            raise DomainError("scenario needs at least one compartment")
        object.__setattr__(self, "compartments", comps)
        t0 = comps[0].T
        for c in comps[1:]:
            if not math.isclose(c.T, t0, rel_tol=_REL_TOL):
                raise DomainError(
                    f"scenario must be isothermal: temperatures {t0!r} and {c.T!r} differ"
                )
        v_sum = sum(c.V for c in comps)
        v_fin = _check_positive_float("final_volume", self.final_volume)
        if not math.isclose(v_fin, v_sum, rel_tol=_REL_TOL):
            raise DomainError(
                f"final_volume {v_fin!r} must equal the summed compartment "
                f"volumes {v_sum!r} (isothermal merge, no compression)"
            )
        object.__setattr__(self, "final_volume", v_fin)
        ovl = tuple(self.overlaps)
        seen: set[frozenset[str]] = set()
        for o in ovl:
            if not isinstance(o, SpeciesOverlap):
                raise DomainError(f"overlaps must be SpeciesOverlap, got {o!r}")
            if o.pair in seen:
                raise DomainError(
                    f"duplicate overlap entry for pair {sorted(o.pair)}"
                )
            seen.add(o.pair)
        object.__setattr__(self, "overlaps", ovl)
        if not isinstance(self.model, CountingModel):
            raise DomainError(f"unknown counting model: {self.model!r}")
        if not isinstance(self.stirling_form, StirlingForm):
            raise DomainError(f"unknown stirling form: {self.stirling_form!r}")
        if not isinstance(self.weighting, Weighting):
            raise DomainError(f"unknown weighting: {self.weighting!r}")

    @classmethod
    def from_compartments(
        cls,
        compartments: Iterable[GasCompartment],
        *,
        overlaps: Iterable[SpeciesOverlap] = (),
        model: CountingModel = CountingModel.GIBBS_CORRECTED,
        stirling_form: StirlingForm = StirlingForm.TWO_TERM,
        weighting: Weighting = Weighting.COMPLEMENT,
    ) -> "MixingScenario":
        comps = tuple(compartments)
        return cls(
            compartments=comps,
            final_volume=sum(c.V for c in comps),
            overlaps=tuple(overlaps),
            model=model,
            stirling_form=stirling_form,
            weighting=weighting,
        )

    @property
    def temperature(self) -> float:
        return self.compartments[0].T

    @property
    def total_particles(self) -> int:
        return sum(c.N for c in self.compartments)

    def species(self) -> tuple[str, ...]:
        """Distinct species labels, sorted."""
        return tuple(sorted({c.species for c in self.compartments}))

    def pair_overlap(self, a: str, b: str) -> float:
        """Overlap for a species pair; 1 for identical labels, 0 if unlisted."""
        if a == b:
            return 1.0
        pair = frozenset((a, b))
        for o in self.overlaps:
            if o.pair == pair:
                return o.overlap
        return 0.0


@dataclass(frozen=True)
class MixingReport:
    """Before/after entropies for a scenario, plus the derived quantities.

    separation_work is T * delta_S: the minimum isothermal work to undo
    the change (meaningful when delta_S >= 0).  overlap_applied records
    the effective overlap q used, 1.0 when only one species is present.
    """

    S_initial: EntropyResult
    S_final: EntropyResult
    delta_S: float
    separation_work: float
    overlap_applied: float


def overlap_weighted_mixing_entropy(
    delta_S_full: float,
    overlap: float,
    weighting: Weighting = Weighting.COMPLEMENT,
) -> float:
    """Scale a fully-distinct mixing entropy by the species overlap q.

    COMPLEMENT: delta * (1 - q^2), which runs continuously from the full
    value at q = 0 to exactly 0 at q = 1.  LITERAL: delta * q^2.
    """
    q = float(overlap)
    if not (0.0 <= q <= 1.0) or not math.isfinite(q):
        raise DomainError(f"overlap must lie in [0, 1], got {overlap!r}")
    if not isinstance(weighting, Weighting):
        raise DomainError(f"unknown weighting: {weighting!r}")
    if weighting is Weighting.COMPLEMENT:
        return delta_S_full * (1.0 - q * q)
    return delta_S_full * (q * q)


def separation_work(delta_S: float, T: float) -> float:
    """Minimum isothermal work T * delta_S to reverse an entropy change.

    Reduced units: with k_B = 1 the product of a temperature and an
    entropy in nats is already an energy.
    """
    T = _check_positive_float("T", T)
    if not math.isfinite(delta_S):
        raise DomainError(f"delta_S must be finite, got {delta_S!r}")
    return T * delta_S


def _entropy_result(S: float, N: int, scenario: MixingScenario) -> EntropyResult:
    return EntropyResult(
        S=S,
        per_particle=S / N,
        model=scenario.model,
        stirling_form=scenario.stirling_form,
    )


def _effective_overlap(scenario: MixingScenario) -> float:
    """The single q applied to a scenario's inter-species mixing term.

    One species: q = 1 by definition.  Two species: their pair overlap.
    More: all pairwise overlaps must agree (the weighting is global, so a
    scenario mixing three species with unequal overlaps has no single
    consistent q and is rejected).
    """
    species = scenario.species()
    if len(species) == 1:
        return 1.0
    values = {
        scenario.pair_overlap(a, b)
        for a, b in itertools.combinations(species, 2)
    }
    if len(values) > 1:
        raise DomainError(
            "pairwise overlaps must all agree when more than two species mix; "
            f"got {sorted(values)}"
        )
    return values.pop()


def mixing_entropy(scenario: MixingScenario) -> MixingReport:
    """Entropy change when a scenario's compartments merge into one volume.

    The change is split into two physically distinct pieces:

      * density equilibration: what the merge would gain even if every
        compartment held the same species (a relative-entropy term,
        nonnegative, zero when densities are matched);
      * inter-species mixing: the extra gain from the species being
        distinct, i.e. the difference between merging as separate species
        and merging as one.

    The overlap weighting applies only to the second piece.  Under
    distinguishable counting the second piece vanishes identically (that
    counting never notices species), which is the paradox: it also never
    pays the price on the first piece, making its total non-extensive.
    """
    T = scenario.temperature
    model = scenario.model
    form = scenario.stirling_form

    S_initial = sum(
        _ideal_gas_S(float(c.N), c.V, T, model, form, 0.0)
        for c in scenario.compartments
    )

    per_species: dict[str, int] = {}
    for c in scenario.compartments:
        per_species[c.species] = per_species.get(c.species, 0) + c.N
    N_total = scenario.total_particles
    V_final = scenario.final_volume

    S_final_distinct = sum(
        _ideal_gas_S(float(n), V_final, T, model, form, 0.0)
        for n in per_species.values()
    )
    S_final_identical = _ideal_gas_S(float(N_total), V_final, T, model, form, 0.0)

    q = _effective_overlap(scenario)
    delta_identical = S_final_identical - S_initial
    delta_inter = S_final_distinct - S_final_identical
    delta_S = delta_identical + overlap_weighted_mixing_entropy(
        delta_inter, q, scenario.weighting
    )
    S_final = S_initial + delta_S
    return MixingReport(
        S_initial=_entropy_result(S_initial, N_total, scenario),
        S_final=_entropy_result(S_final, N_total, scenario),
        delta_S=delta_S,
        separation_work=separation_work(delta_S, T),
        overlap_applied=q,
    )


def partition_change_entropy(
    N: int,
    V: float,
    T: float,
    parts: int,
    model: CountingModel,
    stirling_form: StirlingForm = StirlingForm.TWO_TERM,
) -> MixingReport:
    """Entropy effect of slicing one gas of N particles into equal parts.

    Under the Stirling forms the report is oriented as an insertion:
    S_initial is the undivided gas, S_final the partitioned one.
    Distinguishable counting then loses N ln(parts) (the paradox: walls
    should not change the entropy); the corrected count under the
    two-term form gains or loses exactly nothing.

    Under the EXACT form the corrected count leaves a small positive
    finite-size residual, and the report flips to the removal
    orientation (S_initial partitioned, S_final joined) so that
    delta_S = N ln(parts) - ln(multinomial) >= 0 is the quantity
    reported: the entropy gained by letting the parts rejoin, which two-
    term truncation rounds away.  For two parts it approaches
    (1/2) ln(pi N / 2).  The EXACT form requires parts | N so the
    multinomial is a true integer count.
    """
    N = _check_positive_int("N", N)
    V = _check_positive_float("V", V)
    T = _check_positive_float("T", T)
    parts = _check_positive_int("parts", parts)
    if parts < 2:
        raise DomainError(f"parts must be >= 2, got {parts}")
    if parts > N:
        raise DomainError(f"cannot split N={N} particles into {parts} parts")
    if not isinstance(model, CountingModel):
        raise DomainError(f"unknown counting model: {model!r}")
    if not isinstance(stirling_form, StirlingForm):
        raise DomainError(f"unknown stirling form: {stirling_form!r}")
    exact_corrected = (
        model is not CountingModel.DISTINGUISHABLE
        and stirling_form is StirlingForm.EXACT
    )
    if exact_corrected and N % parts != 0:
        raise DomainError(
            f"exact-form partition residual needs parts | N, got N={N}, parts={parts}"
        )

    n_part = N / parts
    S_joined = _ideal_gas_S(float(N), V, T, model, stirling_form, 0.0)
    S_parted = parts * _ideal_gas_S(n_part, V / parts, T, model, stirling_form, 0.0)

    if exact_corrected:
        S_i, S_f = S_parted, S_joined
    else:
        S_i, S_f = S_joined, S_parted
    delta_S = S_f - S_i
    return MixingReport(
        S_initial=EntropyResult(
            S=S_i, per_particle=S_i / N, model=model, stirling_form=stirling_form
        ),
        S_final=EntropyResult(
            S=S_f, per_particle=S_f / N, model=model, stirling_form=stirling_form
        ),
        delta_S=delta_S,
        separation_work=separation_work(delta_S, T),
        overlap_applied=1.0,
    )


def spin_field_scenario(
    N: int, V: float, T: float, field_on: bool
) -> MixingScenario:
    """Two half-volumes of spin-1/2 gas, optionally split by a field.

    With the field off, "spin-up" and "spin-down" are the same physical
    state (overlap 1): removing the wall changes nothing.  Switching the
    field on makes the two spin populations orthogonal (overlap 0), and
    exactly the same wall removal now generates N ln 2 of mixing entropy,
    extractable as work T * N ln 2.  The information needed to tell the
    halves apart, not anything mechanical, is what changed.
    """
    N = _check_positive_int("N", N)
    if N % 2 != 0:
        raise DomainError(f"spin scenario splits N in half, so N must be even; got {N}")
    V = _check_positive_float("V", V)
    T = _check_positive_float("T", T)
    half_n = N // 2
    half_v = V / 2.0
    compartments = (
        GasCompartment("spin-up", half_n, half_v, T),
        GasCompartment("spin-down", half_n, half_v, T),
    )
    q = 0.0 if field_on else 1.0
    return MixingScenario.from_compartments(
        compartments,
        overlaps=(SpeciesOverlap("spin-up", "spin-down", q),),
    )

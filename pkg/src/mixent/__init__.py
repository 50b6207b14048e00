"""Microstate counting and mixing entropy for ideal-gas scenarios.

The package answers one family of questions three ways: how many
microstates does a configuration of gas particles have, what entropy does
that count imply, and what changes when partitions are inserted, removed,
or two gases mix.  Counting models (distinguishable, permutation-
corrected, dilute-bosonic) are explicit everywhere, because the paradoxes
this package reproduces live exactly in the difference between them.

Reduced units: k_B = 1, entropies in nats.
"""

from .combinatorics import (
    Count,
    OccupationVector,
    StirlingForm,
    binomial,
    classical_symbol_states,
    log_factorial_exact,
    log_factorial_stirling,
    multiplicity_bose_approx,
    multiplicity_bose_exact,
    multiplicity_distinguishable,
    multiplicity_gibbs_corrected,
    multiplicity_gibbs_corrected_exact,
)
from .errors import DomainError, OracleSizeError, ScenarioParseError
from .mixing import (
    GasCompartment,
    MixingReport,
    MixingScenario,
    SpeciesOverlap,
    Weighting,
    mixing_entropy,
    overlap_weighted_mixing_entropy,
    partition_change_entropy,
    separation_work,
    spin_field_scenario,
)
from .oracle import (
    CellSpec,
    EnumerationResult,
    VerificationReport,
    enumerate_assignments,
    enumerate_indistinct,
    verify_counting,
)
from .scenario_io import (
    ScenarioFile,
    load_scenario,
    parse_scenario,
    serialize_scenario,
)
from .statmech import (
    CountingModel,
    EnsembleSpec,
    EntropyResult,
    LevelSpec,
    entropy_from_levels,
    gibbs_shannon_entropy,
    helmholtz_free_energy,
    ideal_gas_entropy,
    internal_energy,
    log_partition_function,
    occupations,
    partition_function,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # errors
    "DomainError",
    "OracleSizeError",
    "ScenarioParseError",
    # combinatorics
    "Count",
    "OccupationVector",
    "StirlingForm",
    "binomial",
    "classical_symbol_states",
    "log_factorial_exact",
    "log_factorial_stirling",
    "multiplicity_bose_approx",
    "multiplicity_bose_exact",
    "multiplicity_distinguishable",
    "multiplicity_gibbs_corrected",
    "multiplicity_gibbs_corrected_exact",
    # statmech
    "CountingModel",
    "EnsembleSpec",
    "EntropyResult",
    "LevelSpec",
    "entropy_from_levels",
    "gibbs_shannon_entropy",
    "helmholtz_free_energy",
    "ideal_gas_entropy",
    "internal_energy",
    "log_partition_function",
    "occupations",
    "partition_function",
    # mixing
    "GasCompartment",
    "MixingReport",
    "MixingScenario",
    "SpeciesOverlap",
    "Weighting",
    "mixing_entropy",
    "overlap_weighted_mixing_entropy",
    "partition_change_entropy",
    "separation_work",
    "spin_field_scenario",
    # oracle
    "CellSpec",
    "EnumerationResult",
    "VerificationReport",
    "enumerate_assignments",
    "enumerate_indistinct",
    "verify_counting",
    # scenario files
    "ScenarioFile",
    "load_scenario",
    "parse_scenario",
    "serialize_scenario",
]

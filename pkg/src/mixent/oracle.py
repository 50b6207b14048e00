"""Brute-force enumeration oracle for the counting formulas.

Everything here iterates actual assignments with itertools and tallies
them; no factorials, binomials, or other closed forms are consulted on
the enumeration side.  The point is independence: if a formula in
:mod:`mixent.combinatorics` is wrong, the oracle disagrees with it.

Runtime is linear in the number of assignments, so hard guards cap the
problem size before a call can wedge the process.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass
from typing import Mapping

from . import combinatorics
from .combinatorics import OccupationVector, _as_nonnegative, _as_positive
from .errors import OracleSizeError

__all__ = [
    "ASSIGNMENT_GUARD",
    "INDISTINCT_GUARD",
    "CellSpec",
    "EnumerationResult",
    "IdentityCheck",
    "VerificationReport",
    "enumerate_assignments",
    "enumerate_indistinct",
    "verify_counting",
    "FIXED_CELL_SUITE",
]

ASSIGNMENT_GUARD = 10**8  # max (sum g)^N for labeled enumeration
INDISTINCT_GUARD = 10**7  # max multiset patterns for unlabeled enumeration

# degeneracy layouts exercised by the standard verification suite
FIXED_CELL_SUITE = (
    (1, 1),
    (2, 1),
    (2, 2),
    (1, 1, 1),
    (3, 2),
)


@dataclass(frozen=True)
class CellSpec:
    """Degeneracies g_i of the cells particles are distributed over."""

    degeneracies: tuple[int, ...]

    def __post_init__(self) -> None:
        degs = tuple(_as_positive("degeneracy", g) for g in self.degeneracies)
        object.__setattr__(self, "degeneracies", degs)
        if not degs:
            raise OracleSizeError("CellSpec needs at least one cell")

    @property
    def total_substates(self) -> int:
        return sum(self.degeneracies)

    def __len__(self) -> int:
        return len(self.degeneracies)


def _as_cells(cells: CellSpec | tuple[int, ...]) -> CellSpec:
    if isinstance(cells, CellSpec):
        return cells
    return CellSpec(tuple(cells))


@dataclass(frozen=True)
class EnumerationResult:
    """Tally of enumerated configurations, grouped by occupation vector."""

    by_occupation: Mapping[OccupationVector, int]
    total: int


def _cell_of_substate(cells: CellSpec) -> tuple[int, ...]:
    return tuple(
        i for i, g in enumerate(cells.degeneracies) for _ in range(g)
    )


def enumerate_assignments(
    N: int, cells: CellSpec | tuple[int, ...]
) -> EnumerationResult:
    """Enumerate every assignment of N labeled particles to substates.

    Iterates all (sum g)^N assignments and groups them by the occupation
    vector they induce on the cells.  Raises OracleSizeError when the
    assignment count exceeds ASSIGNMENT_GUARD.
    """
    N = _as_nonnegative("N", N)
    cells = _as_cells(cells)
    G = cells.total_substates
    n_assignments = G**N
    if n_assignments > ASSIGNMENT_GUARD:
        raise OracleSizeError(
            f"{G}^{N} = {n_assignments} assignments exceeds the "
            f"enumeration guard {ASSIGNMENT_GUARD}"
        )
    cell_of = _cell_of_substate(cells)
    m = len(cells)
    tally: Counter[tuple[int, ...]] = Counter()
    for assignment in itertools.product(range(G), repeat=N):
        occ = [0] * m
        for substate in assignment:
            occ[cell_of[substate]] += 1
        tally[tuple(occ)] += 1
    total = sum(tally.values())
    if total != n_assignments:
        raise AssertionError(
            f"enumeration is broken: visited {total} of {n_assignments}"
        )
    grouped = {OccupationVector(occ): count for occ, count in tally.items()}
    return EnumerationResult(by_occupation=grouped, total=total)


def enumerate_indistinct(
    N: int, cells: CellSpec | tuple[int, ...]
) -> EnumerationResult:
    """Enumerate every multiset of substates for N unlabeled particles.

    Each distinct multiset (pattern) counts once, matching bosonic state
    counting.  Raises OracleSizeError when the pattern count exceeds
    INDISTINCT_GUARD (the guard itself is a size precheck; the reported
    total still comes from actual iteration).
    """
    N = _as_nonnegative("N", N)
    cells = _as_cells(cells)
    G = cells.total_substates
    n_patterns = math.comb(N + G - 1, N)
    if n_patterns > INDISTINCT_GUARD:
        raise OracleSizeError(
            f"{n_patterns} multiset patterns exceeds the enumeration "
            f"guard {INDISTINCT_GUARD}"
        )
    cell_of = _cell_of_substate(cells)
    m = len(cells)
    tally: Counter[tuple[int, ...]] = Counter()
    total = 0
    for pattern in itertools.combinations_with_replacement(range(G), N):
        occ = [0] * m
        for substate in pattern:
            occ[cell_of[substate]] += 1
        tally[tuple(occ)] += 1
        total += 1
    grouped = {OccupationVector(occ): count for occ, count in tally.items()}
    return EnumerationResult(by_occupation=grouped, total=total)


@dataclass(frozen=True)
class IdentityCheck:
    """Outcome of one formula-vs-enumeration comparison."""

    identity: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class VerificationReport:
    """All identity checks for one (N, cells) case."""

    N: int
    cells: CellSpec
    checks: tuple[IdentityCheck, ...]

    @property
    def ok(self) -> bool:
        return all(check.passed for check in self.checks)

    def as_text(self) -> str:
        degs = ",".join(str(g) for g in self.cells.degeneracies)
        lines = []
        for check in self.checks:
            status = "ok" if check.passed else "FAIL"
            lines.append(
                f"{status} N={self.N} cells=({degs}) {check.identity}: {check.detail}"
            )
        return "\n".join(lines)


def verify_counting(
    N: int, cells: CellSpec | tuple[int, ...]
) -> VerificationReport:
    """Compare the counting formulas against exhaustive enumeration.

    Checks, per occupation vector and in aggregate:
      * labeled assignment counts == multiplicity_distinguishable
      * labeled total == classical_symbol_states of the pooled substates
      * multiset pattern counts == product of multiplicity_bose_exact
    Failures carry the first counterexample found.
    """
    cells = _as_cells(cells)
    degs = cells.degeneracies
    checks: list[IdentityCheck] = []

    labeled = enumerate_assignments(N, cells)
    mismatch = None
    for occ, seen in sorted(labeled.by_occupation.items(), key=lambda kv: kv[0].counts):
        predicted = combinatorics.multiplicity_distinguishable(occ, degs).value
        if predicted != seen:
            mismatch = (occ, seen, predicted)
            break
    if mismatch is None:
        checks.append(
            IdentityCheck(
                "distinguishable-multiplicity",
                True,
                f"{len(labeled.by_occupation)} occupation vectors agree",
            )
        )
    else:
        occ, seen, predicted = mismatch
        checks.append(
            IdentityCheck(
                "distinguishable-multiplicity",
                False,
                f"occupation {occ.counts}: enumerated {seen}, formula {predicted}",
            )
        )

    predicted_total = combinatorics.classical_symbol_states(
        N, cells.total_substates
    ).value
    checks.append(
        IdentityCheck(
            "classical-total",
            labeled.total == predicted_total,
            f"enumerated {labeled.total}, formula {predicted_total}",
        )
    )

    unlabeled = enumerate_indistinct(N, cells)
    mismatch = None
    for occ, seen in sorted(
        unlabeled.by_occupation.items(), key=lambda kv: kv[0].counts
    ):
        predicted = math.prod(
            combinatorics.multiplicity_bose_exact(n_i, g_i).value
            for n_i, g_i in zip(occ, degs)
        )
        if predicted != seen:
            mismatch = (occ, seen, predicted)
            break
    if mismatch is None:
        checks.append(
            IdentityCheck(
                "bose-multiplicity",
                True,
                f"{len(unlabeled.by_occupation)} occupation vectors agree",
            )
        )
    else:
        occ, seen, predicted = mismatch
        checks.append(
            IdentityCheck(
                "bose-multiplicity",
                False,
                f"occupation {occ.counts}: enumerated {seen}, formula {predicted}",
            )
        )

    return VerificationReport(N=N, cells=cells, checks=tuple(checks))

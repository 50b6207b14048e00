"""Command-line interface.

Subcommands: count, entropy, mix, sweep-overlap, oracle-check.  Numeric
output is printed to 12 significant digits and is byte-identical across
runs for identical inputs.

Exit codes: 0 on success, 1 when a domain guard rejects the inputs
(negative counts, non-isothermal scenarios, enumeration size caps), 2 for
usage errors and unparseable scenario files.

Entropy and work outputs are in units of k_B (nats) by default.  Set the
environment variable MIXENT_KB=si to multiply by the SI Boltzmann
constant, reading temperatures as kelvin: entropies become J/K, work
becomes J.  MIXENT_KB=reduced (or unset) keeps reduced units.
"""

from __future__ import annotations

import argparse
import dataclasses
import itertools
import json
import os
import sys
from dataclasses import dataclass

from .combinatorics import (
    Count,
    StirlingForm,
    binomial,
    classical_symbol_states,
    multiplicity_bose_approx,
    multiplicity_bose_exact,
    multiplicity_distinguishable,
)
from .errors import DomainError, ScenarioParseError
from .mixing import MixingScenario, SpeciesOverlap, mixing_entropy
from .oracle import FIXED_CELL_SUITE, verify_counting
from .scenario_io import load_scenario
from .statmech import (
    CountingModel,
    EnsembleSpec,
    LevelSpec,
    entropy_from_levels,
    ideal_gas_entropy,
)

KB_SI = 1.380649e-23  # J/K

_RECORD_FIELDS = (
    "scenario",
    "model",
    "stirling_form",
    "weighting",
    "overlap",
    "S_initial",
    "S_final",
    "delta_S",
    "separation_work",
    "units",
)


class _UsageError(Exception):
    """Bad arguments detected after argparse; maps to exit code 2."""


def _fmt(x: float) -> str:
    return format(x, ".12g")


def _resolve_units() -> tuple[float, str]:
    mode = os.environ.get("MIXENT_KB", "reduced").strip().lower() or "reduced"
    if mode == "reduced":
        return 1.0, "kB"
    if mode == "si":
        return KB_SI, "J/K"
    raise DomainError(f"MIXENT_KB must be 'reduced' or 'si', got {mode!r}")


@dataclass(frozen=True)
class OutputRecord:
    scenario: str
    model: str
    stirling_form: str
    weighting: str
    overlap: float
    S_initial: float
    S_final: float
    delta_S: float
    separation_work: float
    units: str


def _record_cells(record: OutputRecord) -> list[str]:
    cells = []
    for name in _RECORD_FIELDS:
        value = getattr(record, name)
        cells.append(_fmt(value) if isinstance(value, float) else str(value))
    return cells


def _emit_csv(records: list[OutputRecord]) -> str:
    lines = [",".join(_RECORD_FIELDS)]
    lines.extend(",".join(_record_cells(r)) for r in records)
    return "\n".join(lines) + "\n"


def _emit_json(records: list[OutputRecord]) -> str:
    # numbers are emitted as 12-significant-digit literals, so the JSON
    # text itself is deterministic, not just the parsed values
    items = []
    for record in records:
        pairs = []
        for name in _RECORD_FIELDS:
            value = getattr(record, name)
            rendered = _fmt(value) if isinstance(value, float) else json.dumps(value)
            pairs.append(f'"{name}": {rendered}')
        items.append("  {" + ", ".join(pairs) + "}")
    return "[\n" + ",\n".join(items) + "\n]\n"


def _emit(records: list[OutputRecord], fmt: str) -> None:
    text = _emit_csv(records) if fmt == "csv" else _emit_json(records)
    sys.stdout.write(text)


def _report_record(
    scenario_id: str,
    scenario: MixingScenario,
    report,
    scale: float,
    units: str,
) -> OutputRecord:
    return OutputRecord(
        scenario=scenario_id,
        model=scenario.model.value,
        stirling_form=scenario.stirling_form.value,
        weighting=scenario.weighting.value,
        overlap=report.overlap_applied,
        S_initial=report.S_initial.S * scale,
        S_final=report.S_final.S * scale,
        delta_S=report.delta_S * scale,
        separation_work=report.separation_work * scale,
        units=units,
    )


def _parse_int_list(text: str, what: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise _UsageError(
            f"{what} must be comma-separated integers, got {text!r}"
        ) from None


def _parse_levels(text: str) -> tuple[LevelSpec, ...]:
    levels = []
    for item in text.split(","):
        energy_part, sep, deg_part = item.partition(":")
        try:
            energy = float(energy_part)
            degeneracy = int(deg_part) if sep else 1
        except ValueError:
            raise _UsageError(
                f"--levels items must look like '<energy>:<degeneracy>', got {item!r}"
            ) from None
        levels.append(LevelSpec(energy, degeneracy))
    return tuple(levels)


def _cmd_count(args: argparse.Namespace, scale: float, units: str) -> int:
    kind = args.kind
    if kind == "multiplicity":
        if args.operands:
            raise _UsageError("multiplicity takes --occ and --deg, not positionals")
        if args.occ is None or args.deg is None:
            raise _UsageError("multiplicity needs both --occ and --deg")
        occ = _parse_int_list(args.occ, "--occ")
        deg = _parse_int_list(args.deg, "--deg")
        count = multiplicity_distinguishable(occ, deg)
    else:
        if args.occ is not None or args.deg is not None:
            raise _UsageError(f"--occ/--deg only apply to 'multiplicity', not {kind!r}")
        if len(args.operands) != 2:
            raise _UsageError(f"{kind} takes exactly two integer operands")
        a, b = args.operands
        if kind == "binomial":
            count = binomial(a, b)
        elif kind == "bose":
            count = multiplicity_bose_exact(a, b)
        elif kind == "bose-approx":
            count = Count.log_only(multiplicity_bose_approx(a, b))
        else:  # symbols
            count = classical_symbol_states(a, b)
    if count.is_log_only:
        print("value = (log-only)")
    else:
        print(f"value = {count.value}")
    print(f"log_value = {_fmt(count.log_value)}")
    return 0


def _cmd_entropy(args: argparse.Namespace, scale: float, units: str) -> int:
    model = CountingModel(args.model)
    form = StirlingForm(args.stirling_form)
    if args.levels is not None:
        if args.V is not None:
            raise _UsageError("--levels and --V are mutually exclusive")
        ensemble = EnsembleSpec(levels=_parse_levels(args.levels), N=args.N, T=args.T)
        result = entropy_from_levels(ensemble, model, form)
    else:
        if args.V is None:
            raise _UsageError("either --V (ideal gas) or --levels is required")
        result = ideal_gas_entropy(args.N, args.V, args.T, model, form, args.constant)
    print(f"S = {_fmt(result.S * scale)}")
    print(f"per_particle = {_fmt(result.per_particle * scale)}")
    print(f"model = {result.model.value}")
    print(f"stirling_form = {result.stirling_form.value}")
    print(f"units = {units}")
    return 0


def _cmd_mix(args: argparse.Namespace, scale: float, units: str) -> int:
    scenario_file = load_scenario(args.scenario)
    report = mixing_entropy(scenario_file.scenario)
    record = _report_record(
        scenario_file.id, scenario_file.scenario, report, scale, units
    )
    _emit([record], args.format)
    return 0


def _cmd_sweep_overlap(args: argparse.Namespace, scale: float, units: str) -> int:
    if args.points < 2:
        raise _UsageError(f"--points must be >= 2, got {args.points}")
    scenario_file = load_scenario(args.scenario)
    base = scenario_file.scenario
    species = base.species()
    records = []
    for i in range(args.points):
        q = i / (args.points - 1)
        overlaps = tuple(
            SpeciesOverlap(a, b, q)
            for a, b in itertools.combinations(species, 2)
        )
        scenario = dataclasses.replace(base, overlaps=overlaps)
        report = mixing_entropy(scenario)
        records.append(
            _report_record(scenario_file.id, scenario, report, scale, units)
        )
    _emit(records, args.format)
    return 0


def _cmd_oracle_check(args: argparse.Namespace, scale: float, units: str) -> int:
    if args.max_n < 0:
        raise _UsageError(f"--max-n must be >= 0, got {args.max_n}")
    cases = 0
    failures = 0
    for cells in FIXED_CELL_SUITE:
        degs = ",".join(str(g) for g in cells)
        for N in range(args.max_n + 1):
            report = verify_counting(N, cells)
            cases += 1
            if report.ok:
                print(f"ok N={N} cells=({degs}) {len(report.checks)} identities")
            else:
                failures += 1
                print(report.as_text())
    if failures:
        print(f"FAILED {failures} of {cases} cases")
        return 1
    print(f"all identities verified: {cases} cases")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mixent",
        description="Microstate counting and mixing entropy for ideal-gas scenarios.",
    )
    parser.set_defaults(handler=None)
    sub = parser.add_subparsers(dest="command")

    count = sub.add_parser("count", help="evaluate a counting formula")
    count.add_argument(
        "kind",
        choices=["binomial", "multiplicity", "bose", "bose-approx", "symbols"],
    )
    count.add_argument("operands", nargs="*", type=int)
    count.add_argument("--occ", help="comma-separated occupation numbers")
    count.add_argument("--deg", help="comma-separated cell degeneracies")
    count.set_defaults(handler=_cmd_count)

    entropy = sub.add_parser("entropy", help="entropy of a gas or level ensemble")
    entropy.add_argument("--N", type=int, required=True)
    entropy.add_argument("--T", type=float, required=True)
    entropy.add_argument("--V", type=float, default=None)
    entropy.add_argument(
        "--levels", default=None, help="comma-separated '<energy>:<degeneracy>' items"
    )
    entropy.add_argument(
        "--model",
        choices=[m.value for m in CountingModel],
        default=CountingModel.GIBBS_CORRECTED.value,
    )
    entropy.add_argument(
        "--stirling-form",
        dest="stirling_form",
        choices=[f.value for f in StirlingForm],
        default=StirlingForm.TWO_TERM.value,
    )
    entropy.add_argument("--constant", type=float, default=0.0)
    entropy.set_defaults(handler=_cmd_entropy)

    mix = sub.add_parser("mix", help="entropy change of a scenario file")
    mix.add_argument("--scenario", required=True)
    mix.add_argument("--format", choices=["csv", "json"], default="csv")
    mix.set_defaults(handler=_cmd_mix)

    sweep = sub.add_parser(
        "sweep-overlap", help="scenario entropy across an overlap grid"
    )
    sweep.add_argument("--scenario", required=True)
    sweep.add_argument("--points", type=int, default=101)
    sweep.add_argument("--format", choices=["csv", "json"], default="csv")
    sweep.set_defaults(handler=_cmd_sweep_overlap)

    oracle = sub.add_parser(
        "oracle-check", help="verify counting formulas by exhaustive enumeration"
    )
    oracle.add_argument("--max-n", dest="max_n", type=int, default=8)
    oracle.set_defaults(handler=_cmd_oracle_check)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.handler is None:
        parser.print_usage(sys.stderr)
        return 2
    try:
        scale, units = _resolve_units()
        return args.handler(args, scale, units)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except ScenarioParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

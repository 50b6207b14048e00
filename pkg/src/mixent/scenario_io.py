"""Line-based scenario files: parsing and canonical serialization.

A scenario file is UTF-8 text, one ``key = value`` pair per line.  Blank
lines and ``#`` comments are ignored.  Keys:

    id            optional label for reports (default: file stem)
    model         distinguishable | gibbs-corrected | bose-approximate
    stirling_form two-term | three-term | exact
    weighting     complement | literal
    final_volume  optional; defaults to the summed compartment volumes
    compartment   <species> <N> <V> <T>      (repeatable, at least one)
    overlap       <species_a> <species_b> <q> (repeatable)

Example::

    # two distinct gases at matched density
    id = distinct-full
    compartment = argon   1000 0.5 1.0
    compartment = krypton 1000 0.5 1.0
    overlap = argon krypton 0.0

Malformed text (unknown keys, bad numbers, wrong token counts) raises
ScenarioParseError with file/line/column.  Values that lex fine but break
physics (negative volume, mismatched temperatures) raise DomainError from
the scenario constructors instead; the CLI maps the two cases to
different exit codes.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path

from .combinatorics import StirlingForm
from .errors import ScenarioParseError
from .mixing import GasCompartment, MixingScenario, SpeciesOverlap, Weighting
from .statmech import CountingModel

__all__ = ["ScenarioFile", "parse_scenario", "load_scenario", "serialize_scenario"]

_SCALAR_KEYS = ("id", "model", "stirling_form", "weighting", "final_volume")
_LIST_KEYS = ("compartment", "overlap")
_SPECIES_RE = re.compile(r"[A-Za-z0-9_.+\-]+\Z")


@dataclass(frozen=True)
class ScenarioFile:
    """A parsed scenario plus the label it is reported under."""

    id: str
    scenario: MixingScenario


def _tokens(value_part: str, value_offset: int) -> list[tuple[str, int]]:
    """Whitespace-split tokens of a value with their 1-based columns."""
    return [
        (m.group(), value_offset + m.start() + 1)
        for m in re.finditer(r"\S+", value_part)
    ]


def parse_scenario(
    text: str, *, source: str = "<string>", default_id: str = "scenario"
) -> ScenarioFile:
    """Parse scenario text into a ScenarioFile.

    See the module docstring for the format.  Raises ScenarioParseError
    for malformed text and DomainError for well-formed but unphysical
    values.
    """

    def fail(message: str, line: int, column: int | None = None) -> ScenarioParseError:
        return ScenarioParseError(message, source=source, line=line, column=column)

    scalars: dict[str, tuple[str, int, int]] = {}  # key -> (value, line, col)
    compartments: list[GasCompartment] = []
    overlaps: list[SpeciesOverlap] = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if "=" not in raw:
            raise fail("expected 'key = value'", lineno, 1)
        key_part, _, value_part = raw.partition("=")
        key = key_part.strip()
        key_col = (len(key_part) - len(key_part.lstrip())) + 1
        if key not in _SCALAR_KEYS and key not in _LIST_KEYS:
            raise fail(f"unknown key {key!r}", lineno, key_col)
        value_offset = len(key_part) + 1  # 0-based start of value_part
        value = value_part.strip()
        value_col = value_offset + (len(value_part) - len(value_part.lstrip())) + 1
        if not value:
            raise fail(f"empty value for key {key!r}", lineno, value_col)

        if key in _SCALAR_KEYS:
            if key in scalars:
                raise fail(f"duplicate key {key!r}", lineno, key_col)
            scalars[key] = (value, lineno, value_col)
            continue

        toks = _tokens(value_part, value_offset)
        if key == "compartment":
            if len(toks) != 4:
                raise fail(
                    f"compartment needs '<species> <N> <V> <T>', got {len(toks)} tokens",
                    lineno,
                    value_col,
                )
            (species, s_col), (n_tok, n_col), (v_tok, v_col), (t_tok, t_col) = toks
            if not _SPECIES_RE.match(species):
                raise fail(f"invalid species token {species!r}", lineno, s_col)
            n = _parse_int(n_tok, fail, lineno, n_col, "N")
            v = _parse_float(v_tok, fail, lineno, v_col, "V")
            t = _parse_float(t_tok, fail, lineno, t_col, "T")
            compartments.append(GasCompartment(species, n, v, t))
        else:  # overlap
            if len(toks) != 3:
                raise fail(
                    f"overlap needs '<species_a> <species_b> <q>', got {len(toks)} tokens",
                    lineno,
                    value_col,
                )
            (a, a_col), (b, b_col), (q_tok, q_col) = toks
            for name, col in ((a, a_col), (b, b_col)):
                if not _SPECIES_RE.match(name):
                    raise fail(f"invalid species token {name!r}", lineno, col)
            q = _parse_float(q_tok, fail, lineno, q_col, "overlap")
            overlaps.append(SpeciesOverlap(a, b, q))

    if not compartments:
        raise ScenarioParseError(
            "scenario declares no compartments", source=source
        )

    model = _parse_choice(scalars, "model", CountingModel, source)
    form = _parse_choice(scalars, "stirling_form", StirlingForm, source)
    weighting = _parse_choice(scalars, "weighting", Weighting, source)

    if "final_volume" in scalars:
        value, lineno, col = scalars["final_volume"]
        final_volume = _parse_float(value, fail, lineno, col, "final_volume")
        scenario = MixingScenario(
            compartments=tuple(compartments),
            final_volume=final_volume,
            overlaps=tuple(overlaps),
            model=model,
            stirling_form=form,
            weighting=weighting,
        )
    else:
        scenario = MixingScenario.from_compartments(
            compartments,
            overlaps=tuple(overlaps),
            model=model,
            stirling_form=form,
            weighting=weighting,
        )

    scenario_id = scalars["id"][0] if "id" in scalars else default_id
    return ScenarioFile(id=scenario_id, scenario=scenario)


def _parse_int(token, fail, lineno, col, what):
    try:
        return int(token)
    except ValueError:
        raise fail(f"{what} must be an integer, got {token!r}", lineno, col) from None


def _parse_float(token, fail, lineno, col, what):
    try:
        return float(token)
    except ValueError:
        raise fail(f"{what} must be a number, got {token!r}", lineno, col) from None


def _parse_choice(scalars, key, enum_cls, source):
    defaults = {
        "model": CountingModel.GIBBS_CORRECTED,
        "stirling_form": StirlingForm.TWO_TERM,
        "weighting": Weighting.COMPLEMENT,
    }
    if key not in scalars:
        return defaults[key]
    value, lineno, col = scalars[key]
    try:
        return enum_cls(value)
    except ValueError:
        allowed = ", ".join(member.value for member in enum_cls)
        raise ScenarioParseError(
            f"{key} must be one of: {allowed}; got {value!r}",
            source=source,
            line=lineno,
            column=col,
        ) from None


def load_scenario(path: str | Path) -> ScenarioFile:
    """Read and parse a scenario file; the default id is the file stem."""
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    return parse_scenario(text, source=str(path), default_id=path.stem)


def serialize_scenario(scenario_file: ScenarioFile) -> str:
    """Canonical text for a scenario; parse(serialize(x)) == x.

    Floats are written with repr, which round-trips exactly.
    """
    s = scenario_file.scenario
    lines = [
        f"id = {scenario_file.id}",
        f"model = {s.model.value}",
        f"stirling_form = {s.stirling_form.value}",
        f"weighting = {s.weighting.value}",
        f"final_volume = {s.final_volume!r}",
    ]
    for c in s.compartments:
        lines.append(f"compartment = {c.species} {c.N} {c.V!r} {c.T!r}")
    for o in sorted(s.overlaps, key=lambda o: (o.species_a, o.species_b)):
        lines.append(f"overlap = {o.species_a} {o.species_b} {o.overlap!r}")
    return "\n".join(lines) + "\n"

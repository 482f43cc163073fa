"""Rating tables from the typicality experiment and the SCOP built from them."""

from __future__ import annotations

import csv
import io
import math
import re
from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal
from importlib import resources
from pathlib import Path
from typing import TextIO

from .core import UNIT, ZERO, Context, Property, Scop, State, apply_context
from .errors import (DegenerateColumnError, DomainError, InputError, RatingParseError,
                     StructureError, UnknownIdentifierError)

SCALE = 7.0
GROUND_ID = "p_hat"


@dataclass(frozen=True)
class RatingTable:
    """Rectangular row-by-context matrix of ratings on the 0..7 scale."""

    rows: tuple[str, ...]
    columns: tuple[str, ...]
    cells: tuple[tuple[float, ...], ...]
    unit: str = UNIT

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))
        object.__setattr__(self, "columns", tuple(self.columns))
        object.__setattr__(self, "cells", tuple(tuple(float(v) for v in r) for r in self.cells))
        if not self.rows or not self.columns:
            raise StructureError("rating table needs at least one row and one column")
        if len(set(self.rows)) != len(self.rows):
            raise StructureError("duplicate row labels")
        if len(set(self.columns)) != len(self.columns):
            raise StructureError("duplicate column labels")
        if self.unit not in self.columns:
            raise StructureError(f"rating table has no unit context column {self.unit!r}")
        if len(self.cells) != len(self.rows) or any(len(r) != len(self.columns) for r in self.cells):
            raise StructureError("ragged rating table")
        for i, r in enumerate(self.cells):
            for j, v in enumerate(r):
                if not (math.isfinite(v) and 0.0 <= v <= SCALE):
                    raise RatingParseError(f"rating {v} outside [0, {SCALE:g}]", i + 1, self.columns[j])

    def __getitem__(self, key: tuple[str, str]) -> float:
        row, col = key
        return self.cells[self._row_index(row)][self._col_index(col)]

    def _row_index(self, row: str) -> int:
        try:
            return self.rows.index(row)
        except ValueError:
            raise UnknownIdentifierError("row", row) from None

    def _col_index(self, col: str) -> int:
        try:
            return self.columns.index(col)
        except ValueError:
            raise UnknownIdentifierError("context column", col) from None

    def column(self, col: str) -> dict[str, float]:
        j = self._col_index(col)
        return {r: self.cells[i][j] for i, r in enumerate(self.rows)}

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.columns)


def _rating(text: str, row: int, column: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise RatingParseError(f"non-numeric rating {text!r}", row, column) from None
    if not (math.isfinite(value) and 0.0 <= value <= SCALE):
        raise RatingParseError(f"rating {text} outside [0, {SCALE:g}]", row, column)
    return value


def parse_rating_table(source: TextIO | str, layout: str = "wide", unit: str = UNIT) -> RatingTable:
    """Read a rating table from a text stream (or a string holding the CSV text).

    ``wide``: header ``label,<ctx1>,...``, one row per exemplar/property.
    ``long``: rows ``label,context,rate`` with an optional header line.
    Rows are numbered from 1 for the first data row in error messages.
    """
    text = source if isinstance(source, str) else source.read()
    records = [r for r in csv.reader(io.StringIO(text)) if any(c.strip() for c in r)]
    records = [[c.strip() for c in r] for r in records]
    if not records:
        raise StructureError("empty rating table")
    if layout == "wide":
        header, body = records[0], records[1:]
        if len(header) < 2 or not body:
            raise StructureError("wide table needs a header with contexts and at least one row")
        columns = header[1:]
        rows, cells = [], []
        for n, rec in enumerate(body, start=1):
            if len(rec) != len(header):
                raise StructureError(f"ragged table: row {n} has {len(rec)} fields, header has {len(header)}")
            rows.append(rec[0])
            cells.append([_rating(v, n, columns[j]) for j, v in enumerate(rec[1:])])
        if len(set(rows)) != len(rows):
            raise StructureError("duplicate row labels")
        return RatingTable(tuple(rows), tuple(columns), tuple(map(tuple, cells)), unit)
    if layout == "long":
        if [c.lower() for c in records[0]] == ["label", "context", "rate"]:
            records = records[1:]
        values: dict[tuple[str, str], float] = {}
        rows, columns = [], []
        for n, rec in enumerate(records, start=1):
            if len(rec) != 3:
                raise StructureError(f"long-format row {n} must have 3 fields")
            label, ctx, rate = rec
            if (label, ctx) in values:
                raise StructureError(f"duplicate cell ({label}, {ctx}) at row {n}")
            values[label, ctx] = _rating(rate, n, ctx)
            if label not in rows:
                rows.append(label)
            if ctx not in columns:
                columns.append(ctx)
        missing = [(r, c) for r in rows for c in columns if (r, c) not in values]
        if missing:
            raise StructureError(f"missing cells: {missing[:5]}")
        cells = tuple(tuple(values[r, c] for c in columns) for r in rows)
        return RatingTable(tuple(rows), tuple(columns), cells, unit)
    raise InputError(f"unknown layout {layout!r} (expected 'wide' or 'long')")


def format_rating_table(t: RatingTable, layout: str = "wide") -> str:
    """CSV text that :func:`parse_rating_table` reads back bit-exactly."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if layout == "wide":
        w.writerow(["label", *t.columns])
        for r, vals in zip(t.rows, t.cells):
            w.writerow([r, *(repr(v) for v in vals)])
    elif layout == "long":
        w.writerow(["label", "context", "rate"])
        for r, vals in zip(t.rows, t.cells):
            for c, v in zip(t.columns, vals):
                w.writerow([r, c, repr(v)])
    else:
        raise InputError(f"unknown layout {layout!r}")
    return buf.getvalue()


def read_rating_table(path: str | Path, layout: str = "wide", unit: str = UNIT) -> RatingTable:
    with open(path, encoding="utf-8", newline="") as fh:
        return parse_rating_table(fh, layout, unit)


def ratings_to_weights(t: RatingTable, column: str) -> dict[str, float]:
    return {r: v / SCALE for r, v in t.column(column).items()}


def ratings_to_frequencies(t: RatingTable, column: str) -> dict[str, float]:
    col = t.column(column)
    total = math.fsum(col.values())
    if total <= 0.0:
        raise DegenerateColumnError(f"column {column!r} sums to zero")
    return {r: v / total for r, v in col.items()}


def state_id_for(context_id: str) -> str:
    """``e3`` -> ``p3``; any other context id ``c`` -> ``p_c``."""
    m = re.fullmatch(r"e(\d+)", context_id)
    return f"p{m.group(1)}" if m else f"p_{context_id}"


def _as_contexts(contexts) -> list[Context]:
    if isinstance(contexts, Mapping):
        return [Context(str(k), str(v)) for k, v in contexts.items()]
    out = []
    for c in contexts:
        out.append(c if isinstance(c, Context) else Context(*map(str, c)))
    return out


def build_scop(
    contexts: Iterable[Context] | Mapping[str, str],
    exemplar_ratings: RatingTable,
    property_ratings: RatingTable,
    *,
    exemplar_frequencies: RatingTable | Mapping[str, Mapping[str, float]] | None = None,
    property_weights: RatingTable | Mapping[str, Mapping[str, float]] | None = None,
    properties: Iterable[Property] | Mapping[str, str] | None = None,
) -> Scop:
    """Assemble a SCOP from experiment tables.

    The ground state carries the unit-context column, every other context
    ``e`` gets its own state ``state_id_for(e)``.  Applying ``e`` to any state
    yields that state with certainty; the unit context fixes everything.

    ``exemplar_frequencies`` / ``property_weights`` override the derived
    values (rating / column sum, rating / 7), e.g. with printed columns.
    Both are either tables with the same shape, or ``{context: {row: value}}``.
    """
    ctx = _as_contexts(contexts)
    ids = [c.id for c in ctx]
    if UNIT not in ids:
        raise InputError("contexts must include the unit context '1'")
    if len(set(ids)) != len(ids):
        raise InputError("duplicate context ids")
    for name, table in (("exemplar", exemplar_ratings), ("property", property_ratings)):
        if set(table.columns) != set(ids):
            raise InputError(f"{name} table contexts {sorted(table.columns)} do not match {sorted(ids)}")

    def override(source, table: RatingTable, col: str, derived: dict[str, float]) -> dict[str, float]:
        if source is None:
            return derived
        values = source.column(col) if isinstance(source, RatingTable) else dict(source[col])
        if set(values) != set(table.rows):
            raise InputError(f"override table rows do not match rating table for context {col}")
        return values

    def state_data(col: str):
        freqs = override(exemplar_frequencies, exemplar_ratings, col,
                         ratings_to_frequencies(exemplar_ratings, col))
        return freqs, exemplar_ratings.column(col)

    if properties is None:
        props = [Property(a) for a in property_ratings.rows]
    else:
        labels = dict(properties) if isinstance(properties, Mapping) else {p.id: p.label for p in properties}
        props = [Property(a, labels.get(a, a)) for a in property_ratings.rows]

    freqs, rates = state_data(UNIT)
    states = [State(GROUND_ID, "ground state", True, freqs, rates)]
    column_of_state = {GROUND_ID: UNIT}
    for c in ctx:
        if c.id == UNIT:
            continue
        sid = state_id_for(c.id)
        freqs, rates = state_data(c.id)
        states.append(State(sid, f"state under {c.id}: {c.label}", False, freqs, rates))
        column_of_state[sid] = c.id
    if ZERO not in ids:
        ctx.append(Context(ZERO, "zero context"))
    state_ids = [s.id for s in states]

    mu: dict[tuple[str, str, str], float] = {}
    for c in ctx:
        if c.id == ZERO:
            continue
        for p in state_ids:
            q = p if c.id == UNIT else state_id_for(c.id)
            mu[q, c.id, p] = 1.0

    nu: dict[tuple[str, str], float] = {}
    for sid, col in column_of_state.items():
        weights = override(property_weights, property_ratings, col, ratings_to_weights(property_ratings, col))
        for a, w in weights.items():
            nu[sid, a] = w
    return Scop(tuple(states), tuple(ctx), tuple(props), mu, nu)


def rank_exemplars(scop: Scop, e: str) -> list[tuple[str, float]]:
    """Exemplars of the state ``e`` collapses the ground state to, most frequent first.

    Ties: higher raw rating first, then original row order.
    """
    outcome = apply_context(scop, e, scop.ground.id)
    if not outcome.is_point_mass():
        raise DomainError(f"context {e} does not collapse the ground state to a single state")
    (sid,) = outcome.support
    state = scop.state(sid)
    if state.frequencies is None:
        raise DomainError(f"state {sid} carries no frequency data")
    ratings = state.ratings or {}
    order = list(state.frequencies)
    ranked = sorted(order, key=lambda x: (-state.frequencies[x], -ratings.get(x, 0.0), order.index(x)))
    return [(x, state.frequencies[x]) for x in ranked]


# -- bundled fixtures ---------------------------------------------------------------

@dataclass(frozen=True)
class PetTables:
    contexts: tuple[Context, ...]
    properties: tuple[Property, ...]
    exemplar_rates: RatingTable
    exemplar_freq: RatingTable
    property_rates: RatingTable
    property_weights: RatingTable


@dataclass(frozen=True)
class PValueRecord:
    exemplar: str
    context_a: str
    context_b: str
    printed: str
    value: float | None


def fixtures_dir() -> Path:
    return Path(str(resources.files("scop") / "data"))


def _read_labels(path: Path) -> list[tuple[str, str]]:
    with open(path, encoding="utf-8", newline="") as fh:
        return [(row["id"], row["label"]) for row in csv.DictReader(fh)]


def load_pet_tables(directory: str | Path | None = None) -> PetTables:
    d = Path(directory) if directory is not None else fixtures_dir()
    try:
        return PetTables(
            contexts=tuple(Context(i, lab) for i, lab in _read_labels(d / "contexts.csv")),
            properties=tuple(Property(i, lab) for i, lab in _read_labels(d / "properties.csv")),
            exemplar_rates=read_rating_table(d / "exemplar_rates.csv"),
            exemplar_freq=read_rating_table(d / "exemplar_freq.csv"),
            property_rates=read_rating_table(d / "property_rates.csv"),
            property_weights=read_rating_table(d / "property_weights.csv"),
        )
    except FileNotFoundError as exc:
        raise InputError(f"missing fixture file: {exc.filename}") from None


def pet_scop(directory: str | Path | None = None, printed: bool = True) -> Scop:
    """The 'pet' SCOP.  ``printed`` uses the printed freq/wt columns as state data."""
    t = load_pet_tables(directory)
    return build_scop(
        t.contexts, t.exemplar_rates, t.property_rates,
        exemplar_frequencies=t.exemplar_freq if printed else None,
        property_weights=t.property_weights if printed else None,
        properties=t.properties,
    )


def _parse_printed_p(text: str) -> float | None:
    try:
        value = float(text.replace(" ", ""))
    except ValueError:
        return None
    return value if 0.0 <= value <= 1.0 else None


def load_pvalues(directory: str | Path | None = None) -> list[PValueRecord]:
    """Printed p-value table, verbatim.  ``value`` is None where the print is not a valid p-value."""
    d = Path(directory) if directory is not None else fixtures_dir()
    with open(d / "exemplar_pvalues.csv", encoding="utf-8", newline="") as fh:
        return [PValueRecord(r["exemplar"], r["context_a"], r["context_b"], r["printed"],
                             _parse_printed_p(r["printed"]))
                for r in csv.DictReader(fh)]


def display_round(x: float, places: int = 2) -> str:
    """Half-up rounding for display (binary floats rounded from their shortest repr)."""
    return str(Decimal(repr(x)).quantize(Decimal(1).scaleb(-places), rounding=ROUND_HALF_UP))


__all__ = [
    "RatingTable", "parse_rating_table", "format_rating_table", "read_rating_table",
    "ratings_to_weights", "ratings_to_frequencies", "build_scop", "rank_exemplars",
    "state_id_for", "PetTables", "PValueRecord", "fixtures_dir", "load_pet_tables",
    "pet_scop", "load_pvalues", "display_round",
]

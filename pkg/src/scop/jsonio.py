"""JSON (de)serialisation of :class:`~scop.core.Scop` values.

Schema::

    {
      "unit": "1", "zero": "0",                      # optional, these defaults
      "states": [{"id", "label", "ground", "frequencies"?, "ratings"?}],
      "contexts": [{"id", "label", "target"?, "eigenstates"?}],
      "properties": [{"id", "label"}],
      "mu": [{"q", "e", "p", "prob"}],
      "nu": [{"p", "a", "weight"}]
    }

A ``(e, p)`` pair with no ``mu`` entries is filled in by the default
collapse rule: the unit context fixes every state; a context with a
``target`` fixes the states listed in ``eigenstates`` (default: just the
target) and sends every other state to the target.  Missing ``nu`` entries
are 0.
"""

from __future__ import annotations

import json
from collections.abc import Mapping
from pathlib import Path

from .core import UNIT, ZERO, Context, Property, Scop, State
from .errors import InputError


def scop_from_dict(data: Mapping) -> Scop:
    try:
        unit = str(data.get("unit", UNIT))
        zero = str(data.get("zero", ZERO))
        states = [
            State(
                id=str(s["id"]),
                label=str(s.get("label", "")),
                is_ground=bool(s.get("ground", False)),
                frequencies=s.get("frequencies"),
                ratings=s.get("ratings"),
            )
            for s in data["states"]
        ]
        contexts = [Context(str(c["id"]), str(c.get("label", ""))) for c in data["contexts"]]
        properties = [Property(str(a["id"]), str(a.get("label", ""))) for a in data.get("properties", [])]
        mu = {}
        for entry in data.get("mu", []):
            key = (str(entry["q"]), str(entry["e"]), str(entry["p"]))
            if key in mu:
                raise InputError(f"duplicate mu entry {key}")
            mu[key] = float(entry["prob"])
        nu = {}
        for entry in data.get("nu", []):
            key = (str(entry["p"]), str(entry["a"]))
            if key in nu:
                raise InputError(f"duplicate nu entry {key}")
            nu[key] = float(entry["weight"])
        defaults = {str(c["id"]): c for c in data["contexts"]}
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(f"malformed SCOP JSON: {exc!r}") from None

    explicit = {(e, p) for (_, e, p) in mu}
    state_ids = [s.id for s in states]
    for c in contexts:
        if c.id == zero:
            continue
        spec = defaults[c.id]
        target = spec.get("target")
        fixed = set(spec.get("eigenstates", [target] if target is not None else []))
        for p in state_ids:
            if (c.id, p) in explicit:
                continue
            if c.id == unit:
                mu[p, c.id, p] = 1.0
            elif target is not None:
                mu[(p if p in fixed else target), c.id, p] = 1.0
            else:
                raise InputError(f"no transition entries for context {c.id} on state {p}")
    return Scop(tuple(states), tuple(contexts), tuple(properties), mu, nu, unit=unit, zero=zero)


def scop_to_dict(scop: Scop) -> dict:
    def state(s: State) -> dict:
        out = {"id": s.id, "label": s.label, "ground": s.is_ground}
        if s.frequencies is not None:
            out["frequencies"] = dict(s.frequencies)
        if s.ratings is not None:
            out["ratings"] = dict(s.ratings)
        return out

    order = {s.id: i for i, s in enumerate(scop.states)}
    corder = {c: i for i, c in enumerate(scop.context_ids)}
    porder = {a: i for i, a in enumerate(scop.property_ids)}
    mu = sorted(scop.mu.items(), key=lambda kv: (corder[kv[0][1]], order[kv[0][2]], order[kv[0][0]]))
    nu = sorted(scop.nu.items(), key=lambda kv: (order[kv[0][0]], porder[kv[0][1]]))
    return {
        "unit": scop.unit,
        "zero": scop.zero,
        "states": [state(s) for s in scop.states],
        "contexts": [{"id": c.id, "label": c.label} for c in scop.contexts],
        "properties": [{"id": a.id, "label": a.label} for a in scop.properties],
        "mu": [{"q": q, "e": e, "p": p, "prob": v} for (q, e, p), v in mu],
        "nu": [{"p": p, "a": a, "weight": w} for (p, a), w in nu],
    }


def dumps(scop: Scop) -> str:
    return json.dumps(scop_to_dict(scop), indent=2, ensure_ascii=False) + "\n"


def loads(text: str) -> Scop:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from None
    return scop_from_dict(data)


def load(path: str | Path) -> Scop:
    return loads(Path(path).read_text(encoding="utf-8"))

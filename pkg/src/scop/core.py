"""State-context-property systems: states, collapse, eigenstates, closure.

A :class:`Scop` stores the transition function ``mu`` sparsely: a missing
triple ``(q, e, p)`` has probability 0.  The zero context carries no
transition entries at all; applying it is a :class:`DomainError`.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass, field
from functools import cached_property
from types import MappingProxyType

from .errors import DomainError, InputError, NoUniqueBound, UnknownIdentifierError

EPS = 1e-9
FREQ_TOL = 0.02

UNIT = "1"
ZERO = "0"


@dataclass(frozen=True)
class State:
    id: str
    label: str = ""
    is_ground: bool = False
    frequencies: Mapping[str, float] | None = None
    ratings: Mapping[str, float] | None = None

    def __post_init__(self):
        if not self.label:
            object.__setattr__(self, "label", self.id)
        for name in ("frequencies", "ratings"):
            value = getattr(self, name)
            if value is not None:
                object.__setattr__(self, name, MappingProxyType(dict(value)))


@dataclass(frozen=True)
class Context:
    id: str
    label: str = ""

    def __post_init__(self):
        if not self.label:
            object.__setattr__(self, "label", self.id)


@dataclass(frozen=True)
class Property:
    id: str
    label: str = ""

    def __post_init__(self):
        if not self.label:
            object.__setattr__(self, "label", self.id)


class OutcomeDistribution(Mapping):
    """Post-collapse probability distribution over state ids."""

    def __init__(self, probs: Mapping[str, float]):
        self._probs = {q: p for q, p in probs.items() if p > 0}

    def __getitem__(self, q: str) -> float:
        return self._probs.get(q, 0.0)

    def __iter__(self) -> Iterator[str]:
        return iter(self._probs)

    def __len__(self) -> int:
        return len(self._probs)

    @property
    def support(self) -> frozenset[str]:
        return frozenset(self._probs)

    def is_point_mass(self) -> bool:
        return len(self._probs) == 1

    def __repr__(self) -> str:
        return f"OutcomeDistribution({self._probs!r})"


@dataclass(frozen=True, eq=False)
class Scop:
    """The quintuple (states, contexts, properties, mu, nu).

    ``mu`` maps ``(q, e, p)`` to the probability that ``p`` changes to ``q``
    under ``e``; ``nu`` maps ``(p, a)`` to the weight of ``a`` in ``p``.
    Absent ``nu`` entries are 0.
    """

    states: tuple[State, ...]
    contexts: tuple[Context, ...]
    properties: tuple[Property, ...]
    mu: Mapping[tuple[str, str, str], float]
    nu: Mapping[tuple[str, str], float] = field(default_factory=dict)
    unit: str = UNIT
    zero: str = ZERO

    def __post_init__(self):
        for name in ("states", "contexts", "properties"):
            object.__setattr__(self, name, tuple(getattr(self, name)))
        object.__setattr__(self, "mu", MappingProxyType({k: float(v) for k, v in self.mu.items() if v}))
        object.__setattr__(self, "nu", MappingProxyType({k: float(v) for k, v in self.nu.items()}))
        self._validate()

    # -- validation -----------------------------------------------------------

    def _validate(self) -> None:
        for kind, items in (("state", self.states), ("context", self.contexts), ("property", self.properties)):
            ids = [x.id for x in items]
            if len(set(ids)) != len(ids):
                raise InputError(f"duplicate {kind} ids: {ids}")
            if any(not x.id or not x.label for x in items):
                raise InputError(f"{kind} with empty id or label")
        grounds = [s.id for s in self.states if s.is_ground]
        if len(grounds) != 1:
            raise InputError(f"exactly one ground state required, found {grounds}")
        ctx = self.context_ids
        if self.unit not in ctx or self.zero not in ctx:
            raise InputError("contexts must include the unit and zero contexts")
        for s in self.states:
            if s.frequencies is not None:
                total = math.fsum(s.frequencies.values())
                if abs(total - 1.0) > FREQ_TOL:
                    raise InputError(f"frequencies of {s.id} sum to {total:.4f}")
        sids = self.state_ids
        rows: dict[tuple[str, str], float] = {}
        for (q, e, p), v in self.mu.items():
            if q not in sids or p not in sids or e not in ctx:
                raise InputError(f"mu entry references unknown identifier: {(q, e, p)}")
            if not 0.0 <= v <= 1.0:
                raise InputError(f"mu{(q, e, p)} = {v} outside [0, 1]")
            if e == self.zero:
                raise InputError("the zero context cannot carry transition entries")
            rows[e, p] = rows.get((e, p), 0.0) + v
        for e in ctx:
            if e == self.zero:
                continue
            for p in sids:
                total = rows.get((e, p), 0.0)
                if abs(total - 1.0) > EPS:
                    raise InputError(f"mu(., {e}, {p}) sums to {total}, expected 1")
        for p in sids:
            if self.mu.get((p, self.unit, p), 0.0) < 1.0 - EPS:
                raise InputError(f"state {p} is not an eigenstate of the unit context")
        for (q, e, p), v in self.mu.items():
            if v > 0 and self.mu.get((q, e, q), 0.0) < 1.0 - EPS:
                raise InputError(f"context {e} sends {p} to {q}, which is not an eigenstate of {e}")
        pids = self.property_ids
        for (p, a), w in self.nu.items():
            if p not in sids or a not in pids:
                raise InputError(f"nu entry references unknown identifier: {(p, a)}")
            if not 0.0 <= w <= 1.0:
                raise InputError(f"nu{(p, a)} = {w} outside [0, 1]")

    # -- lookup ---------------------------------------------------------------

    @cached_property
    def state_ids(self) -> frozenset[str]:
        return frozenset(s.id for s in self.states)

    @cached_property
    def context_ids(self) -> tuple[str, ...]:
        return tuple(c.id for c in self.contexts)

    @cached_property
    def property_ids(self) -> tuple[str, ...]:
        return tuple(a.id for a in self.properties)

    @cached_property
    def ground(self) -> State:
        return next(s for s in self.states if s.is_ground)

    def state(self, p: str) -> State:
        for s in self.states:
            if s.id == p:
                return s
        raise UnknownIdentifierError("state", p)

    def _check_state(self, p: str) -> None:
        if p not in self.state_ids:
            raise UnknownIdentifierError("state", p)

    def _check_context(self, e: str) -> None:
        if e not in self._context_set:
            raise UnknownIdentifierError("context", e)

    def _check_property(self, a: str) -> None:
        if a not in self._property_set:
            raise UnknownIdentifierError("property", a)

    @cached_property
    def _context_set(self) -> frozenset[str]:
        return frozenset(self.context_ids)

    @cached_property
    def _property_set(self) -> frozenset[str]:
        return frozenset(self.property_ids)

    @cached_property
    def _lambda(self) -> Mapping[str, frozenset[str]]:
        return {e: frozenset(p for p in self.state_ids if self.mu.get((p, e, p), 0.0) >= 1.0 - EPS)
                for e in self.context_ids}

    @cached_property
    def _kappa(self) -> Mapping[str, frozenset[str]]:
        return {a: frozenset(p for p in self.state_ids if self.nu.get((p, a), 0.0) >= 1.0 - EPS)
                for a in self.property_ids}


# -- operations -------------------------------------------------------------------

def transition_probability(scop: Scop, q: str, e: str, p: str) -> float:
    scop._check_state(q)
    scop._check_state(p)
    scop._check_context(e)
    return scop.mu.get((q, e, p), 0.0)


def is_eigenstate(scop: Scop, p: str, e: str) -> bool:
    """``p`` is left unchanged by ``e`` (mu(p, e, p) = 1 up to 1e-9)."""
    scop._check_state(p)
    scop._check_context(e)
    return p in scop._lambda[e]


def apply_context(scop: Scop, e: str, p: str) -> OutcomeDistribution:
    """Collapse ``p`` under ``e``.

    Raises DomainError for the zero context, which has no eigenstates to
    collapse onto.
    """
    scop._check_state(p)
    scop._check_context(e)
    if e == scop.zero:
        raise DomainError("the zero context has no eigenstates")
    return OutcomeDistribution({q: scop.mu.get((q, e, p), 0.0) for q in sorted(scop.state_ids)})


def property_weight(scop: Scop, p: str, a: str) -> float:
    scop._check_state(p)
    scop._check_property(a)
    return scop.nu.get((p, a), 0.0)


def actual_property_set(scop: Scop, p: str) -> frozenset[str]:
    scop._check_state(p)
    return frozenset(a for a in scop.property_ids if p in scop._kappa[a])


def lambda_map(scop: Scop, e: str) -> frozenset[str]:
    """Eigenstates of ``e``."""
    scop._check_context(e)
    return scop._lambda[e]


def cartan_map(scop: Scop, a: str) -> frozenset[str]:
    """States in which ``a`` is actual (weight 1)."""
    scop._check_property(a)
    return scop._kappa[a]


def context_leq(scop: Scop, e: str, f: str) -> bool:
    return lambda_map(scop, e) <= lambda_map(scop, f)


def property_leq(scop: Scop, a: str, b: str) -> bool:
    return cartan_map(scop, a) <= cartan_map(scop, b)


def _moore_closure(family: Iterable[frozenset[str]], s: frozenset[str], universe: frozenset[str]) -> frozenset[str]:
    out = universe
    for closed in family:
        if s <= closed:
            out = out & closed
    return out


def closure(scop: Scop, s: Iterable[str]) -> frozenset[str]:
    """Smallest eigenstate set lambda(e) containing ``s``.

    Intersection of every lambda(e) that contains ``s``; lambda(1) is the
    whole state set, so the intersection is never empty.
    """
    s = frozenset(s)
    for p in s:
        scop._check_state(p)
    return _moore_closure(scop._lambda.values(), s, scop.state_ids)


def property_closure(scop: Scop, s: Iterable[str]) -> frozenset[str]:
    """Same as :func:`closure` over the Cartan sets (plus the full state set)."""
    s = frozenset(s)
    for p in s:
        scop._check_state(p)
    return _moore_closure(scop._kappa.values(), s, scop.state_ids)


def is_superposition_state(scop: Scop, p: str, es: Iterable[str]) -> bool:
    """``p`` lies in the closure of the union of the lambda(e) but in none of them."""
    scop._check_state(p)
    es = list(es)
    if not es:
        raise InputError("need at least one context")
    union = frozenset().union(*(lambda_map(scop, e) for e in es))
    return p not in union and p in closure(scop, union)


def _extremal_context(scop: Scop, es: list[str], kind: str) -> str:
    sets = scop._lambda
    if kind == "meet":
        bounds = [c for c in scop.context_ids if all(sets[c] <= sets[e] for e in es)]
        best = [c for c in bounds if all(sets[b] <= sets[c] for b in bounds)]
    else:
        bounds = [c for c in scop.context_ids if all(sets[e] <= sets[c] for e in es)]
        best = [c for c in bounds if all(sets[c] <= sets[b] for b in bounds)]
    if len({sets[c] for c in best}) == 1:
        return best[0]
    if kind == "meet":
        frontier = [c for c in bounds if not any(sets[c] < sets[b] for b in bounds)]
    else:
        frontier = [c for c in bounds if not any(sets[b] < sets[c] for b in bounds)]
    raise NoUniqueBound(kind, es[0], es[-1], frontier)


def context_meet(scop: Scop, es: Iterable[str]) -> str:
    """Infimum of ``es`` among the SCOP's own contexts under the lambda order."""
    es = list(es)
    for e in es:
        scop._check_context(e)
    return _extremal_context(scop, es, "meet")


def context_join(scop: Scop, es: Iterable[str]) -> str:
    """Supremum of ``es`` among the SCOP's own contexts under the lambda order."""
    es = list(es)
    for e in es:
        scop._check_context(e)
    return _extremal_context(scop, es, "join")

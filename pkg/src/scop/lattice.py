"""Finite orthocomplemented posets over symbolic terms.

An :class:`OrthoPoset` stores its order as integer bitsets: ``down[i]`` has
bit ``j`` set iff element ``j <= i``.  Meets are found by intersecting
down-sets and checking whether the result is itself a principal down-set,
joins dually, so every bound query is O(1) after construction.
"""

from __future__ import annotations

import itertools
import json
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field

from . import terms as T
from .errors import InputError, NoUniqueBound, UnknownIdentifierError
from .terms import BOTTOM, TOP, OrthoTerm


def _bits(mask: int) -> Iterable[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class OrthoPoset:
    """An immutable finite poset whose elements are canonical terms.

    The constructor stores ``order`` exactly as given (a collection of
    ``(x, y)`` pairs meaning ``x <= y``) so that :func:`verify_axioms` can
    inspect arbitrary relations.  Use :meth:`from_relation` or
    :func:`generate_context_lattice` to obtain a properly closed order.
    """

    def __init__(
        self,
        elements: Iterable[OrthoTerm],
        order: Iterable[tuple[OrthoTerm, OrthoTerm]],
        zero_meets: Iterable[frozenset] = (),
        aliases: Mapping[OrthoTerm, str] | None = None,
    ):
        elems = tuple(T.canonical(e) for e in elements)
        if len(set(elems)) != len(elems):
            raise InputError("duplicate elements in poset")
        self._elements = elems
        self._index = {e: i for i, e in enumerate(elems)}
        n = len(elems)
        down = [0] * n
        up = [0] * n
        for x, y in order:
            i, j = self._index_of(x), self._index_of(y)
            down[j] |= 1 << i
            up[i] |= 1 << j
        self._down = tuple(down)
        self._up = tuple(up)
        self._principal_down = {m: i for i, m in enumerate(down)}
        self._principal_up = {m: i for i, m in enumerate(up)}
        self.zero_meets = frozenset(frozenset(p) for p in zero_meets)
        self.aliases = dict(aliases or {})
        self._by_alias = {name: term for term, name in self.aliases.items()}

    @classmethod
    def from_relation(
        cls,
        elements: Iterable[OrthoTerm],
        relation: Iterable[tuple[OrthoTerm, OrthoTerm]],
        zero_meets: Iterable[frozenset] = (),
        aliases: Mapping[OrthoTerm, str] | None = None,
        *,
        dualize: bool = True,
    ) -> "OrthoPoset":
        """Build a poset from generating pairs.

        Adds reflexivity, ``0 <= x <= 1`` (when the bounds are present), the
        antitone mirror ``y' <= x'`` of every pair (when ``dualize``) and the
        transitive closure.
        """
        elems = list(dict.fromkeys(T.canonical(e) for e in elements))
        index = {e: i for i, e in enumerate(elems)}
        n = len(elems)
        up = [1 << i for i in range(n)]

        def add(x, y):
            if x not in index:
                raise UnknownIdentifierError("poset element", str(x))
            if y not in index:
                raise UnknownIdentifierError("poset element", str(y))
            up[index[x]] |= 1 << index[y]

        for x, y in relation:
            x, y = T.canonical(x), T.canonical(y)
            add(x, y)
            if dualize:
                add(T.complement(y), T.complement(x))
        for e in elems:
            if BOTTOM in index:
                add(BOTTOM, e)
            if TOP in index:
                add(e, TOP)
        # Warshall-style closure on bitsets
        for k in range(n):
            kbit = 1 << k
            uk = up[k]
            for i in range(n):
                if up[i] & kbit:
                    up[i] |= uk
        pairs = [(elems[i], elems[j]) for i in range(n) for j in _bits(up[i])]
        return cls(elems, pairs, zero_meets, aliases)

    # -- basic access ---------------------------------------------------------

    @property
    def elements(self) -> tuple[OrthoTerm, ...]:
        return self._elements

    def __len__(self) -> int:
        return len(self._elements)

    def __contains__(self, x) -> bool:
        try:
            self._index_of(x)
        except UnknownIdentifierError:
            return False
        return True

    def __iter__(self):
        return iter(self._elements)

    def _index_of(self, x) -> int:
        if isinstance(x, str):
            x = self.resolve(x)
        try:
            return self._index[T.canonical(x)]
        except (KeyError, TypeError):
            raise UnknownIdentifierError("poset element", str(x)) from None

    def resolve(self, text: str) -> OrthoTerm:
        """Turn an alias or a term string into a member term."""
        if text in self._by_alias:
            return self._by_alias[text]
        term = T.parse_term(text)
        if term not in self._index:
            raise UnknownIdentifierError("poset element", text)
        return term

    def name(self, x: OrthoTerm) -> str:
        return self.aliases.get(x, str(x))

    def index(self, x) -> int:
        return self._index_of(x)

    # -- order ----------------------------------------------------------------

    def leq(self, x, y) -> bool:
        return bool(self._down[self._index_of(y)] >> self._index_of(x) & 1)

    def down_mask(self, x) -> int:
        return self._down[self._index_of(x)]

    def up_mask(self, x) -> int:
        return self._up[self._index_of(x)]

    def masks(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return self._down, self._up

    def meet(self, x, y) -> OrthoTerm:
        i, j = self._index_of(x), self._index_of(y)
        common = self._down[i] & self._down[j]
        k = self._principal_down.get(common)
        if k is not None:
            return self._elements[k]
        maximal = [m for m in _bits(common) if self._up[m] & common == 1 << m]
        raise NoUniqueBound("meet", self.name(self._elements[i]), self.name(self._elements[j]),
                            sorted((self._elements[m] for m in maximal), key=T.sort_key))

    def join(self, x, y) -> OrthoTerm:
        i, j = self._index_of(x), self._index_of(y)
        common = self._up[i] & self._up[j]
        k = self._principal_up.get(common)
        if k is not None:
            return self._elements[k]
        minimal = [m for m in _bits(common) if self._down[m] & common == 1 << m]
        raise NoUniqueBound("join", self.name(self._elements[i]), self.name(self._elements[j]),
                            sorted((self._elements[m] for m in minimal), key=T.sort_key))

    def orthocomplement(self, x) -> OrthoTerm:
        c = T.complement(self._elements[self._index_of(x)])
        if c not in self._index:
            raise UnknownIdentifierError("poset element (orthocomplement)", str(c))
        return c

    def atoms(self) -> frozenset[OrthoTerm]:
        bottoms = [i for i, d in enumerate(self._down) if d == 1 << i]
        if len(bottoms) != 1:
            return frozenset()
        b = 1 << bottoms[0]
        return frozenset(e for i, e in enumerate(self._elements)
                         if i != bottoms[0] and self._down[i] == b | 1 << i)

    def covers(self) -> list[tuple[int, int]]:
        """Covering pairs ``(i, j)``: ``i < j`` with nothing strictly between."""
        out = []
        for j, d in enumerate(self._down):
            strict_below = d & ~(1 << j)
            for i in _bits(strict_below):
                strict_above_i = self._up[i] & ~(1 << i)
                if not strict_above_i & strict_below:
                    out.append((i, j))
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, OrthoPoset):
            return NotImplemented
        return (set(self._elements) == set(other._elements)
                and self.order_pairs() == other.order_pairs())

    __hash__ = None

    def order_pairs(self) -> frozenset[tuple[OrthoTerm, OrthoTerm]]:
        e = self._elements
        return frozenset((e[i], e[j]) for j, d in enumerate(self._down) for i in _bits(d))

    def __repr__(self) -> str:
        return f"OrthoPoset({len(self)} elements)"


# -- module-level operations ----------------------------------------------------

def poset_leq(p: OrthoPoset, x, y) -> bool:
    return p.leq(x, y)


def meet(p: OrthoPoset, x, y) -> OrthoTerm:
    return p.meet(x, y)


def join(p: OrthoPoset, x, y) -> OrthoTerm:
    return p.join(x, y)


def orthocomplement(p: OrthoPoset, x) -> OrthoTerm:
    return p.orthocomplement(x)


def atoms(p: OrthoPoset) -> frozenset[OrthoTerm]:
    return p.atoms()


def _as_literal(x, generators: set[str]) -> OrthoTerm:
    term = T.parse_term(x) if isinstance(x, str) else T.canonical(x)
    if not T.is_literal(term) or T.literal_base(term) not in generators:
        raise InputError(f"zero-meet literal {x} does not name a generator or its complement")
    return term


def _rank_key(t: OrthoTerm) -> tuple:
    if t == BOTTOM:
        rank = 0
    elif T.is_literal(t):
        rank = 2
    elif isinstance(t, T.Meet):
        rank = 1
    elif isinstance(t, T.Join):
        rank = 3
    else:
        rank = 4
    return (rank, T.sort_key(t))


def generate_context_lattice(generators: Iterable[str], zero_meets: Iterable = ()) -> OrthoPoset:
    """Depth-two orthoposet spanned by ``generators``.

    The elements are the bounds, every generator and its complement, the meet
    of every pair of literals over distinct generators, and the complements of
    those meets (joins of complements).  A declared zero pair ``(x, y)``
    identifies ``x ^ y`` with 0 and ``x' | y'`` with 1.

    Each zero pair is two literals, given as terms or strings like ``"e1'"``.
    """
    names = list(generators)
    if len(set(names)) != len(names):
        raise InputError(f"duplicate generator names: {names}")
    gens = [T.gen(n) for n in names]
    nameset = set(names)

    zeros: set[frozenset] = set()
    for pair in zero_meets:
        if isinstance(pair, str):
            pair = pair.split("^")
        pair = list(pair)
        if len(pair) != 2:
            raise InputError(f"zero-meet must name exactly two literals: {pair}")
        a, b = (_as_literal(x, nameset) for x in pair)
        if a == b:
            raise InputError(f"zero-meet pairs a literal with itself: {a}")
        if T.literal_base(a) != T.literal_base(b):
            zeros.add(frozenset((a, b)))

    literals = [lit for g in sorted(gens, key=T.sort_key) for lit in (g, T.complement(g))]
    relation = []
    elements = {BOTTOM, TOP, *literals}
    for x, y in itertools.combinations(literals, 2):
        if T.literal_base(x) == T.literal_base(y) or frozenset((x, y)) in zeros:
            continue
        m = T.meet(x, y)
        elements.add(m)
        elements.add(T.complement(m))
        relation += [(m, x), (m, y)]  # the dual pairs give x', y' <= m'
    ordered = sorted(elements, key=_rank_key)
    return OrthoPoset.from_relation(ordered, relation, zero_meets=zeros)


# -- verification ----------------------------------------------------------------

@dataclass(frozen=True)
class Counterexample:
    axiom: str
    witness: tuple[str, ...]


@dataclass(frozen=True)
class VerificationReport:
    partial_order_ok: bool
    involution_ok: bool
    antitone_ok: bool
    complement_laws_ok: bool
    missing_meets: tuple[tuple[str, str], ...] = ()
    missing_joins: tuple[tuple[str, str], ...] = ()
    counterexamples: tuple[Counterexample, ...] = field(default=())

    @property
    def axioms_ok(self) -> bool:
        return self.partial_order_ok and self.involution_ok and self.antitone_ok and self.complement_laws_ok

    @property
    def complete(self) -> bool:
        return not self.missing_meets and not self.missing_joins

    def to_dict(self) -> dict:
        return {
            "partial_order_ok": self.partial_order_ok,
            "involution_ok": self.involution_ok,
            "antitone_ok": self.antitone_ok,
            "complement_laws_ok": self.complement_laws_ok,
            "missing_meets": [list(p) for p in self.missing_meets],
            "missing_joins": [list(p) for p in self.missing_joins],
            "counterexamples": [{"axiom": c.axiom, "witness": list(c.witness)}
                                for c in self.counterexamples],
        }


_PARTIAL_ORDER = ("reflexivity", "antisymmetry", "transitivity", "bounds")
_INVOLUTION = ("involution",)
_ANTITONE = ("antitone",)
_COMPLEMENT = ("complement_meet", "complement_join")


def verify_axioms(p: OrthoPoset) -> VerificationReport:
    """Exhaustively check the orthoposet axioms and record missing bounds."""
    down, up = p.masks()
    elems = p.elements
    name = p.name
    n = len(elems)
    bad: list[Counterexample] = []

    for i in range(n):
        if not down[i] >> i & 1:
            bad.append(Counterexample("reflexivity", (name(elems[i]),)))
        for j in _bits(down[i] & ~(1 << i)):
            if down[j] >> i & 1 and j > i:
                bad.append(Counterexample("antisymmetry", (name(elems[i]), name(elems[j]))))
            if down[j] & ~down[i]:
                k = next(_bits(down[j] & ~down[i]))
                bad.append(Counterexample("transitivity", (name(elems[k]), name(elems[j]), name(elems[i]))))
    for b, label in ((BOTTOM, "0"), (TOP, "1")):
        if b not in p:
            bad.append(Counterexample("bounds", (f"{label} missing",)))
    if BOTTOM in p and TOP in p:
        bi, ti = p.index(BOTTOM), p.index(TOP)
        full = (1 << n) - 1
        if up[bi] != full:
            bad.append(Counterexample("bounds", ("0", name(elems[next(_bits(full & ~up[bi]))]))))
        if down[ti] != full:
            bad.append(Counterexample("bounds", (name(elems[next(_bits(full & ~down[ti]))]), "1")))

    ortho: list[int | None] = []
    for e in elems:
        c = T.complement(e)
        ortho.append(p.index(c) if c in p else None)
    for i, c in enumerate(ortho):
        if c is None or ortho[c] != i:
            bad.append(Counterexample("involution", (name(elems[i]),)))

    for j in range(n):
        for i in _bits(down[j]):
            ci, cj = ortho[i], ortho[j]
            if ci is not None and cj is not None and not down[ci] >> cj & 1:
                bad.append(Counterexample("antitone", (name(elems[i]), name(elems[j]))))

    missing_meets, missing_joins = [], []
    meets: dict[tuple[int, int], int | None] = {}
    joins: dict[tuple[int, int], int | None] = {}
    pd = {m: k for k, m in enumerate(down)}
    pu = {m: k for k, m in enumerate(up)}
    for i in range(n):
        for j in range(i, n):
            meets[i, j] = pd.get(down[i] & down[j])
            joins[i, j] = pu.get(up[i] & up[j])
            if meets[i, j] is None:
                missing_meets.append((name(elems[i]), name(elems[j])))
            if joins[i, j] is None:
                missing_joins.append((name(elems[i]), name(elems[j])))

    bottom_i = p.index(BOTTOM) if BOTTOM in p else None
    top_i = p.index(TOP) if TOP in p else None
    for i, c in enumerate(ortho):
        if c is None:
            continue
        key = (min(i, c), max(i, c))
        if bottom_i is None or meets[key] != bottom_i:
            bad.append(Counterexample("complement_meet", (name(elems[i]), name(elems[c]))))
        if top_i is None or joins[key] != top_i:
            bad.append(Counterexample("complement_join", (name(elems[i]), name(elems[c]))))

    def ok(axioms):
        return not any(c.axiom in axioms for c in bad)

    return VerificationReport(
        partial_order_ok=ok(_PARTIAL_ORDER),
        involution_ok=ok(_INVOLUTION),
        antitone_ok=ok(_ANTITONE),
        complement_laws_ok=ok(_COMPLEMENT),
        missing_meets=tuple(missing_meets),
        missing_joins=tuple(missing_joins),
        counterexamples=tuple(bad),
    )


def is_lattice(p: OrthoPoset) -> bool:
    """True when every pair has a meet and a join (finite, so complete)."""
    down, up = p.masks()
    pd, pu = set(down), set(up)
    n = len(down)
    return n > 0 and all(
        down[i] & down[j] in pd and up[i] & up[j] in pu
        for i in range(n) for j in range(i + 1, n)
    )


# -- export ------------------------------------------------------------------------

def _dot_escape(s: str) -> str:
    return s.replace("\\", "\\\\").replace('"', '\\"')


def poset_to_dict(p: OrthoPoset) -> dict:
    elems = p.elements
    lower: dict[int, list[int]] = {i: [] for i in range(len(elems))}
    for i, j in p.covers():
        lower[j].append(i)
    records = []
    for k, e in enumerate(elems):
        c = T.complement(e)
        rec = {
            "id": k,
            "term": str(e),
            "ortho": p.index(c) if c in p else None,
            "covers": sorted(lower[k]),
        }
        if e in p.aliases:
            rec["name"] = p.aliases[e]
        records.append(rec)
    zero = sorted(sorted((str(a) for a in pair), key=lambda s: T.sort_key(T.parse_term(s)))
                  for pair in p.zero_meets)
    return {"elements": records, "zero_meets": zero}


def export_poset(p: OrthoPoset, format: str = "json") -> str:
    """Render ``p`` as JSON (elements with lower covers) or as a DOT Hasse diagram."""
    if format == "json":
        return json.dumps(poset_to_dict(p), indent=2) + "\n"
    if format == "dot":
        lines = ["digraph poset {", "  rankdir=BT;", "  node [shape=box];"]
        for k, e in enumerate(p.elements):
            lines.append(f'  n{k} [label="{_dot_escape(p.name(e))}"];')
        for i, j in sorted(p.covers()):
            lines.append(f"  n{i} -> n{j};")
        lines.append("}")
        return "\n".join(lines) + "\n"
    raise InputError(f"unknown export format: {format!r} (expected 'json' or 'dot')")


def poset_from_dict(data: Mapping) -> OrthoPoset:
    """Inverse of :func:`poset_to_dict`: the order is the closure of the covers."""
    try:
        records = data["elements"]
        terms = {rec["id"]: T.parse_term(rec["term"]) for rec in records}
        relation = [(terms[c], terms[rec["id"]]) for rec in records for c in rec.get("covers", [])]
        aliases = {terms[rec["id"]]: rec["name"] for rec in records if "name" in rec}
        zeros = [frozenset(T.parse_term(x) for x in pair) for pair in data.get("zero_meets", [])]
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed poset JSON: {exc}") from None
    return OrthoPoset.from_relation([terms[rec["id"]] for rec in records], relation,
                                    zeros, aliases, dualize=False)

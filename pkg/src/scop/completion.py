"""Dedekind-MacNeille completion of a finite poset.

For a finite poset the normal completion is the family of all intersections
of principal down-sets (the Moore family they generate).  Each such set ``A``
is the lower half of a cut ``(A, U(A))``.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from . import terms as T
from .errors import DomainError
from .lattice import OrthoPoset, _bits


@dataclass(frozen=True)
class Cut:
    lower: int
    upper: int


class Completion:
    """Complete lattice of cuts, ordered by inclusion of lower sets."""

    def __init__(self, base: OrthoPoset, cuts: Iterable[Cut]):
        self.base = base
        self.cuts = tuple(sorted(cuts, key=lambda c: (c.lower.bit_count(), c.lower)))
        self._by_lower = {c.lower: i for i, c in enumerate(self.cuts)}
        down, _ = base.masks()
        self.embedding = {e: self._by_lower[down[k]] for k, e in enumerate(base.elements)}

    def __len__(self) -> int:
        return len(self.cuts)

    def leq(self, i: int, j: int) -> bool:
        a, b = self.cuts[i].lower, self.cuts[j].lower
        return a & b == a

    def meet(self, i: int, j: int) -> int:
        return self._by_lower[self.cuts[i].lower & self.cuts[j].lower]

    def join(self, i: int, j: int) -> int:
        return self._by_lower[self._lower_of(self.cuts[i].upper & self.cuts[j].upper)]

    def inf(self, indices: Iterable[int]) -> int:
        lower = (1 << len(self.base)) - 1
        for i in indices:
            lower &= self.cuts[i].lower
        return self._by_lower[lower]

    def sup(self, indices: Iterable[int]) -> int:
        upper = (1 << len(self.base)) - 1
        for i in indices:
            upper &= self.cuts[i].upper
        return self._by_lower[self._lower_of(upper)]

    def _lower_of(self, upper: int) -> int:
        down, _ = self.base.masks()
        lower = (1 << len(self.base)) - 1
        for b in _bits(upper):
            lower &= down[b]
        return lower

    def orthocomplement(self, i: int) -> int:
        """``(A, B) -> (B', A')``; needs an orthocomplement on every base element."""
        elems = self.base.elements
        lower = 0
        for b in _bits(self.cuts[i].upper):
            c = T.complement(elems[b])
            if c not in self.base:
                raise DomainError(f"base element {elems[b]} has no orthocomplement")
            lower |= 1 << self.base.index(c)
        return self._by_lower[lower]

    def principal(self, i: int):
        """The base element whose principal cut is ``i``, or None."""
        for e, k in self.embedding.items():
            if k == i:
                return e
        return None

    def label(self, i: int) -> str:
        e = self.principal(i)
        if e is not None:
            return self.base.name(e)
        down, up = self.base.masks()
        lower = self.cuts[i].lower
        maxima = [m for m in _bits(lower) if up[m] & lower == 1 << m]
        names = sorted((self.base.elements[m] for m in maxima), key=T.sort_key)
        return "join{" + ", ".join(self.base.name(t) for t in names) + "}"

    def covers(self) -> list[tuple[int, int]]:
        n = len(self.cuts)
        out = []
        for j in range(n):
            below = [i for i in range(n) if i != j and self.leq(i, j)]
            for i in below:
                if not any(k != i and self.leq(i, k) for k in below):
                    out.append((i, j))
        return out

    def to_dict(self) -> dict:
        elems = self.base.elements
        lower_covers: dict[int, list[int]] = {i: [] for i in range(len(self.cuts))}
        for i, j in self.covers():
            lower_covers[j].append(i)
        records = []
        for i, c in enumerate(self.cuts):
            p = self.principal(i)
            records.append({
                "id": i,
                "label": self.label(i),
                "principal": self.base.index(p) if p is not None else None,
                "lower": [str(elems[k]) for k in _bits(c.lower)],
                "upper": [str(elems[k]) for k in _bits(c.upper)],
                "covers": lower_covers[i],
            })
        return {"base_size": len(elems), "size": len(self.cuts), "cuts": records}


def dedekind_macneille(p: OrthoPoset) -> Completion:
    """Normal completion of ``p`` as a lattice of cuts."""
    down, up = p.masks()
    n = len(p)
    full = (1 << n) - 1
    family = set(down)
    family.add(full)
    frontier = list(family)
    while frontier:
        fresh = []
        members = list(family)
        for a in frontier:
            for b in members:
                c = a & b
                if c not in family:
                    family.add(c)
                    fresh.append(c)
        frontier = fresh
    cuts = []
    for lower in family:
        upper = full
        for a in _bits(lower):
            upper &= up[a]
        cuts.append(Cut(lower, upper))
    return Completion(p, cuts)

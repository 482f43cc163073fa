"""Hand-built example systems.

``garden``
    The 'pet runs through the garden' contexts.  Eigenstate sets::

        e3  {p3, p7, p8, p10, p11}      e9  {p7, p8, p9}
        e7  {p7, p8}    (= e3 ^ e9)     e12 {p10, p12}
        e8  {p8}                        e10 {p10}      (= e3 ^ e12)
        e11 {p7, p8, p10, p11}          e3' {p3_perp}
        (= e7 | e10; p11 is in neither e7 nor e10)

    The ground state is an eigenstate of no context besides 1.

``properties``
    'feathered' (a3), 'can swim' (a7), their meet a15 and the complements,
    over four concrete states plus the ground state.
"""

from __future__ import annotations

from collections.abc import Mapping

from . import terms as T
from .core import Scop, cartan_map, lambda_map
from .jsonio import scop_from_dict
from .lattice import OrthoPoset, generate_context_lattice
from .terms import OrthoTerm

_GARDEN_STATES = [
    ("p_hat", "ground state", True),
    ("p3", "the pet runs through the garden", False),
    ("p3_perp", "the pet does not run through the garden", False),
    ("p7", "the pet runs through the garden trying to catch a cat", False),
    ("p8", "... trying to catch a cat while barking loudly", False),
    ("p9", "the pet tries to catch a cat (not in the garden)", False),
    ("p10", "the pet runs through the garden barking loudly to be fed", False),
    ("p11", "running through the garden after a cat or barking to be fed, unknown which", False),
    ("p12", "the pet barks loudly to be fed (not in the garden)", False),
]

_GARDEN_CONTEXTS = [
    ("0", "zero context", None, []),
    ("1", "unit context", None, []),
    ("e3", "The pet runs through the garden", "p3", ["p3", "p7", "p8", "p10", "p11"]),
    ("e3'", "The pet does not run through the garden", "p3_perp", ["p3_perp"]),
    ("e7", "The pet runs through the garden trying to catch a cat", "p7", ["p7", "p8"]),
    ("e8", "The pet runs through the garden trying to catch a cat while barking loudly", "p8", ["p8"]),
    ("e9", "The pet tries to catch a cat", "p9", ["p7", "p8", "p9"]),
    ("e10", "The pet runs through the garden barking loudly to be fed", "p10", ["p10"]),
    ("e11", "The pet runs through the garden trying to catch a cat or barking loudly to be fed",
     "p11", ["p7", "p8", "p10", "p11"]),
    ("e12", "The pet barks loudly to be fed", "p12", ["p10", "p12"]),
]

# positive contexts of the garden as terms; e3' is the complement of e3
GARDEN_TERMS: dict[str, OrthoTerm] = {
    "e3": T.gen("e3"),
    "e8": T.gen("e8"),
    "e9": T.gen("e9"),
    "e10": T.gen("e10"),
    "e12": T.gen("e12"),
}
GARDEN_TERMS["e7"] = T.meet(GARDEN_TERMS["e3"], GARDEN_TERMS["e9"])
GARDEN_TERMS["e11"] = T.join(GARDEN_TERMS["e7"], GARDEN_TERMS["e10"])


def garden_dict() -> dict:
    return {
        "states": [{"id": i, "label": lab, "ground": g} for i, lab, g in _GARDEN_STATES],
        "contexts": [
            {"id": i, "label": lab, **({"target": t, "eigenstates": eig} if t else {})}
            for i, lab, t, eig in _GARDEN_CONTEXTS
        ],
        "properties": [],
    }


def garden_scop() -> Scop:
    return scop_from_dict(garden_dict())


_PROPERTY_STATES = [
    ("p_hat", "ground state", True),
    ("p_duck", "the pet is a duck", False),
    ("p_parrot", "the pet is a parrot", False),
    ("p_goldfish", "the pet is a goldfish", False),
    ("p_hamster", "the pet is a hamster", False),
]
_PROPERTIES = [
    ("a3", "feathered"),
    ("a3'", "not feathered"),
    ("a7", "can swim"),
    ("a7'", "unable to swim"),
    ("a15", "feathered and can swim"),
    ("a15'", "not feathered or unable to swim"),
    ("a3|a3'", "feathered or not feathered"),
]
# weights per state, in _PROPERTIES order; the ground state uses the printed
# unit-context weights for a3 and a7
_WEIGHTS = {
    "p_hat": [0.59, 0.41, 0.60, 0.40, 0.25, 0.75, 1.0],
    "p_duck": [1, 0, 1, 0, 1, 0, 1],
    "p_parrot": [1, 0, 0, 1, 0, 1, 1],
    "p_goldfish": [0, 1, 1, 0, 0, 1, 1],
    "p_hamster": [0, 1, 0, 1, 0, 1, 1],
}

PROPERTY_TERMS: dict[str, OrthoTerm] = {"a3": T.gen("a3"), "a7": T.gen("a7")}
PROPERTY_TERMS["a15"] = T.meet(PROPERTY_TERMS["a3"], PROPERTY_TERMS["a7"])


def properties_dict() -> dict:
    return {
        "states": [{"id": i, "label": lab, "ground": g} for i, lab, g in _PROPERTY_STATES],
        "contexts": [{"id": "0", "label": "zero context"}, {"id": "1", "label": "unit context"}],
        "properties": [{"id": a, "label": lab} for a, lab in _PROPERTIES],
        "nu": [{"p": p, "a": a, "weight": w}
               for p, ws in _WEIGHTS.items() for (a, _), w in zip(_PROPERTIES, ws)],
    }


def properties_scop() -> Scop:
    return scop_from_dict(properties_dict())


def term_poset(sets: Mapping[OrthoTerm, frozenset], aliases: Mapping[OrthoTerm, str] | None = None) -> OrthoPoset:
    """Orthoposet over terms carrying state sets, plus their complements.

    ``x <= y`` iff ``sets[x]`` is a subset of ``sets[y]``; ``x <= y'`` iff
    the two sets are disjoint.  Complements are ordered by the mirror image.
    """
    pos = list(sets)
    elements = [T.BOTTOM, *pos, *(T.complement(x) for x in pos), T.TOP]
    relation = []
    for x in pos:
        for y in pos:
            if sets[x] <= sets[y]:
                relation.append((x, y))
            if not sets[x] & sets[y]:
                relation.append((x, T.complement(y)))
    return OrthoPoset.from_relation(elements, relation, aliases=aliases)


def garden_term_poset() -> OrthoPoset:
    scop = garden_scop()
    sets = {term: lambda_map(scop, e) for e, term in GARDEN_TERMS.items()}
    aliases = {term: e for e, term in GARDEN_TERMS.items()}
    return term_poset(sets, aliases)


def property_term_poset() -> OrthoPoset:
    scop = properties_scop()
    sets = {term: cartan_map(scop, a) for a, term in PROPERTY_TERMS.items()}
    aliases = {term: a for a, term in PROPERTY_TERMS.items()}
    return term_poset(sets, aliases)


PET_GENERATORS = ("e1", "e2", "e6")
PET_ZERO_MEETS = (("e1", "e6"), ("e2", "e6"))


def pet_context_poset() -> OrthoPoset:
    """The 28-element context poset over e1, e2, e6 with e1^e6 = e2^e6 = 0."""
    return generate_context_lattice(PET_GENERATORS, PET_ZERO_MEETS)

"""Symbolic orthocomplemented-lattice terms.

Terms are immutable and hashable.  The smart constructors :func:`complement`,
:func:`meet` and :func:`join` always return canonical terms:

* complements are pushed down to generators (De Morgan), so a ``Complement``
  only ever wraps a ``Generator`` and double complements vanish;
* ``Meet``/``Join`` operands are sorted, making commutativity invisible;
* bounds, idempotence and ``x ^ x' = 0`` / ``x | x' = 1`` are simplified away.

Associativity is deliberately *not* normalised: ``(a^b)^c`` and ``a^(b^c)``
are different terms.

The ASCII syntax used by :func:`parse_term` and ``str(term)`` writes a
complement as a trailing ``'``, a meet as ``^`` and a join as ``|``;
``0`` and ``1`` are the bounds.  ``^`` binds tighter than ``|``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from .errors import InputError


@dataclass(frozen=True)
class Bottom:
    def __str__(self) -> str:
        return "0"


@dataclass(frozen=True)
class Top:
    def __str__(self) -> str:
        return "1"


@dataclass(frozen=True)
class Generator:
    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Complement:
    inner: "OrthoTerm"

    def __str__(self) -> str:
        return _wrap(self.inner) + "'"


@dataclass(frozen=True)
class Meet:
    left: "OrthoTerm"
    right: "OrthoTerm"

    def __str__(self) -> str:
        return f"{_wrap(self.left)}^{_wrap(self.right)}"


@dataclass(frozen=True)
class Join:
    left: "OrthoTerm"
    right: "OrthoTerm"

    def __str__(self) -> str:
        return f"{_wrap(self.left)}|{_wrap(self.right)}"


OrthoTerm = Union[Bottom, Top, Generator, Complement, Meet, Join]

BOTTOM = Bottom()
TOP = Top()

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


def _wrap(t: OrthoTerm) -> str:
    if isinstance(t, (Meet, Join)) or (isinstance(t, Complement) and not isinstance(t.inner, Generator)):
        return f"({t})"
    return str(t)


def gen(name: str) -> Generator:
    if not isinstance(name, str) or not _NAME.match(name):
        raise InputError(f"invalid generator name: {name!r}")
    return Generator(name)


def sort_key(t: OrthoTerm) -> tuple:
    """Total order on canonical terms.

    Literals order by generator name with a complement right after its
    base; literals precede meets, which precede joins.
    """
    if isinstance(t, Bottom):
        return (-1,)
    if isinstance(t, Generator):
        return (0, t.name, 0)
    if isinstance(t, Complement):
        if isinstance(t.inner, Generator):
            return (0, t.inner.name, 1)
        return (3, sort_key(t.inner))
    if isinstance(t, Meet):
        return (1, sort_key(t.left), sort_key(t.right))
    if isinstance(t, Join):
        return (2, sort_key(t.left), sort_key(t.right))
    return (4,)  # Top


def complement(t: OrthoTerm) -> OrthoTerm:
    if isinstance(t, Bottom):
        return TOP
    if isinstance(t, Top):
        return BOTTOM
    if isinstance(t, Generator):
        return Complement(t)
    if isinstance(t, Complement):
        return canonical(t.inner)
    if isinstance(t, Meet):
        return join(complement(t.left), complement(t.right))
    if isinstance(t, Join):
        return meet(complement(t.left), complement(t.right))
    raise TypeError(f"not a term: {t!r}")


def _binary(cls, a: OrthoTerm, b: OrthoTerm) -> OrthoTerm:
    a, b = canonical(a), canonical(b)
    absorbing, neutral = (BOTTOM, TOP) if cls is Meet else (TOP, BOTTOM)
    if a == absorbing or b == absorbing:
        return absorbing
    if a == neutral:
        return b
    if b == neutral:
        return a
    if a == b:
        return a
    if complement(a) == b:
        return absorbing
    if sort_key(b) < sort_key(a):
        a, b = b, a
    return cls(a, b)


def meet(a: OrthoTerm, b: OrthoTerm) -> OrthoTerm:
    return _binary(Meet, a, b)


def join(a: OrthoTerm, b: OrthoTerm) -> OrthoTerm:
    return _binary(Join, a, b)


def canonical(t: OrthoTerm) -> OrthoTerm:
    """Return the canonical form of an arbitrary (possibly raw) term."""
    if isinstance(t, (Bottom, Top, Generator)):
        return t
    if isinstance(t, Complement):
        return complement(canonical(t.inner))
    if isinstance(t, Meet):
        return meet(t.left, t.right)
    if isinstance(t, Join):
        return join(t.left, t.right)
    raise TypeError(f"not a term: {t!r}")


def is_literal(t: OrthoTerm) -> bool:
    return isinstance(t, Generator) or (isinstance(t, Complement) and isinstance(t.inner, Generator))


def literal_base(t: OrthoTerm) -> str:
    """Generator name underlying a literal ``g`` or ``g'``."""
    if isinstance(t, Generator):
        return t.name
    if isinstance(t, Complement) and isinstance(t.inner, Generator):
        return t.inner.name
    raise InputError(f"not a literal: {t}")


def pretty(t: OrthoTerm) -> str:
    """Unicode rendering with the usual lattice symbols."""
    s = str(t)
    s = re.sub(r"([A-Za-z0-9_)]+)'", lambda m: m.group(1) + "⊥", s)
    return s.replace("^", " ∧ ").replace("|", " ∨ ")


# -- parsing -------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:([A-Za-z_][A-Za-z0-9_]*)|([01])|(.))")


def _tokenize(text: str) -> list[str]:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        tokens.append(m.group(m.lastindex))
        pos = m.end()
    return tokens


def parse_term(text: str) -> OrthoTerm:
    """Parse the ASCII term syntax into a canonical term.

    >>> str(parse_term("(e1^e2)'"))
    "e1'|e2'"
    """
    tokens = _tokenize(text)
    if not tokens:
        raise InputError("empty term")
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else None

    def take():
        nonlocal pos
        tok = peek()
        pos += 1
        return tok

    def expr():
        t = term()
        while peek() == "|":
            take()
            t = join(t, term())
        return t

    def term():
        t = factor()
        while peek() == "^":
            take()
            t = meet(t, factor())
        return t

    def factor():
        tok = take()
        if tok == "(":
            t = expr()
            if take() != ")":
                raise InputError(f"unbalanced parentheses in {text!r}")
        elif tok == "0":
            t = BOTTOM
        elif tok == "1":
            t = TOP
        elif tok is not None and _NAME.match(tok):
            t = Generator(tok)
        else:
            raise InputError(f"unexpected token {tok!r} in {text!r}")
        while peek() == "'":
            take()
            t = complement(t)
        return t

    result = expr()
    if pos != len(tokens):
        raise InputError(f"trailing input {tokens[pos]!r} in {text!r}")
    return result

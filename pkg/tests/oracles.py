"""Reference implementations used only by the tests.

They share no code with the package: terms are plain strings, orders are
networkx graphs, statistics run in mpmath at 50 digits.
"""

from __future__ import annotations

import itertools

import mpmath
import networkx as nx


# -- depth-two term universe over strings ---------------------------------------

def lit_complement(lit: str) -> str:
    return lit[:-1] if lit.endswith("'") else lit + "'"


def lit_key(lit: str) -> tuple[str, int]:
    return (lit.rstrip("'"), lit.endswith("'"))


def s_meet(x: str, y: str) -> str:
    a, b = sorted((x, y), key=lit_key)
    return f"{a}^{b}"


def s_join(x: str, y: str) -> str:
    a, b = sorted((x, y), key=lit_key)
    return f"{a}|{b}"


def s_complement(t: str) -> str:
    if t == "0":
        return "1"
    if t == "1":
        return "0"
    if "^" in t:
        a, b = t.split("^")
        return s_join(lit_complement(a), lit_complement(b))
    if "|" in t:
        a, b = t.split("|")
        return s_meet(lit_complement(a), lit_complement(b))
    return lit_complement(t)


def depth_two(generators, zero_pairs=()):
    """(elements, order graph) with the edge set equal to the full order."""
    zeros = {frozenset(p) for p in zero_pairs}
    lits = [x for g in generators for x in (g, g + "'")]
    g = nx.DiGraph()
    elems = {"0", "1", *lits}
    edges = []
    for x, y in itertools.combinations(lits, 2):
        if x.rstrip("'") == y.rstrip("'") or frozenset((x, y)) in zeros:
            continue
        m = s_meet(x, y)
        elems |= {m, s_complement(m)}
        edges += [(m, x), (m, y)]
    edges += [(s_complement(b), s_complement(a)) for a, b in edges]
    edges += [("0", e) for e in elems] + [(e, "1") for e in elems]
    g.add_nodes_from(elems)
    g.add_edges_from(edges)
    return elems, nx.transitive_closure(g, reflexive=True)


def order_pairs(graph) -> set[tuple[str, str]]:
    return set(graph.edges())


# -- cut completion by brute force -------------------------------------------

def _upper(leq, elems, s):
    return frozenset(u for u in elems if all(leq(x, u) for x in s))


def _lower(leq, elems, s):
    return frozenset(d for d in elems if all(leq(d, x) for x in s))


def cuts_by_up_intersections(elems, leq) -> set[frozenset]:
    """Upper halves of all cuts: intersections of principal up-sets (plus the empty family)."""
    elems = list(elems)
    principal = {frozenset(y for y in elems if leq(x, y)) for x in elems}
    family = {frozenset(elems)} | principal
    frontier = set(family)
    while frontier:
        new = {a & b for a in frontier for b in principal} - family
        family |= new
        frontier = new
    return family


def cuts_by_subsets(elems, leq) -> set[frozenset]:
    """Lower halves L(U(S)) for every subset S; only for small posets."""
    elems = list(elems)
    out = set()
    for r in range(len(elems) + 1):
        for s in itertools.combinations(elems, r):
            out.add(_lower(leq, elems, _upper(leq, elems, s)))
    return out


# -- paired t-test at high precision -----------------------------------------

def paired_t(xs, ys, dps: int = 50) -> tuple[float, int, float]:
    with mpmath.workdps(dps):
        d = [mpmath.mpf(x) - mpmath.mpf(y) for x, y in zip(xs, ys)]
        n = len(d)
        mean = mpmath.fsum(d) / n
        var = mpmath.fsum((v - mean) ** 2 for v in d) / (n - 1)
        t = mean / mpmath.sqrt(var / n)
        df = n - 1
        p = mpmath.betainc(mpmath.mpf(df) / 2, mpmath.mpf(1) / 2, 0, df / (df + t * t), regularized=True)
        return float(t), df, float(p)

"""Acceptance criteria AC1-AC8.

Each test carries a ``criterion`` marker; the conftest prints one PASS/FAIL
line per criterion at the end of the run.  Run alone with::

    python3 -m pytest tests/test_acceptance.py -v
"""

import math
import random
import time

import pytest

import oracles as O
from scopgen import random_scop
from scop import core
from scop import terms as T
from scop.completion import dedekind_macneille
from scop.errors import NoUniqueBound
from scop.fixtures import garden_scop, garden_term_poset, pet_context_poset, property_term_poset
from scop.ingest import load_pet_tables, rank_exemplars, pet_scop
from scop.lattice import OrthoPoset, atoms, generate_context_lattice, is_lattice, join, meet, verify_axioms
from scop.stats import paired_t_test

P = T.parse_term
criterion = pytest.mark.criterion


# -- AC1 ----------------------------------------------------------------------------

EXPECTED_M = {
    "0", "1", "e1", "e1'", "e2", "e2'", "e6", "e6'",
    "e1^e2", "e1^e2'", "e1^e6'", "e1'^e2", "e1'^e2'", "e1'^e6", "e1'^e6'", "e2^e6'", "e2'^e6", "e2'^e6'",
    "e1'|e2'", "e1'|e2", "e1'|e6", "e1|e2'", "e1|e2", "e1|e6'", "e1|e6", "e2'|e6", "e2|e6'", "e2|e6",
}
EXPECTED_ATOMS = {
    "e1^e2", "e1^e2'", "e1^e6'", "e1'^e2", "e1'^e2'", "e1'^e6", "e1'^e6'", "e2^e6'", "e2'^e6", "e2'^e6'",
}


@criterion("AC1", "printed 28-element context set and 10 atoms, < 1 s")
def test_ac1_lattice_reproduction():
    t0 = time.perf_counter()
    p = generate_context_lattice({"e1", "e2", "e6"}, {("e1", "e6"), ("e2", "e6")})
    found_atoms = atoms(p)
    elapsed = time.perf_counter() - t0
    assert {T.canonical(x) for x in p.elements} == {P(s) for s in EXPECTED_M}
    assert len(p) == 28
    assert found_atoms == {P(s) for s in EXPECTED_ATOMS}
    assert elapsed < 1.0, elapsed


# -- AC2 ----------------------------------------------------------------------------

def _random_config(rng):
    n = rng.randint(1, 4)
    gens = rng.sample([f"e{i}" for i in range(1, 10)], n)
    lits = [g + s for g in gens for s in ("", "'")]
    pairs = [(a, b) for a in lits for b in lits if a < b and a.rstrip("'") != b.rstrip("'")]
    zeros = rng.sample(pairs, rng.randint(0, min(len(pairs), 6)))
    return gens, zeros


@criterion("AC2", "axiom suite over 200 random configurations (n <= 4), < 30 s")
def test_ac2_axiom_suite():
    rng = random.Random(20240601)
    t0 = time.perf_counter()
    failures = []
    for _ in range(200):
        gens, zeros = _random_config(rng)
        r = verify_axioms(generate_context_lattice(gens, zeros))
        if not (r.partial_order_ok and r.involution_ok and r.antitone_ok and r.complement_laws_ok) \
                or r.counterexamples:
            failures.append((gens, zeros, r.counterexamples[:3]))
    elapsed = time.perf_counter() - t0
    assert not failures, failures[:3]
    assert elapsed < 30.0, elapsed


# -- AC3 ----------------------------------------------------------------------------

@criterion("AC3", "garden fixture: infimum law, supremum inclusion, p11 superposition")
def test_ac3_quantum_signature():
    s = garden_scop()
    g = garden_term_poset()
    lam = core.lambda_map
    # term element -> context id of the SCOP, where one exists
    ctx_of = {T.BOTTOM: "0", T.TOP: "1", T.complement(g.resolve("e3")): "e3'"}
    ctx_of.update({t: name for t, name in g.aliases.items()})
    checked_meets = checked_joins = 0
    for x, cx in ctx_of.items():
        for y, cy in ctx_of.items():
            try:
                m = meet(g, x, y)
            except NoUniqueBound:
                m = None
            if m in ctx_of:
                assert lam(s, cx) & lam(s, cy) == lam(s, ctx_of[m]), (cx, cy)
                checked_meets += 1
            try:
                j = join(g, x, y)
            except NoUniqueBound:
                j = None
            if j in ctx_of:
                assert lam(s, cx) | lam(s, cy) <= lam(s, ctx_of[j]), (cx, cy)
                checked_joins += 1
    # the same laws through the SCOP's own lambda order
    for e in s.context_ids:
        for f in s.context_ids:
            assert lam(s, e) & lam(s, f) == lam(s, core.context_meet(s, [e, f]))
            assert lam(s, e) | lam(s, f) <= lam(s, core.context_join(s, [e, f]))
    assert checked_meets > 50 and checked_joins > 50
    assert join(g, g.resolve("e7"), g.resolve("e10")) == g.resolve("e11")
    assert core.is_superposition_state(s, "p11", {"e7", "e10"})
    assert "p11" not in lam(s, "e7") | lam(s, "e10")
    assert "p11" in lam(s, "e11")


# -- AC4 ----------------------------------------------------------------------------

@criterion("AC4", "all 98 property weights: |rating/7 - printed| <= 0.005")
def test_ac4_property_weights():
    t = load_pet_tables()
    rates, printed = t.property_rates, t.property_weights
    assert rates.shape == printed.shape == (14, 7)
    bad = []
    for a in rates.rows:
        for c in rates.columns:
            diff = abs(rates[a, c] / 7 - printed[a, c])
            if diff > 0.005 + 1e-12:
                bad.append((a, c, rates[a, c], printed[a, c], round(diff, 4)))
    assert not bad, f"{len(bad)} of 98 cells out of tolerance: {bad}"


# -- AC5 ----------------------------------------------------------------------------

TYPICALITY = {
    "e1": ["dog", "cat", "rabbit", "hamster", "guinea pig", "mouse", "hedgehog", "bird", "parrot",
           "snake", "canary", "goldfish", "spider", "guppy"],
    "e2": ["dog", "parrot", "cat", "bird", "hamster", "canary", "guinea pig", "rabbit", "mouse",
           "hedgehog", "snake", "goldfish", "guppy", "spider"],
    "e4": ["spider", "snake", "hedgehog", "mouse", "rabbit", "guinea pig", "hamster", "parrot", "bird",
           "cat", "dog", "canary", "goldfish", "guppy"],
}
HEADS = {"e1": ["dog", "cat"], "e6": ["goldfish", "guppy"], "e4": ["spider", "snake"]}


def _tie_groups(order, freq):
    out, last = [], None
    for x in order:
        if out and freq[x] == last:
            out[-1].add(x)
        else:
            out.append({x})
        last = freq[x]
    return out


@criterion("AC5", "printed freq columns sum to 1 +/- 0.02; rankings match up to ties")
def test_ac5_exemplar_frequencies():
    t = load_pet_tables()
    for c in t.exemplar_freq.columns:
        assert abs(math.fsum(t.exemplar_freq.column(c).values()) - 1.0) <= 0.02 + 1e-12, c
    s = pet_scop()
    for e, head in HEADS.items():
        assert [x for x, _ in rank_exemplars(s, e)[:2]] == head
    for e, order in TYPICALITY.items():
        ranked = rank_exemplars(s, e)
        freq = dict(ranked)
        assert _tie_groups([x for x, _ in ranked], freq) == _tie_groups(order, freq), e


# -- AC6 ----------------------------------------------------------------------------

def _fixture_posets():
    a, b = T.gen("a"), T.gen("b")
    return {
        "pet_poset": pet_context_poset(),
        "garden": garden_term_poset(),
        "properties": property_term_poset(),
        "one": generate_context_lattice(["e"]),
        "two": generate_context_lattice(["e1", "e2"]),
        "two-zero": generate_context_lattice(["e1", "e2"], ["e1^e2'"]),
        "three": generate_context_lattice(["e1", "e2", "e3"]),
        "antichain": OrthoPoset.from_relation([T.BOTTOM, a, b, T.TOP], [], dualize=False),
    }


@criterion("AC6", "completion: unique meets/joins, order embedding, isomorphic when complete, < 10 s")
def test_ac6_completion_oracle():
    t0 = time.perf_counter()
    for name, p in _fixture_posets().items():
        assert len(p) <= 32, name
        c = dedekind_macneille(p)
        n = len(c)
        leq = [[c.leq(i, j) for j in range(n)] for i in range(n)]
        for i in range(n):
            for j in range(i, n):
                lower = [k for k in range(n) if leq[k][i] and leq[k][j]]
                upper = [k for k in range(n) if leq[i][k] and leq[j][k]]
                assert len([k for k in lower if all(leq[m][k] for m in lower)]) == 1, (name, i, j)
                assert len([k for k in upper if all(leq[k][m] for m in upper)]) == 1, (name, i, j)
        emb = c.embedding
        for x in p.elements:
            for y in p.elements:
                assert p.leq(x, y) == leq[emb[x]][emb[y]], (name, x, y)
        if is_lattice(p):
            assert n == len(p) and len(set(emb.values())) == n, name
        # independent count from the up-set side
        names = [str(e) for e in p.elements]
        pairs = {(str(x), str(y)) for x, y in p.order_pairs()}
        assert n == len(O.cuts_by_up_intersections(names, lambda u, v: (u, v) in pairs)), name
    elapsed = time.perf_counter() - t0
    assert elapsed < 10.0, elapsed


# -- AC7 ----------------------------------------------------------------------------

@criterion("AC7", "collapse over 100 random SCOPs: sums to 1, supported on lambda(e), idempotent")
def test_ac7_collapse_properties():
    rng = random.Random(77)
    for _ in range(100):
        s = random_scop(rng)
        for e in s.context_ids:
            if e == s.zero:
                continue
            eig = core.lambda_map(s, e)
            for p in s.state_ids:
                d = core.apply_context(s, e, p)
                assert abs(math.fsum(d.values()) - 1.0) <= 1e-9
                assert d.support <= eig
                for q in d.support:
                    again = core.apply_context(s, e, q)
                    assert again.is_point_mass() and again.support == {q}


# -- AC8 ----------------------------------------------------------------------------

@criterion("AC8", "paired t-test equals a 50-digit reference on 100 seeded samples within 1e-9")
def test_ac8_ttest_oracle():
    rng = random.Random(8)
    for _ in range(100):
        n = rng.randint(2, 40)
        shift = rng.uniform(-1.0, 1.0)
        xs = [rng.gauss(3.5, 1.2) for _ in range(n)]
        ys = [x + rng.gauss(shift, rng.uniform(0.2, 2.0)) for x in xs]
        r = paired_t_test(xs, ys)
        t, df, p = O.paired_t(xs, ys)
        assert r.degrees_of_freedom == df
        assert abs(r.t_statistic - t) <= 1e-9 * max(1.0, abs(t))
        assert abs(r.p_value - p) <= 1e-9


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-v"]))

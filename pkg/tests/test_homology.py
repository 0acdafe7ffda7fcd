import random
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from osforge import homology as hom
from osforge.corpus import counterexample_ideal, matroid_corpus, two_triples_matroid
from osforge.exterior import MonomialOrder, graded_masks, parse_element
from osforge.field import FieldContext
from osforge.groebner import ideal_spans
from osforge.matroid import classify_elements, direct_sum, uniform
from osforge.monomial import MonomialIdeal, annihilator_monomial, power_ideal

from conftest import os_terms, to_oracle
from oracle import betti_ideal, betti_quotient, bass_quotient, quotient_dims

F = FieldContext()
U23, U24, U11, U12 = uniform(2, 3), uniform(2, 4), uniform(1, 1), uniform(1, 2)
CE = counterexample_ideal()


def quotient(m):
    return hom.module_from_quotient(os_terms(m), m.n, F)


def unit(n, i):
    return [1 if k == i else 0 for k in range(n)]


def dims(module, n):
    return [module.dim(d) for d in range(n + 1)]


def spans_equal(a, b, n):
    order = MonomialOrder.STD_REVLEX
    return ideal_spans(a, n, F, order) == ideal_spans(b, n, F, order)


# Cartan complex values computed once by the dense oracle in tests/oracle.py
# (betti_ideal on J, bass_quotient on E/J) and frozen here.
FROZEN = {
    "U(2,3)": (os_terms(U23), 3,
               {(0, 2): 1, (1, 3): 2, (2, 4): 3, (3, 5): 4},
               {(0, 2): 2, (1, 1): 3, (2, 0): 4, (3, -1): 5}),
    "U(2,4)": (os_terms(U24), 4,
               {(0, 2): 3, (1, 3): 8, (2, 4): 15, (3, 5): 24},
               {(0, 2): 3, (1, 1): 8, (2, 0): 15, (3, -1): 24}),
    "U(2,3)+U(1,1)": (os_terms(direct_sum(U23, U11)), 4,
                      {(0, 2): 1, (1, 3): 2, (2, 4): 3, (3, 5): 4},
                      {(0, 3): 2, (1, 2): 3, (2, 1): 4, (3, 0): 5}),
    "counterexample": ([dict(t) for t in CE.generators], 4,
                       {(0, 2): 3, (0, 3): 1, (1, 3): 9, (1, 4): 4, (2, 4): 19, (2, 5): 10,
                        (3, 5): 34, (3, 6): 20},
                       {(0, 1): 1, (0, 2): 3, (1, 0): 4, (1, 1): 9, (2, -1): 10, (2, 0): 19,
                        (3, -2): 20, (3, -1): 34}),
    "U(1,2)+U(1,2)": (os_terms(direct_sum(U12, U12)), 4,
                      {(0, 1): 2, (1, 2): 3, (2, 3): 4, (3, 4): 5},
                      {(0, 2): 1, (1, 1): 2, (2, 0): 3, (3, -1): 4}),
}


@pytest.mark.parametrize("name", sorted(FROZEN))
def test_frozen_betti_and_bass(name):
    gens, n, betti, bass = FROZEN[name]
    assert hom.betti_table(hom.module_from_ideal(gens, n, F), 3).entries == betti
    assert hom.bass_table(gens, n, F, 3).entries == bass
    assert hom.bass_table_cocomplex(hom.module_from_quotient(gens, n, F), 3).entries == bass


def test_module_dims():
    assert dims(quotient(U23), 3) == [1, 3, 2, 0]
    m = [{1 << i: 1} for i in range(4)]
    assert dims(hom.module_from_quotient(m, 4, F), 4) == [1, 0, 0, 0, 0]
    assert dims(hom.module_from_quotient([], 4, F), 4) == [comb(4, d) for d in range(5)]
    assert dims(hom.module_from_ideal([parse_element("e[2] - e[1]", 2, F)], 2, F), 2) == [0, 1, 1]
    assert dims(hom.module_from_ideal(m[:2], 2, F), 2) == [0, 2, 1]
    assert hom.module_from_ideal([], 3, F).is_zero


def test_module_relations():
    for m in (U23, U24, direct_sum(U23, U11), two_triples_matroid()):
        assert quotient(m).check_relations()
        assert hom.module_from_ideal(os_terms(m), m.n, F).check_relations()
    assert hom.module_from_quotient([dict(t) for t in CE.generators], 4, F).check_relations()


def test_inhomogeneous_input_rejected():
    with pytest.raises(ValueError):
        hom.module_from_quotient([parse_element("e[1] + e[2,3]", 3, F)], 3, F)


def test_annihilator_examples():
    ann = hom.annihilator(os_terms(U23), 3, F)
    expected = [parse_element("e[1] - e[2]", 3, F), parse_element("e[2] - e[3]", 3, F)]
    assert len(ann) == 2 and spans_equal(ann, expected, 3)
    for n in range(1, 5):
        for t in range(1, n + 1):
            gens = [{u: 1} for u in power_ideal(n, t).gens]
            assert spans_equal(hom.annihilator(gens, n, F),
                               [{u: 1} for u in power_ideal(n, n - t + 1).gens], n)
    j = [{0b011: 1}, {0b101: 1}]
    mono = annihilator_monomial(MonomialIdeal(3, [0b011, 0b101]))
    assert spans_equal(hom.annihilator(j, 3, F), [{u: 1} for u in mono.gens], 3)


def test_cartan_homology_examples():
    E3 = hom.module_from_quotient([], 3, F)
    full = [unit(3, i) for i in range(3)]
    assert hom.cartan_homology(full, E3, 4) == {(0, 0): 1}
    # e_1 is regular, so only H_0 = M/e_1 M survives; its dims are those of E'/m'^2
    assert hom.cartan_homology([unit(3, 0)], quotient(U23), 4) == {(0, 0): 1, (0, 1): 2}
    E2 = hom.module_from_quotient([], 2, F)
    # no homology in positive degrees; the complex terms still grow like i + 1
    assert all(i == 0 for (i, _) in hom.cartan_homology([unit(2, 0), unit(2, 1)], E2, 5))


def test_betti_examples():
    j = hom.module_from_ideal(os_terms(U23), 3, F)
    assert hom.betti_table(j, 4).totals() == [1, 2, 3, 4, 5]
    p = hom.betti_table(hom.module_from_ideal([{u: 1} for u in power_ideal(3, 2).gens], 3, F), 4)
    assert p.totals() == [3, 8, 15, 24, 35] and p.shifts() == {2}
    for n in range(1, 5):
        k = hom.betti_table(hom.module_from_quotient([{1 << i: 1} for i in range(n)], n, F), 4)
        assert k.entries == {(i, i): comb(n + i - 1, i) for i in range(5)}


def test_bass_examples():
    b = hom.bass_table(os_terms(U23), 3, F, 4)
    assert b.entries == {(i, 2 - i): i + 2 for i in range(5)}
    assert hom.bass_table([], 3, F, 4).entries == {(0, 3): 1}
    j = [{0b011: 1}, {0b101: 1}]
    b = hom.bass_table(j, 3, F, 3)
    ann = hom.betti_table(hom.module_from_ideal([{0b001: 1}, {0b110: 1}], 3, F), 3)
    assert b.entries == {(i, 3 - jj): c for (i, jj), c in ann.entries.items()}


def test_regular_elements():
    M = quotient(U23)
    assert hom.is_regular_element(unit(3, 0), M)
    assert hom.is_regular_fast(unit(3, 0), M, 2)
    E = hom.module_from_quotient([], 3, F)
    rng = random.Random(5)
    for _ in range(10):
        v = [rng.randint(-3, 3) for _ in range(3)]
        if any(v):
            assert hom.is_regular_element(v, E)
    C = hom.module_from_quotient([dict(t) for t in CE.generators], 4, F)
    for _ in range(30):
        v = [rng.randint(-5, 5) for _ in range(4)]
        assert not hom.is_regular_element(v, C)
    assert hom.is_regular_fast([1, 1], quotient(U12), 1)


def test_regular_fast_agrees_on_os_algebras():
    rng = random.Random(11)
    corpus = [c.matroid for c in matroid_corpus(5) if not classify_elements(c.matroid).loops]
    for _ in range(100):
        m = rng.choice(corpus)
        M = quotient(m)
        v = [rng.choice([0, 0, 1, -1, rng.randint(-9, 9)]) for _ in range(m.n)]
        assert hom.is_regular_fast(v, M, m.rank) == hom.is_regular_element(v, M)


def test_regular_sequences():
    s = quotient(direct_sum(U23, U11))
    assert hom.regular_sequence_check([unit(4, 0), unit(4, 3)], s)
    assert not hom.regular_sequence_check([unit(3, 0), unit(3, 1)], quotient(U23))
    assert hom.regular_sequence_check([], quotient(U23))


def test_depth_examples():
    assert hom.depth(quotient(U23)).value == 1
    r = hom.depth(quotient(direct_sum(U23, U11)), upper=2)
    assert r.value == 2 and r.certified and r.method == "regular-sequence+gin"
    assert hom.regular_sequence_check(r.sequence, quotient(direct_sum(U23, U11)))
    assert hom.depth(hom.module_from_quotient([dict(t) for t in CE.generators], 4, F)).value == 0
    assert hom.depth(quotient(U24), upper=3).method == "interval"
    with pytest.raises(hom.ZeroModuleError):
        hom.depth(quotient(uniform(0, 1)))


def test_hilbert_factor():
    f = hom.hilbert_factor([1, 3, 2])
    assert (f.s, f.q) == (1, [1, 2])
    assert hom.hilbert_factor([1, 4, 5, 2]).s == 2
    f = hom.hilbert_factor([1, 4, 3])
    assert (f.s, f.q) == (1, [1, 3])
    with pytest.raises(ValueError):
        hom.hilbert_factor([])


@pytest.mark.parametrize("m,expected", [
    (uniform(2, 5), (1, 4, 1, 2)),
    (direct_sum(U24, U11), (2, 3, 1, 3)),
    (uniform(3, 3), (3, 0, 0, 3)),
    (U23, (1, 2, 1, 2)),
])
def test_invariants_examples(m, expected):
    inv = hom.invariants(os_terms(m), m.n, F)
    assert (inv.depth, inv.cx, inv.reg, inv.d) == expected
    assert inv.method == "regular-sequence+gin" and inv.betti_consistent
    assert inv.reg + inv.depth == inv.d == m.rank


def test_invariants_zero_module():
    inv = hom.invariants(os_terms(uniform(0, 2)), 2, F)
    assert inv.zero and inv.depth is None


def test_linearity_examples():
    r = hom.has_linear_projective(os_terms(U24), 4, F)
    assert r.linear and r.d == 2 and r.certificate
    r = hom.has_linear_projective(os_terms(two_triples_matroid()), 5, F, imax=2)
    assert not r.linear
    for n, t in [(3, 1), (3, 2), (4, 3)]:
        r = hom.has_linear_projective([{u: 1} for u in power_ideal(n, t).gens], n, F, imax=3)
        assert r.linear and r.d == t
    r = hom.has_linear_injective(os_terms(U23), 3, F)
    assert r.linear and r.d == 2
    r = hom.has_linear_injective(os_terms(two_triples_matroid()), 5, F, imax=2)
    assert r.linear and r.d == 3
    assert not hom.has_linear_injective([dict(t) for t in CE.generators], 4, F, imax=3).linear
    with pytest.raises(hom.ZeroModuleError):
        hom.has_linear_projective([], 3, F)
    with pytest.raises(hom.ZeroModuleError):
        hom.has_linear_injective(os_terms(uniform(0, 1)), 1, F)


def test_quotient_by_e1_of_uniform_is_power():
    # J(U_{m,n}) + (e_1) reduces to the m-th power of the maximal ideal on e_2..e_n
    for m, n in [(1, 3), (2, 4), (2, 5), (3, 5)]:
        M = quotient(uniform(m, n))
        Q, q = hom.quotient_by_form(M, unit(n, 0))
        assert q == 0
        assert dims(Q, n - 1) == [comb(n - 1, d) if d < m else 0 for d in range(n)]


def test_duality_dimensions_and_depth():
    for c in matroid_corpus(5):
        m = c.matroid
        if classify_elements(m).loops:
            continue
        M = quotient(m)
        ann = hom.module_from_ideal(hom.annihilator_terms(os_terms(m), m.n, F), m.n, F)
        assert [ann.dim(d) for d in range(m.n + 1)] == [M.dim(m.n - d) for d in range(m.n + 1)]
        assert hom.depth(M).value == hom.depth(ann).value, c.name


def random_gens(rng, n):
    gens = []
    d = rng.randint(1, n)
    for _ in range(rng.randint(1, 3)):
        masks = graded_masks(n, d)
        gens.append({u: rng.choice([1, -1, 2]) for u in rng.sample(masks, rng.randint(1, min(3, len(masks))))})
        if rng.random() < 0.4:
            d = rng.randint(1, n)
    return gens


@settings(max_examples=20)
@given(st.integers(2, 4), st.integers(0, 2 ** 32))
def test_engine_matches_oracle(n, seed):
    gens = random_gens(random.Random(seed), n)
    og = [to_oracle(g) for g in gens]
    M = hom.module_from_quotient(gens, n, F)
    assert dims(M, n) == quotient_dims(n, og)
    table = hom.betti_table(M, 2)
    assert table.entries == betti_quotient(n, og, 2)
    assert all(c > 0 and 0 <= j - i <= n for (i, j), c in table.entries.items())
    assert hom.betti_table(hom.module_from_ideal(gens, n, F), 2).entries == betti_ideal(n, og, 2)
    if not M.is_zero:
        assert hom.bass_table(gens, n, F, 2).entries == bass_quotient(n, og, 2)

import random
from math import comb

import pytest
from hypothesis import given, strategies as st

from osforge.exterior import (ExteriorElement as X, Monomial, MonomialOrder, boundary, graded_basis,
                              graded_masks, parse_element, render, substitute, wedge)
from osforge.field import FieldContext

from oracle import multiply

F = FieldContext()


def el(n, text):
    return parse_element(text, n, F)


def test_wedge_examples():
    assert wedge(X.gen(2, 2), X.gen(2, 1)) == el(2, "-e[1,2]")
    assert wedge(el(3, "e[1,3]"), X.gen(3, 2)) == el(3, "-e[1,2,3]")
    v = el(2, "e[1] + e[2]")
    assert wedge(v, v).is_zero


def test_boundary_examples():
    assert boundary(el(2, "e[1,2]")) == el(2, "e[2] - e[1]")
    d = boundary(el(3, "e[1,2,3]"))
    assert d == el(3, "e[2,3] - e[1,3] + e[1,2]")
    assert d == wedge(el(3, "e[2] - e[1]"), el(3, "e[3] - e[1]"))
    assert boundary(X.gen(4, 3)) == el(4, "e[]")


def test_substitute_examples():
    ident = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert substitute(X.gen(3, 1), ident) == X.gen(3, 1)
    swap = [[0, 1], [1, 0]]
    assert substitute(el(2, "e[1,2]"), swap) == el(2, "-e[1,2]")
    g = [[1, 1, 0], [0, 1, 0], [0, 0, 1]]
    assert substitute(el(3, "e[1,2]"), g) == el(3, "e[1,2]")
    with pytest.raises(ValueError):
        substitute(X.gen(2, 1), [[1, 1], [1, 1]])


def test_graded_basis():
    assert graded_basis(3, 0) == [Monomial(0)]
    assert len(graded_basis(3, 2)) == 3
    assert len(graded_basis(4, 2)) == 6
    with pytest.raises(ValueError):
        graded_basis(3, 4)
    for n in range(6):
        assert sum(len(graded_masks(n, d)) for d in range(n + 1)) == 2 ** n
        assert [len(graded_masks(n, d)) for d in range(n + 1)] == [comb(n, d) for d in range(n + 1)]


def test_orders():
    std, rev = MonomialOrder.STD_REVLEX, MonomialOrder.REV_COMPAT
    e12, e13, e23 = 0b011, 0b101, 0b110
    assert graded_masks(3, 2, std) == (e12, e13, e23)
    assert graded_masks(3, 2, rev) == (e23, e13, e12)
    assert std.greater(e12, e23) and rev.greater(e23, e12)


@pytest.mark.parametrize("order", list(MonomialOrder))
def test_orders_multiplicative(order):
    n = 5
    for d in range(1, n):
        ms = graded_masks(n, d, order)
        for u in ms:
            for v in ms:
                if not order.greater(u, v):
                    continue
                for w in range(1 << n):
                    if not (u & w or v & w):
                        assert order.greater(u | w, v | w)


def test_monomial_queries():
    u = Monomial.from_support([2, 5])
    assert u.support == (2, 5) and u.degree == 2 and u.max == 5 and u.min == 2
    assert str(u) == "e[2,5]"
    with pytest.raises(ValueError):
        Monomial(0).max
    assert Monomial.from_support([2]).divides(u)


def test_render_parse_roundtrip():
    a = el(3, "e[1,2] - e[1,3] + 2*e[2,3]")
    assert render(a) == "e[1,2] - e[1,3] + 2*e[2,3]"
    assert parse_element(render(a), 3, F) == a
    assert render(X(3)) == "0" and render(el(3, "e[]")) == "e[]"
    assert el(3, "e[2,1]") == el(3, "-e[1,2]")
    assert el(3, "e[1,1]").is_zero
    with pytest.raises(ValueError):
        el(3, "e[4]")


def test_context_mismatch():
    with pytest.raises(ValueError):
        wedge(X.gen(2, 1), X.gen(3, 1))


def random_homogeneous(rng, n, d):
    from itertools import combinations

    masks = [sum(1 << i for i in s) for s in combinations(range(n), d)]
    k = rng.randint(1, min(4, len(masks)))
    return X(n, F, {m: rng.randint(-5, 5) for m in rng.sample(masks, k)})


elems = st.integers(1, 6).flatmap(lambda n: st.tuples(
    st.just(n), st.integers(0, n), st.integers(0, n), st.integers(0, 2 ** 32)))


@given(elems)
def test_axioms(args):
    n, da, db, seed = args
    rng = random.Random(seed)
    a, b = random_homogeneous(rng, n, da), random_homogeneous(rng, n, db)
    assert boundary(boundary(a)).is_zero
    sign = -1 if da % 2 else 1
    assert boundary(wedge(a, b)) == wedge(boundary(a), b) + wedge(a, boundary(b)).scale(sign)
    assert wedge(a, b) == wedge(b, a).scale(-1 if da * db % 2 else 1)
    c = random_homogeneous(rng, n, rng.randint(0, n))
    assert wedge(wedge(a, b), c) == wedge(a, wedge(b, c))


@given(elems)
def test_wedge_matches_oracle(args):
    n, da, db, seed = args
    rng = random.Random(seed)
    a, b = random_homogeneous(rng, n, da), random_homogeneous(rng, n, db)
    conv = lambda t: {tuple(i + 1 for i in range(n) if m >> i & 1): F.lift(c) for m, c in t.items()}
    assert conv(wedge(a, b).terms) == {k: v for k, v in multiply(conv(a.terms), conv(b.terms)).items()}


@given(st.integers(1, 4), st.integers(0, 2 ** 32))
def test_substitute_composition(n, seed):
    rng = random.Random(seed)
    a = random_homogeneous(rng, n, rng.randint(0, n))

    def invertible():
        while True:
            g = [[rng.randint(-2, 2) for _ in range(n)] for _ in range(n)]
            try:
                substitute(X.gen(n, 1), g)
                return g
            except ValueError:
                pass

    g, h = invertible(), invertible()
    gh = [[sum(g[i][k] * h[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
    assert substitute(substitute(a, g), h) == substitute(a, gh)

"""Theorem batteries run over the built-in corpus.

Each check carries a tag, a one-line statement of what is asserted, the
instance name and the expected/observed values.  ``run_suite`` returns a
:class:`Report`; a :class:`~osforge.groebner.GinError` is left to propagate so
that callers can tell a genericity failure from a wrong answer.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from itertools import combinations
from math import comb

from . import poly
from .classify import (classify_linear_resolution, predicted_betti, predicted_invariants,
                       rank3_profile, Rank3Profile)
from .corpus import (NamedMatroid, counterexample_ideal, ideal_corpus, matroid_corpus,
                     random_matroid)
from .exterior import (ExteriorElement, MonomialOrder, boundary, popcount, wedge)
from .field import FieldContext
from .groebner import gin, gin_theorem_suite, ideal_spans, initial_ideal, quotient_hilbert
from . import homology as hom
from .matroid import (beta_invariant, classify_elements, components, mobius, nbc_masks,
                      restrict_to, uniform)
from .monomial import (annihilator_monomial, cx_stable, d_quotient, d_quotient_direct, power_betti,
                       stable_betti)
from .osalg import broken_circuit_ideal, hilbert_charpoly, hilbert_nbc, os_ideal

__all__ = ["STATEMENTS", "SUITES", "Check", "Report", "run_suite", "property_suite"]

STATEMENTS = {
    "hilbert.routes": "nbc count, characteristic polynomial and linear algebra give the same Hilbert series of E/J",
    "hilbert.taylor": "for connected loopless M, (H(E/J,t)/(1+t)) at t=-1 equals (-1)^(r-1) beta(M)",
    "hilbert.factor": "H(E/J,t) = (1+t)^k Q(t) with Q(-1) != 0 and k the number of components",
    "hilbert.counterexample": "(e12,e13,e14,e234): (1+t) divides H while depth is 0 and no Bass diagonal is linear",
    "gin.broken-circuits": "ini(J(M)) under the rev order is the broken circuit ideal",
    "gin.suite": "ini(0:gJ) = 0:ini(gJ); beta, mu bounded by ini(J); Hilbert series and depth preserved by gin",
    "gin.formulas": "for gin(J): n - max max(u) = depth E/J and n - max min(u) = top degree of E/J",
    "gin.idempotent": "gin(gin(J)) = gin(J)",
    "invariants.predicted": "(depth, cx, reg, d) of E/J equal (k, n-k, l-k, l)",
    "invariants.uniform": "U(m,n): (1, n-1, m-1, m) for 0<m<n and (n, 0, 0, n) for m=n",
    "invariants.rank3": "simple rank 3: (1, n-1, 2) unless near pencil; (2, n-2, 1) near pencil n>3; (3, 0, 0) for n=3",
    "invariants.reg-depth": "reg E/J + depth E/J = top degree of E/J",
    "betti.closed-forms": "total beta_i(J) matches the closed forms for parallel sums and uniform plus coloops",
    "betti.powers": "beta_{i,i+t}(m^t) = C(n+i, t+i) C(t+i-1, i)",
    "betti.stable": "beta_{i,i+d}(J) = sum over u in G(J)_d of C(max(u)+i-1, max(u)-1) for stable J",
    "linear.injective": "Bass numbers of E/J(M) lie on the diagonal i+j = r(M)",
    "linear.classification": "the structural classification agrees with the truncated Betti linearity test",
    "linear.relations": "simple M without singleton components whose OS ideal has linear relations is connected",
    "duality.dims": "dim (0:J)_i = dim (E/J)_(n-i)",
    "duality.depth": "depth E/J = depth 0:J",
    "duality.double-annihilator": "0:(0:J) = J for monomial J",
    "duality.bass-routes": "Bass numbers from the cocomplex equal the Betti numbers of 0:J reindexed",
    "duality.quotient": "dim (M/vM)_(n-i) = dim (v (0:J))_i for canonical regular sequences v",
    "regular.generators": "every e_i is regular on E/J(M) for loopless M",
    "regular.fast": "the single-degree regularity test agrees with the full test on OS algebras",
    "regular.canonical": "one generator per component is a maximal regular sequence",
    "regular.reduction": "for U(m,n) the image of J modulo e_1 is the m-th power of the maximal ideal",
    "properties.exterior": "d(d(a)) = 0, d(ab) = d(a)b + (-1)^deg(a) a d(b), ab = (-1)^(deg a deg b) ba",
    "properties.rank": "rank function: r(0)=0, r(X)<=|X|, monotone, submodular",
    "properties.mobius": "sum of mu(0,Y) over flats Y <= X vanishes for X above the bottom",
    "properties.crapo": "beta(M) != 0 iff M is connected (loopless M)",
    "properties.nbc": "number of nbc sets equals dim E/J",
}


@dataclass
class Check:
    tag: str
    instance: str
    ok: bool
    expected: object = None
    got: object = None

    def as_dict(self) -> dict:
        return {"tag": self.tag, "statement": STATEMENTS[self.tag], "instance": self.instance,
                "ok": self.ok, "expected": _plain(self.expected), "got": _plain(self.got)}


def _plain(x):
    if isinstance(x, (list, tuple)):
        return [_plain(y) for y in x]
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (int, str, bool, float)) or x is None:
        return x
    return str(x)


@dataclass
class Report:
    suite: str
    seed: int
    field: str
    checks: list = dc_field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def failures(self) -> list:
        return [c for c in self.checks if not c.ok]

    def as_dict(self, include_passing: bool = False) -> dict:
        tags = sorted({c.tag for c in self.checks})
        summary = {t: [sum(1 for c in self.checks if c.tag == t and c.ok),
                       sum(1 for c in self.checks if c.tag == t)] for t in tags}
        out = {"suite": self.suite, "seed": self.seed, "field": self.field, "passed": self.passed,
               "summary": {t: {"statement": STATEMENTS[t], "passed": a, "total": b}
                           for t, (a, b) in summary.items()},
               "failures": [c.as_dict() for c in self.failures]}
        if include_passing:
            out["checks"] = [c.as_dict() for c in self.checks]
        return out


class _Ctx:
    def __init__(self, report: Report, field: FieldContext, imax: int, seed: int, trials: int,
                 heavy_nmax: int, cases: int):
        self.report = report
        self.field = field
        self.imax = imax
        self.seed = seed
        self.trials = trials
        self.heavy_nmax = heavy_nmax
        self.cases = cases
        self.corpus = matroid_corpus()

    def add(self, tag: str, instance: str, expected, got, ok: bool | None = None):
        self.report.checks.append(Check(tag, instance, expected == got if ok is None else bool(ok),
                                        expected, got))

    def loopless(self, nmax: int | None = None) -> list[NamedMatroid]:
        return [c for c in self.corpus if not classify_elements(c.matroid).loops
                and (nmax is None or c.matroid.n <= nmax)]

    def gens(self, m):
        return list(os_ideal(m, self.field).generators)


def _identity(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


# ---------------------------------------------------------------- suites

def _suite_hilbert(ctx: _Ctx):
    for c in ctx.loopless():
        m = c.matroid
        algebra = hom.module_from_quotient(ctx.gens(m), m.n, ctx.field).hilbert()
        h = hilbert_nbc(m)
        ctx.add("hilbert.routes", c.name, h, [hilbert_charpoly(m), algebra],
                ok=h == hilbert_charpoly(m) == algebra)
        k = len(components(m))
        fac = hom.hilbert_factor(h)
        ctx.add("hilbert.factor", c.name, k, fac.s, ok=fac.s == k and poly.evaluate(fac.q, -1) != 0)
        if k == 1:
            q, _ = poly.divide_one_plus_t(h)
            want = (-1) ** (m.rank - 1) * beta_invariant(m)
            ctx.add("hilbert.taylor", c.name, want, poly.evaluate(q, -1))
    ce = counterexample_ideal()
    M = hom.module_from_quotient(ce.generators, ce.n, ctx.field)
    d = hom.depth(M, trials=max(ctx.trials, 20), seed=ctx.seed)
    fac = hom.hilbert_factor(M.hilbert())
    lin = hom.has_linear_injective(ce.generators, ce.n, ctx.field, imax=min(ctx.imax, 3))
    ctx.add("hilbert.counterexample", ce.name, {"depth": 0, "s": 1, "linear": False},
            {"depth": d.value, "s": fac.s, "linear": lin.linear})


def _suite_gin(ctx: _Ctx):
    for c in ctx.loopless():
        m = c.matroid
        ini = initial_ideal(ctx.gens(m), m.n, ctx.field, MonomialOrder.REV_COMPAT)
        ctx.add("gin.broken-circuits", c.name, broken_circuit_ideal(m), ini)
    for c in ctx.loopless(ctx.heavy_nmax):
        m = c.matroid
        gens = ctx.gens(m)
        rep = gin_theorem_suite(gens, m.n, ctx.field, imax=min(ctx.imax, 3), seed=ctx.seed)
        bad = {k: v for k, v in rep.checks.items() if not v[0]}
        ctx.add("gin.suite", c.name, {}, bad)
        G = gin(gens, m.n, ctx.field, seed=ctx.seed)
        M = hom.module_from_quotient(gens, m.n, ctx.field)
        dep = hom.depth(M, trials=ctx.trials, seed=ctx.seed).value
        top = M.top_degree()
        if G.is_zero:
            got = (m.n, m.n)
        else:
            got = (m.n - cx_stable(G), d_quotient(G))
        ctx.add("gin.formulas", c.name, (dep, top), got,
                ok=got == (dep, top) and (G.is_zero or d_quotient(G) == d_quotient_direct(G)))
        G2 = gin([{u: 1} for u in G.gens], m.n, ctx.field, seed=ctx.seed + 1)
        ctx.add("gin.idempotent", c.name, G, G2)


def _suite_invariants(ctx: _Ctx):
    for c in ctx.loopless():
        m = c.matroid
        inv = hom.invariants(ctx.gens(m), m.n, ctx.field, imax=2, seed=ctx.seed, trials=ctx.trials)
        got = (inv.depth, inv.cx, inv.reg, inv.d)
        ctx.add("invariants.predicted", c.name, predicted_invariants(m).as_tuple(), got,
                ok=got == predicted_invariants(m).as_tuple() and inv.method == "regular-sequence+gin"
                and inv.betti_consistent)
        ctx.add("invariants.reg-depth", c.name, inv.d, inv.reg + inv.depth)
        if c.name.startswith("U(") and "+" not in c.name and 0 < m.rank:
            n, r = m.n, m.rank
            want = (n, 0, 0, n) if r == n else (1, n - 1, r - 1, r)
            ctx.add("invariants.uniform", c.name, want, got)
        prof = rank3_profile(m)
        if prof is Rank3Profile.NEAR_PENCIL:
            want = (3, 0, 0) if m.n == 3 else (2, m.n - 2, 1)
            ctx.add("invariants.rank3", c.name, want, got[:3])
        elif prof is Rank3Profile.OTHER_SIMPLE_RANK3:
            ctx.add("invariants.rank3", c.name, (1, m.n - 1, 2), got[:3])


def _suite_betti(ctx: _Ctx):
    for c in ctx.corpus:
        m = c.matroid
        if m.n > ctx.heavy_nmax or predicted_betti(m, 0) is None:
            continue
        table = hom.betti_table(hom.module_from_ideal(ctx.gens(m), m.n, ctx.field), ctx.imax)
        want = [predicted_betti(m, i) for i in range(ctx.imax + 1)]
        ctx.add("betti.closed-forms", c.name, want, table.totals())
    for ideal in ideal_corpus():
        if not ideal.name.startswith("m^"):
            continue
        n = ideal.n
        t = popcount(next(iter(ideal.generators[0])))
        table = hom.betti_table(hom.module_from_ideal(ideal.generators, n, ctx.field), ctx.imax)
        want = {(i, i + t): power_betti(n, t, i) for i in range(ctx.imax + 1)}
        ctx.add("betti.powers", ideal.name, want, table.entries)
    seen = set()
    for c in ctx.loopless(5):
        m = c.matroid
        G = gin(ctx.gens(m), m.n, ctx.field, seed=ctx.seed)
        if G.is_zero or (m.n, G.gens) in seen:
            continue
        seen.add((m.n, G.gens))
        table = hom.betti_table(hom.module_from_ideal([{u: 1} for u in G.gens], m.n, ctx.field),
                                ctx.imax)
        degs = sorted({popcount(u) for u in G.gens})
        want = {(i, i + d): stable_betti(G, i, d) for i in range(ctx.imax + 1) for d in degs}
        ctx.add("betti.stable", f"gin {c.name}", {k: v for k, v in want.items() if v}, table.entries)


def _suite_linear(ctx: _Ctx):
    imax = min(ctx.imax, 3)
    for c in ctx.loopless(ctx.heavy_nmax):
        m = c.matroid
        rep = hom.has_linear_injective(ctx.gens(m), m.n, ctx.field, imax=imax)
        ctx.add("linear.injective", c.name, (True, m.rank), (rep.linear, rep.d))
    for c in ctx.corpus:
        m = c.matroid
        if m.n > ctx.heavy_nmax:
            continue
        cls = classify_linear_resolution(m)
        gens = ctx.gens(m)
        module = hom.module_from_ideal(gens, m.n, ctx.field)
        if module.is_zero:
            # J = 0 is trivially linear
            ctx.add("linear.classification", c.name, cls.linear, True)
            continue
        rep = hom.has_linear_projective(gens, m.n, ctx.field, imax=ctx.imax, seed=ctx.seed)
        ctx.add("linear.classification", c.name, (cls.linear, cls.m if cls.linear else None),
                (rep.linear, rep.d if rep.linear else None))
        ec = classify_elements(m)
        comps = components(m)
        if ec.is_simple and all(len(x) > 1 for x in comps):
            table = rep.table
            degs = {j for (i, j) in table.entries if i == 0}
            linear_rel = len(degs) == 1 and all(j == min(degs) + 1 for (i, j) in table.entries if i == 1)
            if linear_rel:
                ctx.add("linear.relations", c.name, 1, len(comps))


def _suite_duality(ctx: _Ctx):
    instances = [(c.name, c.matroid.n, ctx.gens(c.matroid), c.matroid) for c in ctx.loopless(ctx.heavy_nmax)]
    for ideal in ideal_corpus():
        instances.append((ideal.name, ideal.n, list(ideal.generators), None))
    for name, n, gens, m in instances:
        M = hom.module_from_quotient(gens, n, ctx.field)
        ann = hom.annihilator_terms(gens, n, ctx.field)
        A = hom.module_from_ideal(ann, n, ctx.field)
        ctx.add("duality.dims", name, [M.dim(n - i) for i in range(n + 1)],
                [A.dim(i) for i in range(n + 1)])
        if not M.is_zero:
            d1 = hom.depth(M, trials=ctx.trials, seed=ctx.seed).value
            d2 = hom.depth(A, trials=ctx.trials, seed=ctx.seed).value
            ctx.add("duality.depth", name, d1, d2)
        imax = min(ctx.imax, 3)
        ctx.add("duality.bass-routes", name, hom.bass_table(gens, n, ctx.field, imax),
                hom.bass_table_cocomplex(M, imax))
        ini = initial_ideal(gens, n, ctx.field)
        ctx.add("duality.double-annihilator", name, ini, annihilator_monomial(annihilator_monomial(ini)))
        if m is not None:
            seq = [[1 if j == comp[0] - 1 else 0 for j in range(n)] for comp in components(m)]
            Q, alive = M, list(range(n))
            for v in seq:
                Q, q = hom.quotient_by_form(Q, [v[k] for k in alive])
                alive.pop(q)
            lhs = [Q.dim(n - i) for i in range(n + 1)]
            ctx.add("duality.quotient", name, lhs, _product_dims(seq, ann, n, ctx.field))


def _product_dims(seq, ann_terms, n: int, field: FieldContext) -> list[int]:
    prod = ExteriorElement(n, field, {0: 1})
    for v in seq:
        prod = prod * ExteriorElement.linear_form(v, field)
    images = [(prod * ExteriorElement(n, field, t)).terms for t in ann_terms]
    spans = ideal_spans([t for t in images if t], n, field)
    return [len(spans[i]) for i in range(n + 1)]


def _suite_regular(ctx: _Ctx):
    rng = random.Random(ctx.seed)
    for c in ctx.loopless(ctx.heavy_nmax):
        m = c.matroid
        gens = ctx.gens(m)
        M = hom.module_from_quotient(gens, m.n, ctx.field)
        flags = [hom.is_regular_element(e, M) for e in _identity(m.n)]
        ctx.add("regular.generators", c.name, [True] * m.n, flags)
        for _ in range(3):
            v = [ctx.field.random_element(rng) if rng.random() < 0.6 else 0 for _ in range(m.n)]
            full, fast = hom.is_regular_element(v, M), hom.is_regular_fast(v, M, m.rank)
            ctx.add("regular.fast", c.name, full, fast)
        seq = [[1 if j == comp[0] - 1 else 0 for j in range(m.n)] for comp in components(m)]
        ok = hom.regular_sequence_check(seq, M)
        longer = [seq + [w] for w in _identity(m.n) if w not in seq]
        maximal = not any(hom.regular_sequence_check(s, M) for s in longer)
        ctx.add("regular.canonical", c.name, (True, True), (ok, maximal))
    for n in range(2, ctx.heavy_nmax + 1):
        for r in range(1, n):
            gens = ctx.gens(uniform(r, n))
            Q, _ = hom.quotient_by_form(hom.module_from_quotient(gens, n, ctx.field), _identity(n)[0])
            want = [1] + [comb(n - 1, d) for d in range(1, r)]
            ctx.add("regular.reduction", f"U({r},{n})", want, Q.hilbert())


def property_suite(name: str, cases: int = 1000, seed: int = 0,
                   field: FieldContext | None = None, nmax: int = 6) -> list[Check]:
    """Randomized batteries: ``exterior``, ``rank``, ``mobius``, ``crapo``, ``nbc``."""
    field = field or FieldContext()
    rng = random.Random(f"{name}:{seed}")
    out = []
    for case in range(cases):
        inst = f"case {case}"
        if name == "exterior":
            n = rng.randint(1, nmax)
            a, b = _random_homogeneous(rng, n, field), _random_homogeneous(rng, n, field)
            da, db = a.degree if not a.is_zero else 0, b.degree if not b.is_zero else 0
            ok = boundary(boundary(a)).is_zero
            sign = -1 if da % 2 else 1
            ok &= boundary(wedge(a, b)) == wedge(boundary(a), b) + wedge(a, boundary(b)).scale(sign)
            ok &= wedge(a, b) == wedge(b, a).scale(-1 if da * db % 2 else 1)
            out.append(Check("properties.exterior", inst, False, True, ok))
            continue
        m = random_matroid(rng, rng.randint(1, nmax))
        if name == "rank":
            full = (1 << m.n) - 1
            x, y = rng.randrange(full + 1), rng.randrange(full + 1)
            r = m.rank_of
            ok = (r(0) == 0 and r(x) <= popcount(x) and r(x) <= r(x | y)
                  and r(x | y) + r(x & y) <= r(x) + r(y))
            out.append(Check("properties.rank", inst, False, True, ok))
        elif name == "mobius":
            lat, mu = m.lattice, mobius(m.lattice)
            ok = mu[lat.bottom] == 1 and all(
                sum(mu[y] for y in lat.flats if y & x == y) == 0 for x in lat.flats if x != lat.bottom)
            out.append(Check("properties.mobius", inst, False, True, ok))
        elif name == "crapo":
            if classify_elements(m).loops:
                m = _delete_loops(m)
            if m.n == 0:
                out.append(Check("properties.crapo", inst, False, True, True))
                continue
            conn = len(components(m)) == 1
            out.append(Check("properties.crapo", inst, False, conn, beta_invariant(m) != 0))
        elif name == "nbc":
            if classify_elements(m).loops:
                m = _delete_loops(m)
            spans = ideal_spans([g.terms for g in os_ideal(m, field).generators], m.n, field)
            out.append(Check("properties.nbc", inst, False, len(nbc_masks(m)),
                             sum(quotient_hilbert(spans, m.n))))
        else:
            raise ValueError(f"unknown property suite {name!r}")
    for c in out:
        c.ok = c.expected == c.got
    return out


def _delete_loops(m):
    loops = set(classify_elements(m).loops)
    return restrict_to(m, [i for i in range(1, m.n + 1) if i not in loops])


def _random_homogeneous(rng: random.Random, n: int, field: FieldContext) -> ExteriorElement:
    d = rng.randint(0, n)
    masks = [sum(1 << i for i in s) for s in combinations(range(n), d)]
    terms = {u: field.random_element(rng) for u in rng.sample(masks, min(len(masks), rng.randint(1, 4)))}
    return ExteriorElement(n, field, {u: c for u, c in terms.items() if c})


def _suite_properties(ctx: _Ctx):
    for name in ("exterior", "rank", "mobius", "crapo", "nbc"):
        ctx.report.checks.extend(property_suite(name, ctx.cases, ctx.seed, ctx.field))


SUITES = {
    "hilbert": _suite_hilbert,
    "gin": _suite_gin,
    "invariants": _suite_invariants,
    "betti": _suite_betti,
    "linear": _suite_linear,
    "duality": _suite_duality,
    "regular": _suite_regular,
    "properties": _suite_properties,
}


def run_suite(name: str, field: FieldContext | None = None, imax: int = 4, seed: int = 0,
              trials: int = 8, heavy_nmax: int = 6, cases: int = 1000) -> Report:
    """Run one named suite, or every suite for ``name == "all"``."""
    field = field or FieldContext()
    if name != "all" and name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from all, {', '.join(SUITES)}")
    report = Report(name, seed, field.name)
    ctx = _Ctx(report, field, imax, seed, trials, heavy_nmax, cases)
    for key in (SUITES if name == "all" else [name]):
        SUITES[key](ctx)
    report.checks.sort(key=lambda c: (c.tag, c.instance))
    return report

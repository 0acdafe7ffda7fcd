"""Initial and generic initial ideals, computed degree by degree.

``E`` is finite dimensional, so there is no Buchberger loop: ``J_d`` is
row-reduced over the full monomial basis of ``E_d`` with columns sorted from
the largest monomial down, and the pivot columns are exactly the leading
monomials of ``J_d``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb

from .exactla import echelon, fully_reduce, rank_of_rows
from .exterior import (ExteriorElement, MonomialOrder, graded_masks, linear_image_terms,
                       popcount, wedge_sign)
from .field import FieldContext
from .monomial import MonomialIdeal, annihilator_monomial, cx_stable, is_strongly_stable

__all__ = [
    "MonomialOrder", "GinError", "ideal_spans", "initial_ideal", "gin", "random_substitution",
    "gin_theorem_suite", "SuiteReport",
]


class GinError(RuntimeError):
    """Random coordinate changes disagreed or produced a non-stable ideal."""


@lru_cache(maxsize=None)
def column_index(n: int, d: int, order: MonomialOrder) -> dict[int, int]:
    return {m: i for i, m in enumerate(graded_masks(n, d, order))}


def _terms(g) -> dict:
    return g.terms if isinstance(g, ExteriorElement) else g


def check_homogeneous(gens) -> None:
    for g in gens:
        t = _terms(g)
        if len({popcount(m) for m in t}) > 1:
            raise ValueError(f"generator {g} is not homogeneous")


def ideal_spans(gens, n: int, field: FieldContext,
                order: MonomialOrder = MonomialOrder.STD_REVLEX) -> dict[int, dict[int, dict]]:
    """Reduced echelon basis of ``J_d`` for ``d = 0..n``.

    Rows are ``{column: coeff}`` with columns indexing ``graded_masks(n, d, order)``;
    the keys of ``spans[d]`` are the pivot columns.
    """
    check_homogeneous(gens)
    by_degree: dict[int, list[dict]] = {}
    for g in gens:
        t = _terms(g)
        if t:
            by_degree.setdefault(popcount(next(iter(t))), []).append(t)
    p = field.p
    spans: dict[int, dict[int, dict]] = {}
    prev: dict[int, dict] = {}
    for d in range(n + 1):
        idx = column_index(n, d, order)
        rows = [{idx[m]: c for m, c in t.items()} for t in by_degree.get(d, [])]
        if prev:
            below = graded_masks(n, d - 1, order)
            for row in prev.values():
                for l in range(n):
                    bit = 1 << l
                    out: dict = {}
                    for col, c in row.items():
                        m = below[col]
                        if m & bit:
                            continue
                        k = idx[m | bit]
                        out[k] = out.get(k, 0) + wedge_sign(bit, m) * c
                    if p is not None:
                        out = {k: v % p for k, v in out.items() if v % p}
                    else:
                        out = {k: v for k, v in out.items() if v}
                    if out:
                        rows.append(out)
        red = fully_reduce(echelon(rows, field), field) if rows else {}
        spans[d] = red
        prev = red
    return spans


def quotient_hilbert(spans: dict[int, dict], n: int) -> list[int]:
    return [comb(n, d) - len(spans[d]) for d in range(n + 1)]


def initial_ideal(gens, n: int, field: FieldContext | None = None,
                  order: MonomialOrder = MonomialOrder.STD_REVLEX) -> MonomialIdeal:
    """Leading-monomial ideal of the ideal generated by ``gens``."""
    field = field or _field_of(gens)
    spans = ideal_spans(gens, n, field, order)
    lead = [graded_masks(n, d, order)[c] for d in spans for c in spans[d]]
    return MonomialIdeal(n, lead)


def _field_of(gens) -> FieldContext:
    for g in gens:
        if isinstance(g, ExteriorElement):
            return g.field
    return FieldContext()


def random_substitution(n: int, field: FieldContext, rng: random.Random) -> list[list]:
    """A uniformly random invertible ``n x n`` matrix over ``field``."""
    while True:
        g = [[field.random_element(rng) for _ in range(n)] for _ in range(n)]
        if rank_of_rows([{j: c for j, c in enumerate(r) if c} for r in g], field) == n:
            return g


def substitute_terms(gens, g, field: FieldContext) -> list[dict]:
    images = [{1 << j: field(c) for j, c in enumerate(r) if field(c)} for r in g]
    return [linear_image_terms(_terms(t), images, field.p) for t in gens]


def gin(gens, n: int, field: FieldContext | None = None,
        order: MonomialOrder = MonomialOrder.STD_REVLEX, attempts: int = 3,
        seed: int = 0) -> MonomialIdeal:
    """Generic initial ideal: ``ini(g J)`` for random ``g``, agreed on by every attempt.

    Raises :class:`GinError` when attempts disagree or the result is not
    strongly stable (a sign that some ``g`` was not generic enough).
    """
    field = field or _field_of(gens)
    if order is not MonomialOrder.STD_REVLEX:
        raise ValueError("gin is only defined here for the std revlex order")
    rng = random.Random(seed)
    results = []
    for _ in range(max(1, attempts)):
        g = random_substitution(n, field, rng)
        results.append(initial_ideal(substitute_terms(gens, g, field), n, field, order))
    if any(r != results[0] for r in results[1:]):
        raise GinError(f"generic initial ideal unstable across {attempts} attempts (seed {seed})")
    if not is_strongly_stable(results[0]):
        raise GinError(f"candidate generic initial ideal {results[0]} is not strongly stable")
    return results[0]


@dataclass
class SuiteReport:
    """Outcome of :func:`gin_theorem_suite`; ``checks`` maps name -> (ok, detail)."""

    checks: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(ok for ok, _ in self.checks.values())

    def add(self, name: str, ok: bool, detail=None):
        self.checks[name] = (bool(ok), detail)


def gin_theorem_suite(gens, n: int, field: FieldContext | None = None, imax: int = 3,
                      seed: int = 0, attempts: int = 3,
                      order: MonomialOrder = MonomialOrder.STD_REVLEX) -> SuiteReport:
    """Executable comparison of ``E/J`` with ``E/ini(J)`` and ``E/gin(J)``.

    Checks duality compatibility of initial ideals, entrywise Betti and Bass
    inequalities against ``ini(J)`` up to ``imax``, depth/complexity transfer
    to ``gin(J)``, and preservation of the Hilbert series.
    """
    from . import homology as hom  # homology imports this module

    field = field or _field_of(gens)
    gens = [_terms(g) for g in gens]
    report = SuiteReport()

    rng = random.Random(seed)
    g = random_substitution(n, field, rng)
    moved = substitute_terms(gens, g, field)
    ann_moved = hom.annihilator_terms(moved, n, field)
    lhs = initial_ideal(ann_moved, n, field)
    rhs = annihilator_monomial(initial_ideal(moved, n, field))
    report.add("dual_gin", lhs == rhs, {"ini(0:gJ)": str(lhs), "0:ini(gJ)": str(rhs)})

    ini = initial_ideal(gens, n, field, order)
    ini_gens = [{u: 1} for u in ini.gens]
    quotient = hom.module_from_quotient(gens, n, field)
    ini_quotient = hom.module_from_quotient(ini_gens, n, field)
    b, b_ini = hom.betti_table(quotient, imax), hom.betti_table(ini_quotient, imax)
    bad = [(i, j, b[i, j], b_ini[i, j]) for (i, j) in b.entries if b[i, j] > b_ini[i, j]]
    report.add("betti_le_ini", not bad, bad)
    mu, mu_ini = hom.bass_table(gens, n, field, imax), hom.bass_table(ini_gens, n, field, imax)
    bad = [(i, j, mu[i, j], mu_ini[i, j]) for (i, j) in mu.entries if mu[i, j] > mu_ini[i, j]]
    report.add("bass_le_ini", not bad, bad)

    G = gin(gens, n, field, attempts=attempts, seed=seed)
    report.add("gin_strongly_stable", is_strongly_stable(G), str(G))
    gin_quotient = hom.module_from_quotient([{u: 1} for u in G.gens], n, field)
    report.add("hilbert_preserved",
               quotient.hilbert() == ini_quotient.hilbert() == gin_quotient.hilbert(),
               {"E/J": quotient.hilbert(), "E/ini": ini_quotient.hilbert(), "E/gin": gin_quotient.hilbert()})
    if quotient.is_zero:
        report.add("depth_transfer", True, "zero quotient")
        return report
    dj = hom.depth(quotient, seed=seed).value
    dg = hom.depth(gin_quotient, seed=seed + 1).value
    cx_formula = cx_stable(G) if not G.is_zero else 0
    report.add("depth_transfer", dj == dg == n - cx_formula,
               {"depth E/J": dj, "depth E/gin": dg, "n - cx formula": n - cx_formula})
    return report

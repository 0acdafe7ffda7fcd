"""Built-in test instances and a random representable matroid generator."""
from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .exactla import rank_of_rows
from .exterior import ExteriorElement
from .field import FieldContext
from .matroid import Matroid, direct_sum, uniform
from .monomial import power_ideal

__all__ = [
    "NamedMatroid", "NamedIdeal", "matroid_corpus", "ideal_corpus", "single_triple_matroid",
    "two_triples_matroid", "counterexample_ideal", "random_matroid",
]


@dataclass(frozen=True)
class NamedMatroid:
    name: str
    matroid: Matroid


@dataclass(frozen=True)
class NamedIdeal:
    name: str
    n: int
    generators: tuple  # raw term dicts

    def elements(self, field: FieldContext) -> list[ExteriorElement]:
        return [ExteriorElement(self.n, field, t) for t in self.generators]


def single_triple_matroid() -> Matroid:
    """Simple rank 3 on five elements: one 3-point line plus two free points."""
    return Matroid.from_circuits(5, [(1, 2, 3), (1, 2, 4, 5), (1, 3, 4, 5), (2, 3, 4, 5)])


def two_triples_matroid() -> Matroid:
    """Simple rank 3 on five elements: two 3-point lines meeting in element 3."""
    return Matroid.from_circuits(5, [(1, 2, 3), (3, 4, 5), (1, 2, 4, 5)])


def counterexample_ideal() -> NamedIdeal:
    """``(e12, e13, e14, e234)`` in four variables: ``(1+t) | H`` but depth 0."""
    return NamedIdeal("E/(e12,e13,e14,e234)", 4, ({0b0011: 1}, {0b0101: 1}, {0b1001: 1}, {0b1110: 1}))


def _uniforms(nmax: int, nmin: int = 1):
    for n in range(nmin, nmax + 1):
        for m in range(n + 1):
            yield f"U({m},{n})", uniform(m, n)


def matroid_corpus(nmax: int = 8, uniform_nmax: int = 6) -> list[NamedMatroid]:
    """Uniform matroids up to ``uniform_nmax`` elements, pairwise direct sums of
    uniform matroids up to ``nmax`` elements and the two rank 3 five-element
    matroids that are not sums of uniform ones.  Sorted by name."""
    out = {name: m for name, m in _uniforms(uniform_nmax)}
    us = list(_uniforms(nmax - 1))
    for (a_name, a), (b_name, b) in combinations(us, 2):
        if a.n + b.n <= nmax:
            out[f"{a_name}+{b_name}"] = direct_sum(a, b)
    for name, m in us:
        if 2 * m.n <= nmax:
            out[f"{name}+{name}"] = direct_sum(m, m)
    out["single-triple(5)"] = single_triple_matroid()
    out["two-triples(5)"] = two_triples_matroid()
    return [NamedMatroid(k, out[k]) for k in sorted(out)]


def ideal_corpus(power_nmax: int = 5) -> list[NamedIdeal]:
    """The counterexample ideal and the powers of the maximal ideal."""
    out = [counterexample_ideal()]
    for n in range(1, power_nmax + 1):
        for t in range(1, n + 1):
            out.append(NamedIdeal(f"m^{t}(n={n})", n, tuple({u: 1} for u in power_ideal(n, t).gens)))
    return sorted(out, key=lambda x: x.name)


def random_matroid(rng: random.Random, n: int, rank: int | None = None, p: int = 3) -> Matroid:
    """Column matroid of a random ``rank x n`` matrix over ``GF(p)``.

    Small ``p`` and a bias toward zero entries make loops, parallel elements
    and disconnected matroids common.
    """
    field = FieldContext.prime(p)
    r = rank if rank is not None else rng.randint(0, n)
    cols = [[rng.randrange(p) if rng.random() < 0.7 else 0 for _ in range(r)] for _ in range(n)]

    def dependent(s: tuple) -> bool:
        rows = [{k: c for k, c in enumerate(cols[i]) if c} for i in s]
        return rank_of_rows(rows, field) < len(s)

    circuits = []
    for size in range(1, n + 1):
        for s in combinations(range(n), size):
            mask = sum(1 << i for i in s)
            if any(c & mask == c for c in circuits):
                continue
            if dependent(s):
                circuits.append(mask)
    return Matroid(n, circuits, _validated=True)

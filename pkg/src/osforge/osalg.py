"""Orlik-Solomon ideals and the two combinatorial Hilbert series routes."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import poly
from .exterior import ExteriorElement, boundary_terms, popcount
from .field import FieldContext
from .matroid import Matroid, classify_elements, nbc_masks, uniform
from .monomial import MonomialIdeal


@dataclass(frozen=True, eq=False)
class OSIdeal:
    """``J(M)``, generated by ``d(e_C)`` for the circuits ``C`` of ``M``."""

    matroid: Matroid
    generators: tuple[ExteriorElement, ...]

    @property
    def n(self) -> int:
        return self.matroid.n

    @property
    def field(self) -> FieldContext:
        return self.generators[0].field if self.generators else FieldContext()

    @property
    def is_unit(self) -> bool:
        """A loop puts ``d(e_i) = 1`` into ``J``."""
        return any(popcount(c) == 1 for c in self.matroid.circuit_masks)

    def contains_monomial(self, support) -> bool:
        """For loopless ``M``: ``e_S`` lies in ``J`` iff ``S`` is dependent."""
        if self.is_unit:
            return True
        return not self.matroid.is_independent(support)


def _boundary_of_mask(n: int, mask: int, field: FieldContext) -> ExteriorElement:
    return ExteriorElement._raw(n, field, boundary_terms({mask: 1}, field.p))


def os_ideal(m: Matroid, field: FieldContext | None = None) -> OSIdeal:
    field = field or FieldContext()
    return OSIdeal(m, tuple(_boundary_of_mask(m.n, c, field) for c in m.circuit_masks))


def os_ideal_uniform_reduced(m: int, n: int, field: FieldContext | None = None) -> OSIdeal:
    """``J(U_{m,n})`` generated only by ``d(e_A)`` with ``|A| = m + 1`` and ``1 in A``."""
    if not 1 <= m < n:
        raise ValueError(f"reduced generators need 1 <= m < n, got m={m}, n={n}")
    field = field or FieldContext()
    gens = [1 | sum(1 << i for i in rest) for rest in combinations(range(1, n), m)]
    return OSIdeal(uniform(m, n), tuple(_boundary_of_mask(n, g, field) for g in gens))


def broken_circuit_ideal(m: Matroid) -> MonomialIdeal:
    if classify_elements(m).loops:
        raise ValueError("broken circuit ideal requires a loopless matroid")
    return MonomialIdeal(m.n, [c & (c - 1) for c in m.circuit_masks])


def hilbert_nbc(m: Matroid) -> list[int]:
    """Coefficient of ``t^k`` = number of nbc sets of size ``k``."""
    if classify_elements(m).loops:
        return []
    h = [0] * (m.n + 1)
    for s in nbc_masks(m):
        h[popcount(s)] += 1
    return poly.trim(h)


def hilbert_charpoly(m: Matroid) -> list[int]:
    """``sum over flats X of mu(0, X) (-1)^r(X) t^r(X)``."""
    if classify_elements(m).loops:
        return []
    lat, mu = m.lattice, m.mobius
    h = [0] * (m.rank + 1)
    for x in lat.flats:
        r = lat.ranks[x]
        h[r] += mu[x] * (-1) ** r
    return poly.trim(h)

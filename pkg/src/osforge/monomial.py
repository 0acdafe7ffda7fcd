"""Monomial ideals of E and the closed formulas for (strongly) stable ones."""
from __future__ import annotations

import json
from math import comb
from pathlib import Path

from .exterior import Monomial, bits, mask_of, popcount


class NotStableError(ValueError):
    pass


def _as_mask(g) -> int:
    if isinstance(g, Monomial):
        return g.mask
    if isinstance(g, int):
        return g
    return mask_of(g)


class MonomialIdeal:
    """An ideal of ``E`` given by its minimal monomial generators ``G(J)``."""

    __slots__ = ("n", "gens")

    def __init__(self, n: int, gens=()):
        self.n = n
        masks = {_as_mask(g) for g in gens}
        if any(m >> n for m in masks):
            raise ValueError(f"generator outside E with n={n}")
        minimal = [m for m in masks if not any(o != m and o & m == o for o in masks)]
        self.gens: tuple[int, ...] = tuple(sorted(minimal, key=lambda m: (popcount(m), m)))

    @classmethod
    def from_json(cls, data) -> MonomialIdeal:
        if isinstance(data, (str, Path)):
            data = json.loads(Path(data).read_text())
        return cls(int(data["n"]), [mask_of(g) for g in data.get("generators", [])])

    def to_json(self) -> dict:
        return {"n": self.n, "generators": [list(Monomial(g).support) for g in self.gens]}

    @property
    def generators(self) -> list[Monomial]:
        return [Monomial(g) for g in self.gens]

    @property
    def is_zero(self) -> bool:
        return not self.gens

    def contains(self, u) -> bool:
        u = _as_mask(u)
        return any(g & u == g for g in self.gens)

    __contains__ = contains

    def monomials(self) -> list[int]:
        """Every monomial of ``J`` (bitsets)."""
        return [u for u in range(1 << self.n) if self.contains(u)]

    def hilbert_quotient(self) -> list[int]:
        """Coefficients of ``H(E/J, t)``: monomials outside ``J`` by degree."""
        h = [0] * (self.n + 1)
        for u in range(1 << self.n):
            if not self.contains(u):
                h[popcount(u)] += 1
        return h

    def __eq__(self, other):
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.n == other.n and self.gens == other.gens

    def __hash__(self):
        return hash((self.n, self.gens))

    def __repr__(self):
        return f"MonomialIdeal(n={self.n}, [{', '.join(str(Monomial(g)) for g in self.gens)}])"


def minimalize(gens, n: int) -> MonomialIdeal:
    return MonomialIdeal(n, gens)


def _exchange_closed(j: MonomialIdeal, strong: bool) -> bool:
    for u in j.monomials():
        if not u:
            continue
        movers = bits(u) if strong else [u.bit_length() - 1]
        for i in movers:
            for k in range(i):
                if u >> k & 1:
                    continue
                if not j.contains((u & ~(1 << i)) | (1 << k)):
                    return False
    return True


def is_stable(j: MonomialIdeal) -> bool:
    """``e_k u / e_max(u)`` stays in ``J`` for all ``u`` in ``J`` and ``k < max(u)``."""
    return _exchange_closed(j, strong=False)


def is_strongly_stable(j: MonomialIdeal) -> bool:
    """``e_k u / e_i`` stays in ``J`` for all ``u`` in ``J``, ``i`` in ``supp(u)``, ``k < i``."""
    return _exchange_closed(j, strong=True)


def stable_betti(j: MonomialIdeal, i: int, d: int) -> int:
    """``beta_{i,i+d}(J) = sum over u in G(J)_d of C(max(u)+i-1, max(u)-1)``."""
    if not is_stable(j):
        raise NotStableError("formula requires a stable ideal")
    return sum(comb(u.bit_length() + i - 1, u.bit_length() - 1)
               for u in j.gens if popcount(u) == d)


def power_ideal(n: int, t: int) -> MonomialIdeal:
    """``m^t``: all monomials of degree ``t``."""
    if not 1 <= t <= n:
        raise ValueError(f"power must satisfy 1 <= t <= n, got t={t}, n={n}")
    return MonomialIdeal(n, [u for u in range(1 << n) if popcount(u) == t])


def power_betti(n: int, t: int, i: int) -> int:
    """``beta_{i,i+t}(m^t) = C(n+i, t+i) C(t+i-1, i)``."""
    if not 1 <= t <= n:
        raise ValueError(f"power must satisfy 1 <= t <= n, got t={t}, n={n}")
    return comb(n + i, t + i) * comb(t + i - 1, i)


def cx_stable(j: MonomialIdeal) -> int:
    """Complexity of ``E/J`` for stable ``J != 0``: the largest ``max(u)`` over ``G(J)``."""
    if j.is_zero:
        raise ValueError("complexity formula needs a nonzero ideal")
    if not is_stable(j):
        raise NotStableError("formula requires a stable ideal")
    return max(u.bit_length() for u in j.gens)


def d_quotient(j: MonomialIdeal) -> int:
    """Top nonzero degree of ``E/J`` for strongly stable ``J != 0``: ``n - max min(u)``."""
    if j.is_zero:
        raise ValueError("formula needs a nonzero ideal")
    if not is_strongly_stable(j):
        raise NotStableError("formula requires a strongly stable ideal")
    return j.n - max((u & -u).bit_length() for u in j.gens if u)


def d_quotient_direct(j: MonomialIdeal) -> int | None:
    """Top nonzero degree of ``E/J`` by enumeration; ``None`` when ``E/J = 0``."""
    h = j.hilbert_quotient()
    nz = [d for d, c in enumerate(h) if c]
    return max(nz) if nz else None


def annihilator_monomial(j: MonomialIdeal) -> MonomialIdeal:
    """``0 :_E J``, generated by the ``e_F`` with ``e_{F^c}`` outside ``J``."""
    full = (1 << j.n) - 1
    return MonomialIdeal(j.n, [f for f in range(1 << j.n) if not j.contains(full & ~f)])

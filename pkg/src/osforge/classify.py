"""Closed-form predictions for Orlik-Solomon ideals read off the matroid.

Which matroids give an OS ideal with a linear resolution, the total Betti
numbers in those cases, depth/cx/reg/d from rank and component count, and
the pencil / near-pencil split of simple rank 3 matroids.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from math import comb

from .exterior import popcount
from .matroid import Matroid, classify_elements, components, restrict_to

__all__ = [
    "LinearResolutionClass", "classify_linear_resolution", "predicted_betti",
    "PredictedInvariants", "predicted_invariants", "Rank3Profile", "rank3_profile",
    "is_uniform",
]


@dataclass(frozen=True)
class LinearResolutionClass:
    """``variant`` is one of ``LoopCase``, ``ParallelSums``, ``UniformPlusColoops``,
    ``NotLinear``.  ``m`` is the degree of the linear resolution when there is one."""

    variant: str
    m: int | None = None
    parts: tuple[int, ...] = ()
    f: int = 0

    @property
    def linear(self) -> bool:
        return self.variant != "NotLinear"

    def parameters(self) -> dict:
        if self.variant == "ParallelSums":
            return {"parts": list(self.parts), "f": self.f, "m": self.m}
        if self.variant == "UniformPlusColoops":
            return {"m": self.m, "f": self.f}
        if self.variant == "LoopCase":
            return {"m": 0}
        return {}


def is_uniform(m: Matroid) -> bool:
    """Every ``(r+1)``-subset is a circuit (and nothing else is), with ``r = rank``."""
    r = m.rank
    if r == m.n:
        return not m.circuit_masks
    return (len(m.circuit_masks) == comb(m.n, r + 1)
            and all(popcount(c) == r + 1 for c in m.circuit_masks))


def classify_linear_resolution(m: Matroid) -> LinearResolutionClass:
    """Decide whether ``J(M)`` has a linear projective resolution, and of what shape."""
    ec = classify_elements(m)
    if ec.loops:
        return LinearResolutionClass("LoopCase", 0)
    comps = components(m)
    coloops = [c for c in comps if len(c) == 1]
    big = [c for c in comps if len(c) > 1]
    f = len(coloops)
    if ec.parallel_classes:
        # each non-coloop component must be a single parallel class U(1, k)
        if all(restrict_to(m, c).rank == 1 for c in big):
            return LinearResolutionClass("ParallelSums", 1, tuple(len(c) for c in big), f)
        return LinearResolutionClass("NotLinear")
    rest = [x for c in big for x in c]
    if not rest:
        # all coloops: J = 0
        return LinearResolutionClass("UniformPlusColoops", 0, (), f)
    core = restrict_to(m, rest)
    if is_uniform(core):
        return LinearResolutionClass("UniformPlusColoops", core.rank, (), f)
    return LinearResolutionClass("NotLinear")


def predicted_betti(m: Matroid, i: int) -> int | None:
    """Total ``beta_i(J(M))`` for the parallel-sum and uniform-plus-coloops classes.

    Returns ``None`` for every other class.
    """
    cls = classify_linear_resolution(m)
    n = m.n
    if cls.variant == "UniformPlusColoops":
        if cls.m == 0:
            return 0
        return comb(n - cls.f - 1 + i, cls.m + i) * comb(cls.m + i - 1, i)
    if cls.variant == "ParallelSums":
        k = len(cls.parts)
        return comb(n - cls.f - k + i, i + 1)
    return None


@dataclass(frozen=True)
class PredictedInvariants:
    depth: int
    cx: int
    reg: int
    d: int

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.depth, self.cx, self.reg, self.d)


def predicted_invariants(m: Matroid) -> PredictedInvariants:
    """``(k, n-k, l-k, l)`` with ``l`` the rank and ``k`` the number of components."""
    if classify_elements(m).loops:
        raise ValueError("matroid has a loop; its OS algebra is zero")
    l, k = m.rank, len(components(m))
    return PredictedInvariants(k, m.n - k, l - k, l)


class Rank3Profile(enum.Enum):
    PENCIL = "Pencil"
    NEAR_PENCIL = "NearPencil"
    OTHER_SIMPLE_RANK3 = "OtherSimpleRank3"
    NOT_APPLICABLE = "NotApplicable"


def rank3_profile(m: Matroid) -> Rank3Profile:
    """Pencil ``U(2,n)``, near pencil ``U(2,n-1) + U(1,1)``, or another simple rank 3 matroid.

    For simple rank 3 input the near pencils are exactly the disconnected ones;
    that is asserted here.
    """
    ec = classify_elements(m)
    if not ec.is_simple:
        return Rank3Profile.NOT_APPLICABLE
    if m.rank == 2 and m.n >= 3:
        return Rank3Profile.PENCIL
    if m.rank != 3:
        return Rank3Profile.NOT_APPLICABLE
    near = False
    for c in ec.coloops:
        rest = [x for x in range(1, m.n + 1) if x != c]
        if restrict_to(m, rest).rank == 2:
            near = True
            break
    connected = len(components(m)) == 1
    if connected == near:
        raise AssertionError(f"simple rank 3 matroid {m}: connected={connected}, near pencil={near}")
    return Rank3Profile.NEAR_PENCIL if near else Rank3Profile.OTHER_SIMPLE_RANK3

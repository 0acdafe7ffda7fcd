"""Matroids on ``[n] = {1, ..., n}`` given by their circuits.

Independence is "contains no circuit", which keeps every query linear in the
number of circuits.  Lattice-of-flats quantities (Mobius function,
characteristic polynomial, beta invariant) enumerate flats explicitly and are
capped at ``n <= 20``.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from pathlib import Path

from .exterior import bits, mask_of, popcount

ENUMERATION_LIMIT = 20


class MatroidError(ValueError):
    """Circuit axioms violated; ``witness`` names the offending sets."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


def _support(mask: int) -> tuple[int, ...]:
    return tuple(b + 1 for b in bits(mask))


@dataclass(frozen=True)
class FlatsLattice:
    """Flats (as bitsets) sorted by rank then bitset, with their ranks."""

    flats: tuple[int, ...]
    ranks: dict = field(compare=False, hash=False)

    @property
    def bottom(self) -> int:
        return self.flats[0]

    @property
    def top(self) -> int:
        return self.flats[-1]

    def leq(self, x: int, y: int) -> bool:
        return x & y == x

    def __len__(self):
        return len(self.flats)

    def as_sets(self) -> list[tuple[int, ...]]:
        return [_support(f) for f in self.flats]


class Matroid:
    """An (immutable, validated) matroid on ``[n]``.

    Build instances with :meth:`from_circuits`, :func:`uniform` or
    :func:`direct_sum`.
    """

    __slots__ = ("n", "circuit_masks", "__dict__")

    def __init__(self, n: int, circuit_masks, *, _validated: bool = False):
        if not _validated:
            raise TypeError("use Matroid.from_circuits(...)")
        self.n = n
        self.circuit_masks: tuple[int, ...] = tuple(sorted(set(circuit_masks), key=lambda m: (popcount(m), m)))

    # -- construction ------------------------------------------------------
    @classmethod
    def from_circuits(cls, n: int, circuits) -> Matroid:
        if n < 0:
            raise MatroidError("ground set size must be nonnegative")
        masks = []
        for c in circuits:
            c = list(c)
            if any(not isinstance(i, int) or not 1 <= i <= n for i in c):
                raise MatroidError(f"circuit {c} has an index outside 1..{n}", witness=(c,))
            if len(set(c)) != len(c):
                raise MatroidError(f"circuit {c} repeats an element", witness=(c,))
            if not c:
                raise MatroidError("the empty set cannot be a circuit", witness=((),))
            masks.append(mask_of(c))
        masks = sorted(set(masks))
        for a in masks:
            for b in masks:
                if a != b and a & b == a:
                    raise MatroidError(
                        f"circuits are not an antichain: {list(_support(a))} is inside {list(_support(b))}",
                        witness=(_support(a), _support(b)))
        circuit_set = set(masks)
        for a, b in combinations(masks, 2):
            common = a & b
            if not common:
                continue
            union = a | b
            for e in bits(common):
                rest = union & ~(1 << e)
                if not any(c & rest == c for c in circuit_set):
                    raise MatroidError(
                        "circuit elimination fails for "
                        f"{list(_support(a))}, {list(_support(b))} at element {e + 1}",
                        witness=(_support(a), _support(b), e + 1))
        return cls(n, masks, _validated=True)

    @classmethod
    def from_json(cls, data) -> Matroid:
        if isinstance(data, (str, Path)):
            data = json.loads(Path(data).read_text())
        try:
            return cls.from_circuits(int(data["n"]), data.get("circuits", []))
        except (KeyError, TypeError) as exc:
            raise MatroidError(f"malformed matroid JSON: {exc}") from exc

    def to_json(self) -> dict:
        return {"n": self.n, "circuits": [list(c) for c in self.circuits]}

    # -- basic data ----------------------------------------------------------
    @property
    def circuits(self) -> list[tuple[int, ...]]:
        return [_support(c) for c in self.circuit_masks]

    @property
    def ground(self) -> int:
        return (1 << self.n) - 1

    def __eq__(self, other):
        if not isinstance(other, Matroid):
            return NotImplemented
        return self.n == other.n and self.circuit_masks == other.circuit_masks

    def __hash__(self):
        return hash((self.n, self.circuit_masks))

    def __repr__(self):
        return f"Matroid(n={self.n}, circuits={self.circuits})"

    def is_independent(self, s) -> bool:
        s = _as_mask(s)
        return not any(c & s == c for c in self.circuit_masks)

    def rank_of(self, s) -> int:
        """Size of a maximal independent subset of ``s`` (greedy)."""
        s = _as_mask(s)
        indep = 0
        for b in bits(s):
            cand = indep | (1 << b)
            if not any(c & cand == c for c in self.circuit_masks):
                indep = cand
        return popcount(indep)

    @cached_property
    def rank(self) -> int:
        return self.rank_of(self.ground)

    def closure(self, s) -> int:
        """``cl(s) = {i : r(s + i) = r(s)}`` as a bitset."""
        s = _as_mask(s)
        r = self.rank_of(s)
        out = s
        for i in range(self.n):
            if not s >> i & 1 and self.rank_of(s | 1 << i) == r:
                out |= 1 << i
        return out

    # -- lattice of flats ------------------------------------------------------
    @cached_property
    def lattice(self) -> FlatsLattice:
        return flats_lattice(self)

    @cached_property
    def mobius(self) -> dict[int, int]:
        return mobius(self.lattice)


def _as_mask(s) -> int:
    return s if isinstance(s, int) else mask_of(s)


def uniform(m: int, n: int) -> Matroid:
    """``U_{m,n}``: every subset of size ``<= m`` is independent."""
    if not 0 <= m <= n:
        raise MatroidError(f"uniform matroid needs 0 <= m <= n, got m={m}, n={n}")
    return Matroid(n, [sum(1 << i for i in c) for c in combinations(range(n), m + 1)], _validated=True)


def direct_sum(a: Matroid, b: Matroid) -> Matroid:
    """Ground sets side by side; ``b`` is relabelled ``a.n + 1, ..., a.n + b.n``."""
    return Matroid(a.n + b.n, list(a.circuit_masks) + [c << a.n for c in b.circuit_masks],
                   _validated=True)


def rank_of(m: Matroid, s) -> int:
    return m.rank_of(s)


def closure(m: Matroid, s) -> tuple[int, ...]:
    return _support(m.closure(s))


def flats_lattice(m: Matroid) -> FlatsLattice:
    if m.n > ENUMERATION_LIMIT:
        raise MatroidError(f"flat enumeration limited to n <= {ENUMERATION_LIMIT}")
    bottom = m.closure(0)
    seen = {bottom: m.rank_of(bottom)}
    frontier = [bottom]
    while frontier:
        nxt = []
        for f in frontier:
            for i in range(m.n):
                if f >> i & 1:
                    continue
                g = m.closure(f | 1 << i)
                if g not in seen:
                    seen[g] = m.rank_of(g)
                    nxt.append(g)
        frontier = nxt
    flats = tuple(sorted(seen, key=lambda f: (seen[f], f)))
    return FlatsLattice(flats, seen)


def mobius(lattice: FlatsLattice) -> dict[int, int]:
    """``mu(bottom, X)`` for every flat ``X``."""
    mu = {}
    for z in lattice.flats:
        if z == lattice.bottom:
            mu[z] = 1
            continue
        mu[z] = -sum(v for y, v in mu.items() if y & z == y and y != z)
    return mu


def characteristic_polynomial(m: Matroid) -> list[int]:
    """Coefficients (index = power of t) of ``sum_X mu(0, X) t^(r(M) - r(X))``."""
    lat, mu = m.lattice, m.mobius
    coeffs = [0] * (m.rank + 1)
    for x in lat.flats:
        coeffs[m.rank - lat.ranks[x]] += mu[x]
    return coeffs


def beta_invariant(m: Matroid) -> int:
    """Crapo's beta invariant, computed by the subset sum and the flat sum.

    Raises ``ArithmeticError`` if the two disagree.  The flat sum only holds
    for loopless matroids; with a loop the subset sum vanishes and is returned.
    """
    if m.n > ENUMERATION_LIMIT:
        raise MatroidError(f"beta invariant limited to n <= {ENUMERATION_LIMIT}")
    sign = -1 if m.rank % 2 else 1
    subset_sum = sum((-1 if popcount(s) % 2 else 1) * m.rank_of(s) for s in range(1 << m.n))
    lat, mu = m.lattice, m.mobius
    if lat.bottom:
        return sign * subset_sum
    flat_sum = sum(mu[x] * lat.ranks[x] for x in lat.flats)
    if subset_sum != flat_sum:
        raise ArithmeticError(f"beta invariant mismatch: {sign * subset_sum} vs {sign * flat_sum}")
    return sign * subset_sum


def components(m: Matroid) -> list[tuple[int, ...]]:
    """Connected components, sorted by smallest element."""
    parent = list(range(m.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for c in m.circuit_masks:
        bs = bits(c)
        for b in bs[1:]:
            ra, rb = find(bs[0]), find(b)
            if ra != rb:
                parent[rb] = ra
    groups: dict[int, list[int]] = {}
    for i in range(m.n):
        groups.setdefault(find(i), []).append(i + 1)
    return sorted((tuple(g) for g in groups.values()), key=lambda g: g[0])


@dataclass(frozen=True)
class ElementClasses:
    loops: tuple[int, ...]
    parallel_classes: tuple[tuple[int, ...], ...]
    coloops: tuple[int, ...]
    is_simple: bool


def classify_elements(m: Matroid) -> ElementClasses:
    """Loops, non-trivial parallel classes and coloops."""
    loops = tuple(_support(c)[0] for c in m.circuit_masks if popcount(c) == 1)
    pairs = [c for c in m.circuit_masks if popcount(c) == 2]
    # parallelism is an equivalence relation on non-loops
    classes: dict[int, set[int]] = {}
    for c in pairs:
        a, b = _support(c)
        merged = classes.get(a, {a}) | classes.get(b, {b})
        for x in merged:
            classes[x] = merged
    parallel = sorted({tuple(sorted(s)) for s in classes.values()})
    in_circuit = 0
    for c in m.circuit_masks:
        in_circuit |= c
    coloops = tuple(i + 1 for i in range(m.n) if not in_circuit >> i & 1)
    return ElementClasses(loops, tuple(parallel), coloops, not loops and not parallel)


def broken_circuits(m: Matroid) -> list[tuple[int, ...]]:
    """``C - min C`` for every circuit, in the natural order on ``[n]``."""
    out = {c & (c - 1) for c in m.circuit_masks}
    return [_support(b) for b in sorted(out, key=lambda b: (popcount(b), b))]


def nbc_masks(m: Matroid) -> list[int]:
    if m.n > ENUMERATION_LIMIT:
        raise MatroidError(f"nbc enumeration limited to n <= {ENUMERATION_LIMIT}")
    bcs = {c & (c - 1) for c in m.circuit_masks}
    return [s for s in range(1 << m.n) if not any(b & s == b for b in bcs)]


def nbc_sets(m: Matroid) -> list[tuple[int, ...]]:
    """Subsets of ``[n]`` containing no broken circuit, by size then bitset."""
    return [_support(s) for s in sorted(nbc_masks(m), key=lambda s: (popcount(s), s))]


def restrict_to(m: Matroid, elements) -> Matroid:
    """``M|X`` relabelled onto ``1..|X|`` in increasing order."""
    xs = sorted(elements)
    pos = {x - 1: i for i, x in enumerate(xs)}
    x_mask = mask_of(xs)
    circ = []
    for c in m.circuit_masks:
        if c & x_mask == c:
            circ.append(sum(1 << pos[b] for b in bits(c)))
    return Matroid(len(xs), circ, _validated=True)


# -- CLI expression syntax -------------------------------------------------------

_UNIFORM = re.compile(r"^\s*(?:U|uniform)\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*$")


def parse_matroid(text: str) -> Matroid:
    """Parse ``U(2,3)+U(1,1)``, ``uniform(2,4)``, ``direct_sum(A,B)`` or a JSON path.

    ``+`` is the direct sum and binds left to right.
    """
    text = text.strip()
    if text.startswith("direct_sum(") and text.endswith(")"):
        inner = text[len("direct_sum("):-1]
        depth = 0
        for i, ch in enumerate(inner):
            depth += ch == "("
            depth -= ch == ")"
            if ch == "," and depth == 0:
                return direct_sum(parse_matroid(inner[:i]), parse_matroid(inner[i + 1:]))
        raise MatroidError(f"direct_sum needs two arguments: {text!r}")
    parts = _split_top(text, "+")
    if len(parts) > 1:
        out = parse_matroid(parts[0])
        for p in parts[1:]:
            out = direct_sum(out, parse_matroid(p))
        return out
    mu = _UNIFORM.match(text)
    if mu:
        return uniform(int(mu.group(1)), int(mu.group(2)))
    if text.startswith("{"):
        return Matroid.from_json(json.loads(text))
    path = Path(text)
    if path.exists():
        return Matroid.from_json(path)
    raise MatroidError(f"cannot interpret matroid {text!r}")


def _split_top(text: str, sep: str) -> list[str]:
    out, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        depth += ch in "([{"
        depth -= ch in ")]}"
        if ch == sep and depth == 0:
            out.append(text[start:i])
            start = i + 1
    out.append(text[start:])
    return out

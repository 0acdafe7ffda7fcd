"""The exterior algebra E = K<e_1, ..., e_n>.

Monomials are bitsets: bit ``i-1`` set means ``e_i`` is a factor, so ``e_S``
for ``S = {1, 3}`` is ``0b101``.  The empty bitset is the unit ``1 = e_[]``.
Indices are 1-based at every public boundary (constructors, text format,
``Monomial.support``) and 0-based bit positions inside.
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .exactla import rank_of_rows
from .field import FieldContext

MAX_GENERATORS = 24


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def bits(mask: int) -> list[int]:
    """0-based positions of the set bits, increasing."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def mask_of(support) -> int:
    """Bitset of a 1-based index collection."""
    m = 0
    for i in support:
        if i < 1:
            raise ValueError(f"index {i} out of range (indices are 1-based)")
        m |= 1 << (i - 1)
    return m


@lru_cache(maxsize=1 << 20)
def wedge_sign(s: int, t: int) -> int:
    """Sign of ``e_S ^ e_T`` in terms of ``e_{S u T}``; 0 if S and T meet.

    It is ``(-1)^#{(a, b) : a in S, b in T, a > b}``.
    """
    if s & t:
        return 0
    inversions = 0
    while t:
        low = t & -t
        inversions += popcount(s & ~((low << 1) - 1))
        t ^= low
    return -1 if inversions & 1 else 1


class MonomialOrder(enum.Enum):
    """Total orders on squarefree monomials of equal degree.

    ``STD_REVLEX``: ``u > v`` iff the largest index where the supports differ
    lies in ``supp(v)``; generic initial ideals are strongly stable under it
    and ``e_1 > e_2 > ... > e_n``.
    ``REV_COMPAT``: the opposite, ``u > v`` iff that index lies in ``supp(u)``;
    leading terms of ``d(e_C)`` are then the broken circuits ``e_{C - min C}``.
    """

    STD_REVLEX = "std"
    REV_COMPAT = "rev"

    def key(self, mask: int) -> int:
        """Sort key: ascending key order is descending monomial order."""
        return mask if self is MonomialOrder.STD_REVLEX else -mask

    def greater(self, u: int, v: int) -> bool:
        if u == v:
            return False
        top = 1 << ((u ^ v).bit_length() - 1)
        in_u = bool(u & top)
        return in_u if self is MonomialOrder.REV_COMPAT else not in_u

    @classmethod
    def parse(cls, text: str) -> MonomialOrder:
        return cls(text.strip().lower())


@dataclass(frozen=True)
class Monomial:
    """A squarefree monomial ``e_S``."""

    mask: int

    @classmethod
    def from_support(cls, support) -> Monomial:
        return cls(mask_of(support))

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(b + 1 for b in bits(self.mask))

    @property
    def degree(self) -> int:
        return popcount(self.mask)

    @property
    def max(self) -> int:
        if not self.mask:
            raise ValueError("max is undefined for the unit monomial")
        return self.mask.bit_length()

    @property
    def min(self) -> int:
        if not self.mask:
            raise ValueError("min is undefined for the unit monomial")
        return (self.mask & -self.mask).bit_length()

    def divides(self, other: Monomial) -> bool:
        return self.mask & other.mask == self.mask

    def __str__(self):
        return "e[" + ",".join(map(str, self.support)) + "]"


def graded_basis(n: int, d: int, order: MonomialOrder = MonomialOrder.STD_REVLEX) -> list[Monomial]:
    """All ``C(n, d)`` monomials of degree ``d``, largest first under ``order``."""
    if not 0 <= d <= n:
        raise ValueError(f"degree {d} out of range 0..{n}")
    return [Monomial(m) for m in graded_masks(n, d, order)]


@lru_cache(maxsize=None)
def graded_masks(n: int, d: int, order: MonomialOrder = MonomialOrder.STD_REVLEX) -> tuple[int, ...]:
    masks = [sum(1 << i for i in c) for c in combinations(range(n), d)]
    masks.sort(key=order.key)
    return tuple(masks)


# -- raw term-dict arithmetic ---------------------------------------------------

def _clean(terms: dict, p: int | None) -> dict:
    if p is None:
        return {m: c for m, c in terms.items() if c}
    return {m: c % p for m, c in terms.items() if c % p}


def wedge_terms(a: dict, b: dict, p: int | None) -> dict:
    out: dict = {}
    for s, x in a.items():
        for t, y in b.items():
            sg = wedge_sign(s, t)
            if sg:
                k = s | t
                out[k] = out.get(k, 0) + sg * x * y
    return _clean(out, p)


def boundary_terms(a: dict, p: int | None) -> dict:
    out: dict = {}
    for s, x in a.items():
        for k, b in enumerate(bits(s)):
            m = s & ~(1 << b)
            out[m] = out.get(m, 0) + (x if k % 2 == 0 else -x)
    return _clean(out, p)


def linear_image_terms(a: dict, images: list[dict], p: int | None) -> dict:
    """Apply the algebra map sending ``e_{i+1}`` to ``images[i]``."""
    out: dict = {}
    for s, x in a.items():
        prod = {0: 1}
        for b in bits(s):
            prod = wedge_terms(prod, images[b], p)
            if not prod:
                break
        for m, c in prod.items():
            out[m] = out.get(m, 0) + x * c
    return _clean(out, p)


class ExteriorElement:
    """A K-linear combination of monomials of E, stored as ``{mask: coeff}``."""

    __slots__ = ("n", "field", "terms")

    def __init__(self, n: int, field: FieldContext | None = None, terms: dict | None = None):
        if not 0 <= n <= MAX_GENERATORS:
            raise ValueError(f"n must lie in 0..{MAX_GENERATORS}")
        self.n = n
        self.field = field or FieldContext()
        t = {}
        limit = 1 << n
        for m, c in (terms or {}).items():
            if not 0 <= m < limit:
                raise ValueError(f"monomial {m:b} outside E with n={n}")
            c = self.field(c)
            if c:
                t[m] = c
        self.terms = t

    @classmethod
    def _raw(cls, n, field, terms) -> ExteriorElement:
        obj = cls.__new__(cls)
        obj.n, obj.field, obj.terms = n, field, terms
        return obj

    @classmethod
    def monomial(cls, n: int, support=(), coeff=1, field: FieldContext | None = None) -> ExteriorElement:
        return cls(n, field, {mask_of(support): coeff})

    @classmethod
    def gen(cls, n: int, i: int, field: FieldContext | None = None) -> ExteriorElement:
        """The generator ``e_i`` (1-based)."""
        if not 1 <= i <= n:
            raise ValueError(f"generator index {i} out of range 1..{n}")
        return cls(n, field, {1 << (i - 1): 1})

    @classmethod
    def linear_form(cls, coeffs, field: FieldContext | None = None) -> ExteriorElement:
        """``sum_i coeffs[i-1] e_i``."""
        return cls(len(coeffs), field, {1 << i: c for i, c in enumerate(coeffs)})

    def _check(self, other: ExteriorElement):
        if not isinstance(other, ExteriorElement):
            raise TypeError(f"expected ExteriorElement, got {type(other).__name__}")
        if other.n != self.n or other.field != self.field:
            raise ValueError("exterior elements live in different algebras")

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> set[int]:
        return {popcount(m) for m in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    @property
    def degree(self) -> int:
        """Degree of a nonzero homogeneous element."""
        ds = self.degrees()
        if len(ds) != 1:
            raise ValueError("degree is defined for nonzero homogeneous elements only")
        return next(iter(ds))

    def coefficient(self, support) -> object:
        return self.terms.get(mask_of(support), self.field.zero)

    def __add__(self, other):
        self._check(other)
        t = dict(self.terms)
        for m, c in other.terms.items():
            t[m] = t.get(m, 0) + c
        return ExteriorElement._raw(self.n, self.field, _clean(t, self.field.p))

    def __neg__(self):
        return ExteriorElement._raw(self.n, self.field,
                                    {m: self.field.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> ExteriorElement:
        c = self.field(c)
        return ExteriorElement._raw(self.n, self.field,
                                    _clean({m: c * x for m, x in self.terms.items()}, self.field.p))

    def __mul__(self, other):
        if isinstance(other, ExteriorElement):
            return wedge(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    __xor__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, ExteriorElement):
            return NotImplemented
        return self.n == other.n and self.field == other.field and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"ExteriorElement(n={self.n}, {render(self)!r})"


def wedge(a: ExteriorElement, b: ExteriorElement) -> ExteriorElement:
    a._check(b)
    return ExteriorElement._raw(a.n, a.field, wedge_terms(a.terms, b.terms, a.field.p))


def boundary(a: ExteriorElement) -> ExteriorElement:
    """The degree -1 derivation with ``e_i -> 1``.

    ``d(e_{j1...jt}) = sum_k (-1)^(k-1) e_{j1..^jk..jt}`` for increasing indices.
    """
    return ExteriorElement._raw(a.n, a.field, boundary_terms(a.terms, a.field.p))


def substitute(a: ExteriorElement, g) -> ExteriorElement:
    """Image of ``a`` under the automorphism ``e_i -> sum_j g[i][j] e_j``.

    ``g`` is an ``n x n`` matrix (rows indexed by the source generator) and
    must be invertible.  Composition: ``substitute(substitute(a, g), h)``
    equals ``substitute(a, g @ h)``.
    """
    f = a.field
    rows = [[f(x) for x in r] for r in g]
    if len(rows) != a.n or any(len(r) != a.n for r in rows):
        raise ValueError(f"substitution matrix must be {a.n}x{a.n}")
    images = [{1 << j: c for j, c in enumerate(r) if c} for r in rows]
    if rank_of_rows([{j: c for j, c in enumerate(r) if c} for r in rows], f) < a.n:
        raise ValueError("substitution matrix is singular")
    return ExteriorElement._raw(a.n, f, linear_image_terms(a.terms, images, f.p))


# -- text format -------------------------------------------------------------

def render(a: ExteriorElement) -> str:
    """``2*e[1,2] - e[1,3]``; ``e[]`` is the unit and ``0`` the zero element."""
    if not a.terms:
        return "0"
    parts = []
    for m in sorted(a.terms, key=lambda m: (popcount(m), m)):
        c = a.field.lift(a.terms[m])
        mono = "e[" + ",".join(str(b + 1) for b in bits(m)) + "]"
        neg = c < 0
        mag = -c if neg else c
        body = mono if mag == 1 else f"{mag}*{mono}"
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append(("- " if neg else "+ ") + body)
    return " ".join(parts)


_TERM = re.compile(r"\s*([+-])?\s*(?:(\d+(?:/\d+)?)\s*\*?\s*)?(e\[\s*[\d,\s]*\])?\s*")


def parse_element(text: str, n: int, field: FieldContext | None = None) -> ExteriorElement:
    """Inverse of :func:`render`; accepts any coefficient-prefixed sum."""
    from fractions import Fraction

    field = field or FieldContext()
    s = text.strip()
    if s == "0":
        return ExteriorElement(n, field)
    pos, terms = 0, {}
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos or (m.group(2) is None and m.group(3) is None):
            raise ValueError(f"cannot parse exterior element near {s[pos:]!r}")
        sign = -1 if m.group(1) == "-" else 1
        coeff = Fraction(m.group(2)) if m.group(2) else Fraction(1)
        if m.group(3):
            inner = m.group(3)[2:-1].strip()
            idx = [int(x) for x in inner.split(",") if x.strip()] if inner else []
            if any(not 1 <= i <= n for i in idx):
                raise ValueError(f"index out of range in {m.group(3)!r} for n={n}")
            # index lists denote the wedge in the written order; repeats give 0
            sg, mask = 1, 0
            for i in idx:
                bit = 1 << (i - 1)
                sg *= wedge_sign(mask, bit)
                mask |= bit
            if sg == 0:
                pos = m.end()
                continue
            sign *= sg
        else:
            mask = 0
        terms[mask] = terms.get(mask, 0) + sign * coeff
        pos = m.end()
    return ExteriorElement(n, field, {k: field(v) for k, v in terms.items()})

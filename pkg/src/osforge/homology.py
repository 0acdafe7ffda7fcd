"""Graded E-modules and their homological invariants.

A module is stored as per-degree dimensions plus, for every generator ``e_l``
and degree ``d``, the matrix of left multiplication ``M_d -> M_{d+1}`` as a
list of sparse columns.  Betti numbers come from the Cartan complex of
``e_1, ..., e_n`` (which computes ``Tor(K, M)``), Bass numbers from the
duality ``mu_{i,j}(E/J) = beta_{i,n-j}(0:J)``, and depth from explicit
regular sequences with a generic-initial-ideal upper bound.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from itertools import combinations_with_replacement
from math import comb

from . import poly
from .exactla import echelon, fully_reduce, kernel_basis, rank_of_rows, reduce_vector, SparseMatrix
from .exterior import ExteriorElement, MonomialOrder, graded_masks, popcount, wedge_sign, wedge_terms
from .field import FieldContext
from .groebner import GinError, column_index, gin, ideal_spans
from .monomial import MonomialIdeal, cx_stable

__all__ = [
    "ZeroModuleError", "GradedModule", "module_from_quotient", "module_from_ideal",
    "annihilator", "annihilator_terms", "cartan_homology", "cartan_cohomology",
    "BettiTable", "betti_table", "bass_table", "bass_table_cocomplex",
    "is_regular_element", "is_regular_fast", "regular_sequence_check", "quotient_by_form",
    "DepthResult", "depth", "HilbertFactor", "hilbert_factor", "Invariants", "invariants",
    "LinearityReport", "has_linear_projective", "has_linear_injective",
]


class ZeroModuleError(ValueError):
    """The operation needs a nonzero module (e.g. ``E/J`` with ``J = E``)."""


def _terms(g) -> dict:
    return g.terms if isinstance(g, ExteriorElement) else g


def _field_of(gens, field):
    if field is not None:
        return field
    for g in gens:
        if isinstance(g, ExteriorElement):
            return g.field
    return FieldContext()


def _n_of(gens, n):
    if n is not None:
        return n
    for g in gens:
        if isinstance(g, ExteriorElement):
            return g.n
    raise ValueError("n must be given when generators are raw term dicts")


@dataclass(frozen=True, eq=False)
class GradedModule:
    """A finite graded left ``E``-module with ``n`` acting generators.

    ``action[(l, d)][b]`` is the image of basis vector ``b`` of ``M_d`` under
    ``e_{l+1}``, as a sparse vector in ``M_{d+1}`` coordinates.  ``basis``
    optionally records each basis vector as an element of ``E`` (mask ->
    coefficient) for modules that live inside or are quotients of ``E``.
    """

    n: int
    field: FieldContext
    dims: dict
    action: dict
    basis: dict | None = None

    def dim(self, d: int) -> int:
        return self.dims.get(d, 0)

    @property
    def degrees(self) -> list[int]:
        return sorted(d for d, k in self.dims.items() if k)

    @property
    def is_zero(self) -> bool:
        return not self.degrees

    @property
    def total_dim(self) -> int:
        return sum(self.dims.values())

    def hilbert(self) -> list[int]:
        """Coefficients of ``H(M, t)`` from degree 0 (degrees are nonnegative here)."""
        if self.is_zero:
            return []
        return poly.trim([self.dim(d) for d in range(max(self.degrees) + 1)])

    def top_degree(self) -> int | None:
        return max(self.degrees) if not self.is_zero else None

    def columns(self, l: int, d: int) -> list[dict]:
        return self.action.get((l, d)) or [{} for _ in range(self.dim(d))]

    def form_columns(self, v, d: int) -> list[dict]:
        """Columns of multiplication by the linear form with coefficients ``v``."""
        p = self.field.p
        out = [dict() for _ in range(self.dim(d))]
        for l, c in enumerate(v):
            if not c:
                continue
            for b, col in enumerate(self.columns(l, d)):
                tgt = out[b]
                for r, x in col.items():
                    nv = tgt.get(r, 0) + c * x
                    if p is not None:
                        nv %= p
                    if nv:
                        tgt[r] = nv
                    else:
                        tgt.pop(r, None)
        return out

    def check_relations(self) -> bool:
        """``e_l e_l = 0`` and ``e_l e_k = -e_k e_l`` on every basis vector."""
        f = self.field
        for d in self.degrees:
            for l in range(self.n):
                for k in range(l, self.n):
                    for b in range(self.dim(d)):
                        a1 = _apply(self.columns(k, d + 1), self.columns(l, d)[b], f)
                        a2 = _apply(self.columns(l, d + 1), self.columns(k, d)[b], f)
                        tot = {r: f.add(a1.get(r, 0), a2.get(r, 0)) for r in set(a1) | set(a2)}
                        if any(tot.values()):
                            return False
        return True

    def __repr__(self):
        return f"GradedModule(n={self.n}, dims={[self.dim(d) for d in range(self.n + 1)]})"


def _apply(cols: list[dict], vec: dict, field: FieldContext) -> dict:
    out: dict = {}
    for b, c in vec.items():
        for r, x in cols[b].items():
            out[r] = field.add(out.get(r, 0), field.mul(c, x))
    return {r: x for r, x in out.items() if x}


def _as_vector(v, n: int, field: FieldContext) -> list:
    """Coefficient list of a linear form given as an element or a sequence."""
    if isinstance(v, ExteriorElement):
        if v.is_zero:
            return [field.zero] * n
        if v.degree != 1:
            raise ValueError("expected a linear form")
        out = [field.zero] * n
        for m, c in v.terms.items():
            out[m.bit_length() - 1] = field(c)
        return out
    v = [field(c) for c in v]
    if len(v) != n:
        raise ValueError(f"linear form has {len(v)} coefficients, module has {n} generators")
    return v


# ---------------------------------------------------------------- construction

def module_from_quotient(gens, n: int | None = None, field: FieldContext | None = None,
                         order: MonomialOrder = MonomialOrder.STD_REVLEX) -> GradedModule:
    """``E/J`` with basis the monomials outside the leading terms of ``J``."""
    field = _field_of(gens, field)
    n = _n_of(gens, n)
    spans = ideal_spans([_terms(g) for g in gens], n, field, order)
    std = {d: [c for c in range(comb(n, d)) if c not in spans[d]] for d in range(n + 1)}
    pos = {d: {c: k for k, c in enumerate(std[d])} for d in std}
    action = {}
    for d in range(n):
        masks = graded_masks(n, d, order)
        idx = column_index(n, d + 1, order)
        for l in range(n):
            bit = 1 << l
            cols = []
            for c in std[d]:
                m = masks[c]
                if m & bit:
                    cols.append({})
                    continue
                red = reduce_vector({idx[m | bit]: field(wedge_sign(bit, m))}, spans[d + 1], field)
                cols.append({pos[d + 1][k]: x for k, x in red.items()})
            action[(l, d)] = cols
    basis = {d: [{graded_masks(n, d, order)[c]: field.one} for c in std[d]] for d in std}
    return GradedModule(n, field, {d: len(std[d]) for d in std}, action, basis)


def _module_from_spans(spans: dict, n: int, field: FieldContext,
                       order: MonomialOrder) -> GradedModule:
    rows = {d: list(spans[d].items()) for d in spans}
    action = {}
    for d in range(n):
        masks = graded_masks(n, d, order)
        idx = column_index(n, d + 1, order)
        pivot_pos = {c: k for k, (c, _) in enumerate(rows[d + 1])}
        for l in range(n):
            bit = 1 << l
            cols = []
            for _, row in rows[d]:
                img: dict = {}
                for c, x in row.items():
                    m = masks[c]
                    if not m & bit:
                        img[idx[m | bit]] = field.mul(x, field(wedge_sign(bit, m)))
                # coordinates of an element of J_{d+1} are its pivot entries
                cols.append({pivot_pos[c]: x for c, x in img.items() if c in pivot_pos and x})
            action[(l, d)] = cols
    basis = {d: [{graded_masks(n, d, order)[c]: x for c, x in row.items()} for _, row in rows[d]]
             for d in rows}
    return GradedModule(n, field, {d: len(rows[d]) for d in rows}, action, basis)


def module_from_ideal(gens, n: int | None = None, field: FieldContext | None = None,
                      order: MonomialOrder = MonomialOrder.STD_REVLEX) -> GradedModule:
    """The ideal ``J`` itself as a graded submodule of ``E``."""
    field = _field_of(gens, field)
    n = _n_of(gens, n)
    spans = ideal_spans([_terms(g) for g in gens], n, field, order)
    return _module_from_spans(spans, n, field, order)


def _annihilator_spans(gens, n: int, field: FieldContext,
                       order: MonomialOrder = MonomialOrder.STD_REVLEX) -> dict:
    terms = [t for t in (_terms(g) for g in gens) if t]
    p = field.p
    spans = {}
    for d in range(n + 1):
        masks = graded_masks(n, d, order)
        row_ids: dict = {}
        cols = []
        for a in masks:
            col = {}
            for gi, t in enumerate(terms):
                for m, x in wedge_terms({a: 1}, t, p).items():
                    col[row_ids.setdefault((gi, m), len(row_ids))] = x
            cols.append(col)
        mat = SparseMatrix(len(row_ids), len(masks), field)
        for j, col in enumerate(cols):
            for r, x in col.items():
                mat[r, j] = x
        kern = kernel_basis(mat)
        spans[d] = fully_reduce(echelon(kern, field), field) if kern else {}
    return spans


def annihilator_terms(gens, n: int, field: FieldContext,
                      order: MonomialOrder = MonomialOrder.STD_REVLEX) -> list[dict]:
    """Minimal homogeneous generators of ``0 :_E J`` as raw term dicts."""
    spans = _annihilator_spans(gens, n, field, order)
    quotient = ideal_spans([_terms(g) for g in gens], n, field, order)
    for d in range(n + 1):
        if len(spans[d]) != comb(n, n - d) - len(quotient[n - d]):
            raise ArithmeticError(f"annihilator dimension mismatch in degree {d}")
    out = []
    generated: dict = {}
    for d in range(n + 1):
        masks = graded_masks(n, d, order)
        idx = column_index(n, d, order)
        # what the lower-degree generators already produce in degree d
        rows = []
        if d:
            below = graded_masks(n, d - 1, order)
            for row in spans[d - 1].values():
                for l in range(n):
                    bit = 1 << l
                    img = {}
                    for c, x in row.items():
                        if not below[c] & bit:
                            img[idx[below[c] | bit]] = field.mul(x, field(wedge_sign(bit, below[c])))
                    if img:
                        rows.append(img)
        generated = echelon(rows, field)
        for row in spans[d].values():
            before = len(generated)
            echelon([row], field, generated)
            if len(generated) > before:
                out.append({masks[c]: x for c, x in row.items()})
    return out


def annihilator(gens, n: int | None = None, field: FieldContext | None = None) -> list[ExteriorElement]:
    """Generators of ``0 :_E J = {a : a g = 0 for all g in J}``, degree by degree."""
    field = _field_of(gens, field)
    n = _n_of(gens, n)
    return [ExteriorElement(n, field, t) for t in annihilator_terms(gens, n, field)]


# ---------------------------------------------------------------- Cartan complexes

@lru_cache(maxsize=None)
def _multisets(m: int, i: int) -> tuple:
    return tuple(combinations_with_replacement(range(m), i)) if i >= 0 else ()


@lru_cache(maxsize=None)
def _multiset_index(m: int, i: int) -> dict:
    return {a: k for k, a in enumerate(_multisets(m, i))}


@lru_cache(maxsize=None)
def _faces(m: int, i: int) -> tuple:
    """For each multiset ``a`` of size ``i``: pairs ``(l, index of a - {l})``."""
    target = _multiset_index(m, i - 1)
    out = []
    for a in _multisets(m, i):
        pairs = []
        for l in sorted(set(a)):
            k = a.index(l)
            pairs.append((l, target[a[:k] + a[k + 1:]]))
        out.append(tuple(pairs))
    return tuple(out)


@lru_cache(maxsize=None)
def _cofaces(m: int, i: int) -> tuple:
    """For each multiset ``a`` of size ``i``: pairs ``(l, index of a + {l})``."""
    target = _multiset_index(m, i + 1)
    return tuple(tuple((l, target[tuple(sorted(a + (l,)))]) for l in range(m))
                 for a in _multisets(m, i))


class _Cartan:
    """Rank cache for the Cartan complex and cocomplex of forms ``v`` on ``M``."""

    def __init__(self, module: GradedModule, forms):
        self.M = module
        self.forms = [_as_vector(v, module.n, module.field) for v in forms]
        self.m = len(self.forms)
        self._mult: dict = {}
        self._down: dict = {}
        self._up: dict = {}

    def mult(self, l: int, k: int) -> list[dict]:
        key = (l, k)
        if key not in self._mult:
            self._mult[key] = self.M.form_columns(self.forms[l], k)
        return self._mult[key]

    def rank_down(self, i: int, k: int) -> int:
        """Rank of ``d_i : M_k (x) D_i -> M_{k+1} (x) D_{i-1}``."""
        if i <= 0 or self.M.dim(k) == 0:
            return 0
        key = (i, k)
        if key not in self._down:
            p = self.M.field.p
            width = comb(self.m + i - 2, i - 1)
            faces = _faces(self.m, i)
            cols = [self.mult(l, k) for l in range(self.m)]
            rows = []
            for b in range(self.M.dim(k)):
                for pairs in faces:
                    row: dict = {}
                    for l, t in pairs:
                        for r, x in cols[l][b].items():
                            key2 = r * width + t
                            row[key2] = row.get(key2, 0) + x
                    if p is not None:
                        row = {c: x % p for c, x in row.items() if x % p}
                    else:
                        row = {c: x for c, x in row.items() if x}
                    if row:
                        rows.append(row)
            self._down[key] = rank_of_rows(rows, self.M.field)
        return self._down[key]

    def rank_up(self, i: int, k: int) -> int:
        """Rank of ``d^i : M_k (x) S_i -> M_{k+1} (x) S_{i+1}``."""
        if i < 0 or self.M.dim(k) == 0 or self.m == 0:
            return 0
        key = (i, k)
        if key not in self._up:
            p = self.M.field.p
            width = comb(self.m + i, i + 1)
            cofaces = _cofaces(self.m, i)
            cols = [self.mult(l, k) for l in range(self.m)]
            rows = []
            for b in range(self.M.dim(k)):
                for pairs in cofaces:
                    row: dict = {}
                    for l, t in pairs:
                        for r, x in cols[l][b].items():
                            key2 = r * width + t
                            row[key2] = row.get(key2, 0) + x
                    if p is not None:
                        row = {c: x % p for c, x in row.items() if x % p}
                    else:
                        row = {c: x for c, x in row.items() if x}
                    if row:
                        rows.append(row)
            self._up[key] = rank_of_rows(rows, self.M.field)
        return self._up[key]

    def homology(self, i: int, j: int) -> int:
        """``dim H_i(v; M)_j``; the chains are ``M_{j-i} (x) D_i``."""
        k = j - i
        size = self.M.dim(k) * comb(self.m + i - 1, i) if i else self.M.dim(k)
        if not size:
            return 0
        return size - self.rank_down(i, k) - self.rank_down(i + 1, k - 1)

    def cohomology(self, i: int, j: int) -> int:
        """``dim H^i(v; M)`` at the cochains ``M_{j+i} (x) S_i``."""
        k = j + i
        size = self.M.dim(k) * comb(self.m + i - 1, i) if i else self.M.dim(k)
        if not size:
            return 0
        return size - self.rank_up(i, k) - self.rank_up(i - 1, k - 1)


def cartan_homology(forms, module: GradedModule, imax: int = 4) -> dict:
    """``{(i, j): dim H_i(v; M)_j}`` for ``i <= imax``, nonzero entries only."""
    cx = _Cartan(module, forms)
    out = {}
    for i in range(imax + 1):
        for k in module.degrees:
            h = cx.homology(i, k + i)
            if h:
                out[(i, k + i)] = h
    return out


def cartan_cohomology(forms, module: GradedModule, imax: int = 4) -> dict:
    """``{(i, j): dim H^i(v; M)}`` with ``j`` the degree of the cochain module minus ``i``."""
    cx = _Cartan(module, forms)
    out = {}
    for i in range(imax + 1):
        for k in module.degrees:
            h = cx.cohomology(i, k - i)
            if h:
                out[(i, k - i)] = h
    return out


# ---------------------------------------------------------------- tables

@dataclass
class BettiTable:
    """Finite table ``(i, j) -> count`` truncated at homological degree ``imax``."""

    entries: dict
    imax: int
    kind: str = "betti"

    def __getitem__(self, key) -> int:
        return self.entries.get(key, 0)

    def total(self, i: int) -> int:
        return sum(c for (a, _), c in self.entries.items() if a == i)

    def totals(self) -> list[int]:
        return [self.total(i) for i in range(self.imax + 1)]

    def as_list(self) -> list[list[int]]:
        return [[i, j, c] for (i, j), c in sorted(self.entries.items())]

    def shifts(self) -> set[int]:
        """Diagonals ``j - i`` (Betti) or ``i + j`` (Bass) that carry entries."""
        if self.kind == "bass":
            return {i + j for (i, j) in self.entries}
        return {j - i for (i, j) in self.entries}

    def __eq__(self, other):
        return isinstance(other, BettiTable) and self.entries == other.entries and self.imax == other.imax

    def render(self) -> str:
        if not self.entries:
            return "(zero table)"
        rows = sorted(self.shifts())
        head = "      " + " ".join(f"{i:>5}" for i in range(self.imax + 1))
        lines = [head]
        for s in rows:
            cells = []
            for i in range(self.imax + 1):
                j = i + s if self.kind == "betti" else s - i
                c = self[i, j]
                cells.append(f"{c if c else '.':>5}")
            lines.append(f"{s:>5}: " + " ".join(cells))
        return "\n".join(lines)


def betti_table(module: GradedModule, imax: int = 4) -> BettiTable:
    """``beta_{i,j}(M) = dim H_i(e_1, ..., e_n; M)_j`` for ``i <= imax``."""
    forms = [[1 if l == k else 0 for l in range(module.n)] for k in range(module.n)]
    return BettiTable(cartan_homology(forms, module, imax), imax)


def bass_table(gens, n: int | None = None, field: FieldContext | None = None,
               imax: int = 4) -> BettiTable:
    """``mu_{i,j}(E/J) = beta_{i,n-j}(0:J)``."""
    field = _field_of(gens, field)
    n = _n_of(gens, n)
    ann = module_from_ideal(annihilator_terms(gens, n, field), n, field)
    b = betti_table(ann, imax)
    return BettiTable({(i, n - j): c for (i, j), c in b.entries.items()}, imax, "bass")


def bass_table_cocomplex(module: GradedModule, imax: int = 4) -> BettiTable:
    """Bass numbers read off the Cartan cocomplex of ``e_1, ..., e_n`` directly."""
    forms = [[1 if l == k else 0 for l in range(module.n)] for k in range(module.n)]
    return BettiTable(cartan_cohomology(forms, module, imax), imax, "bass")


# ---------------------------------------------------------------- regularity

def _form_rank(module: GradedModule, v, d: int) -> int:
    if module.dim(d) == 0 or module.dim(d + 1) == 0:
        return 0
    return rank_of_rows(module.form_columns(v, d), module.field)


def is_regular_element(v, module: GradedModule) -> bool:
    """Whether ``M --v--> M`` is exact: ``0 :_M v = vM`` in every degree."""
    v = _as_vector(v, module.n, module.field)
    ranks = {d: _form_rank(module, v, d) for d in range(-1, module.n + 1)}
    return all(ranks[d - 1] + ranks[d] == module.dim(d) for d in module.degrees)


def is_regular_fast(v, module: GradedModule, d: int) -> bool:
    """Exactness at degree ``d`` only; enough when ``M`` has a ``d``-linear injective resolution."""
    v = _as_vector(v, module.n, module.field)
    return _form_rank(module, v, d - 1) + _form_rank(module, v, d) == module.dim(d)


def _quotient_dims(module: GradedModule, forms) -> dict:
    out = {}
    for d in module.degrees:
        cols = [c for v in forms for c in module.form_columns(v, d - 1)]
        out[d] = module.dim(d) - rank_of_rows(cols, module.field)
    return out


def regular_sequence_check(forms, module: GradedModule) -> bool:
    """``v_1, ..., v_s`` is ``M``-regular iff ``H_1(v; M) = 0`` and ``M/(v)M != 0``."""
    if module.is_zero:
        return False
    forms = [_as_vector(v, module.n, module.field) for v in forms]
    if not forms:
        return True
    if not any(_quotient_dims(module, forms).values()):
        return False
    cx = _Cartan(module, forms)
    return all(cx.homology(1, k + 1) == 0 for k in range(min(module.degrees) - 1, module.n + 1))


def quotient_by_form(module: GradedModule, v) -> tuple[GradedModule, int]:
    """``M/vM`` over the exterior algebra on the generators other than ``e_q``.

    ``q`` (returned, 0-based) is the last index with ``v_q != 0``.  Modulo
    ``v`` the generator ``e_q`` acts as ``-sum_{k != q} (v_k/v_q) e_k``, so the
    remaining generators carry the whole action.
    """
    f = module.field
    v = _as_vector(v, module.n, f)
    nz = [k for k, c in enumerate(v) if c]
    if not nz:
        raise ValueError("cannot quotient by the zero form")
    q = nz[-1]
    images = {}
    for d in range(module.n + 2):
        cols = module.form_columns(v, d - 1) if module.dim(d - 1) else []
        images[d] = fully_reduce(echelon(cols, f), f) if cols else {}
    std = {d: [c for c in range(module.dim(d)) if c not in images[d]] for d in module.dims}
    pos = {d: {c: k for k, c in enumerate(std[d])} for d in std}
    keep = [k for k in range(module.n) if k != q]
    action = {}
    for new_l, l in enumerate(keep):
        for d in std:
            cols = []
            for c in std[d]:
                col = module.columns(l, d)[c]
                red = reduce_vector(col, images.get(d + 1, {}), f)
                cols.append({pos[d + 1][r]: x for r, x in red.items()})
            action[(new_l, d)] = cols
    basis = None
    if module.basis is not None:
        basis = {d: [module.basis[d][c] for c in std[d]] for d in std}
    return GradedModule(module.n - 1, f, {d: len(std[d]) for d in std}, action, basis), q


@dataclass
class DepthResult:
    """``value`` is the length of the regular sequence found (a lower bound);
    ``upper`` an independent upper bound when one is known."""

    value: int
    sequence: list
    method: str
    upper: int | None = None

    @property
    def certified(self) -> bool:
        return self.upper is not None and self.upper == self.value


def depth(module: GradedModule, trials: int = 8, seed: int = 0,
          upper: int | None = None) -> DepthResult:
    """Greedy maximal regular sequence: generators first, then random forms.

    Sequence entries are coefficient vectors in the original coordinates.
    ``upper`` (e.g. ``n - cx`` of a generic initial ideal) turns the result
    into a certified value when it matches.
    """
    if module.is_zero:
        raise ZeroModuleError("depth of the zero module is undefined")
    f = module.field
    rng = random.Random(seed)
    n0 = module.n
    lift = [[f.one if k == l else f.zero for k in range(n0)] for l in range(n0)]
    cur = module
    seq = []
    while cur.n:
        cands = [[f.one if k == l else f.zero for k in range(cur.n)] for l in range(cur.n)]
        cands += [[f.random_element(rng) for _ in range(cur.n)] for _ in range(trials)]
        found = None
        for v in cands:
            if any(v) and is_regular_element(v, cur):
                found = v
                break
        if found is None:
            break
        seq.append([f.lift(sum_lift) for sum_lift in _combine(found, lift, f)])
        cur, q = quotient_by_form(cur, found)
        lift = lift[:q] + lift[q + 1:]
    value = len(seq)
    if upper is None:
        method = "regular-sequence"
    elif upper == value:
        method = "regular-sequence+gin"
    else:
        method = "interval"
    return DepthResult(value, seq, method, upper)


def _combine(v, lift, f: FieldContext) -> list:
    out = [f.zero] * len(lift[0])
    for c, row in zip(v, lift):
        if c:
            out = [f.add(a, f.mul(c, b)) for a, b in zip(out, row)]
    return out


# ---------------------------------------------------------------- summaries

@dataclass
class HilbertFactor:
    s: int
    q: list


def hilbert_factor(h) -> HilbertFactor:
    """Largest ``s`` with ``(1+t)^s | h`` and the cofactor ``q``."""
    h = poly.trim(h)
    if not h:
        raise ValueError("zero polynomial has no (1+t)-adic factorization")
    s = 0
    while True:
        q, r = poly.divide_one_plus_t(h)
        if r:
            return HilbertFactor(s, h)
        h, s = q, s + 1


@dataclass
class Invariants:
    """Numerical invariants of ``E/J``.  ``zero`` flags the unit ideal case,
    in which the other fields stay ``None``."""

    n: int
    hilbert: list
    zero: bool = False
    depth: int | None = None
    cx: int | None = None
    reg: int | None = None
    d: int | None = None
    method: str = ""
    gin: MonomialIdeal | None = None
    depth_sequence: list = dc_field(default_factory=list)
    betti_consistent: bool | None = None

    def as_dict(self) -> dict:
        return {
            "n": self.n, "zero_module": self.zero, "hilbert": self.hilbert,
            "depth": self.depth, "cx": self.cx, "reg": self.reg, "d": self.d,
            "method": self.method,
            "gin": None if self.gin is None else self.gin.to_json()["generators"],
            "betti_consistent": self.betti_consistent,
        }


def _gin_bounds(gin_ideal: MonomialIdeal, n: int) -> tuple[int, int]:
    """``(cx, reg)`` of ``E/gin(J)``; the zero ideal gives ``E`` itself."""
    if gin_ideal.is_zero:
        return 0, 0
    return cx_stable(gin_ideal), max(popcount(u) for u in gin_ideal.gens) - 1


def invariants(gens, n: int | None = None, field: FieldContext | None = None, imax: int = 3,
               seed: int = 0, trials: int = 8, attempts: int = 3) -> Invariants:
    """depth, cx, reg, top degree and Hilbert series of ``E/J``.

    cx and reg come from ``gin(J)``; depth is found as a regular sequence and
    compared against ``n - cx``.  A truncated Betti table is checked not to
    exceed the gin regularity.
    """
    field = _field_of(gens, field)
    n = _n_of(gens, n)
    M = module_from_quotient(gens, n, field)
    if M.is_zero:
        return Invariants(n, [], zero=True, method="zero module")
    G = gin(gens, n, field, attempts=attempts, seed=seed)
    cx, reg = _gin_bounds(G, n)
    dres = depth(M, trials=trials, seed=seed, upper=n - cx)
    b = betti_table(M, imax)
    consistent = max((j - i for (i, j) in b.entries), default=0) <= reg
    return Invariants(n, M.hilbert(), depth=dres.value, cx=n - dres.value, reg=reg,
                      d=M.top_degree(), method=dres.method, gin=G,
                      depth_sequence=dres.sequence, betti_consistent=consistent)


@dataclass
class LinearityReport:
    linear: bool
    d: int | None
    table: BettiTable
    certificate: bool | None = None

    def as_dict(self) -> dict:
        return {"linear": self.linear, "d": self.d, "certificate": self.certificate,
                "table": self.table.as_list()}


def has_linear_projective(gens, n: int | None = None, field: FieldContext | None = None,
                          imax: int = 4, seed: int = 0) -> LinearityReport:
    """Whether ``J`` has a linear resolution (``beta_{i,i+j}(J) = 0`` for ``j != d``).

    Evidence: the truncated Betti table of ``J`` and, when the generic
    initial ideal is available, whether it is generated in one degree.
    """
    field = _field_of(gens, field)
    n = _n_of(gens, n)
    module = module_from_ideal(gens, n, field)
    if module.is_zero:
        raise ZeroModuleError("linearity of the zero ideal is undefined")
    table = betti_table(module, imax)
    shifts = table.shifts()
    try:
        G = gin(gens, n, field, seed=seed)
        cert = len({popcount(u) for u in G.gens}) == 1
    except GinError:
        cert = None
    linear = len(shifts) == 1 and cert is not False
    return LinearityReport(linear, next(iter(shifts)) if len(shifts) == 1 else None, table, cert)


def has_linear_injective(gens, n: int | None = None, field: FieldContext | None = None,
                         imax: int = 4) -> LinearityReport:
    """Whether ``mu_{i,j}(E/J) != 0`` only for ``i + j = d`` (up to ``imax``)."""
    field = _field_of(gens, field)
    n = _n_of(gens, n)
    if module_from_quotient(gens, n, field).is_zero:
        raise ZeroModuleError("linearity of the zero quotient is undefined")
    table = bass_table(gens, n, field, imax)
    shifts = table.shifts()
    return LinearityReport(len(shifts) == 1, next(iter(shifts)) if len(shifts) == 1 else None, table)

"""Brute-force reference computations, independent of the package internals.

Everything here is dense linear algebra over QQ via sympy on explicit index
lists, with its own sign convention code.  Only meant for n <= 4 or so.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations, combinations_with_replacement

from sympy import QQ
from sympy.polys.matrices import DomainMatrix


def sign_and_union(s: tuple, t: tuple):
    """e_s * e_t = sign * e_(s u t), sign from sorting the concatenation."""
    if set(s) & set(t):
        return 0, None
    seq = list(s) + list(t)
    inv = sum(1 for a in range(len(seq)) for b in range(a + 1, len(seq)) if seq[a] > seq[b])
    return (-1) ** inv, tuple(sorted(seq))


def monomials(n: int, d: int) -> list[tuple]:
    return list(combinations(range(1, n + 1), d))


def multiply(a: dict, b: dict) -> dict:
    out: dict = {}
    for s, x in a.items():
        for t, y in b.items():
            sg, u = sign_and_union(s, t)
            if sg:
                out[u] = out.get(u, 0) + sg * Fraction(x) * Fraction(y)
    return {u: c for u, c in out.items() if c}


def rank(rows: list[list]) -> int:
    rows = [r for r in rows if any(r)]
    if not rows:
        return 0
    m = DomainMatrix([[QQ(int(Fraction(x).numerator), int(Fraction(x).denominator)) for x in r]
                      for r in rows], (len(rows), len(rows[0])), QQ)
    return m.rank()


def nullspace(rows: list[list], ncols: int) -> list[list]:
    """Basis of {x : rows . x = 0}."""
    if not rows:
        return [[1 if i == j else 0 for j in range(ncols)] for i in range(ncols)]
    m = DomainMatrix([[QQ(int(Fraction(x).numerator), int(Fraction(x).denominator)) for x in r]
                      for r in rows], (len(rows), ncols), QQ)
    ns = m.nullspace().to_Matrix()
    return [[Fraction(int(x.p), int(x.q)) for x in ns.row(i)] for i in range(ns.rows)]


def ideal_basis(n: int, gens: list[dict], d: int) -> list[dict]:
    """A spanning list (not necessarily independent) of J_d."""
    out = []
    for g in gens:
        deg = len(next(iter(g)))
        if deg > d:
            continue
        for s in monomials(n, d - deg):
            p = multiply({s: 1}, g)
            if p:
                out.append(p)
    return out


def _vec(elt: dict, basis: list[tuple]) -> list:
    return [elt.get(u, 0) for u in basis]


def ideal_dims(n: int, gens: list[dict]) -> list[int]:
    return [rank([_vec(x, monomials(n, d)) for x in ideal_basis(n, gens, d)]) for d in range(n + 1)]


def quotient_dims(n: int, gens: list[dict]) -> list[int]:
    return [len(monomials(n, d)) - k for d, k in enumerate(ideal_dims(n, gens))]


def _multisets(n: int, i: int) -> list[tuple]:
    return list(combinations_with_replacement(range(1, n + 1), i)) if i >= 0 else []


def _chain_rows(n: int, source: list[dict], i: int, k: int) -> list[list]:
    """Images of source (x) D_i under the Cartan differential, as dense rows
    over the basis E_(k+1) (x) D_(i-1)."""
    targets = [(u, a) for u in monomials(n, k + 1) for a in _multisets(n, i - 1)]
    pos = {t: p for p, t in enumerate(targets)}
    rows = []
    for b in source:
        for a in _multisets(n, i):
            row = [0] * len(targets)
            for l in set(a):
                lst = list(a)
                lst.remove(l)
                for u, c in multiply({(l,): 1}, b).items():
                    row[pos[(u, tuple(lst))]] += c
            rows.append(row)
    return rows


def _tensor_rows(n: int, source: list[dict], i: int, k: int) -> list[list]:
    """source (x) D_i as rows over E_k (x) D_i."""
    targets = [(u, a) for u in monomials(n, k) for a in _multisets(n, i)]
    pos = {t: p for p, t in enumerate(targets)}
    rows = []
    for b in source:
        for a in _multisets(n, i):
            row = [0] * len(targets)
            for u, c in b.items():
                row[pos[(u, a)]] += c
            rows.append(row)
    return rows


def betti_quotient(n: int, gens: list[dict], imax: int) -> dict:
    """beta_{i,j}(E/J) from the Cartan complex on E/J, computed modulo J (x) D."""
    dims = quotient_dims(n, gens)
    out = {}

    def induced_rank(i, k):
        if i <= 0 or k < 0 or k + 1 > n:
            return 0
        full = [{u: 1} for u in monomials(n, k)]
        img = _chain_rows(n, full, i, k)
        jrows = _tensor_rows(n, ideal_basis(n, gens, k + 1), i - 1, k + 1)
        return rank(img + jrows) - rank(jrows)

    for i in range(imax + 1):
        for k in range(n + 1):
            size = dims[k] * len(_multisets(n, i))
            if not size:
                continue
            h = size - induced_rank(i, k) - induced_rank(i + 1, k - 1)
            if h:
                out[(i, k + i)] = h
    return out


def betti_ideal(n: int, gens: list[dict], imax: int) -> dict:
    """beta_{i,j}(J) from the Cartan complex on J inside E."""
    dims = ideal_dims(n, gens)
    out = {}

    def sub_rank(i, k):
        if i <= 0 or k < 0 or k + 1 > n:
            return 0
        return rank(_chain_rows(n, ideal_basis(n, gens, k), i, k))

    for i in range(imax + 1):
        for k in range(n + 1):
            size = dims[k] * len(_multisets(n, i))
            if not size:
                continue
            h = size - sub_rank(i, k) - sub_rank(i + 1, k - 1)
            if h:
                out[(i, k + i)] = h
    return out


def annihilator_dims(n: int, gens: list[dict]) -> list[int]:
    """dim (0:J)_d by solving a * g = 0 for all generators g."""
    out = []
    for d in range(n + 1):
        basis = monomials(n, d)
        cols = []
        for u in basis:
            col = []
            for g in gens:
                deg = len(next(iter(g)))
                tgt = monomials(n, d + deg) if d + deg <= n else []
                p = multiply({u: 1}, g)
                col += [p.get(t, 0) for t in tgt]
            cols.append(col)
        nrows = len(cols[0]) if cols else 0
        rows = [[cols[c][r] for c in range(len(basis))] for r in range(nrows)]
        out.append(len(basis) - rank(rows) if rows else len(basis))
    return out


def annihilator_gens(n: int, gens: list[dict]) -> list[dict]:
    """All of (0:J) as a spanning list of homogeneous pieces."""
    out = []
    for d in range(n + 1):
        basis = monomials(n, d)
        rows_by_gen = []
        for g in gens:
            deg = len(next(iter(g)))
            if d + deg > n:
                continue
            tgt = monomials(n, d + deg)
            prods = [multiply({u: 1}, g) for u in basis]
            for t in tgt:
                rows_by_gen.append([p.get(t, 0) for p in prods])
        for v in nullspace(rows_by_gen, len(basis)):
            out.append({u: c for u, c in zip(basis, v) if c})
    return out


def bass_quotient(n: int, gens: list[dict], imax: int) -> dict:
    """mu_{i,j}(E/J) = beta_{i,n-j}(0:J), using the oracle annihilator."""
    ann = [a for a in annihilator_gens(n, gens) if a]
    b = betti_ideal(n, ann, imax)
    return {(i, n - j): c for (i, j), c in b.items()}

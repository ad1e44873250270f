"""Exact normal forms: integer echelon solving, Smith forms over Z and Q[t], ranks mod p."""
from __future__ import annotations

from typing import Hashable, Iterable, Mapping, Sequence

from .laurent import RatPoly, rat_gcd2, rat_lcm


class IntegerSystem:
    """Solve ``sum_j x_j * column_j = b`` over the integers.

    Columns are sparse ``{row key: int}`` dicts. The echelon form is computed
    once by unimodular column operations (Euclid on pivots), so any number of
    right-hand sides can be tested afterwards.
    """

    def __init__(self, columns: Sequence[Mapping[Hashable, int]], row_order: Sequence[Hashable] | None = None):
        self.n_unknowns = len(columns)
        cols = [{r: v for r, v in col.items() if v} for col in columns]
        track = [{j: 1} for j in range(len(cols))]
        rows = set()
        for col in cols:
            rows.update(col)
        order = list(row_order) if row_order is not None else sorted(rows)
        by_row: dict[Hashable, set[int]] = {r: set() for r in order}
        for j, col in enumerate(cols):
            for r in col:
                by_row.setdefault(r, set()).add(j)
        active = set(range(len(cols)))
        self.pivots: list[tuple[Hashable, int, dict, dict]] = []

        def axpy(dst: int, q: int, src: int) -> None:
            # column dst -= q * column src, keeping the row index current
            cd, cs = cols[dst], cols[src]
            for r, v in cs.items():
                nv = cd.get(r, 0) - q * v
                if nv:
                    if r not in cd:
                        by_row[r].add(dst)
                    cd[r] = nv
                elif r in cd:
                    del cd[r]
                    by_row[r].discard(dst)
            td, ts = track[dst], track[src]
            for u, v in ts.items():
                nv = td.get(u, 0) - q * v
                if nv:
                    td[u] = nv
                else:
                    td.pop(u, None)

        for r in order:
            cand = [j for j in by_row.get(r, ()) if j in active]
            if not cand:
                continue
            while len(cand) > 1:
                p = min(cand, key=lambda j: (abs(cols[j][r]), len(cols[j])))
                pv = cols[p][r]
                nxt = [p]
                for j in cand:
                    if j == p:
                        continue
                    q = cols[j][r] // pv
                    axpy(j, q, p)
                    if r in cols[j]:
                        nxt.append(j)
                cand = nxt
            p = cand[0]
            active.discard(p)
            self.pivots.append((r, cols[p][r], cols[p], track[p]))
        self.rank = len(self.pivots)

    def solve(self, b: Mapping[Hashable, int]) -> dict[int, int] | None:
        """Return a sparse integer solution ``{unknown: value}`` or None."""
        res = {r: v for r, v in b.items() if v}
        x: dict[int, int] = {}
        for r, pv, col, tr in self.pivots:
            v = res.get(r, 0)
            if not v:
                continue
            if v % pv:
                return None
            q = v // pv
            for rr, cv in col.items():
                nv = res.get(rr, 0) - q * cv
                if nv:
                    res[rr] = nv
                else:
                    res.pop(rr, None)
            for u, tv in tr.items():
                nv = x.get(u, 0) + q * tv
                if nv:
                    x[u] = nv
                else:
                    x.pop(u, None)
        if res:
            return None
        return x


def smith_diagonal_int(matrix: Sequence[Sequence[int]]) -> list[int]:
    """Nonzero invariant factors (positive, successively dividing) of an integer matrix."""
    a = [list(map(int, row)) for row in matrix]
    m = len(a)
    n = len(a[0]) if m else 0
    diag = []
    k = 0
    while k < min(m, n):
        # pivot: smallest nonzero magnitude in the trailing block
        best = None
        for i in range(k, m):
            for j in range(k, n):
                if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i, j = best
        a[k], a[i] = a[i], a[k]
        for row in a:
            row[k], row[j] = row[j], row[k]
        done = False
        while not done:
            done = True
            pv = a[k][k]
            for i in range(k + 1, m):
                if a[i][k]:
                    q = a[i][k] // pv
                    for j in range(k, n):
                        a[i][j] -= q * a[k][j]
                    if a[i][k]:
                        done = False
            for j in range(k + 1, n):
                if a[k][j]:
                    q = a[k][j] // pv
                    for i in range(k, m):
                        a[i][j] -= q * a[i][k]
                    if a[k][j]:
                        done = False
            if not done:
                best = None
                for i in range(k, m):
                    if a[i][k] and (best is None or abs(a[i][k]) < abs(a[best[0]][best[1]])):
                        best = (i, k)
                for j in range(k, n):
                    if a[k][j] and (best is None or abs(a[k][j]) < abs(a[best[0]][best[1]])):
                        best = (k, j)
                i, j = best
                a[k], a[i] = a[i], a[k]
                for row in a:
                    row[k], row[j] = row[j], row[k]
        diag.append(abs(a[k][k]))
        k += 1
    return _fix_divisibility_int(diag)


def _fix_divisibility_int(diag: list[int]) -> list[int]:
    from math import gcd

    d = list(diag)
    for i in range(len(d)):
        for j in range(i + 1, len(d)):
            g = gcd(d[i], d[j])
            l = d[i] * d[j] // g if g else 0
            d[i], d[j] = g, l
    return d


def rank_mod_p(matrix: Sequence[Sequence[int]], p: int) -> int:
    a = [[v % p for v in row] for row in matrix]
    m = len(a)
    n = len(a[0]) if m else 0
    rank = 0
    for col in range(n):
        piv = next((i for i in range(rank, m) if a[i][col]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        inv = pow(a[rank][col], -1, p)
        a[rank] = [v * inv % p for v in a[rank]]
        for i in range(m):
            if i != rank and a[i][col]:
                f = a[i][col]
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[rank])]
        rank += 1
    return rank


def invariant_factors_q(matrix: Sequence[Sequence[RatPoly]]) -> list[RatPoly]:
    """Monic nonzero invariant factors over Q[t], dividing successively (units included)."""
    a = [list(row) for row in matrix]
    m = len(a)
    n = len(a[0]) if m else 0
    diag: list[RatPoly] = []
    k = 0

    def smallest(cells):
        best = None
        for i, j in cells:
            e = a[i][j]
            if e and (best is None or e.degree < a[best[0]][best[1]].degree):
                best = (i, j)
        return best

    while k < min(m, n):
        best = smallest((i, j) for i in range(k, m) for j in range(k, n))
        if best is None:
            break
        while True:
            i, j = best
            a[k], a[i] = a[i], a[k]
            for row in a:
                row[k], row[j] = row[j], row[k]
            pv = a[k][k]
            for i in range(k + 1, m):
                if a[i][k]:
                    q = a[i][k] // pv
                    a[i] = a[i][:k] + [x - q * y for x, y in zip(a[i][k:], a[k][k:])]
            for j in range(k + 1, n):
                if a[k][j]:
                    q = a[k][j] // pv
                    for i in range(k, m):
                        a[i][j] = a[i][j] - q * a[i][k]
            best = smallest([(i, k) for i in range(k + 1, m)] + [(k, j) for j in range(k + 1, n)])
            if best is None:
                break
        diag.append(a[k][k].monic())
        k += 1
    # restore successive divisibility with gcd/lcm swaps
    for i in range(len(diag)):
        for j in range(i + 1, len(diag)):
            g = rat_gcd2(diag[i], diag[j])
            l = rat_lcm(diag[i], diag[j])
            diag[i], diag[j] = g, l
    return diag


def hnf_rows(vectors: Iterable[Sequence[int]], dim: int) -> list[list[int]]:
    """Row Hermite normal form of the lattice spanned by ``vectors`` in Z^dim."""
    rows = [list(v) for v in vectors if any(v)]
    basis: list[list[int]] = []
    col = 0
    while rows and col < dim:
        nz = [r for r in rows if r[col]]
        if not nz:
            col += 1
            continue
        while len(nz) > 1:
            nz.sort(key=lambda r: abs(r[col]))
            p = nz[0]
            for r in nz[1:]:
                q = r[col] // p[col]
                for k in range(dim):
                    r[k] -= q * p[k]
            nz = [r for r in nz if r[col]]
        p = nz[0]
        if p[col] < 0:
            p[:] = [-v for v in p]
        rows = [r for r in rows if r is not p and any(r)]
        for b in basis:
            q = b[col] // p[col]
            for k in range(dim):
                b[k] -= q * p[k]
        basis.append(p)
        col += 1
    return basis


def reduce_mod_lattice(vec: Sequence[int], basis: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Canonical representative of ``vec`` modulo a lattice given in row HNF."""
    v = list(vec)
    for b in basis:
        col = next(k for k, x in enumerate(b) if x)
        q = v[col] // b[col]
        for k in range(len(v)):
            v[k] -= q * b[k]
    return tuple(v)

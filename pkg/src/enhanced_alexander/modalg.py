"""Module algebra over Z[t, t^-1]: presentations, membership, invariants, comparison."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from math import gcd
from typing import Mapping, Sequence

from .diagram import Diagram
from .laurent import ONE, ONE_MINUS_T, ZERO, LaurentPoly, RatPoly
from .normal_forms import (
    IntegerSystem,
    hnf_rows,
    invariant_factors_q,
    rank_mod_p,
    reduce_mod_lattice,
    smith_diagonal_int,
)
from .peripheral import linking_matrix, longitude
from .presentation import FreeElement, combine_relators, phi, relators

DEFAULT_PRIMES = (3, 5, 7)

Vec = dict  # sparse {key: LaurentPoly}


def _axpy(dst: Vec, f: LaurentPoly, src: Mapping) -> None:
    """dst += f * src in place, dropping zeros."""
    for k, v in src.items():
        nv = dst.get(k, ZERO) + f * v
        if nv:
            dst[k] = nv
        else:
            dst.pop(k, None)


def default_degree_bound(d: Diagram) -> int:
    return d.n_crossings + 4


class ReducedPresentation:
    """Presentation matrix after eliminating unit pivots.

    Each surviving column carries its provenance as a combination of the
    original crossing relators, and every elimination step is logged so
    targets can be reduced and certificates lifted back to crossings.
    """

    def __init__(self, d: Diagram):
        cols: list[Vec] = [dict(r.coeffs) for r in relators(d)]
        prov: list[Vec] = [{c: ONE} for c in range(len(cols))]
        self.log: list[tuple[int, LaurentPoly, Vec, Vec]] = []
        while True:
            row_count: dict[int, int] = {}
            for col in cols:
                for r in col:
                    row_count[r] = row_count.get(r, 0) + 1
            best = None
            for j, col in enumerate(cols):
                for r, e in col.items():
                    if e.is_unit():
                        cost = ((len(col) - 1) * (row_count[r] - 1), j, r)
                        if best is None or cost < best:
                            best = cost
            if best is None:
                break
            _, j, r = best
            pc, pp = cols.pop(j), prov.pop(j)
            inv = pc[r].unit_inverse()
            for col, pv in zip(cols, prov):
                e = col.get(r)
                if e:
                    f = -(e * inv)
                    _axpy(col, f, pc)
                    _axpy(pv, f, pp)
            self.log.append((r, inv, pc, pp))
            keep = [k for k, col in enumerate(cols) if col]
            cols = [cols[k] for k in keep]
            prov = [prov[k] for k in keep]
        eliminated = {r for r, *_ in self.log}
        self.rows = [a for a in range(d.n_arcs) if a not in eliminated]
        self.columns = cols
        self.provenance = prov

    def reduce(self, x: Mapping[int, LaurentPoly]) -> tuple[Vec, Vec]:
        """Return (x', g) with x = x' + sum g(c) relator(c) and x' on surviving rows."""
        x = dict(x)
        cert: Vec = {}
        for r, inv, pc, pp in self.log:
            e = x.get(r)
            if e:
                f = e * inv
                _axpy(x, -f, pc)
                _axpy(cert, f, pp)
        return x, cert

    def lift(self, coeffs: Sequence[LaurentPoly]) -> Vec:
        """Crossing combination for sum coeffs[j] * column j."""
        out: Vec = {}
        for f, pp in zip(coeffs, self.provenance):
            if f:
                _axpy(out, f, pp)
        return out

    def matrix(self) -> list[list[LaurentPoly]]:
        return [[col.get(r, ZERO) for col in self.columns] for r in self.rows]


def _shifted_columns_q(mat: Sequence[Sequence[LaurentPoly]]) -> list[list[RatPoly]]:
    """Multiply each column by a power of t so every entry is a polynomial."""
    if not mat:
        return []
    n = len(mat[0])
    out = [[RatPoly() for _ in range(n)] for _ in mat]
    for j in range(n):
        lows = [row[j].low for row in mat if row[j]]
        if not lows:
            continue
        base = min(lows)
        for i, row in enumerate(mat):
            e = row[j]
            if e:
                out[i][j] = RatPoly([0] * (e.low - base) + list(e.coeffs))
    return out


# ---------------------------------------------------------------- membership


@dataclass(frozen=True)
class MembershipCertificate:
    """t^shift * (target) == sum coeffs(c) * relator(c), with coeffs in Z[t]."""

    coeffs: dict  # crossing index -> LaurentPoly
    shift: int = 0

    @classmethod
    def normalized(cls, g: Mapping[int, LaurentPoly]) -> "MembershipCertificate":
        g = {c: v for c, v in g.items() if v}
        low = min((v.low for v in g.values()), default=0)
        k = max(0, -low)
        return cls({c: v.shift(k) for c, v in sorted(g.items())}, k)

    def verify(self, d: Diagram, target: FreeElement) -> bool:
        return target.scale(LaurentPoly.monomial(1, self.shift)) == combine_relators(d, self.coeffs)

    def to_json(self, d: Diagram) -> dict:
        return {
            "shift": self.shift,
            "coeffs": {str(d.labels[c]): str(v) for c, v in sorted(self.coeffs.items())},
        }


@dataclass(frozen=True)
class NotFound:
    """No certificate exists with coefficient windows padded by ``bound``."""

    bound: int


class VerificationFailure(AssertionError):
    pass


def _solve_windows(
    vectors: Sequence[Mapping],
    target: Mapping,
    pad: int,
) -> list[LaurentPoly] | None:
    """Find Laurent coefficients f_j with sum f_j * vectors[j] == target.

    Each f_j ranges over exponents wide enough to hit the target's support
    plus ``pad`` on both sides; the search is exact over the integers.
    """
    if not target:
        return [ZERO] * len(vectors)
    tlo = min(v.low for v in target.values())
    thi = max(v.high for v in target.values())
    columns: list[dict] = []
    owners: list[tuple[int, int]] = []
    for j, vec in enumerate(vectors):
        if not vec:
            continue
        vlo = min(v.low for v in vec.values())
        vhi = max(v.high for v in vec.values())
        for e in range(tlo - vhi - pad, thi - vlo + pad + 1):
            col = {}
            for r, p in vec.items():
                for k, c in p.terms().items():
                    col[(k + e, r)] = c
            columns.append(col)
            owners.append((j, e))
    rhs = {}
    for r, p in target.items():
        for k, c in p.terms().items():
            rhs[(k, r)] = c
    sol = IntegerSystem(columns).solve(rhs)
    if sol is None:
        return None
    acc: list[dict[int, int]] = [dict() for _ in vectors]
    for u, val in sol.items():
        j, e = owners[u]
        acc[j][e] = acc[j].get(e, 0) + val
    return [LaurentPoly.from_dict(a) for a in acc]


def _pads(bound: int) -> list[int]:
    pads, p = [0], 1
    while p < bound:
        pads.append(p)
        p *= 2
    if bound > 0:
        pads.append(bound)
    return pads


class PresentedModule:
    """The reduced Alexander module of a diagram, with cached reductions."""

    def __init__(self, d: Diagram):
        self.diagram = d

    @cached_property
    def reduced(self) -> ReducedPresentation:
        return ReducedPresentation(self.diagram)

    # membership ---------------------------------------------------------

    def membership(self, x: FreeElement, degree_bound: int | None = None):
        """Certificate that x lies in the relator submodule, or NotFound(bound)."""
        d = self.diagram
        bound = default_degree_bound(d) if degree_bound is None else degree_bound
        red = self.reduced
        xr, cert = red.reduce(x.coeffs)
        if not xr:
            return self._checked(cert, x)
        for pad in _pads(bound):
            sol = _solve_windows(red.columns, xr, pad)
            if sol is not None:
                _axpy(cert, ONE, red.lift(sol))
                return self._checked(cert, x)
        return NotFound(bound)

    def _checked(self, g: Mapping, x: FreeElement) -> MembershipCertificate:
        mc = MembershipCertificate.normalized(g)
        if not mc.verify(self.diagram, x):
            raise VerificationFailure("membership certificate failed exact expansion")
        return mc

    def element_equal(self, x: FreeElement, y: FreeElement, degree_bound: int | None = None):
        if x == y:
            return MembershipCertificate({}, 0)
        return self.membership(x - y, degree_bound)

    # rational structure -------------------------------------------------

    @cached_property
    def rational_factors(self) -> tuple[int, tuple[RatPoly, ...]]:
        """(free rank, nonunit invariant factors over Q[t, t^-1])."""
        red = self.reduced
        mat = red.matrix()
        if not red.columns:
            return len(red.rows), ()
        facs = [f.strip_t().monic() for f in invariant_factors_q(_shifted_columns_q(mat))]
        rank = len(facs)
        return len(red.rows) - rank, tuple(f for f in facs if not f.is_unit())

    @cached_property
    def elementary_ideal_gcds(self) -> tuple[RatPoly, ...]:
        """Monic gcd over Q[t] of the ideals E_0, E_1, ... up to the first unit ideal."""
        red = self.reduced
        n = len(red.rows)
        free, tors = self.rational_factors
        rank = n - free
        # all invariant factors including units, padded to the rank
        facs = [RatPoly([1])] * (rank - len(tors)) + list(tors)
        out = []
        for k in range(n + 1):
            size = n - k
            if size > rank:
                out.append(RatPoly())
                continue
            g = RatPoly([1])
            for f in facs[:size]:
                g = g * f
            out.append(g.monic())
            if g.is_unit():
                break
        if not out:
            out.append(RatPoly([1]))
        return tuple(out)

    @cached_property
    def alexander_polynomial(self) -> LaurentPoly:
        """Generator of the first nonzero elementary ideal, up to units."""
        red = self.reduced
        free, tors = self.rational_factors
        if not red.rows:
            return ONE
        prim = RatPoly([1])
        for f in tors:
            prim = prim * f
        prim_l = prim.to_primitive_laurent()
        mat = red.matrix()
        rank = len(red.rows) - free
        if rank == 0:
            return prim_l
        content = 0
        for rs in combinations(range(len(mat)), rank):
            for cs in combinations(range(len(mat[0])), rank):
                det = _det([[mat[i][j] for j in cs] for i in rs])
                if det:
                    content = gcd(content, det.content())
                    if content == 1:
                        return prim_l
        return (prim_l * content).unit_normalize()

    # specializations ----------------------------------------------------

    def specialize_integer(self, value: int = -1) -> tuple[tuple[int, ...], int]:
        red = self.reduced
        mat = [[e.evaluate(value) for e in row] for row in red.matrix()]
        divs = smith_diagonal_int(mat) if red.columns else []
        return tuple(x for x in divs if x > 1), len(red.rows) - len(divs)

    def specialize_mod_p(self, p: int, a: int) -> int:
        """Dimension over F_p of the module with t set to a."""
        red = self.reduced
        if not red.columns:
            return len(red.rows)
        mat = [[e.evaluate(a, p) for e in row] for row in red.matrix()]
        return len(red.rows) - rank_mod_p(mat, p)


def _det(m: list[list[LaurentPoly]]) -> LaurentPoly:
    """Laplace expansion; only used on small minors."""
    n = len(m)
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    total = ZERO
    for j in range(n):
        if not m[0][j]:
            continue
        sub = [row[:j] + row[j + 1:] for row in m[1:]]
        term = m[0][j] * _det(sub)
        total = total + term if j % 2 == 0 else total - term
    return total


# ------------------------------------------------------------ longitude signature


@dataclass(frozen=True)
class Signature:
    lambda_part: LaurentPoly
    z_parts: tuple[int, ...]

    def __str__(self) -> str:
        return "(" + ", ".join([str(self.lambda_part), *map(str, self.z_parts)]) + ")"


@dataclass(frozen=True)
class SignatureResult:
    """One of: a signature, a proof of non-divisibility, or an unknown up to a bound."""

    status: str  # "some" | "not_divisible" | "unknown"
    signature: Signature | None = None
    bound: int | None = None
    certificate: MembershipCertificate | None = field(default=None, compare=False)
    quotient: FreeElement | None = field(default=None, compare=False)

    def describe(self) -> str:
        if self.status == "some":
            return f"Some{self.signature}"
        if self.status == "not_divisible":
            return "NotDivisible"
        return f"UnknownUpTo({self.bound})"


def _rational_obstruction(red: ReducedPresentation, target: Mapping) -> bool:
    """True when target is provably outside (1 - t)F + relators, over Q(t) ranks."""
    rows = red.rows
    base = [[ONE_MINUS_T if r == s else ZERO for s in rows] + [col.get(r, ZERO) for col in red.columns] for r in rows]
    ext = [row + [target.get(r, ZERO)] for row, r in zip(base, rows)]
    fa = [f.strip_t().monic() for f in invariant_factors_q(_shifted_columns_q(base))]
    fb = [f.strip_t().monic() for f in invariant_factors_q(_shifted_columns_q(ext))]
    return fa != fb


def longitude_signature(
    module: PresentedModule,
    i: int,
    degree_bound: int | None = None,
    order: Sequence[int] | None = None,
) -> SignatureResult:
    """Solve (1 - t) m == longitude_i modulo relators and return phi(m) modulo ambiguity.

    ``order`` permutes the unknowns of the linear search; the reported
    signature does not depend on it.
    """
    d = module.diagram
    bound = default_degree_bound(d) if degree_bound is None else degree_bound
    red = module.reduced
    chi = longitude(d, i).lift
    chi_red, cert = red.reduce(chi.coeffs)
    unknowns: list[tuple[str, int]] = [("m", r) for r in red.rows] + [("g", j) for j in range(len(red.columns))]
    vectors: list[Mapping] = [{r: ONE_MINUS_T} for r in red.rows] + list(red.columns)
    if order is not None:
        perm = list(order)
        unknowns = [unknowns[k] for k in perm]
        vectors = [vectors[k] for k in perm]
    sol = None
    for pad in _pads(bound):
        sol = _solve_windows(vectors, chi_red, pad)
        if sol is not None:
            break
    if sol is None:
        if _rational_obstruction(red, chi_red):
            return SignatureResult("not_divisible")
        return SignatureResult("unknown", bound=bound)
    m_coeffs: dict[int, LaurentPoly] = {}
    gcol = [ZERO] * len(red.columns)
    for (kind, idx), f in zip(unknowns, sol):
        if kind == "m":
            m_coeffs[idx] = f
        else:
            gcol[idx] = f
    m = FreeElement(m_coeffs)
    # chi = chi_red + sum cert*rel ; chi_red = (1-t)m + sum gcol*col
    g: Vec = {}
    _axpy(g, -ONE, red.lift(gcol))
    _axpy(g, -ONE, cert)
    mc = MembershipCertificate.normalized(g)
    if not mc.verify(d, m.scale(ONE_MINUS_T) - chi):
        raise VerificationFailure("longitude division certificate failed exact expansion")
    val = phi(d, m)
    lattice = hnf_rows([list(phi(d, longitude(d, j).lift).z_parts) for j in range(1, d.mu + 1)], d.mu - 1)
    z = reduce_mod_lattice(val.z_parts, lattice)
    return SignatureResult("some", Signature(val.lambda_part, z), certificate=mc, quotient=m)


# ------------------------------------------------------------------ reports


@dataclass
class InvariantReport:
    mu: int
    linking_matrix: list[list[int]]
    free_rank: int
    torsion_factors: list[str]
    elementary_ideals: list[str]
    alexander_polynomial: str
    at_minus_one: dict
    mod_p: dict
    signatures: list[str]

    def comparable(self) -> list[tuple[str, object]]:
        out = [
            ("mu", self.mu),
            ("linking matrix", self.linking_matrix),
            ("rational invariant factors", (self.free_rank, self.torsion_factors)),
            ("Alexander polynomial", self.alexander_polynomial),
            ("specializations", (self.at_minus_one, self.mod_p)),
        ]
        return out

    def to_json(self) -> dict:
        return {
            "mu": self.mu,
            "linking_matrix": self.linking_matrix,
            "rational_invariant_factors": {"free_rank": self.free_rank, "torsion": self.torsion_factors},
            "elementary_ideal_gcds": self.elementary_ideals,
            "alexander_polynomial": self.alexander_polynomial,
            "specializations": {"t=-1": self.at_minus_one, "mod_p": self.mod_p},
            "longitude_signatures": self.signatures,
        }


def invariant_report(
    module: PresentedModule,
    degree_bound: int | None = None,
    primes: Sequence[int] = DEFAULT_PRIMES,
    signatures: bool = True,
) -> InvariantReport:
    d = module.diagram
    free, tors = module.rational_factors
    divs, rank = module.specialize_integer(-1)
    mod_p = {}
    for p in primes:
        mod_p[str(p)] = {str(a): module.specialize_mod_p(p, a) for a in range(2, p)}
    sigs = []
    if signatures:
        sigs = [longitude_signature(module, i, degree_bound).describe() for i in range(1, d.mu + 1)]
    return InvariantReport(
        mu=d.mu,
        linking_matrix=linking_matrix(d),
        free_rank=free,
        torsion_factors=[str(f.to_primitive_laurent()) for f in tors],
        elementary_ideals=[str(g.to_primitive_laurent()) if g else "0" for g in module.elementary_ideal_gcds],
        alexander_polynomial=str(module.alexander_polynomial),
        at_minus_one={"divisors": list(divs), "free_rank": rank},
        mod_p=mod_p,
        signatures=sigs,
    )


@dataclass(frozen=True)
class ComparisonReport:
    distinguished: bool
    witness: str | None
    left: str | None = None
    right: str | None = None
    skipped: tuple[str, ...] = ()

    def describe(self) -> str:
        if self.distinguished:
            return f"distinguished by {self.witness}: {self.left} vs {self.right}"
        return "not distinguished by implemented invariants"

    def to_json(self) -> dict:
        return {
            "distinguished": self.distinguished,
            "witness": self.witness,
            "left": self.left,
            "right": self.right,
            "skipped": list(self.skipped),
        }


def compare_enhanced(
    d1: Diagram,
    d2: Diagram,
    degree_bound: int | None = None,
    primes: Sequence[int] = DEFAULT_PRIMES,
) -> ComparisonReport:
    m1, m2 = PresentedModule(d1), PresentedModule(d2)
    r1 = invariant_report(m1, degree_bound, primes, signatures=False)
    r2 = invariant_report(m2, degree_bound, primes, signatures=False)
    for (name, a), (_, b) in zip(r1.comparable(), r2.comparable()):
        if a != b:
            return ComparisonReport(True, name, str(a), str(b))
    skipped = []
    for i in range(1, d1.mu + 1):
        s1 = longitude_signature(m1, i, degree_bound)
        s2 = longitude_signature(m2, i, degree_bound)
        if "unknown" in (s1.status, s2.status):
            skipped.append(f"longitude signature component {i}")
            continue
        if s1 != s2:
            return ComparisonReport(True, f"longitude signature component {i}", s1.describe(), s2.describe())
    return ComparisonReport(False, None, skipped=tuple(skipped))

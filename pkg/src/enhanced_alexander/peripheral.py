"""Meridians, longitudes, linking numbers and the torsion/divisibility certificates."""
from __future__ import annotations

from dataclasses import dataclass, field

from .diagram import Diagram
from .laurent import ONE_MINUS_T, T, ZERO, LaurentPoly
from .presentation import FreeElement, combine_relators, phi, eps_mu_linking_basis


class HalfIntegerError(ArithmeticError):
    """A doubled longitude coefficient was odd; the diagram data is corrupt."""


class CertificateFailure(AssertionError):
    pass


class DivisionFailure(ValueError):
    pass


@dataclass(frozen=True)
class Longitude:
    component: int
    lift: FreeElement
    contributions: tuple[tuple[int, int], ...]  # (crossing index, writhe)
    doubled_b: dict = field(compare=False)  # arc -> sum of w(c) over b1/b2 slots

    def to_json(self, d: Diagram) -> dict:
        return {
            "component": self.component,
            "contributing_crossings": [
                {"id": d.labels[c], "w": w} for c, w in self.contributions
            ],
            "lift": self.lift.to_json(),
        }


def _check_component(d: Diagram, i: int) -> None:
    if not 1 <= i <= d.mu:
        raise IndexError(f"component {i} outside 1..{d.mu}")


def contributing(d: Diagram, i: int) -> list[int]:
    """Crossings whose under-arcs lie on component ``i``."""
    return [c for c, x in enumerate(d.crossings) if d.arc_component[x.b1] == i]


def longitude(d: Diagram, i: int) -> Longitude:
    _check_component(d, i)
    doubled: dict[int, int] = {}
    over_part: dict[int, int] = {}
    contrib = []
    for c in contributing(d, i):
        x = d.crossings[c]
        contrib.append((c, x.w))
        over_part[x.over] = over_part.get(x.over, 0) + 2 * x.w
        doubled[x.b1] = doubled.get(x.b1, 0) + x.w
        doubled[x.b2] = doubled.get(x.b2, 0) + x.w
    total = dict(over_part)
    for arc, m in doubled.items():
        if m % 2:
            raise HalfIntegerError(f"arc {arc} has odd doubled coefficient {m}")
        total[arc] = total.get(arc, 0) - m
    for arc, v in total.items():
        if v % 2:
            raise HalfIntegerError(f"arc {arc} has odd doubled coefficient {v}")
    lift = FreeElement({arc: v // 2 for arc, v in total.items()})
    return Longitude(i, lift, tuple(contrib), {a: m for a, m in doubled.items() if m})


def longitudes(d: Diagram) -> list[Longitude]:
    return [longitude(d, i) for i in range(1, d.mu + 1)]


def meridian_lift(d: Diagram, i: int) -> FreeElement:
    _check_component(d, i)
    return FreeElement.generator(d.arcs_of(i)[0])


def is_meridian_phi(d: Diagram, x: FreeElement, i: int) -> bool:
    return phi(d, x) == phi(d, meridian_lift(d, i))


def linking_number(d: Diagram, i: int, j: int) -> int:
    """Signed count of crossings of component ``j`` over component ``i``."""
    if i == j:
        raise ValueError("linking number needs two distinct components")
    _check_component(d, i)
    _check_component(d, j)
    return sum(
        x.w
        for x in d.crossings
        if d.arc_component[x.over] == j and d.arc_component[x.b1] == i
    )


def linking_matrix(d: Diagram) -> list[list[int]]:
    """Row i holds l_{j/i} off the diagonal and minus the row sum on it."""
    mat = [[0] * d.mu for _ in range(d.mu)]
    for x in d.crossings:
        i = d.arc_component[x.b1]
        j = d.arc_component[x.over]
        if i != j:
            mat[i - 1][j - 1] += x.w
    for i in range(d.mu):
        mat[i][i] = -sum(mat[i][j] for j in range(d.mu) if j != i)
    return mat


def linking_vector_via_longitude(d: Diagram, i: int) -> tuple[int, ...]:
    return eps_mu_linking_basis(phi(d, longitude(d, i).lift))


@dataclass(frozen=True)
class TorsionCertificate:
    component: int
    combination: dict  # crossing index -> writhe
    per_arc_ok: bool
    doubled_ok: bool
    identity_ok: bool

    def to_json(self, d: Diagram) -> dict:
        return {
            "component": self.component,
            "relator_combination": {str(d.labels[c]): w for c, w in sorted(self.combination.items())},
            "per_arc_cancellation": self.per_arc_ok,
            "doubled_coefficients_in_range": self.doubled_ok,
            "free_module_identity": self.identity_ok,
        }


def torsion_certificate(d: Diagram, i: int) -> TorsionCertificate:
    """Check sum w(c) relator(c) == (1 - t) * longitude in the free module."""
    lon = longitude(d, i)
    combo = {c: w for c, w in lon.contributions}
    per_arc: dict[int, int] = {}
    for c, w in lon.contributions:
        x = d.crossings[c]
        per_arc[x.b1] = per_arc.get(x.b1, 0) + w
        per_arc[x.b2] = per_arc.get(x.b2, 0) - w
    per_arc_ok = all(v == 0 for v in per_arc.values())
    doubled_ok = all(v in (-2, 0, 2) for v in lon.doubled_b.values())
    lhs = combine_relators(d, {c: LaurentPoly([w]) for c, w in combo.items()})
    identity_ok = lhs == lon.lift.scale(ONE_MINUS_T)
    cert = TorsionCertificate(i, combo, per_arc_ok, doubled_ok, identity_ok)
    if not (per_arc_ok and doubled_ok and identity_ok):
        raise CertificateFailure(f"torsion certificate fails for component {i}: {cert}")
    return cert


def sum_of_longitudes(d: Diagram) -> FreeElement:
    total = FreeElement()
    for lon in longitudes(d):
        total = total + lon.lift
    return total


@dataclass(frozen=True)
class DivisionResult:
    quotient: FreeElement
    relator_coeffs: dict  # crossing index -> LaurentPoly

    def verify(self, d: Diagram, x: FreeElement) -> bool:
        """(1 - t) * quotient - x == sum g(c) relator(c) exactly."""
        lhs = self.quotient.scale(ONE_MINUS_T) - x
        return lhs == combine_relators(d, self.relator_coeffs)


def knot_divide_by_one_minus_t(d: Diagram, x: FreeElement) -> DivisionResult:
    """Rewrite x modulo relators until every coefficient is divisible by 1 - t.

    Arcs are walked in traversal order; at the first arc whose coefficient
    has nonzero augmentation, the relator of the crossing joining it to the
    next arc moves that augmentation one arc forward.
    """
    if d.mu != 1:
        raise DivisionFailure("the divisibility rewrite applies to knots only")
    if d.code is None:
        raise DivisionFailure("traversal order needs passage sequences")
    if phi(d, x).lambda_part.augment() != 0:
        raise DivisionFailure("x does not augment to zero")
    n = d.n_arcs
    lam = [x.get(a) for a in range(n)]
    g: dict[int, LaurentPoly] = {}
    # crossing at which arc k ends and arc k+1 starts
    comp = d.code.components[0]
    unders = [tok.label for tok in comp if tok.role == "U"]
    for i0 in range(n - 1):
        e = lam[i0].augment()
        if not e:
            continue
        c = d.crossing_index(unders[(i0 + 1) % len(unders)])
        cx = d.crossings[c]
        j = cx.over
        if cx.b1 == i0 and cx.b2 == i0 + 1:
            coef = LaurentPoly([-e])
            lam[j] = lam[j] + ONE_MINUS_T * coef
            lam[i0] = lam[i0] + T * coef
            lam[i0 + 1] = lam[i0 + 1] - coef
        elif cx.b1 == i0 + 1 and cx.b2 == i0:
            coef = LaurentPoly([e])
            lam[j] = lam[j] + ONE_MINUS_T * coef
            lam[i0 + 1] = lam[i0 + 1] + T * coef
            lam[i0] = lam[i0] - coef
        else:
            raise DivisionFailure(f"arcs {i0}, {i0 + 1} are not joined as expected")
        g[c] = g.get(c, ZERO) + coef
    if lam[n - 1].augment() != 0:
        # unreachable when the total augmentation vanishes
        raise DivisionFailure("last coefficient kept a nonzero augmentation")
    quotient = FreeElement({a: lam[a].div_exact_one_minus_t() for a in range(n)})
    # (1 - t) q = x + sum g relator  =>  (1 - t) q - x = sum g relator
    return DivisionResult(quotient, {c: v for c, v in g.items() if v})

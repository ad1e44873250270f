"""The free module on arcs, the crossing relators and the map phi."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .diagram import Diagram
from .laurent import ONE, ONE_MINUS_T, T, ZERO, LaurentPoly, parse_poly


class FreeElement:
    """Finitely supported map arc -> LaurentPoly; zero coefficients are dropped."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, LaurentPoly | int] | None = None):
        clean: dict[int, LaurentPoly] = {}
        for arc, c in (coeffs or {}).items():
            c = LaurentPoly.coerce(c)
            if c:
                clean[int(arc)] = c
        self.coeffs = clean

    @classmethod
    def generator(cls, arc: int) -> "FreeElement":
        return cls({arc: ONE})

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[int, LaurentPoly | int]]) -> "FreeElement":
        acc: dict[int, LaurentPoly] = {}
        for arc, c in terms:
            acc[arc] = acc.get(arc, ZERO) + LaurentPoly.coerce(c)
        return cls(acc)

    def get(self, arc: int) -> LaurentPoly:
        return self.coeffs.get(arc, ZERO)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: "FreeElement") -> "FreeElement":
        out = dict(self.coeffs)
        for arc, c in other.coeffs.items():
            out[arc] = out.get(arc, ZERO) + c
        return FreeElement(out)

    def __neg__(self) -> "FreeElement":
        return FreeElement({a: -c for a, c in self.coeffs.items()})

    def __sub__(self, other: "FreeElement") -> "FreeElement":
        return self + (-other)

    def scale(self, lam: LaurentPoly | int) -> "FreeElement":
        lam = LaurentPoly.coerce(lam)
        return FreeElement({a: lam * c for a, c in self.coeffs.items()})

    __rmul__ = scale

    def __eq__(self, other) -> bool:
        return isinstance(other, FreeElement) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def augment_sum(self) -> int:
        return sum(c.augment() for c in self.coeffs.values())

    def to_json(self) -> dict:
        return {"coeffs": {str(a): str(c) for a, c in sorted(self.coeffs.items())}}

    @classmethod
    def from_json(cls, obj: Mapping) -> "FreeElement":
        return cls({int(a): parse_poly(txt) for a, txt in obj["coeffs"].items()})

    def __repr__(self) -> str:
        body = ", ".join(f"{a}: {c}" for a, c in sorted(self.coeffs.items()))
        return f"FreeElement({{{body}}})"


def relator(d: Diagram, c: int) -> FreeElement:
    """(1 - t) a(c) + t b1(c) - b2(c) for the crossing with dense index ``c``."""
    if not 0 <= c < d.n_crossings:
        raise IndexError(f"crossing {c} outside 0..{d.n_crossings - 1}")
    x = d.crossings[c]
    return FreeElement.from_terms([(x.over, ONE_MINUS_T), (x.b1, T), (x.b2, -ONE)])


def relators(d: Diagram) -> list[FreeElement]:
    return [relator(d, c) for c in range(d.n_crossings)]


def presentation_matrix(d: Diagram) -> list[list[LaurentPoly]]:
    """Rows are arcs, columns are crossings."""
    cols = relators(d)
    return [[col.get(a) for col in cols] for a in range(d.n_arcs)]


def combine_relators(d: Diagram, g: Mapping[int, LaurentPoly]) -> FreeElement:
    """Sum of g(c) * relator(c)."""
    out = FreeElement()
    for c, lam in g.items():
        if lam:
            out = out + relator(d, c).scale(lam)
    return out


@dataclass(frozen=True)
class PhiValue:
    lambda_part: LaurentPoly
    z_parts: tuple[int, ...]

    def __add__(self, other: "PhiValue") -> "PhiValue":
        return PhiValue(
            self.lambda_part + other.lambda_part,
            tuple(x + y for x, y in zip(self.z_parts, other.z_parts)),
        )

    def as_tuple(self) -> tuple:
        return (self.lambda_part, *self.z_parts)

    def __str__(self) -> str:
        return "(" + ", ".join([str(self.lambda_part), *map(str, self.z_parts)]) + ")"


def phi(d: Diagram, x: FreeElement) -> PhiValue:
    """Image in Lambda + (Z_eps)^(mu-1); components 2..mu carry augmented sums."""
    lam = ZERO
    z = [0] * (d.mu - 1)
    for arc, c in x.coeffs.items():
        lam = lam + c
        k = d.arc_component[arc]
        if k > 1:
            z[k - 2] += c.augment()
    return PhiValue(lam, tuple(z))


def eps_mu_raw(v: PhiValue) -> tuple[int, ...]:
    """Augment the Lambda coordinate, keep the others: the literal map to Z^mu."""
    return (v.lambda_part.augment(), *v.z_parts)


def eps_mu_linking_basis(v: PhiValue) -> tuple[int, ...]:
    """Per-component coefficient sums; coordinate 1 is the total minus the rest."""
    total = v.lambda_part.augment()
    return (total - sum(v.z_parts), *v.z_parts)

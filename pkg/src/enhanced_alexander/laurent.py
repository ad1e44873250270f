"""Exact arithmetic in Z[t, t^-1] and Q[t].

``LaurentPoly`` is the scalar ring for every module computation in the
package; ``RatPoly`` only appears inside rational normal forms.
"""
from __future__ import annotations

import re
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable, Mapping, Sequence


class NotDivisible(ArithmeticError):
    """Raised when an exact division has a nonzero remainder."""


class LaurentPoly:
    """Element of Z[t, t^-1] stored as ``low`` plus a dense coefficient tuple.

    ``coeffs[k]`` is the coefficient of ``t**(low + k)``. The first and last
    stored coefficients are nonzero, and zero is ``low == 0, coeffs == ()``.
    """

    __slots__ = ("low", "coeffs", "_hash")

    def __init__(self, coeffs: Sequence[int] = (), low: int = 0):
        coeffs = list(coeffs)
        start = 0
        while start < len(coeffs) and coeffs[start] == 0:
            start += 1
        end = len(coeffs)
        while end > start and coeffs[end - 1] == 0:
            end -= 1
        if start == end:
            self.low = 0
            self.coeffs: tuple[int, ...] = ()
        else:
            self.low = low + start
            self.coeffs = tuple(int(c) for c in coeffs[start:end])
        self._hash = None

    # construction helpers

    @classmethod
    def from_dict(cls, terms: Mapping[int, int]) -> "LaurentPoly":
        terms = {k: v for k, v in terms.items() if v}
        if not terms:
            return ZERO
        lo, hi = min(terms), max(terms)
        return cls([terms.get(k, 0) for k in range(lo, hi + 1)], lo)

    @classmethod
    def monomial(cls, coeff: int, exp: int) -> "LaurentPoly":
        return cls([coeff], exp)

    @classmethod
    def coerce(cls, value) -> "LaurentPoly":
        if isinstance(value, LaurentPoly):
            return value
        if isinstance(value, int):
            return cls([value])
        raise TypeError(f"cannot coerce {value!r} to LaurentPoly")

    # basic properties

    @property
    def high(self) -> int:
        return self.low + len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def terms(self) -> dict[int, int]:
        return {self.low + k: c for k, c in enumerate(self.coeffs) if c}

    def is_unit(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0] in (1, -1)

    def is_integer(self) -> bool:
        return not self.coeffs or (self.low == 0 and len(self.coeffs) == 1)

    def constant(self) -> int:
        """Integer value of a degree-0 polynomial."""
        if not self.is_integer():
            raise ValueError(f"{self} is not an integer constant")
        return self.coeffs[0] if self.coeffs else 0

    # ring structure

    def __add__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly([other])
        elif not isinstance(other, LaurentPoly):
            return NotImplemented
        if not other.coeffs:
            return self
        if not self.coeffs:
            return other
        lo = min(self.low, other.low)
        hi = max(self.high, other.high)
        out = [0] * (hi - lo + 1)
        off = self.low - lo
        for k, c in enumerate(self.coeffs):
            out[off + k] += c
        off = other.low - lo
        for k, c in enumerate(other.coeffs):
            out[off + k] += c
        return LaurentPoly(out, lo)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        if not self.coeffs:
            return self
        return LaurentPoly([-c for c in self.coeffs], self.low)

    def __sub__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly([other])
        elif not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            if other == 0 or not self.coeffs:
                return ZERO
            return LaurentPoly([c * other for c in self.coeffs], self.low)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return ZERO
        a, b = self.coeffs, other.coeffs
        if len(b) == 1:
            return LaurentPoly([c * b[0] for c in a], self.low + other.low)
        if len(a) == 1:
            return LaurentPoly([c * a[0] for c in b], self.low + other.low)
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return LaurentPoly(out, self.low + other.low)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            return self.unit_inverse() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by t**k."""
        if not self.coeffs:
            return self
        return LaurentPoly(self.coeffs, self.low + k)

    def unit_inverse(self) -> "LaurentPoly":
        if not self.is_unit():
            raise NotDivisible(f"{self} is not a unit")
        return LaurentPoly([self.coeffs[0]], -self.low)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly([other])
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.low == other.low and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.low, self.coeffs))
        return self._hash

    # evaluation

    def augment(self) -> int:
        """The augmentation t -> 1, i.e. the coefficient sum."""
        return sum(self.coeffs)

    def evaluate(self, value: int, modulus: int | None = None) -> int:
        """Evaluate at an integer; ``value`` must be a unit if exponents are negative."""
        if modulus is None:
            if self.low < 0 and value not in (1, -1):
                raise ValueError("negative exponents need a unit evaluation point")
            total = 0
            for k, c in enumerate(self.coeffs):
                e = self.low + k
                total += c * (value ** e if e >= 0 else value ** (-e))
            return total
        total = 0
        for k, c in enumerate(self.coeffs):
            total += c * pow(value, self.low + k, modulus)
        return total % modulus

    def div_exact_one_minus_t(self) -> "LaurentPoly":
        """Return q with (1 - t) * q == self; raise NotDivisible if augment != 0."""
        if not self.coeffs:
            return ZERO
        if self.augment() != 0:
            raise NotDivisible(f"augmentation of {self} is nonzero")
        # q_k = sum_{j <= k} p_j, read off from (1 - t) q = p
        out = []
        running = 0
        for c in self.coeffs[:-1]:
            running += c
            out.append(running)
        return LaurentPoly(out, self.low)

    def unit_normalize(self) -> "LaurentPoly":
        """Canonical associate under multiplication by +-t^k."""
        if not self.coeffs:
            return self
        sign = 1 if self.coeffs[0] > 0 else -1
        return LaurentPoly([sign * c for c in self.coeffs], 0)

    def content(self) -> int:
        return reduce(gcd, self.coeffs, 0)

    # text form

    def __str__(self) -> str:
        return format_poly(self.terms())

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly":
        return parse_poly(text)


ZERO = LaurentPoly()
ONE = LaurentPoly([1])
T = LaurentPoly([1], 1)
T_INV = LaurentPoly([1], -1)
ONE_MINUS_T = LaurentPoly([1, -1])


def format_poly(terms: Mapping[int, object]) -> str:
    """Render ``{exp: coeff}`` as ``1 - t + t^2`` (ascending exponents)."""
    items = [(k, c) for k, c in sorted(terms.items()) if c]
    if not items:
        return "0"
    parts = []
    for idx, (k, c) in enumerate(items):
        neg = c < 0
        mag = -c if neg else c
        if k == 0:
            body = str(mag)
        else:
            var = "t" if k == 1 else f"t^{k}"
            body = var if mag == 1 else f"{mag}*{var}"
        if idx == 0:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(parts)


_TERM_RE = re.compile(
    r"([+-]?)\s*(?:(\d+)\s*\*?\s*)?(?:(t)(?:\s*\^\s*(\(?[+-]?\d+\)?))?)?"
)


def parse_poly(text: str) -> LaurentPoly:
    """Parse the textual form produced by ``format_poly`` (lenient about spacing)."""
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial text")
    terms: dict[int, int] = {}
    pos = 0
    while pos < len(s):
        if s[pos].isspace():
            pos += 1
            continue
        m = _TERM_RE.match(s, pos)
        if not m or m.end() == pos or (m.group(2) is None and m.group(3) is None):
            raise ValueError(f"cannot parse polynomial {text!r} at {s[pos:]!r}")
        sign = -1 if m.group(1) == "-" else 1
        coeff = int(m.group(2)) if m.group(2) is not None else 1
        if m.group(3):
            exp = int(m.group(4).strip("()")) if m.group(4) else 1
        else:
            exp = 0
        terms[exp] = terms.get(exp, 0) + sign * coeff
        pos = m.end()
    return LaurentPoly.from_dict(terms)


class RatPoly:
    """Ordinary polynomial over Q, ascending coefficients, no trailing zeros."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def from_laurent(cls, p: LaurentPoly) -> "RatPoly":
        """Drop the t-power: the result is p * t^(-low), a polynomial."""
        return cls(p.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def lead(self) -> Fraction:
        return self.coeffs[-1]

    def __add__(self, other: "RatPoly") -> "RatPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return RatPoly(x + y for x, y in zip(a, b))

    def __neg__(self) -> "RatPoly":
        return RatPoly(-c for c in self.coeffs)

    def __sub__(self, other: "RatPoly") -> "RatPoly":
        return self + (-other)

    def __mul__(self, other) -> "RatPoly":
        if isinstance(other, (int, Fraction)):
            return RatPoly(c * other for c in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return RatPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return RatPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, RatPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def divmod(self, other: "RatPoly") -> tuple["RatPoly", "RatPoly"]:
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lead = other.lead()
        quot = [Fraction(0)] * max(len(rem) - dq, 1)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k]
            if c:
                f = c / lead
                quot[k - dq] = f
                for j, oc in enumerate(other.coeffs):
                    rem[k - dq + j] -= f * oc
        return RatPoly(quot), RatPoly(rem[:dq] if dq > 0 else [])

    def __mod__(self, other: "RatPoly") -> "RatPoly":
        return self.divmod(other)[1]

    def __floordiv__(self, other: "RatPoly") -> "RatPoly":
        return self.divmod(other)[0]

    def monic(self) -> "RatPoly":
        if not self.coeffs:
            return self
        lead = self.lead()
        return RatPoly(c / lead for c in self.coeffs)

    def strip_t(self) -> "RatPoly":
        """Remove the factor t^k (t is a unit in the Laurent ring)."""
        k = 0
        while k < len(self.coeffs) and self.coeffs[k] == 0:
            k += 1
        return RatPoly(self.coeffs[k:])

    def is_unit(self) -> bool:
        return len(self.coeffs) == 1

    def to_primitive_laurent(self) -> LaurentPoly:
        """Clear denominators and content; sign fixed by the canonical associate."""
        if not self.coeffs:
            return ZERO
        den = reduce(lambda a, b: a * b // gcd(a, b), (c.denominator for c in self.coeffs), 1)
        ints = [int(c * den) for c in self.coeffs]
        g = reduce(gcd, ints, 0)
        return LaurentPoly([c // g for c in ints]).unit_normalize()

    def __str__(self) -> str:
        return format_poly({k: c for k, c in enumerate(self.coeffs)})

    def __repr__(self) -> str:
        return f"RatPoly({str(self)!r})"


def rat_gcd2(a: RatPoly, b: RatPoly) -> RatPoly:
    while b.coeffs:
        a, b = b, a % b
    return a.monic()


def gcd_rat(ps: Iterable[RatPoly]) -> RatPoly:
    """Monic gcd over Q; the gcd of an empty list is 0."""
    g = RatPoly()
    for p in ps:
        g = rat_gcd2(g, p) if g.coeffs else p.monic()
        if g.is_unit():
            return g
    return g


def rat_lcm(a: RatPoly, b: RatPoly) -> RatPoly:
    if not a.coeffs or not b.coeffs:
        return RatPoly()
    return ((a * b) // rat_gcd2(a, b)).monic()


def gcd_laurent(ps: Iterable[LaurentPoly]) -> LaurentPoly:
    """gcd in Z[t, t^-1] as integer content times the primitive rational gcd."""
    ps = [p for p in ps if p]
    if not ps:
        return ZERO
    content = reduce(gcd, (p.content() for p in ps), 0)
    prim = gcd_rat(RatPoly.from_laurent(p) for p in ps).to_primitive_laurent()
    return (prim * content).unit_normalize()

"""Univariate polynomials over F_q and the ring R_n = F_q[x]/(x^n - 1).

Polynomials are sparse (degree -> nonzero coefficient) because generator
polynomials of binomial codes have only n/t terms spread up to degree n - 1.
Long division works on a dense copy. The dense_* helpers operate on
low-degree-first coefficient lists and back the coset oracle's extension
field arithmetic.
"""

import re
from collections.abc import Iterable, Sequence

from .errors import (
    DimensionMismatchError,
    InvalidArgumentError,
    ParseError,
    RemainderNonzeroError,
)
from .gfield import BaseField

NEG_INF = float("-inf")


class Poly:
    """Immutable sparse polynomial over a BaseField."""

    __slots__ = ("field", "terms")

    def __init__(self, field: BaseField, terms: dict[int, int] | None = None):
        self.field = field
        self.terms = {d: c for d, c in (terms or {}).items() if c != 0}

    @classmethod
    def from_dense(cls, field: BaseField, coeffs: Sequence[int]) -> "Poly":
        return cls(field, {d: c for d, c in enumerate(coeffs) if c})

    @classmethod
    def monomial(cls, field: BaseField, degree: int, coeff: int = 1) -> "Poly":
        return cls(field, {degree: coeff})

    @property
    def degree(self) -> int | float:
        return max(self.terms) if self.terms else NEG_INF

    @property
    def leading(self) -> int:
        return self.terms[self.degree] if self.terms else 0

    def coeff(self, d: int) -> int:
        return self.terms.get(d, 0)

    def is_zero(self) -> bool:
        return not self.terms

    def to_dense(self) -> list[int]:
        if not self.terms:
            return []
        out = [0] * (self.degree + 1)
        for d, c in self.terms.items():
            out[d] = c
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.field.q == other.field.q and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.field.q, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        return f"Poly({render_poly(self)!r}, q={self.field.q})"


# --- ring operations ----------------------------------------------------------


def _same_field(f: Poly, g: Poly) -> BaseField:
    if f.field is not g.field and f.field.q != g.field.q:
        raise InvalidArgumentError(f"polynomials over F_{f.field.q} and F_{g.field.q}")
    return f.field


def poly_add(f: Poly, g: Poly) -> Poly:
    """Sum of two polynomials over the same field.

    Args:
        f: First summand.
        g: Second summand.

    Returns:
        f + g with cancelled terms dropped.

    Raises:
        InvalidArgumentError: f and g live over different fields.
    """
    F = _same_field(f, g)
    terms = dict(f.terms)
    for d, c in g.terms.items():
        terms[d] = F.add(terms.get(d, 0), c)
    return Poly(F, terms)


def poly_sub(f: Poly, g: Poly) -> Poly:
    """f - g."""
    return poly_add(f, poly_scale(g, g.field.neg(1)))


def poly_scale(f: Poly, c: int) -> Poly:
    """c * f for a field element c."""
    F = f.field
    return Poly(F, {d: F.mul(c, a) for d, a in f.terms.items()})


def poly_shift(f: Poly, k: int) -> Poly:
    """x^k * f."""
    return Poly(f.field, {d + k: c for d, c in f.terms.items()})


def poly_mul(f: Poly, g: Poly) -> Poly:
    """Schoolbook product of two sparse polynomials.

    Args:
        f: First factor.
        g: Second factor.

    Returns:
        f * g, not reduced modulo x^n - 1.
    """
    F = _same_field(f, g)
    terms: dict[int, int] = {}
    for i, a in f.terms.items():
        for j, b in g.terms.items():
            terms[i + j] = F.add(terms.get(i + j, 0), F.mul(a, b))
    return Poly(F, terms)


def poly_product(factors: Iterable[Poly], field: BaseField) -> Poly:
    """Product of all factors; the empty product is 1."""
    result = Poly.monomial(field, 0)
    for f in factors:
        result = poly_mul(result, f)
    return result


def poly_divmod(f: Poly, g: Poly) -> tuple[Poly, Poly]:
    """Synthetic long division, high degree to low."""
    F = _same_field(f, g)
    if g.is_zero():
        raise InvalidArgumentError("division by the zero polynomial")
    rem = f.to_dense()
    dg = g.degree
    if len(rem) <= dg:
        return Poly(F), f
    lead_inv = F.inv(g.leading)
    divisor = list(g.terms.items())
    quot = [0] * (len(rem) - dg)
    for k in range(len(rem) - 1, dg - 1, -1):
        c = rem[k]
        if c == 0:
            continue
        c = F.mul(c, lead_inv)
        quot[k - dg] = c
        for d, b in divisor:
            rem[k - dg + d] = F.sub(rem[k - dg + d], F.mul(c, b))
    return Poly.from_dense(F, quot), Poly.from_dense(F, rem[:dg])


def poly_div_exact(f: Poly, g: Poly) -> Poly:
    """Quotient f / g when g divides f.

    Raises:
        RemainderNonzeroError: g leaves a remainder.
    """
    quot, rem = poly_divmod(f, g)
    if not rem.is_zero():
        raise RemainderNonzeroError(f"{render_poly(g)} does not divide {render_poly(f)}")
    return quot


def x_n_minus_one(n: int, field: BaseField) -> Poly:
    """x^n - 1 over field."""
    return Poly(field, {n: 1, 0: field.neg(1)})


def check_to_generator(n: int, h: Poly) -> Poly:
    """Generator polynomial g = (x^n - 1)/h of the code with check polynomial h.

    The full modulus is rejected except for n = 1, where x - 1 is the only
    irreducible factor and its code is all of F_q (g = 1).

    Raises:
        InvalidArgumentError: h is constant, or not a proper factor when n > 1.
        RemainderNonzeroError: h does not divide x^n - 1.
    """
    if h.is_zero() or h.degree < 1 or h.degree > n or (h.degree == n and n > 1):
        raise InvalidArgumentError(
            f"check polynomial {render_poly(h)} must be a proper factor of x^{n} - 1"
        )
    return poly_div_exact(x_n_minus_one(n, h.field), h)


def codeword(message: Sequence[int], g: Poly, n: int) -> Poly:
    """sum(message[j] * x^j * g) reduced modulo x^n - 1."""
    k = n - g.degree
    if len(message) != k:
        raise DimensionMismatchError(f"message has length {len(message)}, code dimension is {k}")
    F = g.field
    terms: dict[int, int] = {}
    for j, m in enumerate(message):
        if m == 0:
            continue
        for d, c in g.terms.items():
            slot = (d + j) % n
            terms[slot] = F.add(terms.get(slot, 0), F.mul(m, c))
    return Poly(F, terms)


def hamming_weight(f: Poly) -> int:
    """Number of nonzero coefficients."""
    return len(f.terms)


# --- text form ----------------------------------------------------------------


def render_poly(f: Poly) -> str:
    """Descending-degree text such as 'x^2 + 8x + 1'."""
    if f.is_zero():
        return "0"
    parts = []
    for d in sorted(f.terms, reverse=True):
        c = f.terms[d]
        if d == 0:
            parts.append(str(c))
            continue
        coeff = "" if c == 1 else str(c)
        parts.append(coeff + ("x" if d == 1 else f"x^{d}"))
    return " + ".join(parts)


_TERM = re.compile(r"^(\d*)\*?(?:(x)(?:\^(\d+))?)?$")


def parse_poly(text: str, field: BaseField) -> Poly:
    """Parse 'x^6 + 9x^3 + 25'.

    Coefficients are canonical element encodings; for prime q any integer is
    reduced mod p, and a leading '-' negates a term.
    """
    compact = text.replace(" ", "")
    if not compact:
        raise ParseError("empty polynomial")
    pieces = re.findall(r"[+-]?[^+-]+", compact)
    if "".join(pieces) != compact:
        raise ParseError(f"cannot parse polynomial {text!r}")
    terms: dict[int, int] = {}
    for piece in pieces:
        sign = piece[0] == "-"
        match = _TERM.match(piece.lstrip("+-"))
        if not match or not (match.group(1) or match.group(2)):
            raise ParseError(f"cannot parse term {piece!r} in {text!r}")
        digits, var, power = match.groups()
        coeff = int(digits) if digits else 1
        if field.e == 1:
            coeff %= field.p
        elif coeff >= field.q:
            raise ParseError(f"coefficient {coeff} is not an element of F_{field.q}")
        if sign:
            coeff = field.neg(coeff)
        degree = (int(power) if power else 1) if var else 0
        terms[degree] = field.add(terms.get(degree, 0), coeff)
    return Poly(field, terms)


def coefficient_key(f: Poly) -> tuple:
    """Sort key: degree, then coefficient encodings from high degree down."""
    if f.is_zero():
        return (-1, ())
    return (f.degree, tuple(f.coeff(d) for d in range(f.degree, -1, -1)))


# --- dense helpers (low degree first) -------------------------------------------


def dense_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def dense_mod(a: Sequence[int], mod: Sequence[int], F: BaseField) -> list[int]:
    rem = list(a)
    dm = len(mod) - 1
    lead_inv = F.inv(mod[-1])
    for k in range(len(rem) - 1, dm - 1, -1):
        c = rem[k]
        if c == 0:
            continue
        c = F.mul(c, lead_inv)
        for i, b in enumerate(mod):
            if b:
                rem[k - dm + i] = F.sub(rem[k - dm + i], F.mul(c, b))
    return dense_trim(rem[:dm])


def dense_mul(a: Sequence[int], b: Sequence[int], F: BaseField) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = F.add(out[i + j], F.mul(x, y))
    return dense_trim(out)


def dense_mulmod(a, b, mod, F: BaseField) -> list[int]:
    return dense_mod(dense_mul(a, b, F), mod, F)


def dense_powmod(a, k: int, mod, F: BaseField) -> list[int]:
    result = [1]
    base = dense_mod(a, mod, F)
    while k:
        if k & 1:
            result = dense_mulmod(result, base, mod, F)
        base = dense_mulmod(base, base, mod, F)
        k >>= 1
    return result


def dense_add(a, b, F: BaseField) -> list[int]:
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, y in enumerate(b):
        out[i] = F.add(out[i], y)
    return dense_trim(out)


def dense_sub(a, b, F: BaseField) -> list[int]:
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, y in enumerate(b):
        out[i] = F.sub(out[i], y)
    return dense_trim(out)


def dense_gcd(a, b, F: BaseField) -> list[int]:
    """Monic gcd."""
    a, b = dense_trim(list(a)), dense_trim(list(b))
    while b:
        a, b = b, dense_mod(a, b, F)
    if not a:
        return []
    lead_inv = F.inv(a[-1])
    return [F.mul(c, lead_inv) for c in a]

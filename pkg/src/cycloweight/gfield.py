"""Finite fields F_q (q = p^e) and the quadratic extension F_{q^2}.

Base elements are plain ints holding the canonical encoding
sum(coeffs[i] * p**i) of their residue polynomial; extension elements are
ExtElement(lo, hi) standing for lo + hi*beta, encoded as lo + hi*q. All
"smallest element" choices below use these encodings, so the tower a given
(p, e) produces is fully deterministic.
"""

from dataclasses import dataclass, field
from typing import NamedTuple

from sympy import ZZ, isprime
from sympy.polys.galoistools import gf_irreducible_p

from .errors import (
    DivisionByZeroError,
    InputRangeError,
    InvalidArgumentError,
    NotInBaseFieldError,
)
from .numth import order_from_factors

MAX_FIELD_SIZE = 10**6

BaseElement = int


class ExtElement(NamedTuple):
    """lo + hi*beta, where beta is the class of the extension variable."""

    lo: int
    hi: int


def _digits(x: int, p: int, e: int) -> list[int]:
    out = []
    for _ in range(e):
        x, c = divmod(x, p)
        out.append(c)
    return out


def _undigits(coeffs, p: int) -> int:
    x = 0
    for c in reversed(coeffs):
        x = x * p + c
    return x


def canonical_base_modulus(p: int, e: int) -> tuple[int, ...]:
    """Smallest-encoding monic irreducible of degree e over F_p (low degree first)."""
    for enc in range(p**e):
        low = _digits(enc, p, e)
        if gf_irreducible_p([1] + low[::-1], p, ZZ):
            return tuple(low) + (1,)
    raise InvalidArgumentError(f"no irreducible polynomial of degree {e} over F_{p}")


class BaseField:
    """Arithmetic in F_q = F_p[y]/(modulus).

    Prime fields use integer arithmetic mod p. Proper extensions precompute
    exp/log tables from the smallest-encoding generator and add through Zech
    logarithms, except in characteristic 2 where addition is XOR.
    """

    def __init__(self, p: int, e: int = 1):
        if not isprime(p):
            raise InvalidArgumentError(f"{p} is not prime")
        if e < 1 or p**e > MAX_FIELD_SIZE:
            raise InputRangeError(f"field size {p}^{e} outside [2, {MAX_FIELD_SIZE}]")
        self.p = p
        self.e = e
        self.q = p**e
        self.modulus = canonical_base_modulus(p, e)
        self.zero = 0
        self.one = 1
        if e > 1:
            self._build_tables()

    # --- construction helpers -------------------------------------------------

    def _slow_mul(self, a: int, b: int) -> int:
        p, e = self.p, self.e
        da, db = _digits(a, p, e), _digits(b, p, e)
        prod = [0] * (2 * e - 1)
        for i, ca in enumerate(da):
            if ca:
                for j, cb in enumerate(db):
                    prod[i + j] = (prod[i + j] + ca * cb) % p
        for k in range(2 * e - 2, e - 1, -1):
            c = prod[k]
            if c:
                for i in range(e):
                    prod[k - e + i] = (prod[k - e + i] - c * self.modulus[i]) % p
                prod[k] = 0
        return _undigits(prod[:e], p)

    def _slow_pow(self, a: int, k: int) -> int:
        result = 1
        while k:
            if k & 1:
                result = self._slow_mul(result, a)
            a = self._slow_mul(a, a)
            k >>= 1
        return result

    def _digit_add(self, a: int, b: int) -> int:
        p, e = self.p, self.e
        return _undigits([(x + y) % p for x, y in zip(_digits(a, p, e), _digits(b, p, e))], p)

    def _build_tables(self) -> None:
        group = self.q - 1
        for g in range(2, self.q):
            if order_from_factors(group, lambda k, g=g: self._slow_pow(g, k) == 1) == group:
                break
        self.generator = g
        self._exp = [0] * group
        self._log = [0] * self.q
        x = 1
        for i in range(group):
            self._exp[i] = x
            self._log[x] = i
            x = self._slow_mul(x, g)
        if self.p != 2:
            # zech[i] = log(1 + g^i), None where 1 + g^i = 0
            self._zech: list[int | None] = [None] * group
            for i in range(group):
                s = self._digit_add(1, self._exp[i])
                self._zech[i] = None if s == 0 else self._log[s]
            self._half = group // 2

    # --- arithmetic -----------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        """Sum of two elements.

        Args:
            a: Canonical encoding of the first summand.
            b: Canonical encoding of the second summand.

        Returns:
            Canonical encoding of a + b.
        """
        if self.e == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        if a == 0:
            return b
        if b == 0:
            return a
        la = self._log[a]
        z = self._zech[(self._log[b] - la) % (self.q - 1)]
        if z is None:
            return 0
        return self._exp[(la + z) % (self.q - 1)]

    def neg(self, a: int) -> int:
        """Additive inverse -a."""
        if self.e == 1:
            return (-a) % self.p
        if self.p == 2 or a == 0:
            return a
        return self._exp[(self._log[a] + self._half) % (self.q - 1)]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        """Product of two elements.

        Args:
            a: Canonical encoding of the first factor.
            b: Canonical encoding of the second factor.

        Returns:
            Canonical encoding of a * b; zero if either factor is zero.
        """
        if self.e == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def pow(self, a: int, k: int) -> int:
        """a raised to k.

        Args:
            a: Element to raise; must be nonzero when k is negative.
            k: Exponent, any integer.

        Returns:
            a^k, with 0^0 = 1.
        """
        if k < 0:
            return self.pow(self.inv(a), -k)
        if self.e == 1:
            return pow(a, k, self.p)
        if a == 0:
            return 1 if k == 0 else 0
        return self._exp[self._log[a] * k % (self.q - 1)]

    def inv(self, a: int) -> int:
        """Multiplicative inverse.

        Raises:
            DivisionByZeroError: a is zero.
        """
        if a == 0:
            raise DivisionByZeroError(f"inverse of zero in F_{self.q}")
        return self.pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def order(self, a: int) -> int:
        """Multiplicative order of a nonzero element."""
        if a == 0:
            raise InvalidArgumentError("zero has no multiplicative order")
        return order_from_factors(self.q - 1, lambda k: self.pow(a, k) == 1)

    def log_tables(self) -> tuple[list[int], list[int]]:
        """(exp, log) tables to the base self.generator; proper extensions only."""
        if self.e == 1:
            raise InvalidArgumentError(f"F_{self.p} keeps no log tables")
        return self._exp, self._log

    def coeffs(self, a: int) -> tuple[int, ...]:
        """Residue-polynomial coefficients of a, low degree first."""
        return tuple(_digits(a, self.p, self.e))

    def from_coeffs(self, coeffs) -> int:
        if len(coeffs) != self.e or any(not 0 <= c < self.p for c in coeffs):
            raise InvalidArgumentError(f"malformed coefficients {coeffs!r} for F_{self.q}")
        return _undigits(coeffs, self.p)

    def elements(self) -> range:
        """All q elements in encoding order."""
        return range(self.q)


class ExtField:
    """F_{q^2} = F_q[x]/(x^2 + c1 x + c0) over a BaseField."""

    def __init__(self, base: BaseField, modulus: tuple[int, int] | None = None):
        self.base = base
        self.q = base.q
        self.size = base.q**2
        self.modulus = modulus or self._canonical_modulus()
        self.zero = ExtElement(0, 0)
        self.one = ExtElement(1, 0)
        self.beta = ExtElement(0, 1)
        self._beta_q = self.pow(self.beta, self.q)

    def _is_irreducible(self, c0: int, c1: int) -> bool:
        F = self.base
        if F.p == 2:
            if c1 == 0:
                return False
            # x^2 + c1 x + c0 is irreducible iff Tr(c0 / c1^2) = 1
            z = F.div(c0, F.mul(c1, c1))
            trace, power = 0, z
            for _ in range(F.e):
                trace = F.add(trace, power)
                power = F.mul(power, power)
            return trace == 1
        disc = F.sub(F.mul(c1, c1), F.mul(4 % F.p, c0))
        return disc != 0 and F.pow(disc, (F.q - 1) // 2) != 1

    def _canonical_modulus(self) -> tuple[int, int]:
        for enc in range(self.size):
            c0, c1 = enc % self.q, enc // self.q
            if self._is_irreducible(c0, c1):
                return (c0, c1)
        raise InvalidArgumentError(f"no irreducible quadratic over F_{self.q}")

    def encode(self, x: ExtElement) -> int:
        return x.lo + x.hi * self.q

    def decode(self, k: int) -> ExtElement:
        return ExtElement(k % self.q, k // self.q)

    def embed(self, a: int) -> ExtElement:
        return ExtElement(a, 0)

    def add(self, x: ExtElement, y: ExtElement) -> ExtElement:
        """Coordinatewise sum."""
        F = self.base
        return ExtElement(F.add(x.lo, y.lo), F.add(x.hi, y.hi))

    def neg(self, x: ExtElement) -> ExtElement:
        return ExtElement(self.base.neg(x.lo), self.base.neg(x.hi))

    def sub(self, x: ExtElement, y: ExtElement) -> ExtElement:
        return self.add(x, self.neg(y))

    def mul(self, x: ExtElement, y: ExtElement) -> ExtElement:
        """Product reduced by the quadratic modulus.

        Args:
            x: First factor.
            y: Second factor.

        Returns:
            x * y as lo + hi*beta.
        """
        F = self.base
        c0, c1 = self.modulus
        t0 = F.mul(x.lo, y.lo)
        t1 = F.add(F.mul(x.lo, y.hi), F.mul(x.hi, y.lo))
        t2 = F.mul(x.hi, y.hi)
        # beta^2 = -c1 beta - c0
        return ExtElement(F.sub(t0, F.mul(c0, t2)), F.sub(t1, F.mul(c1, t2)))

    def pow(self, x: ExtElement, k: int) -> ExtElement:
        """Square-and-multiply power; negative k inverts first."""
        if k < 0:
            return self.pow(self.inv(x), -k)
        result = self.one
        while k:
            if k & 1:
                result = self.mul(result, x)
            x = self.mul(x, x)
            k >>= 1
        return result

    def inv(self, x: ExtElement) -> ExtElement:
        if x == self.zero:
            raise DivisionByZeroError(f"inverse of zero in F_{self.size}")
        return self.pow(x, self.size - 2)

    def div(self, x: ExtElement, y: ExtElement) -> ExtElement:
        return self.mul(x, self.inv(y))

    def order(self, x: ExtElement) -> int:
        if x == self.zero:
            raise InvalidArgumentError("zero has no multiplicative order")
        return order_from_factors(self.size - 1, lambda k: self.pow(x, k) == self.one)

    def frobenius(self, x: ExtElement) -> ExtElement:
        """x^q, computed as lo + hi * beta^q."""
        F = self.base
        bq = self._beta_q
        return ExtElement(F.add(x.lo, F.mul(x.hi, bq.lo)), F.mul(x.hi, bq.hi))

    def descend(self, x: ExtElement) -> int:
        """The base-field element equal to x.

        Raises:
            NotInBaseFieldError: x is not fixed by the Frobenius map.
        """
        if self.frobenius(x) != x:
            raise NotInBaseFieldError(f"{tuple(x)} is not in F_{self.q}")
        return x.lo

    def norm(self, x: ExtElement) -> int:
        """x^(q+1) as a base-field element."""
        return self.descend(self.mul(x, self.frobenius(x)))

    def trace(self, x: ExtElement) -> int:
        """x + x^q as a base-field element."""
        return self.descend(self.add(x, self.frobenius(x)))

    def is_generator(self, x: ExtElement) -> bool:
        return x != self.zero and self.order(x) == self.size - 1

    def elements(self):
        return (self.decode(k) for k in range(self.size))


@dataclass(frozen=True)
class FieldTower:
    """F_q inside F_{q^2} with generators alpha of F_{q^2}^* and theta = alpha^(q+1)."""

    p: int
    e: int
    base: BaseField = field(repr=False, compare=False)
    ext: ExtField = field(repr=False, compare=False)
    alpha: ExtElement
    theta: int

    @property
    def q(self) -> int:
        return self.base.q

    @property
    def base_modulus(self) -> tuple[int, ...]:
        return self.base.modulus

    @property
    def ext_modulus(self) -> tuple[int, int]:
        return self.ext.modulus


def build_tower(p: int, e: int = 1, alpha: ExtElement | None = None) -> FieldTower:
    """Build the canonical tower F_{p^e} < F_{p^2e}.

    alpha defaults to the smallest-encoding generator of F_{q^2}^*; an explicit
    generator may be passed to check that results do not depend on the choice.
    """
    if not isprime(p):
        raise InvalidArgumentError(f"{p} is not prime")
    if e < 1 or p**e > MAX_FIELD_SIZE:
        raise InputRangeError(f"q = {p}^{e} must satisfy 2 <= q <= {MAX_FIELD_SIZE}")
    base = BaseField(p, e)
    ext = ExtField(base)
    if alpha is None:
        alpha = next(x for x in ext.elements() if ext.is_generator(x))
    elif not ext.is_generator(alpha):
        raise InvalidArgumentError(f"{tuple(alpha)} does not generate F_{ext.size}^*")
    theta = ext.descend(ext.pow(alpha, base.q + 1))
    return FieldTower(p=p, e=e, base=base, ext=ext, alpha=alpha, theta=theta)


def element_order(x: int | ExtElement, tower: FieldTower) -> int:
    """Multiplicative order of a nonzero element at either level of the tower."""
    if isinstance(x, ExtElement):
        return tower.ext.order(x)
    return tower.base.order(x)


def frobenius(x: ExtElement, tower: FieldTower) -> ExtElement:
    """x^q in the extension of the tower."""
    return tower.ext.frobenius(x)


def descend(x: ExtElement, tower: FieldTower) -> int:
    """Base-field value of a Frobenius-fixed x."""
    return tower.ext.descend(x)

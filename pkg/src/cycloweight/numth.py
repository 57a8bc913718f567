"""Exact integer number theory: factorization, valuations, radical, phi."""

from math import gcd, prod

from sympy import divisors as _divisors
from sympy import factorint, isprime, totient
from sympy.ntheory import n_order

from .errors import InputRangeError, InvalidArgumentError

MAX_FACTOR_INPUT = 10**12

PrimeFactorization = tuple[tuple[int, int], ...]
"""Ascending (prime, exponent) pairs; the empty tuple factors 1."""


def _check_positive(name: str, value: int) -> None:
    if not isinstance(value, int) or value < 1:
        raise InputRangeError(f"{name} must be a positive integer, got {value!r}")


def factorize(m: int) -> PrimeFactorization:
    """Factor 1 <= m <= 10^12 into ascending (prime, exponent) pairs.

    sympy.factorint does trial division followed by Pollard rho, which is
    all desk-scale inputs ever need.
    """
    _check_positive("m", m)
    if m > MAX_FACTOR_INPUT:
        raise InputRangeError(f"m must be at most {MAX_FACTOR_INPUT}, got {m}")
    return tuple(sorted(factorint(m).items()))


def primes_of(m: int) -> tuple[int, ...]:
    """Distinct primes dividing m, ascending."""
    return tuple(p for p, _ in factorize(m))


def nu(p: int, m: int) -> int:
    """The p-adic valuation of m."""
    if not isprime(p):
        raise InvalidArgumentError(f"nu: {p} is not prime")
    _check_positive("m", m)
    k = 0
    while m % p == 0:
        m //= p
        k += 1
    return k


def radical(m: int) -> int:
    """Product of the distinct primes dividing m; radical(1) = 1."""
    return prod(primes_of(m))


def div_part(a: int, b: int) -> int:
    """a / gcd(a, b)."""
    _check_positive("a", a)
    _check_positive("b", b)
    return a // gcd(a, b)


def euler_phi(t: int) -> int:
    """Euler totient of t >= 1."""
    _check_positive("t", t)
    return int(totient(t))


def divisors(m: int) -> list[int]:
    """Positive divisors of m, ascending."""
    _check_positive("m", m)
    return [int(d) for d in _divisors(m)]


def multiplicative_order(a: int, n: int) -> int:
    """Order of a in (Z/nZ)^*; 1 for n = 1."""
    _check_positive("n", n)
    if n == 1:
        return 1
    if gcd(a, n) != 1:
        raise InvalidArgumentError(f"{a} is not a unit modulo {n}")
    return int(n_order(a, n))


def prime_power(q: int) -> tuple[int, int]:
    """Split a prime power q = p^e into (p, e)."""
    _check_positive("q", q)
    pairs = factorize(q)
    if len(pairs) != 1:
        raise InvalidArgumentError(f"q = {q} is not a prime power")
    return pairs[0]


def order_from_factors(group_order: int, is_identity) -> int:
    """Order of an element of a cyclic group of known order.

    `is_identity(k)` must report whether the element raised to k is the
    identity. The order is found by stripping prime factors of the group
    order while the power stays trivial.
    """
    order = group_order
    for p, _ in sorted(factorint(group_order).items()):
        while order % p == 0 and is_identity(order // p):
            order //= p
    return order

"""Closed-form weight enumerators of irreducible cyclic codes.

Binomial codes (check polynomial x^s - c) have A(z) = (1 + (q-1) z^(n/s))^s.
Trinomial codes (check polynomial x^(2t) - (a + a^q) x^t + a^(q+1)) have

    A(z) = (1 + 2^k (q-1) z^d + (q-1)(q+1-2^k) z^(n/t))^t,

with k = r - nu_2(u) and d = (n/t)(1 - 2^-k). Enumerators are stored in this
factored form and expanded on demand with exact integers.
"""

import math
import threading
from dataclasses import dataclass, field

from sympy import multinomial_coefficients

from .errors import (
    ChannelError,
    DegenerateDenominatorError,
    InconsistentParametersError,
    InvalidArgumentError,
)
from .factorizer import Binomial, CaseParameters, IrreducibleFactor
from .gfield import ExtElement, FieldTower
from .polyring import Poly, check_to_generator

CHANNEL_LABELS = {"binary": "binary symmetric", "qary": "q-ary symmetric"}


@dataclass
class WeightEnumerator:
    """(sum of base_terms)^outer_exponent, with a lazily filled expansion."""

    base_terms: tuple[tuple[int, int], ...]
    """(weight, count) pairs, weights strictly increasing, starting with (0, 1)."""

    outer_exponent: int

    _expanded: dict[int, int] | None = field(default=None, repr=False, compare=False)
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False, compare=False)

    def __post_init__(self):
        self.base_terms = tuple((int(w), int(c)) for w, c in self.base_terms)
        if not self.base_terms or self.base_terms[0] != (0, 1):
            raise InconsistentParametersError(
                f"enumerator must start with 1, got {self.base_terms}"
            )
        weights = [w for w, _ in self.base_terms]
        if any(a >= b for a, b in zip(weights, weights[1:])):
            raise InconsistentParametersError(f"weights not increasing: {weights}")
        if any(c < 1 for _, c in self.base_terms):
            raise InconsistentParametersError(f"nonpositive count in {self.base_terms}")
        if self.outer_exponent < 1:
            raise InconsistentParametersError(f"outer exponent {self.outer_exponent} < 1")

    @property
    def mass(self) -> int:
        """Total number of codewords, (sum of base counts)^t."""
        return sum(c for _, c in self.base_terms) ** self.outer_exponent

    @property
    def min_weight(self) -> int | None:
        positive = [w for w, c in self.base_terms if w > 0 and c > 0]
        return min(positive) if positive else None

    @property
    def expanded(self) -> dict[int, int] | None:
        return self._expanded

    def expand(self) -> dict[int, int]:
        """Weight -> count of the full expansion; computed once and cached."""
        cached = self._expanded
        if cached is not None:
            return cached
        with self._lock:
            if self._expanded is None:
                self._expanded = _multinomial_expand(self.base_terms, self.outer_exponent)
            return self._expanded

    def render(self) -> str:
        """Factored text form, e.g. '(1+120z^72+840z^96)^3'."""
        base = "+".join(_render_term(w, c) for w, c in self.base_terms)
        if self.outer_exponent == 1:
            return base
        return f"({base})^{self.outer_exponent}"


def _render_term(weight: int, count: int) -> str:
    if weight == 0:
        return str(count)
    coeff = "" if count == 1 else str(count)
    return coeff + ("z" if weight == 1 else f"z^{weight}")


def _multinomial_expand(base_terms, t: int) -> dict[int, int]:
    out: dict[int, int] = {}
    for exponents, coeff in multinomial_coefficients(len(base_terms), t).items():
        weight = 0
        count = int(coeff)
        for k, (w, c) in zip(exponents, base_terms):
            weight += k * w
            count *= c**k
        out[weight] = out.get(weight, 0) + count
    return dict(sorted(out.items()))


def expand(e: WeightEnumerator) -> dict[int, int]:
    return e.expand()


def weight_distribution_terms(dist: dict[int, int], n: int) -> list[tuple[int, int]]:
    """Nonzero (weight, count) pairs ascending by weight; weights must lie in [0, n]."""
    terms = sorted((w, c) for w, c in dist.items() if c)
    if terms and (terms[0][0] < 0 or terms[-1][0] > n):
        raise InconsistentParametersError(f"weights outside [0, {n}] in distribution")
    return terms


def channel_label(channel: str) -> str:
    """Display name of a channel model."""
    if channel not in CHANNEL_LABELS:
        raise ChannelError(f"unknown channel '{channel}'")
    return CHANNEL_LABELS[channel]


def enumerator_binomial(q: int, n: int, s: int) -> WeightEnumerator:
    """(1 + (q-1) z^(n/s))^s for the code with check polynomial x^s - c."""
    if s < 1 or n % s:
        raise InvalidArgumentError(f"binomial degree {s} does not divide n = {n}")
    return WeightEnumerator(((0, 1), (n // s, q - 1)), s)


def trinomial_min_distance(n: int, t: int, r: int, nu2u: int) -> int:
    """(n/t)(1 - 2^-(r - nu2u))."""
    if not 0 <= nu2u <= r - 2:
        raise InconsistentParametersError(f"nu_2(u) = {nu2u} outside [0, r-2] for r = {r}")
    block = t * 2 ** (r - nu2u)
    if n % block:
        raise InconsistentParametersError(f"t * 2^(r - nu_2(u)) = {block} does not divide n = {n}")
    return n // t - n // block


def enumerator_trinomial(q: int, n: int, t: int, r: int, nu2u: int) -> WeightEnumerator:
    d = trinomial_min_distance(n, t, r, nu2u)
    split = 2 ** (r - nu2u)
    low = split * (q - 1)
    high = (q - 1) * (q + 1 - split)
    if high < 0:
        raise InconsistentParametersError(
            f"2^(r - nu_2(u)) = {split} exceeds q + 1 = {q + 1}"
        )
    terms = [(0, 1), (d, low)]
    if high:
        terms.append((n // t, high))
    return WeightEnumerator(tuple(terms), t)


def lambda_set(a: ExtElement, r: int, nu2u: int, tower: FieldTower) -> set[int]:
    """{(a^i - a^(qi)) / (a^(i+1) - a^(q(i+1))) : 0 <= i <= 2^(r - nu2u) - 2}."""
    E = tower.ext
    if E.trace(a) == 0:
        raise InvalidArgumentError("a + a^q = 0: the factor is a binomial")
    if not 0 <= nu2u <= r - 2:
        raise InconsistentParametersError(f"nu_2(u) = {nu2u} outside [0, r-2] for r = {r}")

    def anti(i: int) -> ExtElement:
        power = E.pow(a, i)
        return E.sub(power, E.frobenius(power))

    values = set()
    for i in range(2 ** (r - nu2u) - 1):
        den = anti(i + 1)
        if den == E.zero:
            raise DegenerateDenominatorError(f"a^{i + 1} = a^(q*{i + 1}) for a = {tuple(a)}")
        values.add(E.descend(E.div(anti(i), den)))
    return values


def pair_weight_count(q: int, r: int, nu2u: int) -> int:
    """Number of (mu, lambda) in F_q^2 with weight(mu g + lambda x^t g) = d."""
    return 2 ** (r - nu2u) * (q - 1)


def undetected_error_probability(
    dist: dict[int, int], q: int, n: int, p: float, channel: str = "qary"
) -> float:
    """sum_{i>=1} A_i (p/(q-1))^i (1-p)^(n-i).

    For q = 2 this is the binary symmetric channel formula; for larger q each
    corrupted symbol is spread evenly over the q - 1 wrong values.
    """
    if not 0.0 <= p <= 1.0:
        raise ChannelError(f"probability p = {p} outside [0, 1]")
    if channel not in CHANNEL_LABELS:
        raise ChannelError(f"unknown channel '{channel}'")
    if channel == "binary" and q != 2:
        raise ChannelError(f"binary channel requires q = 2, got q = {q}")
    symbol = p / (q - 1)
    return math.fsum(
        count * symbol**w * (1.0 - p) ** (n - w) for w, count in dist.items() if w > 0
    )


@dataclass
class CodeRecord:
    """One irreducible cyclic [q; n, k, d] code."""

    q: int
    n: int
    k: int
    d: int
    check_poly: Poly
    generator_poly: Poly
    factor: IrreducibleFactor
    enumerator: WeightEnumerator
    r: int | None = None

    @property
    def family(self) -> str:
        return self.factor.family

    @property
    def nu2u(self) -> int | None:
        return self.factor.nu2u if self.family == "trinomial" else None

    @property
    def label(self) -> str:
        return f"[{self.q};{self.n},{self.k},{self.d}]"

    @property
    def weight_divisor(self) -> int:
        """Every nonzero weight is a multiple of this."""
        if self.family == "binomial":
            return self.n // self.factor.t
        return self.n // (self.factor.t * 2 ** (self.r - self.nu2u))


def build_code_record(
    factor: IrreducibleFactor, params: CaseParameters, tower: FieldTower
) -> CodeRecord:
    """Bundle one factor with its generator, dimension, distance and enumerator.

    Args:
        factor: Irreducible factor of x^n - 1, used as the check polynomial.
        params: Case parameters of (n, q).
        tower: Field tower the factor was built in.

    Returns:
        The CodeRecord of the code with check polynomial factor.poly.

    Raises:
        InconsistentParametersError: the enumerator disagrees with the distance
            formula or with q^k.
    """
    n, q = params.n, params.q
    h = factor.poly
    g = check_to_generator(n, h)
    if isinstance(factor.kind, Binomial):
        s = factor.kind.degree
        enumerator = enumerator_binomial(q, n, s)
        formula_d = n // s
    else:
        t = factor.kind.half_degree
        enumerator = enumerator_trinomial(q, n, t, params.r, factor.nu2u)
        formula_d = trinomial_min_distance(n, t, params.r, factor.nu2u)
    d = enumerator.min_weight
    if d != formula_d:
        raise InconsistentParametersError(
            f"enumerator minimum weight {d} differs from formula distance {formula_d}"
        )
    if q ** h.degree != enumerator.mass:
        raise InconsistentParametersError(
            f"enumerator mass {enumerator.mass} is not q^k = {q}^{h.degree}"
        )
    return CodeRecord(
        q=q,
        n=n,
        k=h.degree,
        d=d,
        check_poly=h,
        generator_poly=g,
        factor=factor,
        enumerator=enumerator,
        r=params.r,
    )

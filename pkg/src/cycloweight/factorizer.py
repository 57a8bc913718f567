"""Closed-form factorization of x^n - 1 over F_q when rad(n) | q - 1.

Two regimes:

* binomial-only (8 does not divide n, or q = 1 mod 4): every irreducible
  factor is a binomial x^t - theta^(u*l) with t | m;
* mixed (8 | n and q = 3 mod 4): binomials x^t - theta^(w*l) for odd t | m',
  plus quadratics in x^t, x^(2t) - (a + a^q) x^t + a^(q+1) with a = alpha^(u*l'),
  one per conjugate pair u in S_t. When a + a^q = 0 the quadratic is the
  binomial x^(2t) + a^(q+1) and is reported as such.

coset_oracle factors x^n - 1 independently through q-cyclotomic cosets and
works for any n coprime to q.
"""

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from itertools import product as cartesian
from math import gcd

from .errors import (
    CaseMismatchError,
    InconsistentParametersError,
    InvalidArgumentError,
    InvalidLengthError,
    OracleOutOfRangeError,
    OutOfRegimeError,
)
from .gfield import BaseField, ExtElement, FieldTower
from .numth import (
    div_part,
    divisors,
    euler_phi,
    multiplicative_order,
    nu,
    prime_power,
    primes_of,
    radical,
)
from .polyring import (
    Poly,
    coefficient_key,
    dense_add,
    dense_gcd,
    dense_mulmod,
    dense_powmod,
    dense_sub,
    dense_trim,
)


class Case(str, Enum):
    BINOMIAL_ONLY = "binomial-only"
    MIXED = "mixed"


@dataclass(frozen=True)
class CaseParameters:
    """Integers derived from (n, q) that drive both factorization lemmas."""

    n: int
    q: int
    case: Case
    m: int
    """n / gcd(n, q - 1)."""
    l: int  # noqa: E741
    """(q - 1) / gcd(n, q - 1)."""
    m_prime: int
    """n / gcd(n, q^2 - 1)."""
    l_prime: int
    """(q^2 - 1) / gcd(n, q^2 - 1)."""
    r: int | None
    """min(nu_2(n/2), nu_2(q + 1)); only defined in the mixed case."""
    gcd_q1: int
    gcd_q2: int


@dataclass(frozen=True)
class Binomial:
    """h = x^degree - constant."""

    degree: int
    constant: int


@dataclass(frozen=True)
class Trinomial:
    """h = x^(2t) - (a + a^q) x^t + a^(q+1)."""

    half_degree: int
    a: ExtElement


@dataclass(frozen=True)
class IrreducibleFactor:
    kind: Binomial | Trinomial
    poly: Poly = field(compare=False)
    u: int
    """Provenance index; depends on the choice of alpha."""
    nu2u: int | None = None
    """nu_2(u) for factors produced from S_t."""

    @property
    def degree(self) -> int:
        return self.poly.degree

    @property
    def family(self) -> str:
        return "binomial" if isinstance(self.kind, Binomial) else "trinomial"

    @property
    def t(self) -> int:
        """Binomial degree s, or the half degree t of a trinomial."""
        if isinstance(self.kind, Binomial):
            return self.kind.degree
        return self.kind.half_degree


def case_parameters(n: int, q: int) -> CaseParameters:
    """Derive m, l, m', l', r and the case tag; reject (n, q) outside the regime."""
    if n < 1:
        raise InvalidArgumentError(f"length n must be positive, got {n}")
    if gcd(n, q) != 1:
        raise InvalidLengthError(f"gcd(n,q) ≠ 1: gcd({n},{q}) = {gcd(n, q)}")
    prime_power(q)
    if (q - 1) % radical(n) != 0:
        raise OutOfRegimeError(f"rad(n) ∤ q−1: rad({n}) = {radical(n)} does not divide {q - 1}")
    g1 = gcd(n, q - 1)
    g2 = gcd(n, q * q - 1)
    mixed = n % 8 == 0 and q % 4 == 3
    return CaseParameters(
        n=n,
        q=q,
        case=Case.MIXED if mixed else Case.BINOMIAL_ONLY,
        m=div_part(n, q - 1),
        l=div_part(q - 1, n),
        m_prime=div_part(n, q * q - 1),
        l_prime=div_part(q * q - 1, n),
        r=min(nu(2, n // 2), nu(2, q + 1)) if mixed else None,
        gcd_q1=g1,
        gcd_q2=g2,
    )


def _require_case(params: CaseParameters, case: Case) -> None:
    if params.case is not case:
        raise CaseMismatchError(
            f"(n={params.n}, q={params.q}) is {params.case.value}, not {case.value}"
        )


def _binomial(tower: FieldTower, degree: int, constant: int, u: int, nu2u=None):
    F = tower.base
    poly = Poly(F, {degree: 1, 0: F.neg(constant)})
    return IrreducibleFactor(Binomial(degree, constant), poly, u, nu2u)


def sort_factors(factors) -> list[IrreducibleFactor]:
    """Factors by degree, then by coefficients from the top down."""
    return sorted(factors, key=lambda f: coefficient_key(f.poly))


def factor_binomial_case(params: CaseParameters, tower: FieldTower) -> list[IrreducibleFactor]:
    """Product over t | m and 1 <= u <= gcd(n, q-1), gcd(u, t) = 1, of x^t - theta^(u*l)."""
    _require_case(params, Case.BINOMIAL_ONLY)
    F = tower.base
    factors = []
    for t in divisors(params.m):
        for u in range(1, params.gcd_q1 + 1):
            if gcd(u, t) == 1:
                factors.append(_binomial(tower, t, F.pow(tower.theta, u * params.l), u))
    return sort_factors(factors)


def s_t_set(t: int, params: CaseParameters) -> set[int]:
    """u in [1, gcd(n, q^2-1)] coprime to t, not divisible by 2^r, with u < (q*u mod N)."""
    _require_case(params, Case.MIXED)
    if params.m_prime % t != 0:
        raise InvalidArgumentError(f"t = {t} does not divide m' = {params.m_prime}")
    big_n = params.gcd_q2
    step = 2**params.r
    return {
        u
        for u in range(1, big_n + 1)
        if gcd(u, t) == 1 and u % step != 0 and u < (params.q * u) % big_n
    }


def factor_mixed_case(params: CaseParameters, tower: FieldTower) -> list[IrreducibleFactor]:
    """Irreducible factors of x^n - 1 when 8 | n and q = 3 mod 4.

    Binomials x^t - theta^(w*l) come from the odd divisors t of m'. Every
    u in S_t gives a = alpha^(u*l') and the quadratic in x^t with roots a
    and a^q.

    Args:
        params: Case parameters of a mixed (n, q).
        tower: Field tower whose alpha and theta fix the factor constants.

    Returns:
        Factors sorted by sort_factors.

    Raises:
        CaseMismatchError: params are binomial-only.
        InconsistentParametersError: some u has nu_2(u) > r - 2.
    """
    _require_case(params, Case.MIXED)
    F, E = tower.base, tower.ext
    factors = []
    for t in divisors(params.m_prime):
        if t % 2 == 0:
            continue
        for w in range(1, params.gcd_q1 + 1):
            if gcd(w, t) == 1:
                factors.append(_binomial(tower, t, F.pow(tower.theta, w * params.l), w))

    for t in divisors(params.m_prime):
        for u in sorted(s_t_set(t, params)):
            a = E.pow(tower.alpha, u * params.l_prime)
            middle = E.trace(a)
            norm = E.norm(a)
            v = nu(2, u)
            if middle == 0:
                factors.append(_binomial(tower, 2 * t, F.neg(norm), u, v))
                continue
            if v > params.r - 2:
                raise InconsistentParametersError(
                    f"trinomial from u = {u} has nu_2(u) = {v} > r - 2 = {params.r - 2}"
                )
            poly = Poly(F, {2 * t: 1, t: F.neg(middle), 0: norm})
            factors.append(IrreducibleFactor(Trinomial(t, a), poly, u, v))
    return sort_factors(factors)


def factor(params: CaseParameters, tower: FieldTower) -> list[IrreducibleFactor]:
    """Closed-form factorization for whichever case params fall in."""
    if params.case is Case.MIXED:
        return factor_mixed_case(params, tower)
    return factor_binomial_case(params, tower)


# --- predicted counts -----------------------------------------------------------


@dataclass(frozen=True)
class CountPrediction:
    """Closed-form count of irreducible factors of one degree and class.

    `formula` is the published closed-form value; `expected` is the
    number of factors the product formula actually emits (one per conjugate
    pair). They differ for the per-nu_2 rows with odd t.
    """

    degree: int
    klass: str
    formula: int
    expected: int
    source: str


def _phi_share(t: int, g: int) -> int:
    return euler_phi(t) * g // t


def predicted_counts(params: CaseParameters) -> list[CountPrediction]:
    """Number of irreducible factors per (degree, class) from the product formulas.

    Args:
        params: Case parameters of (n, q).

    Returns:
        Rows for every degree the formulas produce; the mixed case adds one
        row per nu_2 value of the trinomials.
    """
    g = params.gcd_q1
    rows = []
    if params.case is Case.BINOMIAL_ONLY:
        for t in divisors(params.m):
            c = _phi_share(t, g)
            rows.append(CountPrediction(t, "binomial", c, c, "binomial-product"))
        return rows

    r = params.r
    for t in divisors(params.m_prime):
        share = _phi_share(t, g)
        if t % 2:
            rows.append(CountPrediction(t, "binomial", share, share, "mixed-product"))
            rows.append(CountPrediction(2 * t, "binomial", share // 2, share // 2, "mixed-product"))
            total = share * (2 ** (r - 1) - 1)
            rows.append(CountPrediction(2 * t, "trinomial", total, total, "mixed-product"))
            for v in range(r - 1):
                split = 2 ** (r - 1 - v) * share
                rows.append(
                    CountPrediction(2 * t, f"trinomial[nu2={v}]", split, split // 2, "nu2-split")
                )
        else:
            total = share * 2 ** (r - 1)
            rows.append(CountPrediction(2 * t, "trinomial", total, total, "mixed-product"))
            rows.append(CountPrediction(2 * t, "trinomial[nu2=0]", total, total, "nu2-split"))
    return rows


def measured_counts(factors: list[IrreducibleFactor]) -> Counter:
    """Counts keyed like predicted_counts rows: (degree, class)."""
    counts: Counter = Counter()
    for f in factors:
        counts[(f.degree, f.family)] += 1
        if f.family == "trinomial":
            counts[(f.degree, f"trinomial[nu2={f.nu2u}]")] += 1
    return counts


# --- cyclotomic-coset oracle ----------------------------------------------------


def cyclotomic_cosets(n: int, q: int) -> list[list[int]]:
    """q-cyclotomic cosets modulo n, each listed from its smallest member."""
    seen = set()
    cosets = []
    for i in range(n):
        if i in seen:
            continue
        coset = []
        j = i
        while j not in coset:
            coset.append(j)
            j = j * q % n
        seen.update(coset)
        cosets.append(coset)
    return cosets


def _is_irreducible_dense(f: list[int], F: BaseField) -> bool:
    """Rabin's test for a monic f over F_q."""
    s = len(f) - 1
    if s == 1:
        return True
    x = [0, 1]
    # frob[j] = x^(q^j) mod f
    frob = [x]
    for _ in range(s):
        frob.append(dense_powmod(frob[-1], F.q, f, F))
    if frob[s] != x:
        return False
    for ell in primes_of(s):
        g = dense_gcd(dense_sub(frob[s // ell], x, F), f, F)
        if len(g) > 1:
            return False
    return True


def canonical_irreducible(s: int, F: BaseField) -> list[int]:
    """Smallest-encoding monic irreducible of degree s over F_q, low degree first."""
    if s == 1:
        return [0, 1]
    for low in cartesian(range(F.q), repeat=s):
        low = low[::-1]
        if low[0] == 0:
            continue
        f = list(low) + [1]
        if _is_irreducible_dense(f, F):
            return f
    raise InvalidArgumentError(f"no irreducible polynomial of degree {s} over F_{F.q}")


def _root_of_unity(n: int, s: int, mod: list[int], F: BaseField) -> list[int]:
    big = F.q**s - 1
    cofactor = big // n
    one = [1]
    for digits in cartesian(range(F.q), repeat=s):
        z = dense_trim(list(digits[::-1]))
        if not z:
            continue
        y = dense_powmod(z, cofactor, mod, F)
        if all(dense_powmod(y, n // ell, mod, F) != one for ell in primes_of(n)):
            return y
    raise InconsistentParametersError(f"no element of order {n} in F_{F.q}^{s}")


def coset_oracle(n: int, q: int, degree_cap: int = 12) -> list[Poly]:
    """Monic irreducible factors of x^n - 1 over F_q from q-cyclotomic cosets.

    Each coset C contributes prod_{i in C} (x - rho^i), computed in an ad-hoc
    F_{q^s} = F_q[y]/(f) with s = ord_n(q) and f the canonical irreducible.
    """
    p, e = prime_power(q)
    if gcd(n, q) != 1:
        raise InvalidLengthError(f"gcd(n,q) ≠ 1: gcd({n},{q}) = {gcd(n, q)}")
    s = multiplicative_order(q, n)
    if s > degree_cap:
        raise OracleOutOfRangeError(
            f"splitting field F_{q}^{s} of x^{n} - 1 exceeds degree cap {degree_cap}"
        )
    F = BaseField(p, e)
    mod = canonical_irreducible(s, F)
    if n == 1:
        rho = [1]
    else:
        rho = _root_of_unity(n, s, mod, F)
    powers = [[1]]
    for _ in range(1, n):
        powers.append(dense_mulmod(powers[-1], rho, mod, F))

    factors = []
    for coset in cyclotomic_cosets(n, q):
        # coefficients (low degree first) are elements of F_{q^s}
        poly: list[list[int]] = [[1]]
        for i in coset:
            root = dense_sub([], powers[i], F)
            shifted = [[]] + poly
            scaled = [dense_mulmod(c, root, mod, F) for c in poly] + [[]]
            poly = [dense_add(a, b, F) for a, b in zip(shifted, scaled)]
        coeffs = []
        for c in poly:
            if len(c) > 1:
                raise InconsistentParametersError(
                    f"coset {coset} gives a factor outside F_{q}[x]"
                )
            coeffs.append(c[0] if c else 0)
        factors.append(Poly.from_dense(F, coeffs))
    return sorted(factors, key=coefficient_key)

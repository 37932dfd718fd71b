"""Interpolated weighted multiset sums.

The central object is the polynomial

    theta_{n;k}(t) = sum over weakly decreasing k-tuples m of {1..n}
                     of w(m) * t**sigma(m),

where w multiplies one positive rational weight a_j per entry and sigma
counts adjacent equal pairs.  At t=0 only strictly decreasing tuples
survive (elementary symmetric functions), at t=1 everything does (complete
homogeneous ones); for reciprocal weights these endpoints are truncated
multiple zeta values and their starred variants.

Five structurally different constructions of the same polynomial live here:

  theta_product      coefficient extraction from a truncated series product
  theta_newton       Newton-style log-derivative recurrence on power sums
  theta_bell         complete Bell polynomial of scaled power sums
  theta_det          scaled determinant of a banded power-sum matrix
  theta_convolution  binomial convolution of the t=0 and t=1 endpoints

They must agree coefficientwise; the redundancy is the testing strategy.
A sixth route (theta_partial_fraction) evaluates at a fixed t by partial
fractions when the weights are pairwise distinct, and a seventh
(theta_ordered_partitions) sums truncated multiple zeta values over all
compositions of k.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact import (
    Poly,
    Series,
    bell_complete,
    binomial,
    det_exact,
    gen_binomial,
    zeta_even_coeff,
)
from .oracle import compositions
from .weights import (
    WeightSequence,
    ZetaWeights,
    has_distinct_terms,
    power_sum,
    weight_at,
)

__all__ = [
    "ThetaPoly",
    "GradedValue",
    "theta_product",
    "theta_newton",
    "theta_newton_ladder",
    "theta_bell",
    "theta_det",
    "theta_convolution",
    "theta_partial_fraction",
    "theta_ordered_partitions",
    "theta_multi_eval",
    "theta_qt",
    "multiple_harmonic",
    "zeta_star_ones",
    "zeta_t_ones",
    "prodinger_half",
    "elementary_symmetric",
    "complete_homogeneous",
    "partition_series",
    "theta_infinite_zeta",
    "closed_form_ones_bivariate",
    "ALGORITHMS",
]


@dataclass(frozen=True)
class ThetaPoly:
    """A computed theta_{n;k} polynomial together with its parameters."""

    n: int
    k: int
    weights: WeightSequence
    poly: Poly

    def at(self, t0) -> Fraction:
        return self.poly(Fraction(t0))

    def total(self) -> Fraction:
        """Value at t=1: the weighted count of all multisets."""
        return self.poly(Fraction(1))

    @property
    def coefficients(self) -> tuple:
        return self.poly.coeffs


def _validate_nk(n: int, k: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"needs n >= 1, got {n!r}")
    if not isinstance(k, int) or k < 0:
        raise ValueError(f"needs k >= 0, got {k!r}")


def _alpha_polys(seq: WeightSequence, n: int, kmax: int) -> list:
    """alpha_j(t) = (sum_m a_m^j) * (t^j - (t-1)^j) for j = 1..kmax.

    Index 0 is unused.  Expanding the binomial, the coefficient of t^i is
    C(j, i) * (-1)^(j-i+1) for i < j; the t^j terms cancel so the degree
    is j - 1.
    """
    out: list = [None]
    for j in range(1, kmax + 1):
        aj = power_sum(seq, n, j)
        coeffs = [aj * binomial(j, i) * ((-1) ** (j - i + 1)) for i in range(j)]
        out.append(Poly(coeffs))
    return out


def theta_newton_ladder(seq: WeightSequence, n: int, k: int) -> list[Poly]:
    """All of theta_{n;0}, ..., theta_{n;k} from the power-sum recurrence.

    The log derivative of the product generating function gives

        i * theta_i = sum_{j=1}^{i} alpha_j(t) * theta_{i-j}.
    """
    _validate_nk(n, k)
    alpha = _alpha_polys(seq, n, k)
    ladder = [Poly.one()]
    for i in range(1, k + 1):
        acc = Poly.zero()
        for j in range(1, i + 1):
            acc = acc + alpha[j] * ladder[i - j]
        ladder.append(acc * Fraction(1, i))
    return ladder


def theta_newton(seq: WeightSequence, n: int, k: int) -> ThetaPoly:
    """theta via the power-sum recurrence; the default algorithm."""
    return ThetaPoly(n, k, seq, theta_newton_ladder(seq, n, k)[k])


def theta_product(seq: WeightSequence, n: int, k: int) -> ThetaPoly:
    """theta as [z^k] of the product of per-weight factors.

    Factor m contributes 1 + sum_{j=1..k} a_m^j t^(j-1) z^j: a run of j
    copies of value m carries weight a_m^j and j-1 adjacent equal pairs.
    """
    _validate_nk(n, k)
    acc = Series.one(k)
    for m in range(1, n + 1):
        a = weight_at(seq, m)
        coeffs = [Poly.one()]
        apow = Fraction(1)
        for j in range(1, k + 1):
            apow *= a
            coeffs.append(Poly.monomial(apow, j - 1))
        acc = acc * Series(k, coeffs)
    return ThetaPoly(n, k, seq, acc.coefficient(k))


def theta_bell(seq: WeightSequence, n: int, k: int) -> ThetaPoly:
    """theta as a scaled complete Bell polynomial.

    Exponentiating the logarithm of the generating function yields
    theta_k = B_k(x_1, ..., x_k) / k! with x_j = (j-1)! * alpha_j(t).
    """
    _validate_nk(n, k)
    alpha = _alpha_polys(seq, n, k)
    xs = [math.factorial(j - 1) * alpha[j] for j in range(1, k + 1)]
    bk = bell_complete(xs, k)
    poly = bk * Fraction(1, math.factorial(k)) if isinstance(bk, Poly) else Poly.constant(Fraction(bk))
    return ThetaPoly(n, k, seq, poly)


def theta_det(seq: WeightSequence, n: int, k: int) -> ThetaPoly:
    """theta as det(M)/k! for the banded alpha matrix.

    M has alpha_{i-j+1}(t) on and below the diagonal and -1, -2, ...,
    -(k-1) on the superdiagonal.
    """
    _validate_nk(n, k)
    if k == 0:
        return ThetaPoly(n, k, seq, Poly.one())
    alpha = _alpha_polys(seq, n, k)
    rows = []
    for i in range(k):
        row = []
        for j in range(k):
            if j <= i:
                row.append(alpha[i - j + 1])
            elif j == i + 1:
                row.append(Poly.constant(Fraction(-(i + 1))))
            else:
                row.append(Poly.zero())
        rows.append(row)
    det = det_exact(rows)
    return ThetaPoly(n, k, seq, det * Fraction(1, math.factorial(k)))


def elementary_symmetric(seq: WeightSequence, n: int, k: int) -> list[Fraction]:
    """e_0, ..., e_k of a_1..a_n (strictly decreasing tuples; theta at t=0)."""
    if n < 0 or k < 0:
        raise ValueError("elementary_symmetric needs n, k >= 0")
    es = [Fraction(0)] * (k + 1)
    es[0] = Fraction(1)
    for m in range(1, n + 1):
        a = weight_at(seq, m)
        for j in range(min(m, k), 0, -1):
            es[j] += a * es[j - 1]
    return es


def complete_homogeneous(seq: WeightSequence, n: int, k: int) -> list[Fraction]:
    """h_0, ..., h_k of a_1..a_n (all multisets; theta at t=1)."""
    if n < 0 or k < 0:
        raise ValueError("complete_homogeneous needs n, k >= 0")
    hs = [Fraction(0)] * (k + 1)
    hs[0] = Fraction(1)
    for m in range(1, n + 1):
        a = weight_at(seq, m)
        for j in range(1, k + 1):
            hs[j] += a * hs[j - 1]
    return hs


def theta_convolution(seq: WeightSequence, n: int, k: int) -> ThetaPoly:
    """theta as a binomial convolution of its two endpoints:

        theta_{n;k}(t) = sum_{j=0}^{k} t^j h_j (1-t)^(k-j) e_{k-j}.
    """
    _validate_nk(n, k)
    es = elementary_symmetric(seq, n, k)
    hs = complete_homogeneous(seq, n, k)
    one_minus_t = Poly((Fraction(1), Fraction(-1)))
    powers = [Poly.one()]
    for _ in range(k):
        powers.append(powers[-1] * one_minus_t)
    acc = Poly.zero()
    for j in range(k + 1):
        if hs[j] and es[k - j]:
            acc = acc + Poly.monomial(hs[j] * es[k - j], j) * powers[k - j]
    return ThetaPoly(n, k, seq, acc)


def theta_partial_fraction(seq: WeightSequence, n: int, k: int, t0) -> Fraction:
    """theta_{n;k}(t0) by partial fractions, for pairwise distinct weights.

    Expanding the product generating function over its simple poles gives

      theta(t0) = (-1)^(n-1) * sum_{j=1}^{n}
                  prod_m ((1-t0)/(a_j t0) + 1/a_m)
                  / prod_{l != j} (1/a_j - 1/a_l)
                  * a_j^(k+1) * t0^k          for k >= 1,

    valid for any rational t0 != 0.  k=0 is the empty product, 1.
    """
    _validate_nk(n, k)
    t0 = Fraction(t0)
    if t0 == 0:
        raise ValueError("theta_partial_fraction needs t0 != 0")
    if k == 0:
        return Fraction(1)
    if not has_distinct_terms(seq, n):
        raise ValueError("theta_partial_fraction needs pairwise distinct weights")
    a = [None] + [weight_at(seq, m) for m in range(1, n + 1)]
    c = (1 - t0) / t0
    total = Fraction(0)
    for j in range(1, n + 1):
        num = Fraction(1)
        for m in range(1, n + 1):
            num *= c / a[j] + 1 / a[m]
        den = Fraction(1)
        for l in range(1, n + 1):
            if l != j:
                den *= 1 / a[j] - 1 / a[l]
        total += num / den * a[j] ** (k + 1) * t0**k
    return (-1) ** (n - 1) * total


def multiple_harmonic(n: int, indices: Sequence[int]) -> Fraction:
    """Truncated multiple zeta value with strictly decreasing summation:

        zeta_n(i_1, ..., i_d) = sum_{n >= l_1 > ... > l_d >= 1}
                                prod_u 1 / l_u^{i_u}.

    Empty index list gives 1; depth exceeding n gives 0.
    """
    if n < 0:
        raise ValueError("multiple_harmonic needs n >= 0")
    idx = tuple(indices)
    if any(not isinstance(i, int) or i < 1 for i in idx):
        raise ValueError("multiple_harmonic indices must be integers >= 1")
    if not idx:
        return Fraction(1)
    if len(idx) > n:
        return Fraction(0)
    # suffix[l] = inner sum over chains below l, built innermost index first
    suffix = [Fraction(1)] * (n + 1)
    for s in reversed(idx):
        nxt = [Fraction(0)] * (n + 1)
        for l in range(1, n + 1):
            nxt[l] = nxt[l - 1] + Fraction(1, l**s) * suffix[l - 1]
        suffix = nxt
    return suffix[n]


def zeta_star_ones(n: int, k: int) -> Fraction:
    """Star variant with all-ones indices: the t=1 endpoint for 1/m weights.

    Equals h_k(1, 1/2, ..., 1/n), the weakly decreasing analogue of
    multiple_harmonic(n, (1,)*k).
    """
    if n < 0 or k < 0:
        raise ValueError("zeta_star_ones needs n, k >= 0")
    hs = [Fraction(0)] * (k + 1)
    hs[0] = Fraction(1)
    for m in range(1, n + 1):
        a = Fraction(1, m)
        for j in range(1, k + 1):
            hs[j] += a * hs[j - 1]
    return hs[k]


def zeta_t_ones(n: int, k: int, t0) -> Fraction:
    """theta at t0 for reciprocal weights a_m = 1/m, as a single binomial sum.

    Specializing the partial fraction form to a_j = 1/j and collapsing the
    products into binomials gives, for k >= 1,

        sum_{j=1}^{n} (-1)^(j-1) C(n, j) C(n + (1-t0)/t0 * j, n) t0^k / j^k .

    At t0=1 this is the classical alternating single sum for the star value,
    and at t0=1/2 the symmetric C(n+j, j) C(n, j) sum scaled by 2^-k.
    """
    _validate_nk(n, k)
    t0 = Fraction(t0)
    if t0 == 0:
        raise ValueError("zeta_t_ones needs t0 != 0")
    if k == 0:
        return Fraction(1)
    c = (1 - t0) / t0
    total = Fraction(0)
    tpow = t0**k
    for j in range(1, n + 1):
        term = (
            Fraction(binomial(n, j))
            * gen_binomial(n + c * j, n)
            * tpow
            / Fraction(j**k)
        )
        total += term if j % 2 else -term
    return total


def prodinger_half(n: int, k: int) -> Fraction:
    """The t=1/2 value for reciprocal weights as an integer-binomial sum:

        sum_{j=1}^{n} (-1)^(j-1) C(n,j) C(n+j,j) / (2^k j^k),   k >= 1.

    Independent of zeta_t_ones (no generalized binomials), so the two
    cross-check each other.
    """
    _validate_nk(n, k)
    if k == 0:
        raise ValueError("prodinger_half needs k >= 1")
    total = Fraction(0)
    for j in range(1, n + 1):
        term = Fraction(binomial(n, j) * binomial(n + j, j), 2**k * j**k)
        total += term if j % 2 else -term
    return total


def theta_ordered_partitions(m: int, n: int, k: int) -> ThetaPoly:
    """theta for reciprocal-power weights a_j = 1/j^m, summed shape by shape.

    Multisets grouped by shape contribute one truncated multiple zeta value
    per composition of k:

        theta_{n;k}(t) = sum over compositions p of k
                         zeta_n(m*p) * t^(k - length(p)),

    where the first part of p is the multiplicity of the largest value.
    """
    if not isinstance(m, int) or m < 1:
        raise ValueError("theta_ordered_partitions needs an integer m >= 1")
    _validate_nk(n, k)
    coeffs = [Fraction(0)] * max(k, 1)
    if k == 0:
        coeffs[0] = Fraction(1)
    else:
        for p in compositions(k):
            v = multiple_harmonic(n, tuple(m * r for r in p))
            if v:
                coeffs[k - len(p)] += v
    return ThetaPoly(n, k, ZetaWeights(m), Poly(coeffs))


def theta_multi_eval(seq: WeightSequence, n: int, k: int, tvec: Sequence) -> Fraction:
    """Value of the refined sum with one interpolation variable per weight.

    Each multiset contributes w(m) * prod_i t_i^(adjacent equal pairs of
    value i); the per-value factor only changes factor m of the series
    product, so a scalar truncated convolution suffices.
    """
    _validate_nk(n, k)
    ts = [Fraction(t) for t in tvec]
    if len(ts) != n:
        raise ValueError(f"tvec needs one entry per weight index (expected {n})")
    acc = [Fraction(0)] * (k + 1)
    acc[0] = Fraction(1)
    for m in range(1, n + 1):
        a = weight_at(seq, m)
        tm = ts[m - 1]
        fac = [Fraction(1)]
        coef = a
        for j in range(1, k + 1):
            fac.append(coef)  # a^j * t_m^(j-1)
            coef *= a * tm
        new = [Fraction(0)] * (k + 1)
        for i, c in enumerate(acc):
            if not c:
                continue
            for j in range(0, k + 1 - i):
                if fac[j]:
                    new[i + j] += c * fac[j]
        acc = new
    return acc[k]


def theta_qt(seq: WeightSequence, n: int, k: int, q) -> ThetaPoly:
    """theta with every weight a_m scaled by q**m, as a polynomial in t.

    Tracks the size statistic p(m) = sum of entries through the substitution
    a_m -> a_m q^m; built directly from the scaled factors rather than
    through a wrapped weight sequence so the two routes cross-check.
    """
    _validate_nk(n, k)
    q = Fraction(q)
    if q <= 0:
        raise ValueError("theta_qt needs q > 0")
    acc = Series.one(k)
    qpow = Fraction(1)
    for m in range(1, n + 1):
        qpow *= q
        b = weight_at(seq, m) * qpow
        coeffs = [Poly.one()]
        bpow = Fraction(1)
        for j in range(1, k + 1):
            bpow *= b
            coeffs.append(Poly.monomial(bpow, j - 1))
        acc = acc * Series(k, coeffs)
    return ThetaPoly(n, k, seq, acc.coefficient(k))


def partition_series(n: int, limit: int) -> tuple[int, ...]:
    """Coefficients of prod_{m=1}^{n} 1/(1-q^m) up to q^limit.

    Entry p counts partitions of p into parts of size at most n; for n=1 and
    t=q this is also the coefficient ladder of the one-weight q-theta.
    """
    if n < 0 or limit < 0:
        raise ValueError("partition_series needs n, limit >= 0")
    counts = [0] * (limit + 1)
    counts[0] = 1
    for m in range(1, n + 1):
        for p in range(m, limit + 1):
            counts[p] += counts[p - m]
    return tuple(counts)


class GradedValue:
    """An exact value coeff * pi**(2*weight), with strict weight tracking.

    Addition requires equal weights (zero is neutral at any weight);
    multiplication adds weights; scalars embed at weight 0.  A mixed-weight
    addition raises: the closed-form identities this type supports are
    homogeneous, so such an addition is a bug.
    """

    __slots__ = ("weight", "coeff")

    def __init__(self, weight: int, coeff):
        if not isinstance(weight, int) or weight < 0:
            raise ValueError("graded weight must be an integer >= 0")
        self.weight = weight
        self.coeff = Fraction(coeff)

    def __bool__(self) -> bool:
        return self.coeff != 0

    def __eq__(self, other) -> bool:
        if isinstance(other, GradedValue):
            if self.coeff == 0 and other.coeff == 0:
                return True
            return self.weight == other.weight and self.coeff == other.coeff
        if isinstance(other, (int, Fraction)):
            return self.coeff == other and (self.weight == 0 or other == 0)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.weight if self.coeff else 0, self.coeff))

    def _coerce(self, other) -> "GradedValue | None":
        if isinstance(other, GradedValue):
            return other
        if isinstance(other, (int, Fraction)):
            return GradedValue(0, other)
        return None

    def __add__(self, other):
        g = self._coerce(other)
        if g is None:
            return NotImplemented
        if self.coeff == 0:
            return g
        if g.coeff == 0:
            return self
        if self.weight != g.weight:
            raise ValueError(
                f"graded weight mismatch in addition: {self.weight} vs {g.weight}"
            )
        return GradedValue(self.weight, self.coeff + g.coeff)

    __radd__ = __add__

    def __neg__(self) -> "GradedValue":
        return GradedValue(self.weight, -self.coeff)

    def __sub__(self, other):
        g = self._coerce(other)
        if g is None:
            return NotImplemented
        return self + (-g)

    def __rsub__(self, other):
        g = self._coerce(other)
        if g is None:
            return NotImplemented
        return g + (-self)

    def __mul__(self, other):
        if isinstance(other, GradedValue):
            return GradedValue(self.weight + other.weight, self.coeff * other.coeff)
        if isinstance(other, (int, Fraction)):
            return GradedValue(self.weight, self.coeff * other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, GradedValue):
            if self.weight < other.weight:
                raise ValueError("graded division would need a negative weight")
            return GradedValue(self.weight - other.weight, self.coeff / other.coeff)
        if isinstance(other, (int, Fraction)):
            return GradedValue(self.weight, self.coeff / other)
        return NotImplemented

    def to_float(self) -> float:
        return float(self.coeff) * math.pi ** (2 * self.weight)

    def __repr__(self) -> str:
        if self.weight == 0:
            return f"GradedValue({self.coeff})"
        return f"GradedValue({self.coeff} * pi^{2 * self.weight})"


def theta_infinite_zeta(m: int, k: int, t0=None):
    """theta for the untruncated reciprocal-power weights 1/j^m, even m.

    Every coefficient is homogeneous of weight m*k/2 in the pi^2 grading, so
    the Newton recurrence runs over GradedValue coefficients with
    alpha_j(t) = zeta(m j) (t^j - (t-1)^j).  Returns the polynomial in t
    (GradedValue coefficients), or its value at rational t0 when given.
    """
    if not isinstance(m, int) or m < 2 or m % 2:
        raise ValueError("theta_infinite_zeta supports even integer m >= 2 only")
    if not isinstance(k, int) or k < 0:
        raise ValueError("theta_infinite_zeta needs k >= 0")
    one = GradedValue(0, 1)
    ladder = [Poly((one,))]
    alphas: list = [None]
    for j in range(1, k + 1):
        w = m * j // 2
        z = zeta_even_coeff(w)
        coeffs = [
            GradedValue(w, z * binomial(j, i) * ((-1) ** (j - i + 1))) for i in range(j)
        ]
        alphas.append(Poly(coeffs))
    for i in range(1, k + 1):
        acc = Poly.zero()
        for j in range(1, i + 1):
            acc = acc + alphas[j] * ladder[i - j]
        ladder.append(acc * Fraction(1, i))
    result = ladder[k]
    if t0 is None:
        return result
    value = result(Fraction(t0))
    if not isinstance(value, GradedValue):
        value = GradedValue(0, value)
    return value


def closed_form_ones_bivariate(n: int, k: int) -> Poly:
    """theta for all-ones weights by coefficient extraction from

        T(x, z, t) = (1 - z t) / ((1 - z t)(1 - x) - z x),

    whose [x^n z^k] coefficient is theta_{n;k}(t).  The denominator gives a
    two-index recurrence, so the whole table up to (n, k) is filled exactly.
    """
    _validate_nk(n, k)
    # S = 1/D with D = 1 - x - z t + x z (t - 1) reorganized as
    # S[i][j] = delta + S[i-1][j] + t S[i][j-1] + (1-t) S[i-1][j-1]
    t = Poly((Fraction(0), Fraction(1)))
    one_minus_t = Poly((Fraction(1), Fraction(-1)))
    s = [[Poly.zero() for _ in range(k + 1)] for _ in range(n + 1)]
    for i in range(n + 1):
        for j in range(k + 1):
            acc = Poly.one() if i == 0 and j == 0 else Poly.zero()
            if i > 0:
                acc = acc + s[i - 1][j]
            if j > 0:
                acc = acc + t * s[i][j - 1]
            if i > 0 and j > 0:
                acc = acc + one_minus_t * s[i - 1][j - 1]
            s[i][j] = acc
    # T = (1 - z t) S
    if k == 0:
        return s[n][0]
    return s[n][k] - t * s[n][k - 1]


ALGORITHMS = {
    "newton": theta_newton,
    "product": theta_product,
    "bell": theta_bell,
    "det": theta_det,
    "convolution": theta_convolution,
}

"""Exact laws derived from the adjacency statistic of random weighted multisets.

Normalizing the coefficients of theta_{n;k}(t) turns the adjacency count
sigma into a random variable S_{n,k}; this module houses its exact pmf and
moments, the per-value marginal laws, the fixed-n limit objects, reference
families (hypergeometric, Poisson, modified geometric, negative binomial,
beta, exponential), and the distance diagnostics used to watch the limit
theorems materialize at finite sizes.

Everything stays in rational arithmetic until a distance or a reference
density forces floats; float results never feed back into exact checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact import Poly, binomial, falling_factorial, harmonic
from .oracle import compositions
from .theta import (
    GradedValue,
    multiple_harmonic,
    theta_infinite_zeta,
    theta_newton,
    zeta_star_ones,
)
from .weights import WeightSequence, ZetaWeights

__all__ = [
    "Pmf",
    "FloatPmf",
    "MomentReport",
    "ScanRow",
    "pmf_from_masses",
    "shifted_pmf",
    "reflected_pmf",
    "pmf_moments",
    "s_pmf",
    "moments",
    "multiset_sigma_closed_moments",
    "hypergeom_pmf",
    "hypergeom_moments",
    "marginal_mass",
    "marginal_pmf",
    "marginal_moments",
    "marginal_p0_closed",
    "marginal_p0_variant",
    "marginal_zeta_pgf",
    "bernoulli_sum_pmf",
    "d_n_pmf",
    "truncated_mzv_numeric",
    "s_infinity_2_exact",
    "s_infinity_2_pmf",
    "sum_theorem_pmf",
    "sum_theorem_r_pmf",
    "bernstein_pgf",
    "bezier_coeffs",
    "expected_sigma_zeta",
    "poisson_pmf",
    "negbin_pmf",
    "geometric_modified_pmf",
    "beta_moments",
    "exp_moments",
    "normal_cdf",
    "tv_distance",
    "kolmogorov_distance_to_normal",
    "limit_scan",
    "DEFAULT_GRIDS",
]


@dataclass(frozen=True)
class Pmf:
    """Finite pmf with exact rational masses on consecutive integers.

    offset is the smallest support point; probs[0] and probs[-1] must be
    positive and the masses must sum to exactly 1.
    """

    offset: int
    probs: tuple

    def __post_init__(self):
        probs = tuple(Fraction(p) for p in self.probs)
        if not probs:
            raise ValueError("pmf needs at least one mass")
        if any(p < 0 for p in probs):
            raise ValueError("pmf masses must be non-negative")
        if sum(probs) != 1:
            raise ValueError("pmf masses must sum to exactly 1")
        if not probs[0] or not probs[-1]:
            raise ValueError("pmf support must start and end with positive mass")
        object.__setattr__(self, "probs", probs)

    def mass(self, j: int) -> Fraction:
        i = j - self.offset
        if 0 <= i < len(self.probs):
            return self.probs[i]
        return Fraction(0)

    def support(self) -> range:
        return range(self.offset, self.offset + len(self.probs))

    def items(self):
        for i, p in enumerate(self.probs):
            yield self.offset + i, p

    def to_float(self) -> "FloatPmf":
        return FloatPmf(self.offset, tuple(float(p) for p in self.probs))


@dataclass(frozen=True)
class FloatPmf:
    """Float-valued pmf container; masses may undershoot 1 by a known bound."""

    offset: int
    probs: tuple
    error_bound: float = 0.0

    def mass(self, j: int) -> float:
        i = j - self.offset
        if 0 <= i < len(self.probs):
            return self.probs[i]
        return 0.0

    def support(self) -> range:
        return range(self.offset, self.offset + len(self.probs))


@dataclass(frozen=True)
class MomentReport:
    """mean, variance, and factorial moments E(X(X-1)...(X-s+1)) for s=1..s_max."""

    mean: Fraction
    variance: Fraction
    factorial_moments: tuple

    def __post_init__(self):
        if self.variance < 0:
            raise ValueError("variance must be non-negative")


def pmf_from_masses(offset: int, masses: Sequence) -> Pmf:
    """Normalize non-negative rational masses into a Pmf, trimming zero ends."""
    ms = [Fraction(m) for m in masses]
    if any(m < 0 for m in ms):
        raise ValueError("masses must be non-negative")
    lo = 0
    hi = len(ms)
    while lo < hi and not ms[lo]:
        lo += 1
    while hi > lo and not ms[hi - 1]:
        hi -= 1
    if lo == hi:
        raise ValueError("masses must not all be zero")
    total = sum(ms[lo:hi])
    return Pmf(offset + lo, tuple(m / total for m in ms[lo:hi]))


def shifted_pmf(pmf: Pmf, delta: int) -> Pmf:
    return Pmf(pmf.offset + delta, pmf.probs)


def reflected_pmf(pmf: Pmf, pivot: int) -> Pmf:
    """Law of pivot - X."""
    return Pmf(pivot - (pmf.offset + len(pmf.probs) - 1), tuple(reversed(pmf.probs)))


def _fms_to_report(fms: Sequence[Fraction], s_max: int) -> MomentReport:
    mean = fms[0]
    variance = fms[1] + mean - mean * mean
    return MomentReport(mean, variance, tuple(fms[:s_max]))


def pmf_moments(pmf: Pmf, s_max: int = 2) -> MomentReport:
    """Exact factorial moments of a Pmf; variance via fm2 + mean - mean^2."""
    if s_max < 1:
        raise ValueError("s_max must be >= 1")
    fms = []
    for s in range(1, max(2, s_max) + 1):
        fms.append(sum((falling_factorial(j, s) * p for j, p in pmf.items()), Fraction(0)))
    return _fms_to_report(fms, s_max)


def _validate_nk(n: int, k: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"needs n >= 1, got {n!r}")
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"needs k >= 1, got {k!r}")


def s_pmf(seq: WeightSequence, n: int, k: int) -> Pmf:
    """Law of the adjacency count: normalized coefficients of theta_{n;k}."""
    _validate_nk(n, k)
    poly = theta_newton(seq, n, k).poly
    return pmf_from_masses(0, poly.coeffs)


def moments(seq: WeightSequence, n: int, k: int, s_max: int = 2) -> MomentReport:
    """Factorial moments from derivatives of theta at t=1, exactly."""
    _validate_nk(n, k)
    if s_max < 1:
        raise ValueError("s_max must be >= 1")
    poly = theta_newton(seq, n, k).poly
    total = poly(Fraction(1))
    fms = []
    d = poly
    for _ in range(max(2, s_max)):
        d = d.derivative()
        fms.append(d(Fraction(1)) / total)
    return _fms_to_report(fms, s_max)


def multiset_sigma_closed_moments(n: int, k: int, s_max: int = 2) -> MomentReport:
    """Closed-form moments for all-ones weights.

    mean = k(k-1)/(n+k-1), fm_s = (k-1)_s (k)_s / (n+k-1)_s, and for n+k > 2
    variance = k(k-1) n(n-1) / ((n+k-1)^2 (n+k-2)).
    """
    _validate_nk(n, k)
    if s_max < 1:
        raise ValueError("s_max must be >= 1")
    mean = Fraction(k * (k - 1), n + k - 1)
    if n + k > 2:
        variance = Fraction(k * (k - 1) * n * (n - 1), (n + k - 1) ** 2 * (n + k - 2))
    else:
        variance = Fraction(0)
    fms = []
    for s in range(1, s_max + 1):
        den = falling_factorial(n + k - 1, s)
        if den == 0:
            # s exceeds every support point, so the falling product vanishes
            fms.append(Fraction(0))
        else:
            fms.append(Fraction(
                falling_factorial(k - 1, s) * falling_factorial(k, s), den))
    return MomentReport(mean, variance, tuple(fms))


def hypergeom_pmf(total: int, marked: int, draws: int) -> Pmf:
    """Hy(N, K, n): successes drawing n without replacement from N with K marked."""
    if not (0 <= marked <= total and 0 <= draws <= total):
        raise ValueError("hypergeometric needs 0 <= K <= N and 0 <= n <= N")
    lo = max(0, draws + marked - total)
    hi = min(marked, draws)
    masses = [
        Fraction(binomial(marked, j) * binomial(total - marked, draws - j))
        for j in range(lo, hi + 1)
    ]
    return pmf_from_masses(lo, masses)


def hypergeom_moments(total: int, marked: int, draws: int, s_max: int = 2) -> MomentReport:
    if not (0 <= marked <= total and 0 <= draws <= total) or total < 1:
        raise ValueError("hypergeometric needs 0 <= K <= N and 0 <= n <= N, N >= 1")
    if s_max < 1:
        raise ValueError("s_max must be >= 1")
    fms = []
    for s in range(1, max(2, s_max) + 1):
        den = falling_factorial(total, s)
        num = falling_factorial(marked, s) * falling_factorial(draws, s)
        fms.append(Fraction(num, den) if den else Fraction(0))
    return _fms_to_report(fms, s_max)


def marginal_mass(n: int, k: int, j: int) -> Fraction:
    """P{sigma^(i) = j} for all-ones weights, any i, by coefficient extraction.

    The per-value probability generating function is
    [z^k] (1-z)^-(n-1) (1 + z/(1 - z t)) / C(n+k-1, k); the z-extraction
    collapses to single binomials.  Needs n >= 2 (one tracked value plus at
    least one other).
    """
    if n < 2 or k < 1:
        raise ValueError("marginal laws need n >= 2 and k >= 1")
    if j < 0:
        raise ValueError("support point must be >= 0")
    denom = binomial(n + k - 1, k)
    if j == 0:
        num = binomial(n + k - 2, k) + binomial(n + k - 3, n - 2)
    else:
        num = binomial(n + k - 3 - j, n - 2)
    return Fraction(num, denom)


def marginal_pmf(n: int, k: int) -> Pmf:
    if n < 2 or k < 1:
        raise ValueError("marginal laws need n >= 2 and k >= 1")
    denom = binomial(n + k - 1, k)
    masses = [marginal_mass(n, k, j) * denom for j in range(k)]
    return pmf_from_masses(0, masses)


def marginal_moments(n: int, k: int, s_max: int = 2) -> MomentReport:
    """Closed-form factorial moments of the per-value adjacency count:

        fm_s = s! (k)_{s+1} / ((n+k-1) (n+s-1)_s).
    """
    if n < 2 or k < 1:
        raise ValueError("marginal laws need n >= 2 and k >= 1")
    if s_max < 1:
        raise ValueError("s_max must be >= 1")
    fms = [
        Fraction(math.factorial(s) * falling_factorial(k, s + 1),
                 (n + k - 1) * falling_factorial(n + s - 1, s))
        for s in range(1, max(2, s_max) + 1)
    ]
    return _fms_to_report(fms, s_max)


def marginal_p0_closed(n: int, k: int) -> Fraction:
    """P{sigma^(i)=0} as [C(n+k-2,k) + C(n+k-3,k-1)] / C(n+k-1,k); equals
    marginal_mass(n, k, 0)."""
    if n < 2 or k < 1:
        raise ValueError("marginal laws need n >= 2 and k >= 1")
    return Fraction(binomial(n + k - 2, k) + binomial(n + k - 3, k - 1),
                    binomial(n + k - 1, k))


def marginal_p0_variant(n: int, k: int) -> Fraction:
    """An alternative closed form for P{sigma^(i)=0} that disagrees with
    enumeration (already at n=3, k=2: it gives 2/3 where the true mass is
    5/6).  Kept callable so the discrepancy stays pinned down by tests."""
    if n < 2 or k < 1:
        raise ValueError("marginal laws need n >= 2 and k >= 1")
    return Fraction(binomial(n - 2 + k, k) + binomial(n - 3 + k, k),
                    binomial(n + k - 1, k))


def _series_mul(a: list, b: list, order: int) -> list:
    out = [Fraction(0)] * (order + 1)
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j in range(min(len(b), order + 1 - i)):
            if b[j]:
                out[i + j] += ai * b[j]
    return out


def marginal_zeta_pgf(n: int, k: int, i: int, t0) -> Fraction:
    """E(t0^{sigma^(i)}) for reciprocal weights 1/m, m = 1..n.

    Coefficient extraction from
        (1 - z/i) (1 + sum_{j>=1} (z/i)^j t0^(j-1)) prod_m (1 - z/m)^-1
    at z^k, normalized by the t=1 endpoint value.
    """
    _validate_nk(n, k)
    if not 1 <= i <= n:
        raise ValueError("tracked value i must satisfy 1 <= i <= n")
    t0 = Fraction(t0)
    inv_i = Fraction(1, i)
    run = [Fraction(1)] + [Fraction(0)] * k
    block = [Fraction(1)]
    coef = inv_i
    for j in range(1, k + 1):
        block.append(coef)  # (1/i)^j t0^(j-1)
        coef *= inv_i * t0
    run = _series_mul(run, block, k)
    run = _series_mul(run, [Fraction(1), -inv_i], k)
    for m in range(1, n + 1):
        inv_m = Fraction(1, m)
        geo = [inv_m**r for r in range(k + 1)]
        run = _series_mul(run, geo, k)
    return run[k] / zeta_star_ones(n, k)


def bernoulli_sum_pmf(ps: Sequence) -> Pmf:
    """Law of a sum of independent Bernoulli variables with success vector ps."""
    masses = [Fraction(1)]
    for p in ps:
        p = Fraction(p)
        if not 0 <= p <= 1:
            raise ValueError("Bernoulli parameters must lie in [0, 1]")
        nxt = [Fraction(0)] * (len(masses) + 1)
        for j, m in enumerate(masses):
            if m:
                nxt[j] += m * (1 - p)
                nxt[j + 1] += m * p
        masses = nxt
    return pmf_from_masses(0, masses)


def d_n_pmf(n: int, exponent: int) -> Pmf:
    """Convolution of Be(1/j^exponent), j = 1..n; exponent 1 or 2.

    For exponent 1 the mass at l equals the depth-(l-1) truncated all-ones
    multiple harmonic value over n-1 divided by n; for exponent 2 the
    factorial moments are s! times the depth-s {2}-indexed value over n.
    """
    if n < 1:
        raise ValueError("needs n >= 1")
    if exponent not in (1, 2):
        raise ValueError("exponent must be 1 or 2")
    return bernoulli_sum_pmf([Fraction(1, j**exponent) for j in range(1, n + 1)])


def _zeta_tail(s: int, n: int) -> float:
    """Euler-Maclaurin value of sum_{l>n} l^-s for integer s >= 2."""
    x = float(n)
    return (
        x ** (1 - s) / (s - 1)
        - x ** (-s) / 2
        + s * x ** (-s - 1) / 12
        - s * (s + 1) * (s + 2) * x ** (-s - 3) / 720
    )


def _mzv_dp_float(indices: Sequence[int], n: int) -> float:
    """Truncated multiple zeta value as a float, innermost index first,
    with compensated accumulation."""
    suffix = [1.0] * (n + 1)
    for s in reversed(indices):
        new = [0.0] * (n + 1)
        acc = 0.0
        comp = 0.0
        for l in range(1, n + 1):
            term = suffix[l - 1] / float(l) ** s
            t = acc + term
            if abs(acc) >= abs(term):
                comp += (acc - t) + term
            else:
                comp += (term - t) + acc
            acc = t
            new[l] = acc + comp
        suffix = new
    return suffix[n]


def _mzv_crude_bound(indices: Sequence[int]) -> float:
    """Upper bound on the infinite MZV: product of s/(s-1) per index."""
    out = 1.0
    for s in indices:
        out *= s / (s - 1)
    return out


def truncated_mzv_numeric(indices: Sequence[int], n_trunc: int) -> tuple:
    """Float estimate of an infinite MZV (all indices >= 2) with error bound.

    Truncates the outer summation at n_trunc and restores the tail to first
    order: tail = [sum_{l>n} l^-i1] x (value of the remaining indices), the
    bracket via Euler-Maclaurin.  The bound covers the neglected second-order
    tail, the Euler-Maclaurin remainder, and float accumulation noise.
    """
    idx = tuple(int(i) for i in indices)
    if any(i < 2 for i in idx):
        raise ValueError("needs all indices >= 2 for convergence")
    if n_trunc < 10:
        raise ValueError("needs n_trunc >= 10")
    if not idx:
        return 1.0, 0.0
    dp = _mzv_dp_float(idx, n_trunc)
    if len(idx) == 1:
        rest_val, rest_err = 1.0, 0.0
        neglected = 0.0
    else:
        rest_val, rest_err = truncated_mzv_numeric(idx[1:], n_trunc)
        i1, i2 = idx[0], idx[1]
        neglected = (
            2.0 ** (i2 - 1) / (i2 - 1)
            * _mzv_crude_bound(idx[2:])
            * float(n_trunc) ** (2 - i1 - i2) / (i1 + i2 - 2)
        )
    corr = _zeta_tail(idx[0], n_trunc)
    value = dp + corr * rest_val
    em_remainder = float(idx[0]) ** 5 * float(n_trunc) ** (-idx[0] - 5)
    noise = 1e-15 * n_trunc * len(idx)
    return value, neglected + corr * rest_err + em_remainder + noise


def s_infinity_2_exact(k: int) -> Pmf:
    """Exact adjacency law for the untruncated 1/m^2 weights.

    Every theta coefficient is a rational multiple of the same power of
    pi^2, so the normalized masses are exact rationals.
    """
    if k < 1:
        raise ValueError("needs k >= 1")
    poly = theta_infinite_zeta(2, k)
    masses = []
    for j in range(k):
        c = poly.coefficient(j)
        masses.append(c.coeff if isinstance(c, GradedValue) else Fraction(c))
    return pmf_from_masses(0, masses)


def s_infinity_2_pmf(k: int, n_trunc: int = 100000) -> FloatPmf:
    """Numeric adjacency law for untruncated 1/m^2 weights, with error bound.

    Sums truncated-and-tail-corrected MZVs over the compositions of k
    grouped by length; independent of the graded-exact route, which tests
    use to cross-check it.
    """
    if k < 1:
        raise ValueError("needs k >= 1")
    if n_trunc < 1000:
        raise ValueError("needs n_trunc >= 1000")
    if k == 1:
        return FloatPmf(0, (1.0,), 0.0)
    nums = [0.0] * k
    errs = [0.0] * k
    for p in compositions(k):
        val, err = truncated_mzv_numeric(tuple(2 * r for r in p), n_trunc)
        nums[k - len(p)] += val
        errs[k - len(p)] += err
    den = math.fsum(nums)
    den_err = math.fsum(errs)
    probs = tuple(v / den for v in nums)
    bound = max(
        (errs[j] + probs[j] * den_err) / den for j in range(k)
    ) * (1 + 1e-12)
    return FloatPmf(0, probs, bound)


def sum_theorem_pmf(n: int, k: int) -> Pmf:
    """Law on {0..n-1} with P{i} = C(k-n+i-1, k-n-1) / C(k-1, n-1), k > n >= 1.

    Splitting a depth-n block structure out of k slots; masses sum to 1 by
    the hockey-stick identity.
    """
    if not 1 <= n < k:
        raise ValueError("needs k > n >= 1")
    masses = [Fraction(binomial(k - n + i - 1, k - n - 1)) for i in range(n)]
    return pmf_from_masses(0, masses)


def sum_theorem_r_pmf(n: int, k: int) -> Pmf:
    """Law of n minus the sum-theorem variable, supported on {1..n}."""
    return reflected_pmf(sum_theorem_pmf(n, k), n)


def bernstein_pgf(n: int, k: int) -> Poly:
    """The sum-theorem pgf assembled in the Bernstein basis of degree n-1:

        sum_{j=0}^{n-1} C(k-1, j) t^j (1-t)^(n-1-j) / C(k-1, n-1).
    """
    if not 1 <= n < k:
        raise ValueError("needs k > n >= 1")
    one_minus_t = Poly((Fraction(1), Fraction(-1)))
    denom = binomial(k - 1, n - 1)
    acc = Poly.zero()
    for j in range(n):
        term = Poly.monomial(Fraction(binomial(k - 1, j), denom), j)
        acc = acc + term * one_minus_t ** (n - 1 - j)
    return acc


def bezier_coeffs(n: int, k: int) -> tuple:
    """Bezier coefficients of the sum-theorem pgf: beta_j = 1 / C(k-1-j, k-n)."""
    if not 1 <= n < k:
        raise ValueError("needs k > n >= 1")
    return tuple(Fraction(1, binomial(k - 1 - j, k - n)) for j in range(n))


def expected_sigma_zeta(n: int, k: int) -> Fraction:
    """Mean adjacency count for reciprocal weights 1/m as a harmonic-sum ratio:

        [sum_{l=0}^{k-2} H_n^(l+2) zeta*_n({1}_{k-l-2})] / zeta*_n({1}_k).
    """
    _validate_nk(n, k)
    num = Fraction(0)
    for l in range(k - 1):
        num += harmonic(n, l + 2) * zeta_star_ones(n, k - l - 2)
    return num / zeta_star_ones(n, k)


def poisson_pmf(lam: float, cutoff: int) -> FloatPmf:
    """Po(lam) masses e^-lam lam^j / j! for j = 0..cutoff."""
    if lam <= 0:
        raise ValueError("needs lam > 0")
    if cutoff < 0:
        raise ValueError("needs cutoff >= 0")
    masses = []
    m = math.exp(-lam)
    for j in range(cutoff + 1):
        masses.append(m)
        m *= lam / (j + 1)
    return FloatPmf(0, tuple(masses))


def negbin_pmf(r: int, rho: float, cutoff: int) -> FloatPmf:
    """NegBin(r, rho) masses C(j+r-1, j) (1-rho)^r rho^j for j = 0..cutoff."""
    if r < 1:
        raise ValueError("needs r >= 1")
    if not 0 < rho < 1:
        raise ValueError("needs 0 < rho < 1")
    if cutoff < 0:
        raise ValueError("needs cutoff >= 0")
    masses = [
        binomial(j + r - 1, j) * (1 - rho) ** r * rho**j for j in range(cutoff + 1)
    ]
    return FloatPmf(0, tuple(masses))


def geometric_modified_pmf(c, cutoff: int) -> tuple:
    """Size-biased-start geometric masses: P{0} = 1/(1+c) + c/(1+c)^2 and
    P{j} = c^(j+1)/(1+c)^(j+2) for j >= 1; returned for j = 0..cutoff."""
    c = Fraction(c)
    if c <= 0:
        raise ValueError("needs c > 0")
    if cutoff < 0:
        raise ValueError("needs cutoff >= 0")
    out = [Fraction(1, 1) / (1 + c) + c / (1 + c) ** 2]
    for j in range(1, cutoff + 1):
        out.append(c ** (j + 1) / (1 + c) ** (j + 2))
    return tuple(out)


def beta_moments(alpha, beta, s_max: int) -> tuple:
    """Raw moments of Beta(alpha, beta): (alpha+s-1)_s / (alpha+beta+s-1)_s."""
    alpha = Fraction(alpha)
    beta = Fraction(beta)
    if alpha <= 0 or beta <= 0:
        raise ValueError("needs alpha, beta > 0")
    if s_max < 1:
        raise ValueError("s_max must be >= 1")
    return tuple(
        falling_factorial(alpha + s - 1, s) / falling_factorial(alpha + beta + s - 1, s)
        for s in range(1, s_max + 1)
    )


def exp_moments(s_max: int) -> tuple:
    """Raw moments of the standard exponential law: E(Z^s) = s!."""
    if s_max < 1:
        raise ValueError("s_max must be >= 1")
    return tuple(Fraction(math.factorial(s)) for s in range(1, s_max + 1))


def normal_cdf(x: float) -> float:
    """Standard normal CDF via the error function."""
    return 0.5 * (1.0 + math.erf(x / math.sqrt(2.0)))


def tv_distance(p, q) -> float:
    """Total variation distance: half the l1 gap over the union support.

    Exact rational summation when both arguments are exact Pmfs; float
    otherwise.
    """
    lo = min(p.offset, q.offset)
    hi = max(p.offset + len(p.probs), q.offset + len(q.probs))
    if isinstance(p, Pmf) and isinstance(q, Pmf):
        total = sum((abs(p.mass(j) - q.mass(j)) for j in range(lo, hi)), Fraction(0))
        return float(total / 2)
    total = math.fsum(abs(float(p.mass(j)) - float(q.mass(j))) for j in range(lo, hi))
    return total / 2


def kolmogorov_distance_to_normal(pmf, mean, sd) -> float:
    """Two-sided sup distance between the standardized CDF and the normal CDF."""
    mean = float(mean)
    sd = float(sd)
    if sd <= 0:
        raise ValueError("needs sd > 0")
    worst = 0.0
    cum = 0.0
    for j in range(pmf.offset, pmf.offset + len(pmf.probs)):
        phi = normal_cdf((j - mean) / sd)
        worst = max(worst, abs(cum - phi))
        cum += float(pmf.mass(j))
        worst = max(worst, abs(cum - phi))
    return worst


@dataclass(frozen=True)
class ScanRow:
    """One grid point of a limit-regime scan."""

    regime: str
    param: str
    value: float
    distance: float


def _ceil_sqrt(n: int) -> int:
    r = math.isqrt(n)
    return r if r * r == n else r + 1


def _scan_poisson_multiset(n: int) -> ScanRow:
    # k = ceil(sqrt(n)) keeps k^2/n -> 1, the unit-rate regime
    k = _ceil_sqrt(n)
    pmf = hypergeom_pmf(n + k - 1, k - 1, k)
    ref = poisson_pmf(1.0, k + 60)
    mr = hypergeom_moments(n + k - 1, k - 1, k, 1)
    return ScanRow("poisson_multiset", f"n={n}", float(mr.mean),
                   tv_distance(pmf, ref))


def _scan_normal_multiset(n: int) -> ScanRow:
    pmf = hypergeom_pmf(2 * n - 1, n - 1, n)
    mr = hypergeom_moments(2 * n - 1, n - 1, n, 2)
    sd = math.sqrt(float(mr.variance))
    ks = kolmogorov_distance_to_normal(pmf, float(mr.mean), sd)
    return ScanRow("normal_multiset", f"n={n},k={n}", sd, ks)


def _scan_dn(k: int, n: int, exponent: int) -> ScanRow:
    law = s_pmf(ZetaWeights(exponent), n, k)
    blocks = reflected_pmf(law, k)
    ref = d_n_pmf(n, exponent)
    mr = pmf_moments(blocks, 1)
    return ScanRow(f"dn_zeta{exponent}", f"n={n},k={k}", float(mr.mean),
                   tv_distance(blocks, ref))


def _scan_beta_marginal(k: int, n: int = 5) -> ScanRow:
    mr = marginal_moments(n, k, 3)
    ref = beta_moments(1, n - 1, 3)
    worst = Fraction(0)
    first = Fraction(0)
    for s in range(1, 4):
        ratio = mr.factorial_moments[s - 1] / (Fraction(k) ** s * ref[s - 1])
        if s == 1:
            first = ratio
        worst = max(worst, abs(1 - ratio))
    return ScanRow("beta_marginal", f"n={n},k={k}", float(first), float(worst))


def _scan_geometric_marginal(n: int) -> ScanRow:
    # n = k makes the block-density parameter c = k/n equal 1
    ref = geometric_modified_pmf(1, 5)
    worst = Fraction(0)
    for j in range(1, 6):
        ratio = marginal_mass(n, n, j) / ref[j]
        worst = max(worst, abs(1 - ratio))
    return ScanRow("geometric_marginal", f"n={n},k={n}",
                   float(marginal_mass(n, n, 1)), float(worst))


def _scan_sum_theorem_negbin(k: int) -> ScanRow:
    n = k // 2
    shifted = shifted_pmf(sum_theorem_r_pmf(n, k), -1)
    ref = negbin_pmf(1, n / k, n + 60)
    mr = pmf_moments(shifted, 1)
    return ScanRow("sum_theorem_negbin", f"n={n},k={k}", float(mr.mean),
                   tv_distance(shifted, ref))


DEFAULT_GRIDS = {
    "poisson_multiset": (100, 1000, 10000),
    "normal_multiset": (50, 100, 200),
    "dn_zeta1": (10, 20, 40),
    "dn_zeta2": (10, 20, 40),
    "beta_marginal": (20, 40, 80),
    "geometric_marginal": (50, 200, 400),
    "sum_theorem_negbin": (12, 24, 48),
}

_SCANNERS = {
    "poisson_multiset": _scan_poisson_multiset,
    "normal_multiset": _scan_normal_multiset,
    "dn_zeta1": lambda k: _scan_dn(k, 5, 1),
    "dn_zeta2": lambda k: _scan_dn(k, 20, 2),
    "beta_marginal": _scan_beta_marginal,
    "geometric_marginal": _scan_geometric_marginal,
    "sum_theorem_negbin": _scan_sum_theorem_negbin,
}


def limit_scan(regime: str, grid: Sequence[int] | None = None) -> list:
    """Distance diagnostics for one limit regime over a parameter grid.

    Grids sweep n for poisson/normal/geometric regimes and k for the rest;
    see DEFAULT_GRIDS for the defaults.
    """
    if regime not in _SCANNERS:
        raise ValueError(f"unknown regime {regime!r}; choose from "
                         + ", ".join(sorted(_SCANNERS)))
    pts = DEFAULT_GRIDS[regime] if grid is None else tuple(grid)
    if not pts:
        raise ValueError("grid must be non-empty")
    return [_SCANNERS[regime](int(p)) for p in pts]

"""Exact arithmetic plumbing.

Rationals, dense polynomials in one variable, truncated power series, and the
small combinatorial number tables the rest of the package leans on.  Nothing
in this module touches floats; callers convert at the edge when they need
numerics.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

__all__ = [
    "Rational",
    "parse_rational",
    "format_rational",
    "Poly",
    "Series",
    "binomial",
    "gen_binomial",
    "falling_factorial",
    "stirling_first_unsigned",
    "stirling_second",
    "harmonic",
    "bernoulli",
    "zeta_even_coeff",
    "bell_complete",
    "det_exact",
]

# Exact rational scalars are plain fractions.Fraction values throughout the
# package; the alias records the intent in signatures.
Rational = Fraction


def parse_rational(text: str) -> Fraction:
    """Parse a rational literal such as '3', '-5/4', or '0.25' exactly."""
    if not isinstance(text, str):
        raise ValueError(f"expected a rational string, got {type(text).__name__}")
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational: {text!r}") from exc


def format_rational(value: Fraction | int) -> str:
    """Render a rational as 'p/q', or just 'p' when the denominator is 1."""
    return str(Fraction(value))


class Poly:
    """Dense univariate polynomial with exact coefficients.

    Coefficients are stored lowest power first with trailing zeros trimmed,
    so the zero polynomial has an empty tuple and degree -1.  Coefficients
    are usually Fraction but any commutative ring element with +, * and a
    false zero works (the graded pi-power values use this).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = list(coeffs)
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls) -> "Poly":
        return cls()

    @classmethod
    def one(cls) -> "Poly":
        return cls((Fraction(1),))

    @classmethod
    def constant(cls, c) -> "Poly":
        return cls((c,))

    @classmethod
    def monomial(cls, coeff, power: int) -> "Poly":
        if power < 0:
            raise ValueError("monomial power must be >= 0")
        return cls((Fraction(0),) * power + (coeff,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, i: int):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly((other,)).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self.coeffs))

    def __add__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            other = Poly((other,))
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(out)

    __radd__ = __add__

    def __sub__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            other = Poly((other,))
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        return (-self) + other

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            return Poly(tuple(c * other for c in self.coeffs))
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if y:
                    out[i + j] = out[i + j] + x * y
        return Poly(out)

    def __rmul__(self, other) -> "Poly":
        return Poly(tuple(other * c for c in self.coeffs))

    def __pow__(self, exponent: int) -> "Poly":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial exponent must be a nonnegative integer")
        result = Poly.one()
        for _ in range(exponent):
            result = result * self
        return result

    def __call__(self, x):
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * x + c
        return Fraction(0) if acc is None else acc

    def derivative(self, order: int = 1) -> "Poly":
        if order < 0:
            raise ValueError("derivative order must be >= 0")
        cs = self.coeffs
        for _ in range(order):
            cs = tuple(cs[i] * i for i in range(1, len(cs)))
        return Poly(cs)

    def shift(self, power: int) -> "Poly":
        """Multiply by t**power."""
        if not self.coeffs:
            return self
        if power < 0:
            raise ValueError("shift power must be >= 0")
        return Poly((Fraction(0),) * power + self.coeffs)

    def exact_div(self, divisor: "Poly") -> "Poly":
        """Exact polynomial division; raises if the remainder is nonzero."""
        if not isinstance(divisor, Poly):
            divisor = Poly((divisor,))
        if not divisor:
            raise ZeroDivisionError("polynomial division by zero")
        if not self:
            return Poly()
        if self.degree < divisor.degree:
            raise ValueError("inexact polynomial division")
        rem = list(self.coeffs)
        d = divisor.coeffs
        lead = d[-1]
        q = [Fraction(0)] * (len(rem) - len(d) + 1)
        for i in range(len(q) - 1, -1, -1):
            c = rem[i + len(d) - 1]
            if not c:
                continue
            qc = Fraction(c) / lead if isinstance(c, int) else c / lead
            q[i] = qc
            for j, y in enumerate(d):
                if y:
                    rem[i + j] = rem[i + j] - qc * y
        if any(rem):
            raise ValueError("inexact polynomial division")
        return Poly(q)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "Poly(0)"
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                parts.append(f"{c}")
            elif i == 1:
                parts.append(f"{c}*t")
            else:
                parts.append(f"{c}*t^{i}")
        return f"Poly({' + '.join(parts)})"


class Series:
    """Truncated power series in z with Poly (or scalar) coefficients.

    A series of order K holds coefficients of z^0 .. z^K; multiplication
    truncates at order K and requires both operands to share the order.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Iterable):
        if order < 0:
            raise ValueError("series order must be >= 0")
        cs = list(coeffs)
        if len(cs) > order + 1:
            raise ValueError("too many series coefficients for the given order")
        while len(cs) < order + 1:
            cs.append(Poly.zero())
        self.order = order
        self.coeffs = tuple(cs)

    @classmethod
    def one(cls, order: int) -> "Series":
        return cls(order, (Poly.one(),))

    def coefficient(self, j: int):
        if not 0 <= j <= self.order:
            raise IndexError(f"series coefficient {j} outside order {self.order}")
        return self.coeffs[j]

    def __eq__(self, other) -> bool:
        if isinstance(other, Series):
            return self.order == other.order and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def __mul__(self, other: "Series") -> "Series":
        if not isinstance(other, Series):
            return NotImplemented
        if self.order != other.order:
            raise ValueError(
                f"series order mismatch: {self.order} vs {other.order}"
            )
        k = self.order
        out = [Poly.zero() for _ in range(k + 1)]
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j in range(0, k + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] = out[i + j] + a * b
        return Series(k, out)

    def __repr__(self) -> str:
        return f"Series(order={self.order}, coeffs={list(self.coeffs)!r})"


def binomial(n: int, k: int) -> int:
    """Binomial coefficient via falling factorials, valid for negative n."""
    if not isinstance(n, int) or not isinstance(k, int):
        raise ValueError("binomial expects integer arguments")
    if k < 0:
        return 0
    if n >= 0:
        return math.comb(n, k) if k <= n else 0
    # reflection: C(n, k) = (-1)^k C(k - n - 1, k) for n < 0
    return (-1) ** k * math.comb(k - n - 1, k)


def gen_binomial(x, j: int) -> Fraction:
    """Generalized binomial coefficient C(x, j) for rational x."""
    if not isinstance(j, int):
        raise ValueError("gen_binomial expects an integer lower index")
    if j < 0:
        return Fraction(0)
    x = Fraction(x)
    num = Fraction(1)
    for i in range(j):
        num *= x - i
    return num / math.factorial(j)


def falling_factorial(x, s: int):
    """x (x-1) ... (x-s+1); exact for int or Fraction x."""
    if s < 0:
        raise ValueError("falling factorial length must be >= 0")
    out = x - x + 1 if not isinstance(x, int) else 1
    for i in range(s):
        out = out * (x - i)
    return out


@lru_cache(maxsize=None)
def _stirling1_row(n: int) -> tuple:
    if n == 0:
        return (1,)
    prev = _stirling1_row(n - 1)
    row = [0] * (n + 1)
    for k, v in enumerate(prev):
        if v:
            row[k + 1] += v
            row[k] += (n - 1) * v
    return tuple(row)


@lru_cache(maxsize=None)
def _stirling2_row(n: int) -> tuple:
    if n == 0:
        return (1,)
    prev = _stirling2_row(n - 1)
    row = [0] * (n + 1)
    for k, v in enumerate(prev):
        if v:
            row[k + 1] += v
            row[k] += k * v
    return tuple(row)


def stirling_first_unsigned(n: int, k: int) -> int:
    """Unsigned Stirling numbers of the first kind (cycle counts)."""
    if n < 0:
        raise ValueError("stirling_first_unsigned needs n >= 0")
    if k < 0 or k > n:
        return 0
    return _stirling1_row(n)[k]


def stirling_second(n: int, k: int) -> int:
    """Stirling numbers of the second kind (set partition counts)."""
    if n < 0:
        raise ValueError("stirling_second needs n >= 0")
    if k < 0 or k > n:
        return 0
    return _stirling2_row(n)[k]


def harmonic(n: int, order: int = 1) -> Fraction:
    """Generalized harmonic number: sum of 1/m**order for m = 1..n."""
    if n < 0:
        raise ValueError("harmonic needs n >= 0")
    if order < 1:
        raise ValueError("harmonic needs order >= 1")
    total = Fraction(0)
    for m in range(1, n + 1):
        total += Fraction(1, m**order)
    return total


@lru_cache(maxsize=None)
def bernoulli(m: int) -> Fraction:
    """Bernoulli numbers with B_1 = -1/2."""
    if m < 0:
        raise ValueError("bernoulli needs m >= 0")
    if m == 0:
        return Fraction(1)
    if m > 1 and m % 2:
        return Fraction(0)
    acc = Fraction(0)
    for j in range(m):
        acc += binomial(m + 1, j) * bernoulli(j)
    return -acc / (m + 1)


def zeta_even_coeff(j: int) -> Fraction:
    """Rational r with zeta(2j) = r * pi**(2j)."""
    if j < 1:
        raise ValueError("zeta_even_coeff needs j >= 1")
    sign = 1 if j % 2 else -1
    return sign * bernoulli(2 * j) * Fraction(2 ** (2 * j - 1)) / math.factorial(2 * j)


def bell_complete(xs: Sequence, k: int):
    """Complete Bell polynomial B_k(x_1, ..., x_k).

    Uses the convolution recurrence
        B_k = sum_{j=1}^{k} C(k-1, j-1) x_j B_{k-j},  B_0 = 1,
    and works verbatim over rationals or Poly arguments.
    """
    if k < 0:
        raise ValueError("bell_complete needs k >= 0")
    if len(xs) < k:
        raise ValueError(f"bell_complete needs at least {k} arguments, got {len(xs)}")
    bs = [Fraction(1)]
    for i in range(1, k + 1):
        total = None
        for j in range(1, i + 1):
            term = binomial(i - 1, j - 1) * (xs[j - 1] * bs[i - j])
            total = term if total is None else total + term
        bs.append(total)
    return bs[k]


def _is_poly_matrix(rows) -> bool:
    return any(isinstance(entry, Poly) for row in rows for entry in row)


def det_exact(rows: Sequence[Sequence]):
    """Exact determinant of a square matrix of rationals or Poly entries.

    Fraction-free Bareiss elimination with row pivoting; every intermediate
    value is a minor of the input, so divisions are exact by construction.
    """
    k = len(rows)
    if any(len(r) != k for r in rows):
        raise ValueError("det_exact needs a square matrix")
    poly_mode = _is_poly_matrix(rows)
    if k == 0:
        return Poly.one() if poly_mode else Fraction(1)
    if poly_mode:
        m = [
            [e if isinstance(e, Poly) else Poly.constant(Fraction(e)) for e in row]
            for row in rows
        ]
        zero = Poly.zero()
    else:
        m = [[Fraction(e) for e in row] for row in rows]
        zero = Fraction(0)
    sign = 1
    prev = None  # previous pivot; divisions by it are exact
    for r in range(k - 1):
        if not m[r][r]:
            for i in range(r + 1, k):
                if m[i][r]:
                    m[r], m[i] = m[i], m[r]
                    sign = -sign
                    break
            else:
                return zero
        piv = m[r][r]
        for i in range(r + 1, k):
            row_i = m[i]
            for j in range(r + 1, k):
                num = row_i[j] * piv - m[i][r] * m[r][j]
                if prev is None:
                    row_i[j] = num
                elif poly_mode:
                    row_i[j] = num.exact_div(prev) if num else zero
                else:
                    row_i[j] = num / prev
            row_i[r] = zero
        prev = piv
    out = m[k - 1][k - 1]
    return out if sign == 1 else -out

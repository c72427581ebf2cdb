"""Truncated formal power series and basic hypergeometric series.

A basic hypergeometric series with r numerator and s denominator parameters is

    sum_n  (a_1,...,a_r;q)_n / (q,b_1,...,b_s;q)_n * ((-1)^n q^C(n,2))^(1+s-r) * z^n.

It is materialised here either as a TruncatedSeries in the formal variable z
(dense coefficients up to a fixed order) or, when a numerator parameter equals
q^(-m), as the exact Scalar value of the terminating sum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .scalar import PoleError, Scalar, qpoch, qpoch_multi

DEFAULT_ORDER = 12


class NotTerminating(ValueError):
    """No numerator parameter equals q^(-m), so the sum does not terminate there."""


class OrderMismatch(ValueError):
    """Arithmetic attempted on truncated series of different orders."""


@dataclass(frozen=True)
class HypergeometricSpec:
    """Parameter lists and base of one r-phi-s series (argument kept separate)."""

    numerators: tuple[Scalar, ...]
    denominators: tuple[Scalar, ...]
    q: Scalar

    @property
    def sign_exponent(self) -> int:
        # the ((-1)^n q^C(n,2)) power is raised to 1 + s - r, possibly negative
        return 1 + len(self.denominators) - len(self.numerators)


def phi(numerators: Sequence, denominators: Sequence, q) -> HypergeometricSpec:
    """Convenience constructor accepting ints/Fractions."""
    return HypergeometricSpec(
        tuple(Fraction(a) for a in numerators),
        tuple(Fraction(b) for b in denominators),
        Fraction(q),
    )


@dataclass(frozen=True)
class TruncatedSeries:
    """Coefficients c_0..c_N of a formal power series in z, exact and immutable."""

    coeffs: tuple[Scalar, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a truncated series needs at least the z^0 coefficient")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> Scalar:
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient {n} outside truncation order {self.order}")
        return self.coeffs[n]

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return series_linear_combine([(Fraction(1), self), (Fraction(1), other)])

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return series_linear_combine([(Fraction(1), self), (Fraction(-1), other)])

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return series_mul(self, other)

    def scale(self, c) -> "TruncatedSeries":
        c = Fraction(c)
        return TruncatedSeries(tuple(c * x for x in self.coeffs))


def series_one(order: int) -> TruncatedSeries:
    return TruncatedSeries((Fraction(1),) + (Fraction(0),) * order)


def phi_term(spec: HypergeometricSpec, n: int) -> Scalar:
    """Coefficient of z^n in the series (argument factored out)."""
    if n < 0:
        raise ValueError("term index must be nonnegative")
    q = spec.q
    den = qpoch(q, q, n) * qpoch_multi(spec.denominators, q, n)
    if den == 0:
        raise PoleError(f"denominator Pochhammer vanishes at term {n}")
    num = qpoch_multi(spec.numerators, q, n)
    e = spec.sign_exponent
    sign = -1 if (n * e) % 2 else 1
    return num / den * sign * q ** (math.comb(n, 2) * e)


def phi_series(
    spec: HypergeometricSpec, argument_scale: Scalar, order: int = DEFAULT_ORDER
) -> TruncatedSeries:
    """The series with argument (argument_scale * z), truncated at `order`.

    Coefficient n equals phi_term(spec, n) * argument_scale^n; computed by the
    term-ratio recurrence, which keeps the cost linear in the order.
    """
    q = spec.q
    e = spec.sign_exponent
    scale = Fraction(argument_scale)
    coeffs = [Fraction(1)]
    term = Fraction(1)
    num_f = list(spec.numerators)
    den_f = list(spec.denominators)
    qn = Fraction(1)  # q^(n-1) while computing term n
    for n in range(1, order + 1):
        den = 1 - qn * q
        for b in den_f:
            den *= 1 - b * qn
        if den == 0:
            raise PoleError(f"denominator Pochhammer vanishes at term {n}")
        for a in num_f:
            term *= 1 - a * qn
        term = term / den * scale
        if e:
            term *= (-1 if e % 2 else 1) * qn**e
        coeffs.append(term)
        qn *= q
    return TruncatedSeries(tuple(coeffs))


def phi_terminating(spec: HypergeometricSpec, z_value: Scalar, m: int) -> Scalar:
    """Exact value of the sum terminating at index m.

    Requires a numerator parameter equal to q^(-m), which kills every later term.
    """
    if m < 0:
        raise ValueError(f"termination order must be nonnegative, got {m}")
    if spec.q ** (-m) not in spec.numerators:
        raise NotTerminating(f"no numerator parameter equals q^(-{m})")
    z = Fraction(z_value)
    total = Fraction(0)
    zn = Fraction(1)
    for n in range(m + 1):
        total += phi_term(spec, n) * zn
        zn *= z
    return total


def series_mul(u: TruncatedSeries, v: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated at the common order."""
    if u.order != v.order:
        raise OrderMismatch(f"orders differ: {u.order} vs {v.order}")
    n = u.order
    a, b = u.coeffs, v.coeffs
    out = []
    for k in range(n + 1):
        out.append(sum((a[i] * b[k - i] for i in range(k + 1)), Fraction(0)))
    return TruncatedSeries(tuple(out))


def series_linear_combine(
    terms: Sequence[tuple[Scalar, TruncatedSeries]]
) -> TruncatedSeries:
    """Coefficientwise sum of c_i * u_i; all series must share one order."""
    if not terms:
        raise ValueError("need at least one term")
    order = terms[0][1].order
    coeffs = [Fraction(0)] * (order + 1)
    for c, u in terms:
        if u.order != order:
            raise OrderMismatch(f"orders differ: {u.order} vs {order}")
        c = Fraction(c)
        for k in range(order + 1):
            coeffs[k] += c * u.coeffs[k]
    return TruncatedSeries(tuple(coeffs))

"""Askey-Wilson polynomials, their moment functional, and Newton interpolation.

The four-parameter family p_n(x; a,b,c,d; q) is the terminating 4-phi-3

    p_n = (ab,ac,ad;q)_n / a^n *
          4phi3[ q^(-n), abcd q^(n-1), a*z, a/z ; ab, ac, ad ; q, q ],

with x = (z + 1/z)/2.  Everything here stays inside exact rationals: the
substitution z for e^(i*theta) makes each evaluation a rational number, and the
orthogonality functional L is characterised algebraically by its values on the
basis (a*z, a/z; q)_n rather than by the contour integral.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .scalar import DomainError, PoleError, Scalar, qpoch, qpoch_multi
from .series import HypergeometricSpec, phi_terminating

N_MAX_DEFAULT = 8


class DuplicateNodes(ValueError):
    """Interpolation nodes must be pairwise distinct."""


class DegenerateLattice(ValueError):
    """The q-quadratic lattice nodes (q^j a + q^-j / a)/2 collided."""


@dataclass(frozen=True)
class AWParams:
    """The parameter quadruple (a,b,c,d) and base q."""

    a: Scalar
    b: Scalar
    c: Scalar
    d: Scalar
    q: Scalar

    @property
    def abcd(self) -> Scalar:
        return self.a * self.b * self.c * self.d

    def permuted(self, order: Sequence[str]) -> "AWParams":
        """Same base q with (a,b,c,d) replaced by the named permutation."""
        vals = {k: getattr(self, k) for k in "abcd"}
        a, b, c, d = (vals[k] for k in order)
        return AWParams(a, b, c, d, self.q)


def aw_params(a, b, c, d, q) -> AWParams:
    return AWParams(Fraction(a), Fraction(b), Fraction(c), Fraction(d), Fraction(q))


@dataclass(frozen=True)
class XPoint:
    """Evaluation point: rational z standing in for e^(i*theta), x = (z+1/z)/2."""

    z: Scalar

    def __post_init__(self):
        if self.z == 0:
            raise DomainError("z must be nonzero")

    @property
    def x(self) -> Scalar:
        return (self.z + 1 / self.z) / 2


class PolynomialInX:
    """Dense polynomial in x over Scalar, trailing zeros stripped."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[Scalar]):
        cs = [Fraction(c) for c in coeffs]
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs) if cs else (Fraction(0),)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x: Scalar) -> Scalar:
        out = Fraction(0)
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, PolynomialInX) and self.coeffs == other.coeffs

    def __add__(self, other: "PolynomialInX") -> "PolynomialInX":
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return PolynomialInX([x + y for x, y in zip(a, b)])

    def __sub__(self, other: "PolynomialInX") -> "PolynomialInX":
        return self + other.scale(Fraction(-1))

    def __mul__(self, other: "PolynomialInX") -> "PolynomialInX":
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, ci in enumerate(self.coeffs):
            for j, cj in enumerate(other.coeffs):
                out[i + j] += ci * cj
        return PolynomialInX(out)

    def scale(self, c: Scalar) -> "PolynomialInX":
        c = Fraction(c)
        return PolynomialInX([c * x for x in self.coeffs])

    def __repr__(self) -> str:
        return f"PolynomialInX({list(self.coeffs)})"


def poly_x_plus(t: Scalar) -> PolynomialInX:
    """The linear polynomial t + x."""
    return PolynomialInX([Fraction(t), Fraction(1)])


def poly_power(p: PolynomialInX, n: int) -> PolynomialInX:
    out = PolynomialInX([1])
    for _ in range(n):
        out = out * p
    return out


def pochhammer_basis_poly(a: Scalar, q: Scalar, k: int) -> PolynomialInX:
    """(a*z, a/z; q)_k as a polynomial in x: prod_i (1 - 2 a q^i x + a^2 q^(2i))."""
    out = PolynomialInX([1])
    aq = Fraction(a)
    for _ in range(k):
        out = out * PolynomialInX([1 + aq * aq, -2 * aq])
        aq *= q
    return out


def aw_phi_spec(n: int, p: AWParams, pt: XPoint) -> HypergeometricSpec:
    """The terminating 4phi3 underlying p_n at the point pt."""
    a, b, c, d, q = p.a, p.b, p.c, p.d, p.q
    return HypergeometricSpec(
        (q**-n, p.abcd * q ** (n - 1), a * pt.z, a / pt.z),
        (a * b, a * c, a * d),
        q,
    )


def aw_poly(n: int, p: AWParams, pt: XPoint) -> Scalar:
    """Value of p_n(x; a,b,c,d; q) at x = (z + 1/z)/2."""
    if n < 0:
        raise DomainError("degree must be nonnegative")
    if p.a == 0:
        raise DomainError("parameter a must be nonzero")
    a, b, c, d, q = p.a, p.b, p.c, p.d, p.q
    pref = qpoch_multi((a * b, a * c, a * d), q, n) / a**n
    return pref * phi_terminating(aw_phi_spec(n, p, pt), q, n)


def aw_leading_coeff(n: int, p: AWParams) -> Scalar:
    """Leading x^n coefficient of p_n: 2^n (abcd q^(n-1); q)_n."""
    return Fraction(2) ** n * qpoch(p.abcd * p.q ** (n - 1), p.q, n)


def aw_poly_as_polynomial(n: int, p: AWParams) -> PolynomialInX:
    """p_n expanded in the monomial basis, by exact interpolation.

    Nodes use z = 2, 3, ..., n+2; x(z) is strictly increasing for z > 1, so the
    interpolation nodes never collide and no resampling is needed.
    """
    nodes = [XPoint(Fraction(z)) for z in range(2, n + 3)]
    xs = [pt.x for pt in nodes]
    ys = [aw_poly(n, p, pt) for pt in nodes]
    cs = newton_coeffs(xs, ys)
    return newton_to_monomial(cs, xs)


def aw_norm_ratio(n: int, p: AWParams) -> Scalar:
    """h_n/h_0 for the orthogonality L(p_m p_n) = (h_n/h_0) delta_mn."""
    a, b, c, d, q = p.a, p.b, p.c, p.d, p.q
    abcd = p.abcd
    den = (1 - q ** (2 * n - 1) * abcd) * qpoch(abcd, q, n)
    if den == 0:
        raise PoleError("norm ratio denominator vanishes")
    num = (1 - q ** (n - 1) * abcd) * qpoch_multi(
        (q, a * b, a * c, a * d, b * c, b * d, c * d), q, n
    )
    return num / den


def basis_moment(n: int, p: AWParams) -> Scalar:
    """L((a*z, a/z; q)_n) = (ab,ac,ad;q)_n / (abcd;q)_n."""
    den = qpoch(p.abcd, p.q, n)
    if den == 0:
        raise PoleError("(abcd;q)_n vanishes")
    return qpoch_multi((p.a * p.b, p.a * p.c, p.a * p.d), p.q, n) / den


def lattice_nodes(a: Scalar, q: Scalar, n: int) -> list[Scalar]:
    """Nodes b_j = (q^j a + q^-j / a)/2 of the q-quadratic lattice, j = 0..n."""
    out = []
    qa, qia = Fraction(a), 1 / Fraction(a)
    for _ in range(n + 1):
        out.append((qa + qia) / 2)
        qa *= q
        qia /= q
    return out


def _lattice_inner_coeff(
    fvals: Sequence[Scalar], a: Scalar, q: Scalar, k: int
) -> Scalar:
    """Inner j-sum of the lattice Newton coefficient u_k."""
    a2 = Fraction(a) ** 2
    total = Fraction(0)
    for j in range(k + 1):
        den = (
            qpoch(q, q, j)
            * qpoch(q ** (-2 * j + 1) / a2, q, j)
            * qpoch(q, q, k - j)
            * qpoch(q ** (2 * j + 1) * a2, q, k - j)
        )
        if den == 0:
            raise PoleError("lattice Newton denominator vanishes")
        total += q ** (k - j * j) * a ** (-2 * j) * fvals[j] / den
    return total


def newton_lattice_coeffs(
    f: PolynomialInX, a: Scalar, q: Scalar, n: int
) -> list[Scalar]:
    """Coefficients u_k with f(x) = sum_k u_k (a*z, a/z; q)_k, for deg f <= n.

    u_k is the closed double sum obtained from Newton interpolation on the
    q-quadratic lattice:

        u_k = sum_{j=0}^k q^(k - j^2) a^(-2j) f(b_j)
              / ( (q, q^(1-2j)/a^2; q)_j (q, q^(2j+1) a^2; q)_{k-j} ).
    """
    if f.degree > n:
        raise DomainError(f"degree {f.degree} exceeds expansion order {n}")
    nodes = lattice_nodes(a, q, n)
    if len(set(nodes)) != len(nodes):
        raise DegenerateLattice("lattice nodes collided; resample a or q")
    fvals = [f(b) for b in nodes]
    return [_lattice_inner_coeff(fvals, a, q, k) for k in range(n + 1)]


def moment_functional(f: PolynomialInX, p: AWParams, n_max: int = N_MAX_DEFAULT) -> Scalar:
    """L(f) by expanding f on the (a*z, a/z; q)_k basis and applying basis_moment."""
    if f.degree > n_max:
        raise DomainError(f"degree {f.degree} exceeds configured cap {n_max}")
    coeffs = newton_lattice_coeffs(f, p.a, p.q, f.degree)
    return sum(
        (u * basis_moment(k, p) for k, u in enumerate(coeffs)), Fraction(0)
    )


def aw_moment(n: int, t: Scalar, p: AWParams) -> Scalar:
    """L((t+x)^n) by the double-sum formula.

    L((t+x)^n) = sum_{k=0}^n (ac,ab,ad;q)_k/(abcd;q)_k *
                 sum_{j=0}^k q^(k-j^2) a^(-2j) (t + (q^j a + q^-j/a)/2)^n
                 / ( (q, q^(1-2j)/a^2; q)_j (q, q^(2j+1) a^2; q)_{k-j} ).
    """
    t = Fraction(t)
    a, q = p.a, p.q
    nodes = lattice_nodes(a, q, n)
    fvals = [(t + b) ** n for b in nodes]
    total = Fraction(0)
    for k in range(n + 1):
        den = qpoch(p.abcd, q, k)
        if den == 0:
            raise PoleError("(abcd;q)_k vanishes")
        outer = qpoch_multi((a * p.c, a * p.b, a * p.d), q, k) / den
        total += outer * _lattice_inner_coeff(fvals, a, q, k)
    return total


def newton_coeffs(nodes: Sequence[Scalar], values: Sequence[Scalar]) -> list[Scalar]:
    """Divided differences c_k = sum_j f(b_j) / prod_{r<=k, r!=j} (b_j - b_r).

    These are the coefficients of f in the basis (x-b_0)...(x-b_{k-1}).
    """
    if len(nodes) != len(values):
        raise ValueError("nodes and values must have equal length")
    if len(set(nodes)) != len(nodes):
        raise DuplicateNodes("interpolation nodes must be distinct")
    table = [Fraction(v) for v in values]
    out = [table[0]]
    for k in range(1, len(nodes)):
        table = [
            (table[i + 1] - table[i]) / (nodes[i + k] - nodes[i])
            for i in range(len(table) - 1)
        ]
        out.append(table[0])
    return out


def newton_to_monomial(coeffs: Sequence[Scalar], nodes: Sequence[Scalar]) -> PolynomialInX:
    """Expand sum_k c_k (x-b_0)...(x-b_{k-1}) into the monomial basis."""
    out = PolynomialInX([coeffs[-1]])
    for k in range(len(coeffs) - 2, -1, -1):
        out = out * PolynomialInX([-Fraction(nodes[k]), Fraction(1)])
        out = out + PolynomialInX([coeffs[k]])
    return out


def connection_u(
    n: int, k: int, a_nodes: Sequence[Scalar], b_nodes: Sequence[Scalar]
) -> Scalar:
    """Connection coefficient between the bases prod(x+a_j) and prod(x-b_j):

        u(n,k) = sum_{r=0}^k prod_{j<n} (b_r + a_j) / prod_{j<=k, j!=r} (b_r - b_j).
    """
    if not 0 <= k <= n:
        raise DomainError("need 0 <= k <= n")
    bs = [Fraction(b) for b in b_nodes[: k + 1]]
    if len(set(bs)) != len(bs):
        raise DuplicateNodes("b-nodes must be distinct")
    total = Fraction(0)
    for r in range(k + 1):
        num = Fraction(1)
        for j in range(n):
            num *= bs[r] + a_nodes[j]
        den = Fraction(1)
        for j in range(k + 1):
            if j != r:
                den *= bs[r] - bs[j]
        total += num / den
    return total

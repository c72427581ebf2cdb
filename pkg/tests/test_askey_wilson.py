import itertools
import random
from fractions import Fraction as F

import pytest

from helpers import rand_fraction
from qident.askey_wilson import (
    AWParams,
    DegenerateLattice,
    DuplicateNodes,
    PolynomialInX,
    XPoint,
    aw_leading_coeff,
    aw_moment,
    aw_norm_ratio,
    aw_poly,
    aw_poly_as_polynomial,
    basis_moment,
    connection_u,
    lattice_nodes,
    moment_functional,
    newton_coeffs,
    newton_lattice_coeffs,
    newton_to_monomial,
    pochhammer_basis_poly,
    poly_power,
    poly_x_plus,
)
from qident.scalar import qpoch, qpoch_multi

P = AWParams(F(2, 3), F(1, 5), F(3, 7), F(-5, 11), F(2, 7))
PT = XPoint(F(7, 3))


def aw_poly_oracle_n1(p: AWParams, pt: XPoint):
    """Independent two-term expansion of the degree-1 case:

    p_1 = (ab,ac,ad;q)_1/a * [1 + (1-q^-1)(1-abcd)(1-az)(1-a/z) q
                                  / ((1-q)(1-ab)(1-ac)(1-ad))]
    """
    a, b, c, d, q = p.a, p.b, p.c, p.d, p.q
    z = pt.z
    term0 = qpoch_multi((a * b, a * c, a * d), q, 1) / a
    term1 = (
        (1 - q**-1)
        * (1 - p.abcd)
        * (1 - a * z)
        * (1 - a / z)
        * q
        / ((1 - q) * (1 - a * b) * (1 - a * c) * (1 - a * d))
    )
    return term0 * (1 + term1)


def test_aw_poly_degree_zero():
    assert aw_poly(0, P, PT) == 1


def test_aw_poly_z_inversion_symmetry():
    assert aw_poly(3, P, PT) == aw_poly(3, P, XPoint(1 / PT.z))


def test_aw_poly_degree_one_against_two_term_oracle():
    assert aw_poly(1, P, PT) == aw_poly_oracle_n1(P, PT)
    # the same value in fully expanded form
    a = P.a
    x = PT.x
    expanded = (
        qpoch_multi((a * P.b, a * P.c, a * P.d), P.q, 1)
        - (1 - P.abcd) * (1 - 2 * a * x + a**2)
    ) / a
    assert aw_poly(1, P, PT) == expanded


def test_aw_poly_ab_symmetry():
    swapped = AWParams(P.b, P.a, P.c, P.d, P.q)
    for n in range(7):
        assert aw_poly(n, P, PT) == aw_poly(n, swapped, PT)


def test_aw_poly_s4_symmetry():
    for perm in itertools.permutations("abcd"):
        pp = P.permuted(perm)
        for n in range(5):
            assert aw_poly(n, P, PT) == aw_poly(n, pp, PT)


def test_aw_leading_coeff():
    assert aw_leading_coeff(0, P) == 1
    assert aw_leading_coeff(1, P) == 2 * (1 - P.abcd)
    poly3 = aw_poly_as_polynomial(3, P)
    assert poly3.coeffs[-1] == aw_leading_coeff(3, P)


def test_aw_poly_as_polynomial_contract():
    assert aw_poly_as_polynomial(0, P).coeffs == (F(1),)
    fresh = XPoint(F(19, 4))
    for n in range(5):
        poly = aw_poly_as_polynomial(n, P)
        assert poly.degree == n
        assert poly(fresh.x) == aw_poly(n, P, fresh)


def test_aw_norm_ratio():
    assert aw_norm_ratio(0, P) == 1
    a, b, c, d, q = P.a, P.b, P.c, P.d, P.q
    abcd = P.abcd
    expected = (
        (1 - abcd)
        * (1 - q) * (1 - a * b) * (1 - a * c) * (1 - a * d)
        * (1 - b * c) * (1 - b * d) * (1 - c * d)
        / ((1 - q * abcd) * (1 - abcd))
    )
    assert aw_norm_ratio(1, P) == expected


def test_basis_moment():
    assert basis_moment(0, P) == 1
    a, b, c, d = P.a, P.b, P.c, P.d
    assert basis_moment(1, P) == (1 - a * b) * (1 - a * c) * (1 - a * d) / (1 - P.abcd)
    # symmetric under permutations of b, c, d
    for perm in (("a", "c", "b", "d"), ("a", "d", "c", "b"), ("a", "c", "d", "b")):
        for n in range(5):
            assert basis_moment(n, P.permuted(perm)) == basis_moment(n, P)


def test_aw_moment_degree_zero():
    assert aw_moment(0, F(4, 9), P) == 1


def test_aw_moment_linear_against_basis_inversion():
    # (az, a/z; q)_1 = 1 + a^2 - 2ax, so L(x) = (1 + a^2 - L1)/(2a)
    a = P.a
    lx = (1 + a**2 - basis_moment(1, P)) / (2 * a)
    assert aw_moment(1, F(0), P) == lx


def test_aw_moment_ab_swap_invariance():
    swapped = AWParams(P.b, P.a, P.c, P.d, P.q)
    t = F(3, 8)
    for n in range(7):
        assert aw_moment(n, t, P) == aw_moment(n, t, swapped)
        # same value through the swapped-basis functional route
        f = poly_power(poly_x_plus(t), n)
        assert aw_moment(n, t, P) == moment_functional(f, swapped, n_max=max(n, 1))


def test_aw_moment_full_symmetry():
    t = F(-2, 9)
    for n in range(7):
        base = aw_moment(n, t, P)
        for perm in itertools.permutations("abcd"):
            assert aw_moment(n, t, P.permuted(perm)) == base


def test_moment_functional_constant_and_monomials():
    assert moment_functional(PolynomialInX([F(1)]), P) == 1
    for n in range(5):
        f = poly_power(poly_x_plus(F(0)), n)
        assert moment_functional(f, P, n_max=max(n, 1)) == aw_moment(n, F(0), P)


def test_moment_functional_kills_p1():
    # independent oracle: L(p_1) = c_0 + c_1 L(x) with L(x) from basis inversion
    p1 = aw_poly_as_polynomial(1, P)
    a = P.a
    lx = (1 + a**2 - basis_moment(1, P)) / (2 * a)
    assert p1.coeffs[0] + p1.coeffs[1] * lx == 0
    assert moment_functional(p1, P) == 0


def test_orthogonality_small():
    p0 = aw_poly_as_polynomial(0, P)
    p1 = aw_poly_as_polynomial(1, P)
    p2 = aw_poly_as_polynomial(2, P)
    assert moment_functional(p0 * p1, P) == 0
    assert moment_functional(p1 * p2, P) == 0
    assert moment_functional(p2 * p2, P) == aw_norm_ratio(2, P)


def test_newton_coeffs_constant():
    nodes = [F(0), F(1), F(2)]
    assert newton_coeffs(nodes, [F(5), F(5), F(5)]) == [F(5), F(0), F(0)]


def test_newton_coeffs_linear():
    assert newton_coeffs([F(0), F(1)], [F(0), F(1)]) == [F(0), F(1)]


def test_newton_coeffs_reconstructs_random_quartic():
    rng = random.Random(42)
    f = PolynomialInX([rand_fraction(rng) for _ in range(5)])
    nodes = []
    while len(nodes) < 5:
        v = rand_fraction(rng)
        if v not in nodes:
            nodes.append(v)
    cs = newton_coeffs(nodes, [f(b) for b in nodes])
    assert newton_to_monomial(cs, nodes).coeffs == f.coeffs


def test_newton_coeffs_duplicate_nodes():
    with pytest.raises(DuplicateNodes):
        newton_coeffs([F(1), F(1)], [F(0), F(0)])


def test_newton_lattice_constant():
    u = newton_lattice_coeffs(PolynomialInX([F(1)]), F(2, 3), F(2, 7), 4)
    assert u == [F(1), F(0), F(0), F(0), F(0)]


def test_newton_lattice_basis_rescaling():
    # (x-b_0)...(x-b_{k-1}) = (-1)^k 2^-k a^-k q^-C(k,2) (az, a/z; q)_k
    a, q = F(2, 3), F(2, 7)
    nodes = lattice_nodes(a, q, 6)
    for k in range(6):
        lhs = PolynomialInX([F(1)])
        for i in range(k):
            lhs = lhs * PolynomialInX([-nodes[i], F(1)])
        scale = F(-1) ** k * F(1, 2) ** k * a**-k * q ** (-k * (k - 1) // 2)
        rhs = pochhammer_basis_poly(a, q, k).scale(scale)
        assert lhs.coeffs == rhs.coeffs


def test_newton_lattice_agrees_with_generic_newton():
    # same coefficients after the basis rescaling above
    rng = random.Random(7)
    a, q = F(2, 3), F(2, 7)
    n = 5
    f = PolynomialInX([rand_fraction(rng) for _ in range(n + 1)])
    nodes = lattice_nodes(a, q, n)
    generic = newton_coeffs(nodes, [f(b) for b in nodes])
    lattice = newton_lattice_coeffs(f, a, q, n)
    for k in range(n + 1):
        # c_k (x-b_0)...(x-b_{k-1}) = c_k * scale * (az, a/z; q)_k, so u_k = c_k * scale
        scale = F(-1) ** k * F(1, 2) ** k * a**-k * q ** (-k * (k - 1) // 2)
        assert lattice[k] == generic[k] * scale


def test_newton_lattice_reconstruction():
    rng = random.Random(3)
    a, q = F(3, 5), F(2, 7)
    f = PolynomialInX([rand_fraction(rng) for _ in range(6)])
    u = newton_lattice_coeffs(f, a, q, 5)
    for z in (F(2), F(3), F(7, 2)):
        x = (z + 1 / z) / 2
        val = sum(uk * qpoch_multi((a * z, a / z), q, k) for k, uk in enumerate(u))
        assert val == f(x)


def test_newton_lattice_degenerate():
    # q = 1 collapses the lattice: b_j = (a + 1/a)/2 for all j
    with pytest.raises(DegenerateLattice):
        newton_lattice_coeffs(PolynomialInX([F(1), F(1)]), F(2, 3), F(1), 1)


def test_connection_u_boundary():
    a_nodes = [F(1, 2), F(2, 3), F(3, 4)]
    b_nodes = [F(1, 5), F(2, 5), F(3, 5), F(4, 5)]
    assert connection_u(0, 0, a_nodes, b_nodes) == 1
    expected = (b_nodes[0] + a_nodes[0]) * (b_nodes[0] + a_nodes[1]) * (
        b_nodes[0] + a_nodes[2]
    )
    assert connection_u(3, 0, a_nodes, b_nodes) == expected


def test_connection_u_recurrence():
    rng = random.Random(9)
    n = 6
    a_nodes = [rand_fraction(rng) for _ in range(n)]
    b_nodes = []
    while len(b_nodes) < n + 1:
        v = rand_fraction(rng)
        if v not in b_nodes:
            b_nodes.append(v)
    for nn in range(1, n + 1):
        for k in range(1, nn):
            lhs = connection_u(nn, k, a_nodes, b_nodes)
            rhs = connection_u(nn - 1, k - 1, a_nodes, b_nodes) + (
                a_nodes[nn - 1] + b_nodes[k]
            ) * connection_u(nn - 1, k, a_nodes, b_nodes)
            assert lhs == rhs


def test_quadratic_relation_for_polynomials():
    # degree-lowering quadratic relation, exact for 2 <= n <= 6
    from dataclasses import replace

    q = P.q
    p_ab = replace(P, a=P.a * q, b=P.b * q)
    p_a = replace(P, a=P.a * q)
    p_b = replace(P, b=P.b * q)
    for n in range(2, 7):
        lhs = (
            P.a * P.b * (1 - q ** (n - 1)) * (1 - P.c * P.d * q ** (n - 2))
            * aw_poly(n, P, PT) * aw_poly(n - 2, p_ab, PT)
        )
        rhs = (
            (1 - P.a * P.b * q ** (n - 1)) * (1 - P.abcd * q ** (n - 1))
            * aw_poly(n - 1, P, PT) * aw_poly(n - 1, p_ab, PT)
            - (1 - P.a * P.b) * (1 - P.abcd * q ** (2 * n - 2))
            * aw_poly(n - 1, p_a, PT) * aw_poly(n - 1, p_b, PT)
        )
        assert lhs == rhs

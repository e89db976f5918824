import random

import pytest

from netalg.field import GF, QQ, Matrix, rref
from netalg.ring import (
    DualForm,
    GradedPoly,
    InhomogeneousError,
    ParseError,
    ProjectiveTransform,
    contract,
    contraction_matrix,
    dim_R,
    format_poly,
    monomials,
    parse_poly,
)


def P(s, F=QQ):
    return parse_poly(s, F)


def test_monomial_order_is_lex():
    assert monomials(2) == ((2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2))
    assert dim_R(8) == 45


def test_contract_monomial_rules():
    assert contract(P("x"), P("X^3")) == P("X^2")
    assert contract(P("y"), P("X^2")).is_zero()
    c = contract(P("x^2*y"), P("X^2*Y"))
    assert c.degree == 0 and c.coords == [1]


def test_contract_degree_overflow_gives_zero_scalar():
    c = contract(P("x^3"), P("X^2"))
    assert c.degree == 0 and c.is_zero()


def test_contraction_matrix_ranks():
    F = QQ
    L4 = DualForm.linear_power([F.of(1), F.of(2), F.of(-1)], 4, F)
    assert rref(contraction_matrix(2, L4))[2] == 1
    quartic = P("X^4+Y^4+Z^4")
    assert rref(contraction_matrix(1, quartic))[2] == 3
    # brute-force oracle for the six monomial contractions of X^2 Y^2
    f = P("X^2*Y^2")
    images = [contract(GradedPoly.monomial(m, F), f) for m in monomials(2)]
    expect = rref(Matrix([g.coords for g in images], F, cols=dim_R(2)))[2]
    assert rref(contraction_matrix(2, f))[2] == expect == 3


def test_perfect_pairing_every_degree():
    F = GF(101)
    for d in range(5):
        rows = []
        for m in monomials(d):
            rows.append(contract(GradedPoly.monomial(m, F),
                                 DualForm.monomial(m, F)).coords)
        # diagonal pairing: each monomial hits exactly its dual
        M = Matrix(
            [
                [
                    contract(GradedPoly.monomial(m, F), DualForm.monomial(mm, F)).coords[0]
                    if True
                    else 0
                    for mm in monomials(d)
                ]
                for m in monomials(d)
            ],
            F,
            cols=dim_R(d),
        )
        assert rref(M)[2] == dim_R(d)


def test_action_associativity_random(rng):
    F = GF(101)
    for _ in range(10):
        g = GradedPoly(1, [F.rand(rng) for _ in range(3)], F)
        h = GradedPoly(2, [F.rand(rng) for _ in range(6)], F)
        Fm = DualForm(5, [F.rand(rng) for _ in range(dim_R(5))], F)
        assert contract(g.multiply(h), Fm) == contract(g, contract(h, Fm))


def random_transform(F, rng):
    while True:
        rows = [[F.rand(rng) for _ in range(3)] for _ in range(3)]
        try:
            return ProjectiveTransform(rows, F)
        except Exception:
            continue


def test_equivariance_of_contraction(rng):
    F = GF(101)
    for _ in range(8):
        t = random_transform(F, rng)
        g = GradedPoly(2, [F.rand(rng) for _ in range(6)], F)
        Fm = DualForm(4, [F.rand(rng) for _ in range(dim_R(4))], F)
        lhs = contract(t.apply_poly(g), t.apply_dual(Fm))
        rhs = t.apply_dual(contract(g, Fm))
        assert lhs == rhs


def test_transform_examples():
    F = QQ
    ident = ProjectiveTransform.identity(F)
    p = P("x^2+3*y*z")
    assert ident.apply_poly(p) == p
    # swapping y and z fixes the three-point net
    swap = ProjectiveTransform.from_ints([[1, 0, 0], [0, 0, 1], [0, 1, 0]], F)
    from netalg.field import Subspace

    net = Subspace.from_vectors(
        [P("x*y").coords, P("x*z").coords, P("y*z").coords], 6, F
    )
    assert swap.apply_subspace(net, 2) == net
    # the scaling x -> 2x, y -> 4y, z -> z fixes <zy+x^2, zx, yx>
    scale = ProjectiveTransform.from_ints([[2, 0, 0], [0, 4, 0], [0, 0, 1]], F)
    net2 = Subspace.from_vectors(
        [P("z*y+x^2").coords, P("z*x").coords, P("y*x").coords], 6, F
    )
    assert scale.apply_subspace(net2, 2) == net2


def test_transform_composition_and_inverse(rng):
    F = GF(101)
    t = random_transform(F, rng)
    s = random_transform(F, rng)
    p = GradedPoly(3, [F.rand(rng) for _ in range(10)], F)
    assert t.then(s).apply_poly(p) == s.apply_poly(t.apply_poly(p))
    assert t.then(t.inverse()).apply_poly(p) == p


def test_singular_transform_rejected():
    from netalg.field import NotInvertible

    with pytest.raises(NotInvertible):
        ProjectiveTransform.from_ints([[1, 1, 0], [1, 1, 0], [0, 0, 1]], QQ)


# -- parsing --


def test_parse_shorthand_forms():
    assert P("x2y") == P("x^2*y")
    assert P("3*x*y") == P("x*y").scale(QQ.of(3))
    assert P("x^2*y - y^3") == P("x^2*y") - P("y^3")


def test_parse_fraction_coefficient():
    p = P("1/2*x + y")
    from fractions import Fraction

    assert p.coords[0] == Fraction(1, 2) and p.coords[1] == 1


def test_parse_case_rules():
    assert isinstance(P("X^2*Y"), DualForm)
    with pytest.raises(ParseError):
        P("x*Y")
    with pytest.raises(InhomogeneousError):
        P("x+y^2")
    with pytest.raises(ParseError):
        P("x +* y")


def test_roundtrip_random(rng):
    for F in (QQ, GF(101)):
        for d in range(1, 5):
            p = GradedPoly(d, [F.rand(rng) for _ in range(dim_R(d))], F)
            if p.is_zero():
                continue
            assert parse_poly(format_poly(p), F) == p
            f = DualForm(d, [F.rand(rng) for _ in range(dim_R(d))], F)
            if f.is_zero():
                continue
            assert parse_poly(format_poly(f), F) == f

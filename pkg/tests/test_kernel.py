from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gradex.kernel import (
    GroupElement,
    QSpec,
    Scalar,
    StructureError,
    cyclotomic_polynomial,
    euler_phi,
    generator,
    group_compose,
    group_identity,
    group_inverse,
)

F = QSpec.formal()
R4 = QSpec.root_of_unity(4)
ORDERS = [2, 3, 4, 6, 8]


def test_scalar_mul_examples():
    q = Scalar.q(R4)
    assert q * q**3 == 1
    qf = Scalar.q(F)
    assert qf * Scalar.q(F, -1) == 1
    assert (1 + q) * (1 - q) == 2


def test_scalar_add_examples():
    q = Scalar.q(F)
    assert (q + (-q)).is_zero()
    q4 = Scalar.q(R4)
    assert (1 + q4 * q4).is_zero()
    s = 1 + q
    assert s.terms == ((0, 1), (1, 1))


def test_mismatched_rings():
    with pytest.raises(StructureError):
        Scalar.q(F) * Scalar.q(R4)
    with pytest.raises(StructureError):
        Scalar.q(F) + Scalar.q(R4)


@pytest.mark.parametrize("n", ORDERS)
def test_cyclotomic_identities(n):
    qs = QSpec.root_of_unity(n)
    q = Scalar.q(qs)
    assert q**n == 1
    phi = sum((c * q**k for k, c in enumerate(cyclotomic_polynomial(n))), Scalar.zero(qs))
    assert phi.is_zero()
    # stored exponents lie in [0, phi(n))
    for k in range(-2 * n, 2 * n):
        assert all(0 <= e < euler_phi(n) for e, _ in (q**k).terms)


def test_known_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(8) == (1, 0, 0, 0, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)
    assert euler_phi(9) == 6


def test_qspec_rejects_bad_order():
    with pytest.raises(StructureError):
        QSpec.root_of_unity(1)
    with pytest.raises(StructureError):
        QSpec("formal", 3)


def test_formal_inverse_only_for_units():
    q = Scalar.q(F)
    assert (q**-3 * Fraction(2, 3)).inverse() == Scalar({3: Fraction(3, 2)}, F)
    with pytest.raises(ArithmeticError):
        (1 + q).inverse()
    with pytest.raises(ZeroDivisionError):
        Scalar.zero(F).inverse()


def test_string_form():
    q = Scalar.q(F)
    assert str(Scalar.zero(F)) == "0"
    assert str(-q**2 + 3 - Fraction(1, 2) * q**-1) == "-q^2 + 3 - 1/2*q^-1"


def scalars(qspec, max_exp=3):
    coeff = st.fractions(min_value=-4, max_value=4, max_denominator=3)
    return st.dictionaries(st.integers(-max_exp, max_exp), coeff, max_size=4).map(lambda d: Scalar(d, qspec))


QSPECS = [F] + [QSpec.root_of_unity(n) for n in ORDERS]


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(QSPECS).flatmap(lambda qs: st.tuples(scalars(qs), scalars(qs), scalars(qs))))
def test_ring_axioms(triple):
    a, b, c = triple
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a - a == 0
    assert a * 1 == a


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(QSPECS[1:]).flatmap(scalars))
def test_field_inverse(a):
    if a.is_zero():
        return
    assert a * a.inverse() == 1


def test_ring_axioms_exhaustive_small_range():
    # all sums c0 + c1 q + c2 q^2 with c_i in {-1, 0, 1}, over q = i
    import itertools

    elems = [Scalar({0: a, 1: b, 2: c}, R4) for a, b, c in itertools.product((-1, 0, 1), repeat=3)]
    for a, b in itertools.product(elems, repeat=2):
        assert a * b == b * a
        assert (a + b) * a == a * a + b * a


# ---------------------------------------------------------------------------


def test_group_examples():
    g1, g2 = generator(1, 3, 2), generator(2, 3, 2)
    assert group_compose(g1, g1) == group_identity(3, 2)
    assert group_compose(g1, g2) == GroupElement((1, 1, 0), 2)
    assert group_compose(GroupElement((2, -1)), GroupElement((-2, 1))) == GroupElement((0, 0))
    assert generator(2, 3, 2).exps == (0, 1, 0)
    assert group_inverse(group_identity(3, 2)) == group_identity(3, 2)
    assert group_inverse(g1) == g1


def test_group_errors():
    with pytest.raises(IndexError):
        generator(0, 3, 2)
    with pytest.raises(IndexError):
        generator(4, 3, 2)
    with pytest.raises(StructureError):
        group_compose(generator(1, 2, 2), generator(1, 3, 2))
    with pytest.raises(StructureError):
        group_compose(generator(1, 2, 2), generator(1, 2, 3))


def test_modulus_reduces_entries():
    assert GroupElement((5, -1), 4).exps == (1, 3)


group = st.sampled_from([(2, 3), (4, 2), (3, 2), (0, 3)]).flatmap(
    lambda nm: st.lists(st.lists(st.integers(-9, 9), min_size=nm[1], max_size=nm[1]), min_size=3, max_size=3).map(
        lambda rows: [GroupElement(tuple(r), nm[0]) for r in rows]))


@given(group)
def test_group_laws(elems):
    g, h, k = elems
    assert g * h == h * g
    assert (g * h) * k == g * (h * k)
    assert g * group_inverse(g) == group_identity(g.rank, g.modulus)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_generator_order(n):
    g = generator(2, 3, n)
    acc = group_identity(3, n)
    for k in range(1, n + 1):
        acc = acc * g
        assert acc.is_identity() == (k == n)
